#include "nsym/linalg.hpp"

#include <utility>

#include "nsym/errors.hpp"

namespace nsym {

Scalar determinant(Matrix m) {
    if (m.rows != m.cols) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return Scalar(1);
    Scalar prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k).is_zero()) ++p;
            if (p == n) return Scalar(0);
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = Scalar(0);
        }
        prev = m.at(k, k);
    }
    return negate ? -m.at(n - 1, n - 1) : m.at(n - 1, n - 1);
}

std::size_t rank(Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m.at(p, c).is_zero()) ++p;
        if (p == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
        const Scalar inv = m.at(r, c).inverse();
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            const Scalar f = m.at(i, c) * inv;
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace nsym
