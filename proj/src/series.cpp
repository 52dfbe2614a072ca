#include "nsym/series.hpp"

#include <algorithm>

#include "nsym/errors.hpp"

namespace nsym {

GradedSeries::GradedSeries(int order, Basis basis) : order_(order), basis_(basis) {
    if (order < 0) throw InvalidInput("series order must be >= 0");
}

GradedSeries GradedSeries::one(int order, Basis basis) {
    GradedSeries s(order, basis);
    s.add(0, Element::unit(basis));
    return s;
}

Element GradedSeries::coefficient(int degree) const {
    if (degree < 0 || degree > order_)
        throw InvalidInput("coefficient of degree " + std::to_string(degree) + " beyond series order " +
                           std::to_string(order_));
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Element(basis_) : it->second;
}

void GradedSeries::add(int degree, const Element& e) {
    if (degree < 0) throw InvalidInput("negative series degree");
    if (degree > order_ || e.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(degree, basis_);
    it->second += e;
    if (it->second.is_zero()) coeffs_.erase(it);
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    order_ = std::min(order_, o.order_);
    std::erase_if(coeffs_, [&](const auto& kv) { return kv.first > order_; });
    for (const auto& [k, e] : o.coeffs_) add(k, e);
    return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) { return *this += -o; }

GradedSeries GradedSeries::operator-() const {
    GradedSeries out = *this;
    for (auto& [k, e] : out.coeffs_) e = -e;
    return out;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    GradedSeries out(std::min(a.order_, b.order_), a.basis_);
    for (const auto& [i, x] : a.coeffs_) {
        if (i > out.order_) break;
        for (const auto& [j, y] : b.coeffs_) {
            if (i + j > out.order_) break;
            out.add(i + j, multiply(x, to_basis(y, a.basis_)));
        }
    }
    return out;
}

GradedSeries GradedSeries::operator*(const Scalar& c) const {
    GradedSeries out(order_, basis_);
    for (const auto& [k, e] : coeffs_) out.add(k, e * c);
    return out;
}

GradedSeries GradedSeries::inverse() const {
    const Element c0 = coefficient(0);
    if (c0.size() != 1 || !c0.terms().begin()->first.empty())
        throw InvalidInput("series inverse: constant term is not an invertible scalar");
    const Scalar inv0 = c0.terms().begin()->second.inverse();
    GradedSeries out(order_, basis_);
    out.add(0, Element::unit(basis_) * inv0);
    // B_n = -a0^{-1} sum_{k=1}^{n} A_k B_{n-k}
    for (int n = 1; n <= order_; ++n) {
        Element acc(basis_);
        for (const auto& [k, a] : coeffs_) {
            if (k == 0) continue;
            if (k > n) break;
            auto it = out.coeffs_.find(n - k);
            if (it != out.coeffs_.end()) acc += multiply(a, it->second);
        }
        out.add(n, acc * (-inv0));
    }
    return out;
}

GradedSeries GradedSeries::derivative() const {
    if (order_ == 0) throw InvalidInput("derivative of an order-0 series has no known coefficients");
    GradedSeries out(order_ - 1, basis_);
    for (const auto& [k, e] : coeffs_)
        if (k > 0) out.add(k - 1, e * Scalar(static_cast<long>(k)));
    return out;
}

GradedSeries GradedSeries::rescaled(const Scalar& c) const {
    GradedSeries out(order_, basis_);
    for (const auto& [k, e] : coeffs_) out.add(k, e * c.pow(k));
    return out;
}

int GradedSeries::first_difference(const GradedSeries& o) const {
    const int top = std::min(order_, o.order_);
    for (int k = 0; k <= top; ++k)
        if (!(coefficient(k) == o.coefficient(k))) return k;
    return -1;
}

bool GradedSeries::equal_up_to_order(const GradedSeries& o) const { return first_difference(o) < 0; }

GradedSeries sigma_series(int order, Basis basis) {
    GradedSeries s(order, basis);
    s.add(0, Element::unit(basis));
    for (int k = 1; k <= order; ++k) s.add(k, Element::monomial(basis, Composition{k}));
    return s;
}

Element psi(int n) {
    if (n < 1) throw InvalidInput("psi: n must be >= 1");
    const GradedSeries sigma = sigma_series(n);
    return (sigma.inverse() * sigma.derivative()).coefficient(n - 1);
}

}  // namespace nsym
