#pragma once

#include <vector>

#include "nsym/scalar.hpp"

namespace nsym {

// Dense row-major matrix over Scalar.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Scalar(0)) {}
    Scalar& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Fraction-free (Bareiss) elimination; exact divisions only.
Scalar determinant(Matrix m);
std::size_t rank(Matrix m);

}  // namespace nsym
