#pragma once

#include <map>

#include "nsym/element.hpp"

namespace nsym {

inline constexpr int kDefaultOrder = 12;

// Truncated power series sum_k F_k t^k in one central variable t with coefficients in Sym.
// Coefficients of degree > order are unknown and never stored; binary operations keep
// the smaller order. All stored coefficients share one basis.
class GradedSeries {
public:
    explicit GradedSeries(int order = kDefaultOrder, Basis basis = Basis::R);
    static GradedSeries one(int order, Basis basis = Basis::R);

    int order() const noexcept { return order_; }
    Basis basis() const noexcept { return basis_; }
    const std::map<int, Element>& coefficients() const noexcept { return coeffs_; }

    // Zero element for degrees without a stored coefficient. Throws above order.
    Element coefficient(int degree) const;
    // Ignored silently above order (the truncation discards it).
    void add(int degree, const Element& e);

    GradedSeries& operator+=(const GradedSeries& o);
    GradedSeries& operator-=(const GradedSeries& o);
    GradedSeries operator-() const;
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    GradedSeries operator*(const Scalar& c) const;

    // Degreewise recursion; the constant term must be a nonzero multiple of 1.
    GradedSeries inverse() const;
    // d/dt; the result has order - 1.
    GradedSeries derivative() const;
    // Substitute t -> c t.
    GradedSeries rescaled(const Scalar& c) const;

    // Equal as truncated series up to the smaller of the two orders.
    bool equal_up_to_order(const GradedSeries& o) const;
    // First degree (<= common order) where the two series differ, or -1.
    int first_difference(const GradedSeries& o) const;

private:
    int order_;
    Basis basis_;
    std::map<int, Element> coeffs_;
};

// sigma(t) = sum_{k>=0} S_k t^k
GradedSeries sigma_series(int order, Basis basis = Basis::S);

// Psi_n from psi(t) = sigma(t)^{-1} d/dt sigma(t) = sum_{k>=1} Psi_k t^{k-1}; S basis.
Element psi(int n);

}  // namespace nsym
