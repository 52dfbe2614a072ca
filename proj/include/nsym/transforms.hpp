#pragma once

#include "nsym/element.hpp"
#include "nsym/linalg.hpp"
#include "nsym/series.hpp"

namespace nsym {

// S_n((1-q)A): the degree-n coefficient of sigma_{qt}(A)^{-1} sigma_t(A), in the S basis.
// (The written form sigma_{-qt} only matches these values under a sign convention for
// sigma_{-t} that we do not use; see README.)
Element theta_q_generator(int n, const Scalar& q, int order = kDefaultOrder);

// The algebra endomorphism with S_n -> S_n((1-q)A). Result in the S basis.
Element theta_q(const Element& f, const Scalar& q);

// Theta_zeta = theta_zeta / (1 - zeta) for a primitive N-th root of unity; N = 1 sends S_n to Psi_n.
Element Theta(const Element& f, int order_N);

// Theta_1(S_n) computed as the q -> 1 limit of theta_q(S_n)/(1-q), independently of psi.
Element Theta_one_limit(int n);

// Matrix of theta_q on Sym_n in the S^I basis (column I holds theta_q(S^I)), canonical order.
Matrix theta_matrix(int n, const Scalar& q);
Scalar det_theta(int n, const Scalar& q);

// (1 - q^n) prod_{i=1}^{n-1} (1 - q^i)^{(n-i+3) 2^{n-i-2}}
Scalar det_formula(int n, const Scalar& q);

}  // namespace nsym
