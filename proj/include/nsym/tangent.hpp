#pragma once

#include <string>

#include "nsym/peak.hpp"
#include "nsym/series.hpp"

namespace nsym {

// Outcome of a coefficientwise series comparison.
struct SeriesCheck {
    bool ok = true;
    int first_bad_degree = -1;
    std::string detail;  // empty when ok
};

// t = sum_{i>=0} (-1)^{i+1} sum_{j=1}^{N-1} Sigma_{N^i j}, graded by weight.
GradedSeries tangent_t(const PeakContext& ctx, int order);
// t_zeta = sum_{i>=0} sum_{j=1}^{N-1} zeta^{j-i-1} Sigma_{N^i j}
GradedSeries tangent_t_zeta(const PeakContext& ctx, int order);
// sum_n c^n rho_{1^n}(t) for the given deformation parameter t (t = -1 gives rho_{1^n}).
GradedSeries rho_one_n_series(const PeakContext& ctx, int order, const Scalar& c, const Scalar& t);

// (1 - t)^{-1} = sum_n (-1)^n rho_{1^n}
SeriesCheck check_tangent(const PeakContext& ctx, int order);
// sigma_N(t) lambda_N(-t) = 1 with lambda_N(t) = sum_n t^n rho_{1^n}
SeriesCheck check_sigma_lambda(const PeakContext& ctx, int order);
// The same product with lambda_N(t) = sum_n (-t)^n rho_{1^n}; fails, kept for the report.
SeriesCheck check_sigma_lambda_alternating(const PeakContext& ctx, int order);
// (1 - t_zeta)^{-1} = sum_n rho_{1^n}(zeta)
SeriesCheck check_tangent_zeta(const PeakContext& ctx, int order);
// The same with a (-1)^n on the right; fails, kept for the report.
SeriesCheck check_tangent_zeta_alternating(const PeakContext& ctx, int order);
// N = 2 only: t_{-1} = -t.
SeriesCheck check_t_minus_one(const PeakContext& ctx, int order);

// varrho_j(z) = sum_{m>=0} (-1)^m R_{N^m j} z^{mN+j} against (sum_n S_{nN} z^{nN})^{-1} (sum_m S_{mN+j} z^{mN+j}).
// With literal_sign the coefficients carry (-1)^{m+1} instead; that version fails in degree j.
SeriesCheck check_varrho_product(const PeakContext& ctx, int j, int order, bool literal_sign = false);
// (1 + sum_j varrho_j(z))^{-1} = lambda_{-z}(A) sum_m S_{mN} z^{mN}
SeriesCheck check_varrho_inverse(const PeakContext& ctx, int order);
// Every R_{N^m j} of weight <= order lies in Sym(N).
SeriesCheck check_varrho_membership(const PeakContext& ctx, int j, int order);

}  // namespace nsym
