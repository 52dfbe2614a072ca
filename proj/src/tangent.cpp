#include "nsym/tangent.hpp"

#include "nsym/errors.hpp"

namespace nsym {

namespace {

Composition block(int order_N, int i, int j) {
    std::vector<int> parts(static_cast<std::size_t>(i), order_N);
    parts.push_back(j);
    return Composition(std::move(parts));
}

SeriesCheck compare(const GradedSeries& lhs, const GradedSeries& rhs) {
    SeriesCheck out;
    const int d = lhs.first_difference(rhs);
    if (d >= 0) {
        out.ok = false;
        out.first_bad_degree = d;
        out.detail = "degree " + std::to_string(d) + ": lhs = " + lhs.coefficient(d).to_string() +
                     ", rhs = " + to_basis(rhs.coefficient(d), lhs.basis()).to_string();
    }
    return out;
}

void require_order(int order) {
    if (order < 1) throw InvalidInput("series order must be >= 1");
}

GradedSeries sigma_N_series(const PeakContext& ctx, int order) {
    const int N = ctx.N();
    GradedSeries s = GradedSeries::one(order);
    for (int i = 1; i <= N - 1; ++i) s.add(i, ctx.sigma_basis(Composition{i}));
    for (int i = 1; i * N + 1 <= order; ++i)
        for (int j = 1; j <= N - 1; ++j)
            s.add(i * N + j, ctx.sigma_basis(block(N, i, j)) * Scalar(i % 2 ? -1 : 1));
    return s;
}

}  // namespace

GradedSeries tangent_t(const PeakContext& ctx, int order) {
    const int N = ctx.N();
    GradedSeries t(order);
    for (int i = 0; i * N + 1 <= order; ++i)
        for (int j = 1; j <= N - 1; ++j)
            t.add(i * N + j, ctx.sigma_basis(block(N, i, j)) * Scalar(i % 2 ? 1 : -1));
    return t;
}

GradedSeries tangent_t_zeta(const PeakContext& ctx, int order) {
    const int N = ctx.N();
    GradedSeries t(order);
    for (int i = 0; i * N + 1 <= order; ++i)
        for (int j = 1; j <= N - 1; ++j) t.add(i * N + j, ctx.sigma_basis(block(N, i, j)) * ctx.zeta().pow(j - i - 1));
    return t;
}

GradedSeries rho_one_n_series(const PeakContext& ctx, int order, const Scalar& c, const Scalar& t) {
    GradedSeries s = GradedSeries::one(order);
    for (int n = 1; n <= order; ++n)
        s.add(n, ctx.rho_t_basis(Composition(std::vector<int>(static_cast<std::size_t>(n), 1)), t) * c.pow(n));
    return s;
}

SeriesCheck check_tangent(const PeakContext& ctx, int order) {
    require_order(order);
    const GradedSeries lhs = (GradedSeries::one(order) - tangent_t(ctx, order)).inverse();
    return compare(lhs, rho_one_n_series(ctx, order, Scalar(-1), Scalar(-1)));
}

SeriesCheck check_sigma_lambda(const PeakContext& ctx, int order) {
    require_order(order);
    // lambda_N(-t) = sum (-t)^n rho_{1^n}
    const GradedSeries lambda_neg = rho_one_n_series(ctx, order, Scalar(-1), Scalar(-1));
    return compare(sigma_N_series(ctx, order) * lambda_neg, GradedSeries::one(order));
}

SeriesCheck check_sigma_lambda_alternating(const PeakContext& ctx, int order) {
    require_order(order);
    const GradedSeries lambda_neg = rho_one_n_series(ctx, order, Scalar(1), Scalar(-1));
    return compare(sigma_N_series(ctx, order) * lambda_neg, GradedSeries::one(order));
}

SeriesCheck check_tangent_zeta(const PeakContext& ctx, int order) {
    require_order(order);
    const GradedSeries lhs = (GradedSeries::one(order) - tangent_t_zeta(ctx, order)).inverse();
    return compare(lhs, rho_one_n_series(ctx, order, Scalar(1), ctx.zeta()));
}

SeriesCheck check_tangent_zeta_alternating(const PeakContext& ctx, int order) {
    require_order(order);
    const GradedSeries lhs = (GradedSeries::one(order) - tangent_t_zeta(ctx, order)).inverse();
    return compare(lhs, rho_one_n_series(ctx, order, Scalar(-1), ctx.zeta()));
}

SeriesCheck check_t_minus_one(const PeakContext& ctx, int order) {
    if (ctx.N() != 2) throw InvalidInput("t_{-1} = -t is the N = 2 case");
    return compare(tangent_t_zeta(ctx, order), -tangent_t(ctx, order));
}

SeriesCheck check_varrho_product(const PeakContext& ctx, int j, int order, bool literal_sign) {
    const int N = ctx.N();
    if (j < 1 || j > N - 1) throw InvalidInput("varrho_j needs 1 <= j <= N-1");
    require_order(order);
    GradedSeries varrho(order, Basis::R), a(order, Basis::R), b(order, Basis::R);
    for (int m = 0; m * N + j <= order; ++m) {
        const bool negative = (m % 2 == 1) != literal_sign;
        varrho.add(m * N + j, Element::monomial(Basis::R, block(N, m, j), Scalar(negative ? -1 : 1)));
        b.add(m * N + j, Element::monomial(Basis::R, Composition{m * N + j}));
    }
    a.add(0, Element::unit(Basis::R));
    for (int m = 1; m * N <= order; ++m) a.add(m * N, Element::monomial(Basis::R, Composition{m * N}));
    return compare(varrho, a.inverse() * b);
}

SeriesCheck check_varrho_inverse(const PeakContext& ctx, int order) {
    const int N = ctx.N();
    require_order(order);
    GradedSeries lhs = GradedSeries::one(order);
    for (int j = 1; j <= N - 1; ++j)
        for (int m = 0; m * N + j <= order; ++m)
            lhs.add(m * N + j, Element::monomial(Basis::R, block(N, m, j), Scalar(m % 2 ? -1 : 1)));
    // lambda_{-z}(A) = sum_n (-z)^n R_{1^n}
    GradedSeries lambda(order), a(order);
    for (int n = 0; n <= order; ++n)
        lambda.add(n, Element::monomial(Basis::R, Composition(std::vector<int>(static_cast<std::size_t>(n), 1)),
                                        Scalar(n % 2 ? -1 : 1)));
    a.add(0, Element::unit(Basis::R));
    for (int m = 1; m * N <= order; ++m) a.add(m * N, Element::monomial(Basis::R, Composition{m * N}));
    return compare(lhs.inverse(), lambda * a);
}

SeriesCheck check_varrho_membership(const PeakContext& ctx, int j, int order) {
    const int N = ctx.N();
    if (j < 1 || j > N - 1) throw InvalidInput("varrho_j needs 1 <= j <= N-1");
    SeriesCheck out;
    for (int m = 0; m * N + j <= order; ++m) {
        const Composition c = block(N, m, j);
        if (!ctx.membership(Element::monomial(Basis::R, c))) {
            out.ok = false;
            out.first_bad_degree = m * N + j;
            out.detail = "R" + c.to_string() + " is not in Sym(" + std::to_string(N) + ")";
            break;
        }
    }
    return out;
}

}  // namespace nsym
