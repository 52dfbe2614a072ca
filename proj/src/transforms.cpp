#include "nsym/transforms.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "nsym/errors.hpp"

namespace nsym {

namespace {

std::mutex g_generator_mutex;
std::map<std::pair<int, std::string>, std::shared_ptr<const Element>> g_generators;

}  // namespace

Element theta_q_generator(int n, const Scalar& q, int order) {
    if (n < 0) throw InvalidInput("theta_q_generator: n must be >= 0");
    if (n > order) throw InvalidInput("theta_q_generator: n exceeds the series order");
    const auto key = std::make_pair(n, std::to_string(q.conductor()) + ":" + q.to_string());
    {
        std::lock_guard lock(g_generator_mutex);
        if (auto it = g_generators.find(key); it != g_generators.end()) return *it->second;
    }
    const GradedSeries sigma = sigma_series(n, Basis::S);
    auto value = std::make_shared<const Element>((sigma.rescaled(q).inverse() * sigma).coefficient(n));
    std::lock_guard lock(g_generator_mutex);
    return *g_generators.try_emplace(key, std::move(value)).first->second;
}

namespace {

// Multiplicative extension over S monomials of a map given on the generators S_k.
template <class Gen>
Element extend_multiplicatively(const Element& f, Gen&& generator) {
    const Element fs = to_basis(f, Basis::S);
    std::map<int, Element> memo;
    auto gen = [&](int k) -> const Element& {
        auto it = memo.find(k);
        if (it == memo.end()) it = memo.emplace(k, generator(k)).first;
        return it->second;
    };
    Element out(Basis::S);
    for (const auto& [comp, coeff] : fs.terms()) {
        Element term = Element::unit(Basis::S) * coeff;
        for (int part : comp.parts()) term = multiply(term, gen(part));
        out += term;
    }
    return out;
}

}  // namespace

Element theta_q(const Element& f, const Scalar& q) {
    return extend_multiplicatively(f, [&](int k) { return theta_q_generator(k, q, k); });
}

Element Theta(const Element& f, int order_N) {
    if (order_N < 1) throw InvalidInput("Theta: N must be >= 1");
    if (order_N == 1) return extend_multiplicatively(f, [](int k) { return psi(k); });
    const Scalar zeta = Scalar::zeta(order_N);
    const Scalar scale = (Scalar(1) - zeta).inverse();
    return extend_multiplicatively(f, [&](int k) { return theta_q_generator(k, zeta, k) * scale; });
}

Element Theta_one_limit(int n) {
    if (n < 1) throw InvalidInput("Theta_one_limit: n must be >= 1");
    // theta_q(S_n)/(1-q) is a polynomial in q of degree <= n-1: sample at q = 2..n+1 and
    // evaluate the Lagrange interpolant at q = 1.
    Element out(Basis::S);
    for (int a = 2; a <= n + 1; ++a) {
        Rational weight = 1;
        for (int b = 2; b <= n + 1; ++b)
            if (b != a) weight *= Rational(1 - b) / Rational(a - b);
        const Scalar q{Rational(a)};
        out += theta_q_generator(n, q, n) * ((Scalar(1) - q).inverse() * Scalar(weight));
    }
    return out;
}

Matrix theta_matrix(int n, const Scalar& q) {
    if (n < 1) throw InvalidInput("theta_matrix: n must be >= 1");
    const auto comps = compositions_of(n);
    Matrix m(comps.size(), comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const Element image = theta_q(Element::monomial(Basis::S, comps[c]), q);
        for (const auto& [k, v] : image.terms()) m.at(canonical_index(k), c) = v;
    }
    return m;
}

Scalar det_theta(int n, const Scalar& q) { return determinant(theta_matrix(n, q)); }

Scalar det_formula(int n, const Scalar& q) {
    if (n < 1) throw InvalidInput("det_formula: n must be >= 1");
    Scalar out = Scalar(1) - q.pow(n);
    for (int i = 1; i <= n - 1; ++i) {
        // (n-i+3) 2^{n-i-2}; at i = n-1 this is 4/2 = 2
        const long e = i == n - 1 ? 2 : static_cast<long>(n - i + 3) << (n - i - 2);
        out *= (Scalar(1) - q.pow(i)).pow(e);
    }
    return out;
}

}  // namespace nsym
