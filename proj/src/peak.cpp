#include "nsym/peak.hpp"

#include <algorithm>

#include "nsym/errors.hpp"

namespace nsym {

PeakContext::PeakContext(int order_N) : N_(order_N) {
    if (order_N == 1)
        throw InvalidInput("Sym(1) is Sym itself; use the plain S/R bases (and Theta with N = 1) instead");
    if (order_N < 1) throw InvalidInput("N must be >= 2");
    zeta_ = Scalar::zeta(order_N);
}

const std::vector<Composition>& PeakContext::G(int n) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = G_cache_.find(n); it != G_cache_.end()) return *it->second;
    }
    auto list = std::make_shared<const std::vector<Composition>>(G_set(n, N_));
    std::lock_guard lock(mutex_);
    return *G_cache_.try_emplace(n, std::move(list)).first->second;
}

const std::vector<Composition>& PeakContext::lower(const Composition& i) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = lower_cache_.find(i); it != lower_cache_.end()) return *it->second;
    }
    auto list = std::make_shared<const std::vector<Composition>>(lower_set(i, N_));
    std::lock_guard lock(mutex_);
    return *lower_cache_.try_emplace(i, std::move(list)).first->second;
}

void PeakContext::require_G(const Composition& i, const char* who) const {
    if (!in_G_set(i, N_))
        throw InvalidInput(std::string(who) + ": " + i.to_string() + " is not in G_n^(" + std::to_string(N_) +
                           ") (parts in [1,N], last part in [1,N-1])");
}

Element PeakContext::sigma_basis(const Composition& i) const {
    require_G(i, "sigma_basis");
    Element out(Basis::R);
    for (const auto& j : lower(i)) out.add_term(j, Scalar(1));
    return out;
}

Element PeakContext::rho_t_basis(const Composition& i, const Scalar& t) const {
    require_G(i, "rho_t_basis");
    Element out(Basis::R);
    for (const auto& j : lower(i))
        if (in_G_set(j, N_)) out += sigma_basis(j) * t.pow(i.length() - j.length());
    return out;
}

Element PeakContext::rho_basis(const Composition& i) const { return rho_t_basis(i, Scalar(-1)); }

Element PeakContext::rho_prime(const Composition& i, const Scalar& t) const {
    require_G(i, "rho_prime");
    Element out(Basis::R);
    for (const auto& j : lower(i))
        if (in_G_set(j, N_)) out += sigma_basis(j) * t.pow(i.length() + j.length());
    return out;
}

Element PeakContext::sigma_from_rho(const Composition& i) const {
    require_G(i, "sigma_from_rho");
    Element out(Basis::R);
    for (const auto& j : lower(i))
        if (in_G_set(j, N_)) out += rho_basis(j);
    return out;
}

Element PeakContext::T_basis(const Composition& k) const {
    if (!in_F_set(k, N_))
        throw InvalidInput("T_basis: " + k.to_string() + " has a part divisible by N = " + std::to_string(N_));
    Element out = Element::unit(Basis::R);
    for (int part : k.parts()) {
        std::vector<int> block(static_cast<std::size_t>(part / N_), N_);
        block.push_back(part % N_);
        out = multiply(out, Element::monomial(Basis::R, Composition(std::move(block))));
    }
    return out;
}

Element PeakContext::pi_N(const Element& f) const {
    const Element fs = to_basis(f, Basis::S);
    Element out(Basis::R);
    for (const auto& [i, c] : fs.terms())
        if (in_G_set(i, N_)) out += sigma_basis(i) * c;
    return out;
}

std::optional<PeakCoordinates> PeakContext::membership(const Element& f, const std::string& basis) const {
    if (basis != "Sigma" && basis != "rho" && basis != "T")
        throw InvalidInput("unknown Sym(N) basis '" + basis + "' (expected Sigma, rho or T)");
    const int n = f.homogeneous_weight();
    if (n < 0) throw InvalidInput("membership: element is not homogeneous");
    Element residual = to_basis(f, Basis::R);

    // Sigma_J contains R_J and otherwise only strictly shorter ribbons, so peeling off
    // the longest compositions first is a triangular solve.
    std::vector<Composition> order = G(n);
    std::stable_sort(order.begin(), order.end(),
                     [](const Composition& a, const Composition& b) { return a.length() > b.length(); });
    Coordinates sigma;
    for (const auto& j : order) {
        const Scalar c = residual.coefficient(j);
        if (c.is_zero()) continue;
        sigma[j] = c;
        for (const auto& k : lower(j)) residual.add_term(k, -c);
    }
    if (!residual.is_zero()) return std::nullopt;

    PeakCoordinates out{basis, {}};
    if (basis == "Sigma") {
        out.coords = std::move(sigma);
    } else if (basis == "T") {
        for (const auto& [j, c] : sigma) out.coords.emplace(epsilon(j, N_), c);
    } else {
        // Sigma_I = sum_{J <= I, J in G} rho_J
        for (const auto& [i, c] : sigma)
            for (const auto& j : lower(i))
                if (in_G_set(j, N_)) {
                    Scalar& slot = out.coords[j];
                    slot += c;
                }
        std::erase_if(out.coords, [](const auto& kv) { return kv.second.is_zero(); });
    }
    return out;
}

Element expand(const PeakContext& ctx, const PeakCoordinates& pc) {
    Element out(Basis::R);
    for (const auto& [c, v] : pc.coords) {
        if (pc.basis == "Sigma") out += ctx.sigma_basis(c) * v;
        else if (pc.basis == "rho") out += ctx.rho_basis(c) * v;
        else if (pc.basis == "T") out += ctx.T_basis(c) * v;
        else throw InvalidInput("unknown Sym(N) basis '" + pc.basis + "'");
    }
    return out;
}

bool in_T_ideal(const Element& f, int order_N) {
    if (order_N < 1) throw InvalidInput("in_T_ideal: N must be >= 1");
    const Element fs = to_basis(f, Basis::S);
    for (const auto& [k, c] : fs.terms())
        if (k.empty() || k.back() % order_N == 0) return false;
    return true;
}

Element classical_peak_function(const Composition& i) {
    if (!is_peak_composition(i))
        throw InvalidInput("classical_peak_function: " + i.to_string() + " is not a peak composition");
    const IntSet target = descent_set(i);
    Element out(Basis::R);
    for (const auto& j : compositions_of(i.weight()))
        if (peak_set_of_composition(j) == target) out.add_term(j, Scalar(1));
    return out;
}

Coordinates theta_minus1_ribbon_expansion(const Composition& i) {
    const int n = i.weight();
    const IntSet d = descent_set(i);
    IntSet allowed;
    for (int x : d)
        if (!d.contains(x + 1) && x + 1 < n) allowed.insert(x + 1);
    for (int x : d)
        if (!d.contains(x - 1)) allowed.insert(x);
    Coordinates out;
    for (const auto& j : peak_compositions_of(n)) {
        const IntSet dj = descent_set(j);
        if (std::includes(allowed.begin(), allowed.end(), dj.begin(), dj.end()))
            out.emplace(j, Scalar(Rational(mpz_class(1) << (dj.size() + 1))));
    }
    return out;
}

}  // namespace nsym
