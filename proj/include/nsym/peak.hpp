#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nsym/composition.hpp"
#include "nsym/element.hpp"

namespace nsym {

using Coordinates = std::map<Composition, Scalar>;

// Coordinates of an element of Sym(N) in one of its bases ("Sigma", "rho" or "T").
struct PeakCoordinates {
    std::string basis;
    Coordinates coords;
    std::string to_string() const { return format_terms(coords, basis); }
};

// Per-order data for Sym(N), N >= 2. Caches G_n^(N) and lower sets; safe to share between threads.
class PeakContext {
public:
    explicit PeakContext(int order_N);

    int N() const noexcept { return N_; }
    const Scalar& zeta() const noexcept { return zeta_; }

    // G_n^(N) in canonical order.
    const std::vector<Composition>& G(int n) const;
    // lower_set(I, N), cached.
    const std::vector<Composition>& lower(const Composition& i) const;

    // Sigma_I = sum_{J <= I} R_J
    Element sigma_basis(const Composition& i) const;
    // rho_I = sum_{J <= I, J in G} (-1)^{l(I)-l(J)} Sigma_J
    Element rho_basis(const Composition& i) const;
    // rho_I(t) = sum_{J <= I, J in G} t^{l(I)-l(J)} Sigma_J; a basis of Sym_n(N) only for t != 0
    Element rho_t_basis(const Composition& i, const Scalar& t) const;
    // rho'_I(t) = sum_{J <= I, J in G} t^{l(I)+l(J)} Sigma_J
    Element rho_prime(const Composition& i, const Scalar& t) const;
    // sum_{J <= I, J in G} rho_J, which equals Sigma_I
    Element sigma_from_rho(const Composition& i) const;
    // T_K = T_{k_1} ... T_{k_r} with T_{Ni+j} = R_{N^i j}
    Element T_basis(const Composition& k) const;

    // pi_N(S^I) = Sigma_I for I in G, 0 otherwise. Result in the R basis.
    Element pi_N(const Element& f) const;

    // Coordinates of a homogeneous F in the Sigma, rho or T basis; nullopt when F is not in Sym_n(N).
    std::optional<PeakCoordinates> membership(const Element& f, const std::string& basis = "Sigma") const;

    void require_G(const Composition& i, const char* who) const;

private:
    int N_;
    Scalar zeta_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::shared_ptr<const std::vector<Composition>>> G_cache_;
    mutable std::map<Composition, std::shared_ptr<const std::vector<Composition>>> lower_cache_;
};

// Expands sum_J c_J B_J for a basis map B (coordinates in, R-basis element out).
Element expand(const PeakContext& ctx, const PeakCoordinates& pc);

// Left ideal T^(N): every S^K in F has a last part not divisible by N (the unit is excluded).
bool in_T_ideal(const Element& f, int order_N);

// ---------------------------------------------------------------------------
// Classical peak algebra (N = 2)

// Pi_I = sum_{P(J) = D(I)} R_J for a peak composition I.
Element classical_peak_function(const Composition& i);
// sum over peak compositions J with D(J) ⊆ D(I) Δ (D(I)+1) of 2^{|D(J)|+1} Pi_J.
// Returned as coordinates in the Pi basis.
Coordinates theta_minus1_ribbon_expansion(const Composition& i);

}  // namespace nsym
