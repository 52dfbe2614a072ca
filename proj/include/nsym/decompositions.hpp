#pragma once

#include <string>

#include "nsym/peak.hpp"

namespace nsym {

// Which J the sums run over.
enum class JRange {
    Refinements,  // J in G with D(I) ⊆ D(J)
    Coarsenings,  // J in G with D(J) ⊆ D(I)
    All           // all of G_n^(N)
};
std::string to_string(JRange r);

struct DecompReading {
    HReading h = HReading::PartialSum;
    JRange range = JRange::Refinements;
    // multiply by zeta^{|I|}; without it the S-formula is off by exactly that factor
    bool zeta_weight_factor = true;
    std::string to_string() const;
};

// Adopted readings (the ones under which every case n <= 6, N in {2,3,4} agrees with the direct transform).
inline constexpr DecompReading kAdoptedThetaS{HReading::PartialSum, JRange::Refinements, true};
inline constexpr DecompReading kAdoptedThetaR{HReading::PartialSum, JRange::All, false};

// theta_zeta(S^I) = zeta^{|I|} sum_J (-1)^{l(I)-l(J)} prod_{k in ℋ(I,J)} (zeta^{-j_k} - 1) Sigma_J
PeakCoordinates decomp_theta_S(const Composition& i, const PeakContext& ctx,
                               const DecompReading& reading = kAdoptedThetaS);
// theta_zeta(R_I) = sum_J (-1)^{l(I)-l(J)} zeta^{alpha(I,J)} (1 - zeta^{j_s}) Sigma_J
PeakCoordinates decomp_theta_R(const Composition& i, const PeakContext& ctx,
                               const DecompReading& reading = kAdoptedThetaR);
// theta_zeta(S^I) = (1-zeta)^{l(I)} sum_{J in G, h(I,J) > -inf} (-zeta)^{h(I,J)} rho_J
PeakCoordinates decomp_S_on_rho(const Composition& i, const PeakContext& ctx);
// theta_zeta(R_I) = sum_{J in G, b(I,J) > -inf} (1-zeta)^{hl(J)} (-zeta)^{b(I,J)} rho_J
PeakCoordinates decomp_R_on_rho(const Composition& i, const PeakContext& ctx);

}  // namespace nsym
