#include "nsym/decompositions.hpp"

namespace nsym {

std::string to_string(JRange r) {
    switch (r) {
        case JRange::Refinements: return "J refines I";
        case JRange::Coarsenings: return "J coarsens I";
        case JRange::All: return "all J in G";
    }
    return "?";
}

std::string DecompReading::to_string() const {
    return "H=" + nsym::to_string(h) + ", range=" + nsym::to_string(range) +
           (zeta_weight_factor ? ", times zeta^|I|" : ", no zeta^|I| factor");
}

namespace {

bool in_range(const Composition& i, const Composition& j, JRange r) {
    switch (r) {
        case JRange::Refinements: return reverse_refines(i, j);
        case JRange::Coarsenings: return reverse_refines(j, i);
        case JRange::All: return true;
    }
    return false;
}

Scalar sign(int e) { return e % 2 ? Scalar(-1) : Scalar(1); }

}  // namespace

PeakCoordinates decomp_theta_S(const Composition& i, const PeakContext& ctx, const DecompReading& reading) {
    const Scalar& z = ctx.zeta();
    PeakCoordinates out{"Sigma", {}};
    for (const auto& j : ctx.G(i.weight())) {
        if (!in_range(i, j, reading.range)) continue;
        Scalar c = sign(i.length() - j.length());
        for (int l : HH_set(i, j, reading.h)) c *= z.pow(-j[static_cast<std::size_t>(l - 1)]) - Scalar(1);
        if (reading.zeta_weight_factor) c *= z.pow(i.weight());
        if (!c.is_zero()) out.coords.emplace(j, c);
    }
    return out;
}

PeakCoordinates decomp_theta_R(const Composition& i, const PeakContext& ctx, const DecompReading& reading) {
    const Scalar& z = ctx.zeta();
    PeakCoordinates out{"Sigma", {}};
    for (const auto& j : ctx.G(i.weight())) {
        if (!in_range(i, j, reading.range)) continue;
        Scalar c = sign(i.length() - j.length()) * z.pow(alpha_stat(i, j)) * (Scalar(1) - z.pow(j.back()));
        if (reading.zeta_weight_factor) c *= z.pow(i.weight());
        if (!c.is_zero()) out.coords.emplace(j, c);
    }
    return out;
}

PeakCoordinates decomp_S_on_rho(const Composition& i, const PeakContext& ctx) {
    const Scalar& z = ctx.zeta();
    const Scalar front = (Scalar(1) - z).pow(i.length());
    PeakCoordinates out{"rho", {}};
    for (const auto& j : ctx.G(i.weight())) {
        const ExtendedInt h = h_stat(i, j);
        if (!h) continue;
        Scalar c = front * (-z).pow(*h);
        if (!c.is_zero()) out.coords.emplace(j, c);
    }
    return out;
}

PeakCoordinates decomp_R_on_rho(const Composition& i, const PeakContext& ctx) {
    const Scalar& z = ctx.zeta();
    PeakCoordinates out{"rho", {}};
    for (const auto& j : ctx.G(i.weight())) {
        const ExtendedInt b = b_stat(i, j);
        if (!b) continue;
        Scalar c = (Scalar(1) - z).pow(hook_length(j)) * (-z).pow(*b);
        if (!c.is_zero()) out.coords.emplace(j, c);
    }
    return out;
}

}  // namespace nsym
