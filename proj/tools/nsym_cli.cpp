#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include <json.hpp>

#include "nsym/composition.hpp"
#include "nsym/descent_table.hpp"
#include "nsym/element.hpp"
#include "nsym/errors.hpp"
#include "nsym/peak.hpp"
#include "nsym/tangent.hpp"
#include "nsym/transforms.hpp"
#include "nsym/verify.hpp"

using namespace nsym;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kNotMember = 3, kCapacity = 4 };

struct NotMember : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    int N = 0;
    int n = -1;
    int max_n = -1;
    int order = -1;
    std::string q;
    std::string format = "text";
    std::string to;
    int oracle_limit = -1;
};

bool is_peak_basis(const std::string& b) { return b == "Sigma" || b == "rho" || b == "T"; }

int conductor(const Flags& f) { return f.N >= 2 ? f.N : 1; }

int require_N(const Flags& f, const std::string& why) {
    if (f.N < 2) throw InvalidInput(why + " requires --N >= 2");
    return f.N;
}

// Element text with S, R, Sigma, rho or T terms; the peak bases need --N.
Element parse_any(const std::string& text, const Flags& f, std::string* first_basis = nullptr) {
    const auto terms = parse_terms(text, conductor(f));
    Element out(Basis::R);
    std::optional<PeakContext> ctx;
    for (const auto& t : terms) {
        if (first_basis && first_basis->empty()) *first_basis = t.basis_name;
        if (t.basis_name == "S" || t.basis_name == "R") {
            out += Element::monomial(basis_from_string(t.basis_name), t.comp, t.coeff);
        } else if (is_peak_basis(t.basis_name)) {
            if (!ctx) ctx.emplace(require_N(f, "basis " + t.basis_name));
            out += expand(*ctx, PeakCoordinates{t.basis_name, {{t.comp, t.coeff}}});
        } else {
            throw InvalidInput("unknown basis '" + t.basis_name + "' (expected S, R, Sigma, rho or T)");
        }
    }
    return out;
}

json coords_json(const std::string& basis, const Coordinates& coords) {
    json j{{"basis", basis}, {"terms", json::array()}};
    for (const auto& [c, v] : coords) j["terms"].push_back({{"comp", c.parts()}, {"coeff", to_json(v)}});
    return j;
}

// Renders F in the requested basis (S, R, Sigma, rho, T).
void emit(const Element& f, const std::string& basis, const Flags& flags) {
    Coordinates coords;
    if (basis == "S" || basis == "R") {
        coords = to_basis(f, basis_from_string(basis)).terms();
    } else if (is_peak_basis(basis)) {
        const PeakContext ctx(require_N(flags, "basis " + basis));
        for (int n = 0; n <= f.max_weight(); ++n) {
            const Element part = f.component(n);
            if (part.is_zero()) continue;
            const auto m = ctx.membership(part, basis);
            if (!m) throw NotMember("NOT_MEMBER: weight-" + std::to_string(n) + " part is not in Sym(" +
                                    std::to_string(flags.N) + ")");
            coords.insert(m->coords.begin(), m->coords.end());
        }
    } else {
        throw InvalidInput("unknown target basis '" + basis + "'");
    }
    if (flags.format == "json") std::cout << coords_json(basis, coords).dump() << "\n";
    else std::cout << format_terms(coords, basis) << "\n";
}

Scalar parse_q(const Flags& f) {
    if (f.q.empty()) throw InvalidInput("--q is required");
    if (f.q == "zeta") {
        if (f.N < 2) throw InvalidInput("--q zeta requires --N >= 2");
        return Scalar::zeta(f.N);
    }
    return parse_scalar(f.q, conductor(f));
}

void add_common(CLI::App* app, Flags& f) {
    app->add_option("--N", f.N, "order N of the root of unity / peak algebra");
    app->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app->add_option("--oracle-limit", f.oracle_limit, "largest n for permutation-oracle tables");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nsym: noncommutative symmetric functions and higher-order peak algebras"};
    app.require_subcommand(1);
    Flags f;
    std::string expr, expr2, suite;

    auto* expand_cmd = app.add_subcommand("expand", "rewrite an element in S, R, Sigma, rho or T");
    expand_cmd->add_option("expr", expr, "element, e.g. \"2*S[2,1] - R[3]\"")->required();
    expand_cmd->add_option("--to", f.to, "target basis")->required();
    add_common(expand_cmd, f);

    auto* convert_cmd = app.add_subcommand("convert", "convert between the S and R bases");
    convert_cmd->add_option("expr", expr)->required();
    convert_cmd->add_option("--to", f.to)->required()->check(CLI::IsMember({"S", "R"}));
    add_common(convert_cmd, f);

    auto* hilbert_cmd = app.add_subcommand("hilbert", "dimensions of Sym_n(N) for n = 0..max-n");
    hilbert_cmd->add_option("--max-n", f.max_n)->required();
    add_common(hilbert_cmd, f);

    auto* verify_cmd = app.add_subcommand("verify", "run an identity-verification suite");
    verify_cmd->add_option("suite", suite)->required();
    verify_cmd->add_option("--n", f.n);
    verify_cmd->add_option("--max-n", f.max_n);
    verify_cmd->add_option("--order", f.order);
    verify_cmd->add_option("--q", f.q);
    add_common(verify_cmd, f);

    auto* internal_cmd = app.add_subcommand("internal", "internal product A * B");
    internal_cmd->add_option("a", expr)->required();
    internal_cmd->add_option("b", expr2)->required();
    internal_cmd->add_option("--to", f.to);
    add_common(internal_cmd, f);

    auto* theta_cmd = app.add_subcommand("theta", "apply theta_q (or Theta_zeta with --normalized)");
    bool normalized = false;
    theta_cmd->add_option("expr", expr)->required();
    theta_cmd->add_option("--q", f.q);
    theta_cmd->add_flag("--normalized", normalized, "Theta_zeta = theta_zeta / (1 - zeta), zeta = zeta_N");
    theta_cmd->add_option("--to", f.to);
    add_common(theta_cmd, f);

    auto* det_cmd = app.add_subcommand("det-theta", "det of theta_q on Sym_n and the closed form");
    det_cmd->add_option("--n", f.n)->required();
    det_cmd->add_option("--q", f.q)->required();
    add_common(det_cmd, f);

    auto* tangent_cmd = app.add_subcommand("tangent", "check the tangent-series identities");
    tangent_cmd->add_option("--order", f.order);
    add_common(tangent_cmd, f);

    auto* bases_cmd = app.add_subcommand("bases", "list F_n^(N), G_n^(N) and the bijection epsilon");
    bases_cmd->add_option("--n", f.n)->required();
    add_common(bases_cmd, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (f.oracle_limit >= 0) set_oracle_limit(f.oracle_limit);
        const bool as_json = f.format == "json";

        if (expand_cmd->parsed() || convert_cmd->parsed()) {
            emit(parse_any(expr, f), f.to, f);
        } else if (hilbert_cmd->parsed()) {
            if (f.N < 1) throw InvalidInput("hilbert requires --N >= 1");
            json dims = json::array();
            for (int n = 0; n <= f.max_n; ++n) {
                const auto d = hilbert_dim(n, f.N);
                if (f.N >= 2 && d != G_set(n, f.N).size())
                    throw std::logic_error("hilbert_dim disagrees with |G| at n = " + std::to_string(n));
                dims.push_back(d);
            }
            if (as_json) {
                std::cout << json{{"N", f.N}, {"dims", dims}}.dump() << "\n";
            } else {
                for (std::size_t k = 0; k < dims.size(); ++k) std::cout << (k ? " " : "") << dims[k].get<std::uint64_t>();
                std::cout << "\n";
            }
        } else if (verify_cmd->parsed()) {
            VerifyOptions o;
            if (f.N) o.Ns = {f.N};
            o.n = f.n;
            o.max_n = f.max_n;
            o.order = f.order;
            if (!f.q.empty()) o.qs = {parse_q(f)};
            const SuiteReport r = run_suite(suite, o);
            if (as_json)
                std::cout << json{{"suite", r.suite}, {"passed", r.passed}, {"checks", r.checks},
                                  {"counterexample", r.counterexample}, {"notes", r.notes}}
                                 .dump()
                          << "\n";
            else
                std::cout << r.render();
            return r.passed ? kOk : kFailed;
        } else if (internal_cmd->parsed()) {
            std::string basis_a;
            const Element a = parse_any(expr, f, &basis_a), b = parse_any(expr2, f);
            const int wa = a.homogeneous_weight(), wb = b.homogeneous_weight();
            if (wa < 0 || wb < 0 || wa != wb)
                throw InvalidInput("internal product needs homogeneous operands of equal weight");
            emit(internal_product(a, b), f.to.empty() ? basis_a : f.to, f);
        } else if (theta_cmd->parsed()) {
            std::string basis;
            const Element x = parse_any(expr, f, &basis);
            Element y;
            if (normalized) {
                if (f.N < 1) throw InvalidInput("--normalized requires --N");
                y = Theta(x, f.N);
            } else {
                y = theta_q(x, parse_q(f));
            }
            emit(y, f.to.empty() ? "R" : f.to, f);
        } else if (det_cmd->parsed()) {
            const Scalar q = parse_q(f);
            const Scalar d = det_theta(f.n, q), formula = det_formula(f.n, q);
            if (as_json)
                std::cout << json{{"n", f.n}, {"det", to_json(d)}, {"formula", to_json(formula)}, {"equal", d == formula}}
                                 .dump()
                          << "\n";
            else
                std::cout << "det_theta = " << d.to_string() << "\nformula   = " << formula.to_string() << "\n"
                          << (d == formula ? "equal" : "DIFFERENT") << "\n";
            return d == formula ? kOk : kFailed;
        } else if (tangent_cmd->parsed()) {
            const PeakContext ctx(require_N(f, "tangent"));
            const int order = f.order >= 1 ? f.order : 8;
            const std::pair<const char*, SeriesCheck> checks[] = {
                {"(1 - t)^{-1} = sum (-1)^n rho_{1^n}", check_tangent(ctx, order)},
                {"sigma_N(t) lambda_N(-t) = 1", check_sigma_lambda(ctx, order)},
                {"(1 - t_zeta)^{-1} = sum rho_{1^n}(zeta)", check_tangent_zeta(ctx, order)},
            };
            bool ok = true;
            json out = json::array();
            for (const auto& [name, c] : checks) {
                ok = ok && c.ok;
                if (as_json) out.push_back({{"identity", name}, {"ok", c.ok}, {"detail", c.detail}});
                else std::cout << (c.ok ? "PASS " : "FAIL ") << name << (c.ok ? "" : "  " + c.detail) << "\n";
            }
            if (as_json) std::cout << out.dump() << "\n";
            return ok ? kOk : kFailed;
        } else if (bases_cmd->parsed()) {
            if (f.N < 2) throw InvalidInput("bases requires --N >= 2");
            json rows = json::array();
            for (const auto& g : G_set(f.n, f.N)) {
                const Composition e = epsilon(g, f.N);
                if (as_json) rows.push_back({{"G", g.parts()}, {"F", e.parts()}});
                else std::cout << g.to_string() << " -> " << e.to_string() << "\n";
            }
            if (as_json) std::cout << json{{"N", f.N}, {"n", f.n}, {"epsilon", rows}}.dump() << "\n";
        }
    } catch (const NotMember& e) {
        std::cerr << e.what() << "\n";
        std::cout << "NOT_MEMBER\n";
        return kNotMember;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kCapacity;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFailed;
    }
    return kOk;
}
