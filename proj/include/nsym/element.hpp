#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nsym/composition.hpp"
#include "nsym/scalar.hpp"

namespace nsym {

enum class Basis { S, R };

std::string to_string(Basis b);
Basis basis_from_string(std::string_view name);

// A finite linear combination of S^I or R_I. Zero coefficients are never stored;
// the empty composition is the unit 1. Terms may have mixed weights.
class Element {
public:
    using Terms = std::map<Composition, Scalar>;

    explicit Element(Basis basis = Basis::S) : basis_(basis) {}
    Element(Basis basis, Terms terms);

    static Element unit(Basis basis) { return monomial(basis, Composition{}); }
    static Element monomial(Basis basis, const Composition& c, Scalar coeff = 1);

    Basis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Scalar coefficient(const Composition& c) const;
    void add_term(const Composition& c, const Scalar& coeff);

    // Weight if every term has the same weight; -1 for an inhomogeneous element, 0 for zero.
    int homogeneous_weight() const;
    bool is_homogeneous() const { return homogeneous_weight() >= 0; }
    // Part of the element of weight n.
    Element component(int n) const;
    int max_weight() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Scalar& c);
    Element operator-() const;
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Scalar& c) { return a *= c; }
    friend Element operator*(const Scalar& c, Element a) { return a *= c; }
    // Compares as elements of Sym (converting bases when they differ).
    friend bool operator==(const Element& a, const Element& b);

    // e.g. "2*S[2,1] - 1/3*S[1,1,2]", "(1 - z)*R[2]"; "0" for zero.
    std::string to_string(std::string_view basis_name = {}) const;

private:
    Basis basis_;
    Terms terms_;
};

// S^I = sum_{J ⪯ I} R_J
Element s_to_r(const Element& f);
// R_I = sum_{J ⪯ I} (-1)^{l(I)-l(J)} S^J
Element r_to_s(const Element& f);
Element to_basis(const Element& f, Basis target);

// Product in Sym. Operands must share a basis: S by concatenation,
// R by the ribbon rule R_I R_J = R_{I.J} + R_{I ▷ J}.
Element multiply(const Element& f, const Element& g);
inline Element operator*(const Element& f, const Element& g) { return multiply(f, g); }

struct TensorTerm {
    Scalar coeff;
    Element left;
    Element right;
};
// Delta(S_n) = sum_{k=0}^{n} S_k ⊗ S_{n-k}
std::vector<TensorTerm> coproduct_S(int n);

// ---------------------------------------------------------------------------
// Text and JSON

// One parsed term of an element expression: coeff * name[comp].
struct ParsedTerm {
    Scalar coeff;
    std::string basis_name;
    Composition comp;
};

// Parses "2*S[2,1] - 1/3*R[1,1,2] + (1 - z)*rho[1,1]". Coefficients may be rationals,
// powers of z, or a parenthesised polynomial in z (requires conductor > 1).
std::vector<ParsedTerm> parse_terms(std::string_view text, int conductor = 1);

// Parses an expression whose terms all use the S or R basis (mixed S/R allowed,
// result in the basis of the first term).
Element parse_element(std::string_view text, int conductor = 1);

nlohmann::json to_json(const Element& e, std::string_view basis_name = {});
Element element_from_json(const nlohmann::json& j);

// Renders any coordinate map as a term list under the given basis name.
std::string format_terms(const std::map<Composition, Scalar>& terms, std::string_view basis_name);

}  // namespace nsym
