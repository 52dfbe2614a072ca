#include "nsym/element.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "nsym/errors.hpp"

namespace nsym {

std::string to_string(Basis b) { return b == Basis::S ? "S" : "R"; }

Basis basis_from_string(std::string_view name) {
    if (name == "S") return Basis::S;
    if (name == "R") return Basis::R;
    throw InvalidInput("unknown basis '" + std::string(name) + "' (expected S or R)");
}

Element::Element(Basis basis, Terms terms) : basis_(basis) {
    for (auto& [c, v] : terms)
        if (!v.is_zero()) terms_.emplace(c, std::move(v));
}

Element Element::monomial(Basis basis, const Composition& c, Scalar coeff) {
    Element e(basis);
    e.add_term(c, coeff);
    return e;
}

Scalar Element::coefficient(const Composition& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const Composition& c, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(c, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Element::homogeneous_weight() const {
    if (terms_.empty()) return 0;
    // canonical order sorts by weight first
    int lo = terms_.begin()->first.weight();
    int hi = terms_.rbegin()->first.weight();
    return lo == hi ? lo : -1;
}

Element Element::component(int n) const {
    Element out(basis_);
    for (const auto& [c, v] : terms_)
        if (c.weight() == n) out.terms_.emplace(c, v);
    return out;
}

int Element::max_weight() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }

Element& Element::operator+=(const Element& o) {
    if (o.basis_ != basis_ && !o.is_zero()) return *this += to_basis(o, basis_);
    for (const auto& [c, v] : o.terms_) add_term(c, v);
    return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element& Element::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, v] : terms_) v *= s;
    return *this;
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& [c, v] : out.terms_) v = -v;
    return out;
}

bool operator==(const Element& a, const Element& b) {
    if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
    return a.terms_ == to_basis(b, a.basis_).terms_;
}

namespace {

std::string render_coefficient(const Scalar& v, bool first, bool& unit) {
    // sign plus magnitude; `unit` is set when the magnitude is exactly 1
    std::size_t nonzero = 0, idx = 0;
    for (std::size_t k = 0; k < v.coeffs().size(); ++k)
        if (v.coeffs()[k] != 0) {
            ++nonzero;
            idx = k;
        }
    unit = false;
    if (nonzero != 1) return (first ? "" : " + ") + std::string("(") + v.to_string() + ")";
    const Rational& r = v.coeffs()[idx];
    Rational a = abs(r);
    std::string sign = r < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    if (idx == 0) {
        unit = a == 1;
        return sign + (unit ? std::string() : a.get_str());
    }
    std::string mag = a == 1 ? "" : a.get_str() + "*";
    mag += idx == 1 ? std::string("z") : "z^" + std::to_string(idx);
    return sign + mag;
}

}  // namespace

std::string format_terms(const std::map<Composition, Scalar>& terms, std::string_view basis_name) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, v] : terms) {
        bool unit = false;
        std::string prefix = render_coefficient(v, first, unit);
        out += prefix;
        if (!unit) out += "*";
        out += std::string(basis_name) + c.to_string();
        first = false;
    }
    return out;
}

std::string Element::to_string(std::string_view basis_name) const {
    return format_terms(terms_, basis_name.empty() ? nsym::to_string(basis_) : std::string(basis_name));
}

// ---------------------------------------------------------------------------

namespace {

// Calls f(J) for every composition J of weight n with D(J) ⊆ D(I).
template <class F>
void for_each_coarsening(const Composition& i, F&& f) {
    const int n = i.weight();
    const std::uint64_t mask = i.descent_mask();
    std::uint64_t sub = mask;
    while (true) {
        f(composition_from_mask(sub, n));
        if (sub == 0) break;
        sub = (sub - 1) & mask;
    }
}

}  // namespace

Element s_to_r(const Element& f) {
    if (f.basis() != Basis::S) throw InvalidInput("s_to_r: element is not in the S basis");
    Element out(Basis::R);
    for (const auto& [i, v] : f.terms())
        for_each_coarsening(i, [&](const Composition& j) { out.add_term(j, v); });
    return out;
}

Element r_to_s(const Element& f) {
    if (f.basis() != Basis::R) throw InvalidInput("r_to_s: element is not in the R basis");
    Element out(Basis::S);
    for (const auto& [i, v] : f.terms())
        for_each_coarsening(i, [&](const Composition& j) {
            out.add_term(j, (i.length() - j.length()) % 2 ? -v : v);
        });
    return out;
}

Element to_basis(const Element& f, Basis target) {
    if (f.basis() == target) return f;
    return target == Basis::R ? s_to_r(f) : r_to_s(f);
}

Element multiply(const Element& f, const Element& g) {
    if (f.basis() != g.basis()) throw InvalidInput("multiply: operands are in different bases");
    Element out(f.basis());
    for (const auto& [i, a] : f.terms()) {
        for (const auto& [j, b] : g.terms()) {
            Scalar c = a * b;
            out.add_term(i + j, c);
            if (f.basis() == Basis::R && !i.empty() && !j.empty()) out.add_term(glue(i, j), c);
        }
    }
    return out;
}

std::vector<TensorTerm> coproduct_S(int n) {
    if (n < 0) throw InvalidInput("coproduct_S: n must be >= 0");
    auto s = [](int k) { return Element::monomial(Basis::S, k == 0 ? Composition{} : Composition{k}); };
    std::vector<TensorTerm> out;
    for (int k = 0; k <= n; ++k) out.push_back({Scalar(1), s(k), s(n - k)});
    return out;
}

// ---------------------------------------------------------------------------

namespace {

class TermParser {
public:
    TermParser(std::string_view text, int conductor) : text_(text), conductor_(conductor) {}

    std::vector<ParsedTerm> parse() {
        std::vector<ParsedTerm> out;
        skip();
        if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
        if (text_.substr(pos_) == "0") return out;
        bool first = true;
        while (pos_ < text_.size()) {
            Scalar sign = 1;
            if (text_[pos_] == '+' || text_[pos_] == '-') {
                if (text_[pos_] == '-') sign = -1;
                ++pos_;
                skip();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            out.push_back(parse_term());
            out.back().coeff *= sign;
            skip();
        }
        return out;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Scalar parse_factor() {
        char ch = text_[pos_];
        if (ch == '(') {
            std::size_t close = text_.find(')', pos_);
            if (close == std::string_view::npos) throw ParseError("unbalanced '('", pos_);
            std::string_view inner = text_.substr(pos_ + 1, close - pos_ - 1);
            Scalar value;
            try {
                value = parse_scalar(inner, conductor_);
            } catch (const ParseError& e) {
                throw ParseError(std::string("bad coefficient: ") + e.what(), pos_ + 1);
            }
            pos_ = close + 1;
            return value;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                                       text_[pos_] == 'z' || text_[pos_] == '^' ||
                                       (text_[pos_] == '-' && pos_ > start && text_[pos_ - 1] == '^')))
            ++pos_;
        try {
            return parse_scalar(text_.substr(start, pos_ - start), conductor_);
        } catch (const ParseError& e) {
            throw ParseError(std::string("bad coefficient: ") + e.what(), start);
        }
    }

    ParsedTerm parse_term() {
        ParsedTerm term{Scalar(1), {}, {}};
        while (true) {
            skip();
            if (pos_ >= text_.size()) throw ParseError("expected a term", pos_);
            char ch = text_[pos_];
            bool starts_name = std::isalpha(static_cast<unsigned char>(ch)) &&
                               !(ch == 'z' && (pos_ + 1 >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_ + 1]))));
            if (starts_name) break;
            term.coeff *= parse_factor();
            skip();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                continue;
            }
            throw ParseError("expected '*' before basis name", pos_);
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        term.basis_name = std::string(text_.substr(start, pos_ - start));
        skip();
        if (pos_ >= text_.size() || text_[pos_] != '[') throw ParseError("expected '['", pos_);
        std::size_t close = text_.find(']', pos_);
        if (close == std::string_view::npos) throw ParseError("unbalanced '['", pos_);
        try {
            term.comp = parse_composition(text_.substr(pos_, close - pos_ + 1));
        } catch (const ParseError& e) {
            throw ParseError(std::string("bad composition: ") + e.what(), pos_);
        } catch (const InvalidInput& e) {
            throw ParseError(std::string("bad composition: ") + e.what(), pos_);
        }
        pos_ = close + 1;
        return term;
    }

    std::string_view text_;
    int conductor_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, int conductor) {
    return TermParser(text, conductor).parse();
}

Element parse_element(std::string_view text, int conductor) {
    auto terms = parse_terms(text, conductor);
    Basis basis = Basis::S;
    if (!terms.empty()) basis = basis_from_string(terms.front().basis_name);
    Element out(basis);
    for (const auto& t : terms) {
        Basis b = basis_from_string(t.basis_name);
        out += Element::monomial(b, t.comp, t.coeff);
    }
    return out;
}

nlohmann::json to_json(const Element& e, std::string_view basis_name) {
    nlohmann::json j;
    j["basis"] = basis_name.empty() ? to_string(e.basis()) : std::string(basis_name);
    j["terms"] = nlohmann::json::array();
    for (const auto& [c, v] : e.terms()) j["terms"].push_back({{"comp", c.parts()}, {"coeff", to_json(v)}});
    return j;
}

Element element_from_json(const nlohmann::json& j) {
    Basis basis = basis_from_string(j.at("basis").get<std::string>());
    Element out(basis);
    for (const auto& t : j.at("terms"))
        out.add_term(Composition(t.at("comp").get<std::vector<int>>()), scalar_from_json(t.at("coeff")));
    return out;
}

}  // namespace nsym
