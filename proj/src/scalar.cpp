#include "nsym/scalar.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "nsym/errors.hpp"

namespace nsym {

namespace {

void trim(RationalPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
    if (a.empty() || b.empty()) return {};
    RationalPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

RationalPoly poly_sub(RationalPoly a, const RationalPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// a = q*b + r with deg r < deg b
void poly_divmod(const RationalPoly& a, const RationalPoly& b, RationalPoly& q, RationalPoly& r) {
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    while (!r.empty() && r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        Rational c = r.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
        r.pop_back();
        trim(r);
    }
    trim(q);
}

RationalPoly compute_cyclotomic(int order) {
    RationalPoly p(static_cast<std::size_t>(order) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(order)] = 1;
    for (int d = 1; d < order; ++d) {
        if (order % d) continue;
        RationalPoly q, r;
        poly_divmod(p, cyclotomic_polynomial(d), q, r);
        if (!r.empty()) throw std::logic_error("cyclotomic division left a remainder");
        p = std::move(q);
    }
    return p;
}

std::shared_mutex g_cyclo_mutex;
std::map<int, RationalPoly> g_cyclo_cache;

}  // namespace

// ---------------------------------------------------------------------------

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty rational", 0);
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] == '/' && !slash && i > start && i + 1 < s.size()) {
            slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("malformed rational '" + s + "'", i);
    }
    if (start == s.size()) throw ParseError("malformed rational '" + s + "'", start);
    if (s[0] == '+') s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'", 0);
    if (r.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

const RationalPoly& cyclotomic_polynomial(int order) {
    if (order < 1) throw InvalidInput("cyclotomic_polynomial: N must be >= 1");
    {
        std::shared_lock lock(g_cyclo_mutex);
        if (auto it = g_cyclo_cache.find(order); it != g_cyclo_cache.end()) return it->second;
    }
    RationalPoly p = order == 1 ? RationalPoly{-1, 1} : compute_cyclotomic(order);
    std::unique_lock lock(g_cyclo_mutex);
    return g_cyclo_cache.try_emplace(order, std::move(p)).first->second;
}

int euler_phi(int order) { return static_cast<int>(cyclotomic_polynomial(order).size()) - 1; }

std::string poly_to_string(const RationalPoly& p, std::string_view symbol) {
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Rational& c = p[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += symbol;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

Scalar::Scalar(long value) : conductor_(1), coeffs_{Rational(value)} {}

Scalar::Scalar(Rational value) : conductor_(1), coeffs_{std::move(value)} { coeffs_[0].canonicalize(); }

Scalar::Scalar(int conductor, std::vector<Rational> coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {
    if (conductor < 1) throw InvalidInput("Scalar: conductor must be >= 1");
    reduce();
}

void Scalar::reduce() {
    const RationalPoly& phi = cyclotomic_polynomial(conductor_);
    const std::size_t deg = phi.size() - 1;
    // phi is monic
    while (coeffs_.size() > deg) {
        Rational lead = coeffs_.back();
        coeffs_.pop_back();
        if (lead == 0) continue;
        const std::size_t shift = coeffs_.size() - deg;
        for (std::size_t i = 0; i < deg; ++i) coeffs_[i + shift] -= lead * phi[i];
    }
    coeffs_.resize(deg, 0);
}

Scalar Scalar::zeta_pow(int conductor, long k) {
    if (conductor < 1) throw InvalidInput("zeta_pow: conductor must be >= 1");
    long e = k % conductor;
    if (e < 0) e += conductor;
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1, 0);
    c[static_cast<std::size_t>(e)] = 1;
    return Scalar(conductor, std::move(c));
}

const Rational& Scalar::rational() const {
    if (!is_rational()) throw InvalidInput("Scalar::rational: " + to_string() + " is not rational");
    return coeffs_[0];
}

bool Scalar::is_zero() const noexcept {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const noexcept {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

int Scalar::common_conductor(const Scalar& a, const Scalar& b) {
    if (a.conductor_ == b.conductor_) return a.conductor_;
    if (a.conductor_ == 1) return b.conductor_;
    if (b.conductor_ == 1) return a.conductor_;
    throw InvalidInput("Scalar: conductor mismatch (" + std::to_string(a.conductor_) + " vs " +
                       std::to_string(b.conductor_) + ")");
}

Scalar Scalar::promoted(int conductor) const {
    if (conductor == conductor_) return *this;
    if (conductor_ != 1) throw InvalidInput("Scalar::promoted: cannot move between conductors > 1");
    return Scalar(conductor, {coeffs_[0]});
}

Scalar& Scalar::operator+=(const Scalar& o) {
    int n = common_conductor(*this, o);
    if (n != conductor_) *this = promoted(n);
    if (o.conductor_ == n) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    } else {
        coeffs_[0] += o.coeffs_[0];
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
    Scalar out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    int n = common_conductor(*this, o);
    if (o.is_rational() && o.conductor_ != n) {
        for (auto& c : coeffs_) c *= o.coeffs_[0];
        return *this;
    }
    if (is_rational() && conductor_ != n) {
        Rational c = coeffs_[0];
        *this = o;
        for (auto& x : coeffs_) x *= c;
        return *this;
    }
    std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(prod);
    conductor_ = n;
    reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    // a conductor-1 value equals a cyclotomic one only if the latter is rational
    if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
    if (a.conductor_ == 1 || b.conductor_ == 1) {
        const Scalar& q = a.conductor_ == 1 ? a : b;
        const Scalar& c = a.conductor_ == 1 ? b : a;
        return c == q.promoted(c.conductor_);
    }
    return false;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("Scalar::inverse of zero");
    if (is_rational()) return Scalar(conductor_, {Rational(1) / coeffs_[0]});
    // extended Euclid: find s with s*a = 1 mod Phi_N
    RationalPoly r0 = cyclotomic_polynomial(conductor_), r1 = coeffs_;
    trim(r1);
    RationalPoly s0{}, s1{1};
    while (!r1.empty()) {
        RationalPoly q, r;
        poly_divmod(r0, r1, q, r);
        RationalPoly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant because Phi_N is irreducible
    if (r0.size() != 1) throw std::logic_error("Scalar::inverse: gcd with Phi_N is not constant");
    for (auto& c : s0) c /= r0[0];
    return Scalar(conductor_, std::move(s0));
}

Scalar Scalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar result = Scalar(1).promoted(conductor_);
    Scalar base = *this;
    while (k) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

std::string Scalar::to_string() const {
    if (is_rational()) return coeffs_[0].get_str();
    return poly_to_string(coeffs_, "z");
}

// ---------------------------------------------------------------------------

namespace {

class ScalarParser {
public:
    ScalarParser(std::string_view text, int conductor) : text_(text), conductor_(conductor) {}

    Scalar parse() {
        Scalar total = Scalar(0).promoted(conductor_);
        skip();
        if (pos_ >= text_.size()) throw ParseError("empty scalar", pos_);
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (text_[pos_] == '+' || text_[pos_] == '-') {
                sign = text_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            Scalar term = parse_term();
            total += sign > 0 ? term : -term;
            skip();
        }
        return total;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Rational parse_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected a number", pos_);
        std::string digits(text_.substr(start, pos_ - start));
        skip();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip();
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == dstart) throw ParseError("expected a denominator", pos_);
            digits += "/" + std::string(text_.substr(dstart, pos_ - dstart));
        }
        return parse_rational(digits);
    }

    Scalar parse_power_of_z() {
        ++pos_;  // 'z'
        skip();
        long e = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip();
            bool neg = false;
            if (pos_ < text_.size() && text_[pos_] == '-') {
                neg = true;
                ++pos_;
            }
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == start) throw ParseError("expected an exponent", pos_);
            e = std::stol(std::string(text_.substr(start, pos_ - start)));
            if (neg) e = -e;
        }
        if (conductor_ == 1) throw ParseError("'z' requires a conductor N", pos_);
        return Scalar::zeta_pow(conductor_, e);
    }

    Scalar parse_term() {
        Scalar value = Scalar(1).promoted(conductor_);
        bool any = false;
        while (true) {
            skip();
            if (pos_ >= text_.size()) break;
            char ch = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                value *= Scalar(parse_number());
            } else if (ch == 'z') {
                value *= parse_power_of_z();
            } else {
                break;
            }
            any = true;
            skip();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) throw ParseError("expected a number or 'z'", pos_);
        return value;
    }

    std::string_view text_;
    int conductor_;
    std::size_t pos_ = 0;
};

nlohmann::json rational_to_json(const Rational& r) {
    nlohmann::json j;
    if (r.get_num().fits_slong_p()) j["num"] = r.get_num().get_si();
    else j["num"] = r.get_num().get_str();
    if (r.get_den().fits_slong_p()) j["den"] = r.get_den().get_si();
    else j["den"] = r.get_den().get_str();
    return j;
}

Rational rational_from_json(const nlohmann::json& j) {
    auto part = [](const nlohmann::json& v) -> std::string {
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        if (v.is_string()) return v.get<std::string>();
        throw InvalidInput("rational JSON: num/den must be integers or digit strings");
    };
    if (!j.is_object() || !j.contains("num")) throw InvalidInput("rational JSON: missing 'num'");
    std::string text = part(j.at("num"));
    if (j.contains("den")) text += "/" + part(j.at("den"));
    return parse_rational(text);
}

}  // namespace

Scalar parse_scalar(std::string_view text, int conductor) { return ScalarParser(text, conductor).parse(); }

nlohmann::json to_json(const Scalar& s) {
    if (s.conductor() == 1) return rational_to_json(s.rational());
    nlohmann::json j;
    j["N"] = s.conductor();
    j["coeffs"] = nlohmann::json::array();
    for (const auto& c : s.coeffs()) j["coeffs"].push_back(rational_to_json(c));
    return j;
}

Scalar scalar_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
    if (j.contains("N")) {
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(scalar_from_json(c).rational());
        return Scalar(j.at("N").get<int>(), std::move(coeffs));
    }
    return Scalar(rational_from_json(j));
}

}  // namespace nsym
