#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace nsym {

// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// Dense polynomial over Q, coefficients from degree 0 upwards, no trailing zeros.
using RationalPoly = std::vector<Rational>;

// Phi_N, computed by exact division of x^N - 1 by Phi_d for the proper divisors d of N.
// Memoised; safe to call concurrently.
const RationalPoly& cyclotomic_polynomial(int order);

// Euler's phi, i.e. deg Phi_N.
int euler_phi(int order);

std::string poly_to_string(const RationalPoly& p, std::string_view symbol = "x");

// An element of Q(zeta_N), stored as a polynomial in zeta of degree < phi(N)
// reduced modulo Phi_N. Conductor 1 is the field Q itself; a conductor-1 value
// combines with any conductor by the natural embedding, while two different
// conductors > 1 are rejected.
class Scalar {
public:
    Scalar() : Scalar(0) {}
    Scalar(long value);  // NOLINT: integers convert implicitly
    Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT
    Scalar(Rational value);  // NOLINT
    // sum_k coeffs[k] zeta_N^k, reduced mod Phi_N
    Scalar(int conductor, std::vector<Rational> coeffs);

    static Scalar zeta_pow(int conductor, long k);
    static Scalar zeta(int conductor) { return zeta_pow(conductor, 1); }

    int conductor() const noexcept { return conductor_; }
    bool is_rational() const noexcept { return coeffs_.size() == 1; }
    // Throws InvalidInput unless is_rational().
    const Rational& rational() const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    // The same number viewed in Q(zeta_N); requires conductor() == 1 or == N.
    Scalar promoted(int conductor) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    // Multiplicative inverse via extended gcd with Phi_N. Throws DivisionByZero on 0.
    Scalar inverse() const;
    Scalar pow(long k) const;

    // "p/q" for rationals; otherwise a polynomial in z such as "1/2 - z + z^2".
    std::string to_string() const;

private:
    void reduce();
    static int common_conductor(const Scalar& a, const Scalar& b);

    int conductor_ = 1;
    std::vector<Rational> coeffs_;  // length phi(conductor_)
};

// Parses "p/q", "p", or a polynomial in `z` such as "1/2 - z + 3*z^2" into Q(zeta_N).
Scalar parse_scalar(std::string_view text, int conductor = 1);

nlohmann::json to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

}  // namespace nsym
