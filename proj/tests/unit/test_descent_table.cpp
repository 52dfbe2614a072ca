#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <map>

#include "nsym/descent_table.hpp"
#include "nsym/errors.hpp"

using namespace nsym;

namespace {

using C = Composition;

Element R(const C& c, Scalar k = 1) { return Element::monomial(Basis::R, c, k); }
Element S(const C& c, Scalar k = 1) { return Element::monomial(Basis::S, c, k); }

// Multiplies the class sums D_{=I} D_{=J} directly in the group algebra.
std::map<C, long> brute_class_product(const C& i, const C& j) {
    std::map<C, long> counts;
    for (const auto& x : descent_class(i, 10))
        for (const auto& y : descent_class(j, 10)) ++counts[descent_composition(x.compose(y))];
    return counts;
}

}  // namespace

TEST_CASE("descent classes") {
    CHECK(descent_class(C{4}) == std::vector<Permutation>{Permutation::identity(4)});
    CHECK(descent_class(C{1, 1, 1}) == std::vector<Permutation>{parse_permutation("321")});
    const auto c = descent_class(C{2, 1});
    CHECK(c == std::vector<Permutation>{parse_permutation("132"), parse_permutation("231")});
    CHECK_THROWS_AS(descent_class(C{9}), CapacityError);
}

TEST_CASE("table agrees with brute-force class-sum products") {
    for (int n = 1; n <= 5; ++n) {
        const DescentTable t = build_descent_table(n);
        for (const auto& i : compositions_of(n))
            for (const auto& j : compositions_of(n)) {
                const auto brute = brute_class_product(i, j);
                for (const auto& k : compositions_of(n)) {
                    auto it = brute.find(k);
                    // brute counts every product; each K-term appears |class K| times
                    const long expected = it == brute.end() ? 0 : it->second / t.class_size(k);
                    CHECK(t.constant(i, j, k) == expected);
                }
            }
    }
}

TEST_CASE("table agrees with brute force at n = 6" * doctest::skip(false)) {
    const DescentTable t = build_descent_table(6);
    const auto cs = compositions_of(6);
    // a spread of pairs keeps this quick
    for (std::size_t a = 0; a < cs.size(); a += 5)
        for (std::size_t b = 0; b < cs.size(); b += 3) {
            const auto brute = brute_class_product(cs[a], cs[b]);
            for (const auto& k : cs) {
                auto it = brute.find(k);
                CHECK(t.constant(cs[a], cs[b], k) == (it == brute.end() ? 0 : it->second / t.class_size(k)));
            }
        }
}

TEST_CASE("mass conservation and associativity") {
    const DescentTable t1 = build_descent_table(1);
    CHECK(t1.constant(C{1}, C{1}, C{1}) == 1);
    for (int n = 1; n <= 6; ++n) {
        const DescentTable t = build_descent_table(n);
        const auto cs = compositions_of(n);
        for (const auto& i : cs)
            for (const auto& j : cs) {
                long mass = 0;
                for (const auto& k : cs) mass += t.constant(i, j, k) * t.class_size(k);
                CHECK(mass == t.class_size(i) * t.class_size(j));
            }
    }
    const DescentTable t = build_descent_table(3);
    const auto cs = compositions_of(3);
    const std::size_t d = cs.size();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t out = 0; out < d; ++out) {
                    long left = 0, right = 0;
                    for (std::size_t m = 0; m < d; ++m) {
                        left += t.constant(a, b, m) * t.constant(m, c, out);
                        right += t.constant(b, c, m) * t.constant(a, m, out);
                    }
                    CHECK(left == right);
                }
}

TEST_CASE("internal product examples") {
    const Element rho111 = R(C{1, 1, 1}) - R(C{3});
    CHECK(internal_product(rho111, rho111) == rho111 * Scalar(-2));
    const Element rho12 = R(C{1, 2}) + R(C{3}), rho21 = R(C{2, 1}) + R(C{3});
    CHECK(internal_product(rho12, rho111) == rho111 + rho21 - rho12);
    CHECK(internal_product(S(C{3}), R(C{2, 1})) == R(C{2, 1}));
    // different weights multiply to zero
    CHECK(internal_product(R(C{2}), R(C{1, 2})).is_zero());
    CHECK(internal_product(R(C{2}) + R(C{1}), R(C{1, 1}) + R(C{1})) == R(C{1, 1}) + R(C{1}));
}

TEST_CASE("S_n is a two-sided identity") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& i : compositions_of(n)) {
            CHECK(internal_product(S(C{n}), R(i)) == R(i));
            CHECK(internal_product(R(i), S(C{n})) == R(i));
        }
}

TEST_CASE("internal product is associative on Sym_n") {
    for (int n = 1; n <= 4; ++n) {
        const auto cs = compositions_of(n);
        for (const auto& a : cs)
            for (const auto& b : cs)
                for (const auto& c : cs)
                    CHECK(internal_product(internal_product(S(a), S(b)), S(c)) ==
                          internal_product(S(a), internal_product(S(b), S(c))));
    }
}

TEST_CASE("alpha is an anti-isomorphism: table product matches the group algebra") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& i : compositions_of(n))
            for (const auto& j : compositions_of(n)) {
                // alpha(R_J) alpha(R_I) = D_{=J} D_{=I}
                Element expected(Basis::R);
                for (const auto& [k, count] : brute_class_product(j, i))
                    expected.add_term(k, Scalar(Rational(count) / Rational(descent_class(k).size())));
                CHECK(internal_product(R(i), R(j)) == expected);
            }
}

TEST_CASE("capacity limit and disk cache") {
    CHECK_THROWS_AS(build_descent_table(9), CapacityError);
    set_oracle_limit(3);
    CHECK_THROWS_AS(internal_product(R(C{4}), R(C{4})), CapacityError);
    set_oracle_limit(kDefaultOracleLimit);

    const auto dir = std::filesystem::temp_directory_path() / "nsym_table_test";
    std::filesystem::remove_all(dir);
    const DescentTable t = build_descent_table(4);
    const auto file = dir / "t4.txt";
    t.save(file);
    const auto loaded = DescentTable::load(file, 4);
    REQUIRE(loaded.has_value());
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
            for (std::size_t c = 0; c < 8; ++c) CHECK(loaded->constant(a, b, c) == t.constant(a, b, c));
    CHECK_FALSE(DescentTable::load(file, 5).has_value());
    CHECK_FALSE(DescentTable::load(dir / "missing.txt", 4).has_value());
    std::filesystem::remove_all(dir);
}
