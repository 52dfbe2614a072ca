#include <doctest.h>

#include <random>

#include "nsym/element.hpp"
#include "nsym/errors.hpp"

using namespace nsym;

namespace {

using C = Composition;

Element S(const C& c, Scalar k = 1) { return Element::monomial(Basis::S, c, k); }
Element R(const C& c, Scalar k = 1) { return Element::monomial(Basis::R, c, k); }

Element random_element(std::mt19937& rng, Basis b, int max_weight) {
    std::uniform_int_distribution<int> wd(0, max_weight), cd(-3, 3), nterms(1, 5);
    Element e(b);
    for (int t = nterms(rng); t > 0; --t) {
        const auto cs = compositions_of(wd(rng));
        e.add_term(cs[std::uniform_int_distribution<std::size_t>(0, cs.size() - 1)(rng)], Scalar(cd(rng)));
    }
    return e;
}

}  // namespace

TEST_CASE("basis conversions") {
    CHECK(s_to_r(S(C{1, 1})) == R(C{1, 1}) + R(C{2}));
    CHECK(s_to_r(S(C{4})) == R(C{4}));
    CHECK(s_to_r(S(C{2, 1})) == R(C{2, 1}) + R(C{3}));
    CHECK(to_basis(R(C{4}), Basis::S).terms() == S(C{4}).terms());
    CHECK(r_to_s(R(C{1, 1})).terms() == (S(C{1, 1}) - S(C{2})).terms());
    CHECK_THROWS_AS(s_to_r(R(C{1})), InvalidInput);
    std::mt19937 rng(7);
    for (int k = 0; k < 100; ++k) {
        const Element e = random_element(rng, Basis::S, 8);
        const Element back = r_to_s(s_to_r(e));
        CHECK(back.terms() == e.terms());
        const Element er = s_to_r(e);
        for (const auto& [c, v] : er.terms()) CHECK(e.component(c.weight()).size() > 0);
    }
}

TEST_CASE("products") {
    CHECK(multiply(R(C{2}), R(C{1})).terms() == (R(C{2, 1}) + R(C{3})).terms());
    CHECK(multiply(S(C{2}), S(C{1, 3})).terms() == S(C{2, 1, 3}).terms());
    CHECK(multiply(Element::unit(Basis::R), R(C{2, 1})) == R(C{2, 1}));
    CHECK(multiply(R(C{2, 1}), Element::unit(Basis::R)) == R(C{2, 1}));
    CHECK_THROWS_AS(multiply(R(C{1}), S(C{1})), InvalidInput);
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 7; ++b)
            for (const auto& i : compositions_of(a))
                for (const auto& j : compositions_of(b))
                    CHECK(s_to_r(multiply(S(i), S(j))).terms() == multiply(s_to_r(S(i)), s_to_r(S(j))).terms());
}

TEST_CASE("products are associative and unital in both bases") {
    std::mt19937 rng(11);
    for (Basis b : {Basis::S, Basis::R})
        for (int k = 0; k < 30; ++k) {
            const Element x = random_element(rng, b, 3), y = random_element(rng, b, 2), z = random_element(rng, b, 2);
            CHECK(multiply(multiply(x, y), z).terms() == multiply(x, multiply(y, z)).terms());
            CHECK(multiply(Element::unit(b), x).terms() == x.terms());
        }
}

TEST_CASE("coproduct of S_n") {
    const auto d0 = coproduct_S(0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].left == Element::unit(Basis::S));
    const auto d2 = coproduct_S(2);
    REQUIRE(d2.size() == 3);
    CHECK(d2[1].left == S(C{1}));
    CHECK(d2[1].right == S(C{1}));
    Element counit(Basis::S);
    for (const auto& t : coproduct_S(5))
        if (t.right == Element::unit(Basis::S)) counit += t.left * t.coeff;
    CHECK(counit == S(C{5}));
}

TEST_CASE("element text and JSON") {
    const Element e = parse_element("2*S[2,1] - 1/3*S[1,1,2]");
    CHECK(e.coefficient(C{2, 1}) == Scalar(2));
    CHECK(e.coefficient(C{1, 1, 2}) == Scalar(Rational(-1, 3)));
    CHECK(parse_element(e.to_string()) == e);
    CHECK(element_from_json(to_json(e)) == e);
    CHECK(parse_element("R[3,1] + R[1,2,1]").basis() == Basis::R);
    CHECK(parse_element("0").is_zero());
    CHECK(parse_element("S[1,1] - R[1,1]") == S(C{2}));
    const Element cyc = parse_element("(1 - z)*R[2] + z^2*R[1,1]", 3);
    CHECK(cyc.coefficient(C{2}) == Scalar(1) - Scalar::zeta(3));
    CHECK(parse_element(cyc.to_string(), 3) == cyc);
    CHECK(element_from_json(to_json(cyc)) == cyc);
    CHECK(S(C{2}, -1).to_string() == "-S[2]");
    CHECK_THROWS_AS(parse_element("2*S[2,"), ParseError);
    CHECK_THROWS_AS(parse_element("S[1] R[1]"), ParseError);
    CHECK_THROWS_AS(parse_element("Q[1]"), InvalidInput);
    try {
        parse_element("S[1] + 2*S[1,x]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() > 0);
    }
}

TEST_CASE("homogeneity helpers") {
    const Element e = S(C{2}) + S(C{1, 2});
    CHECK(e.homogeneous_weight() == -1);
    CHECK(e.component(2) == S(C{2}));
    CHECK(e.max_weight() == 3);
    CHECK(S(C{1, 1}).homogeneous_weight() == 2);
}
