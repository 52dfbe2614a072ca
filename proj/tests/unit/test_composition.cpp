#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "nsym/composition.hpp"
#include "nsym/errors.hpp"

using namespace nsym;

namespace {

using C = Composition;

std::vector<Permutation> all_perms(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::set<C> as_set(const std::vector<C>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("compositions_of enumerates in canonical order") {
    CHECK(compositions_of(0) == std::vector<C>{C{}});
    CHECK(as_set(compositions_of(3)) == std::set<C>{C{3}, C{2, 1}, C{1, 2}, C{1, 1, 1}});
    CHECK(compositions_of(6).size() == 32);
    const auto c5 = compositions_of(5);
    CHECK(std::is_sorted(c5.begin(), c5.end()));
    for (std::size_t k = 0; k < c5.size(); ++k) CHECK(canonical_index(c5[k]) == k);
}

TEST_CASE("descent sets and their inverse") {
    CHECK(descent_set(C{1, 3, 1, 2}) == IntSet{1, 4, 5});
    CHECK(descent_set(C{5}).empty());
    CHECK(descent_set(C{3, 1, 2, 1}) == IntSet{3, 4, 6});
    CHECK(composition_from_descents({1, 4, 5}, 7) == C{1, 3, 1, 2});
    CHECK(composition_from_descents({}, 5) == C{5});
    CHECK(composition_from_descents({2, 5}, 6) == C{2, 3, 1});
    CHECK_THROWS_AS(composition_from_descents({0}, 3), InvalidInput);
    CHECK_THROWS_AS(composition_from_descents({3}, 3), InvalidInput);
}

TEST_CASE("reverse refinement") {
    CHECK(reverse_refines(C{4}, C{1, 3}));
    CHECK_FALSE(reverse_refines(C{2, 2}, C{1, 2, 1}));
    CHECK(reverse_refines(C{1, 3}, C{1, 1, 2}));
    CHECK_THROWS_AS(reverse_refines(C{3}, C{1, 3}), InvalidInput);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(C{3, 1, 2, 1}) == C{2, 3, 1, 1});
    CHECK(conjugate(C{4}) == C{1, 1, 1, 1});
    for (int n = 0; n <= 8; ++n)
        for (const auto& c : compositions_of(n)) CHECK(conjugate(conjugate(c)) == c);
}

TEST_CASE("permutation statistics") {
    const auto s = parse_permutation("265341");
    CHECK(descent_composition(s) == C{2, 1, 2, 1});
    CHECK(peak_composition(s) == C{2, 3, 1});
    CHECK(descent_composition(Permutation::identity(5)) == C{5});
    CHECK(peak_composition(Permutation::identity(5)) == C{5});
    CHECK(descent_composition(parse_permutation("4321")) == C{1, 1, 1, 1});
    CHECK(peak_composition(parse_permutation("132")) == C{2, 1});
    CHECK_THROWS(parse_permutation("1224"));
}

TEST_CASE("descent and peak compositions agree with a direct scan") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : all_perms(n)) {
            IntSet d, pk;
            for (int i = 1; i < n; ++i) {
                if (p(i) > p(i + 1)) d.insert(i);
                if (i >= 2 && p(i - 1) < p(i) && p(i) > p(i + 1)) pk.insert(i);
            }
            CHECK(descent_set(descent_composition(p)) == d);
            CHECK(descent_set(peak_composition(p)) == pk);
        }
}

TEST_CASE("peak sets") {
    CHECK(peak_set_of_composition(C{1, 3, 1, 2}) == IntSet{4});
    CHECK(peak_set_of_composition(C{6}).empty());
    CHECK(peak_set_of_composition(C{1, 3, 1, 4, 2}) == IntSet{4, 9});
    CHECK(is_valid_peak_set({2, 5}, 6));
    CHECK_FALSE(is_valid_peak_set({1}, 3));

    // all subsets of [1,5] that are peak sets of S_6: f_6 = 8
    int count = 0;
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
        IntSet p;
        for (int b = 0; b < 5; ++b)
            if (mask >> b & 1) p.insert(b + 1);
        count += is_valid_peak_set(p, 6);
    }
    CHECK(count == 8);
}

TEST_CASE("valid peak sets are exactly the peak sets of permutations and count as Fibonacci") {
    for (int n = 1; n <= 7; ++n) {
        std::set<IntSet> seen;
        for (const auto& p : all_perms(n)) seen.insert(descent_set(peak_composition(p)));
        std::size_t valid = 0;
        for (const auto& c : compositions_of(n)) {
            const bool v = is_valid_peak_set(descent_set(c), n);
            valid += v;
            CHECK(v == seen.contains(descent_set(c)));
        }
        CHECK(valid == seen.size());
    }
    for (int n = 1; n <= 10; ++n) {
        std::size_t valid = 0;
        for (const auto& c : compositions_of(n)) valid += is_valid_peak_set(descent_set(c), n);
        CHECK(valid == hilbert_dim(n, 2));
        CHECK(peak_compositions_of(n).size() == hilbert_dim(n, 2));
    }
}

TEST_CASE("split successors") {
    CHECK(as_set(split_successors(C{4}, 3)) == std::set<C>{C{1, 3}, C{2, 2}});
    CHECK(as_set(split_successors(C{4}, 2)) == std::set<C>{C{1, 3}});
    for (int N = 1; N <= 5; ++N) CHECK(split_successors(C{1, 1}, N).empty());
}

TEST_CASE("poset order and lower sets") {
    CHECK(poset_leq(C{4}, C{1, 2, 1}, 3));
    CHECK_FALSE(poset_leq(C{4}, C{1, 2, 1}, 2));
    CHECK(poset_leq(C{2, 3}, C{2, 3}, 2));
    CHECK_THROWS_AS(poset_leq(C{4}, C{1, 2}, 2), InvalidInput);
    CHECK(as_set(lower_set(C{1, 2, 1}, 3)) == std::set<C>{C{1, 2, 1}, C{3, 1}, C{1, 3}, C{4}});
    CHECK(as_set(lower_set(C{1, 1, 2}, 2)) == std::set<C>{C{1, 1, 2}, C{2, 2}, C{1, 3}, C{4}});
    CHECK(lower_set(C{3, 3, 1}, 3) == std::vector<C>{C{3, 3, 1}});
    CHECK(lower_set(C{2, 2, 1}, 2) == std::vector<C>{C{2, 2, 1}});
}

TEST_CASE("poset is a partial order and lower_set matches poset_leq") {
    for (int N = 1; N <= 4; ++N)
        for (int n = 1; n <= 6; ++n) {
            const auto cs = compositions_of(n);
            for (const auto& a : cs) {
                CHECK(poset_leq(a, a, N));
                const auto low = as_set(lower_set(a, N));
                for (const auto& b : cs) {
                    const bool ab = poset_leq(b, a, N);
                    CHECK(ab == low.contains(b));
                    if (ab && b != a) CHECK_FALSE(poset_leq(a, b, N));
                    if (!ab) continue;
                    for (const auto& c : cs)
                        if (poset_leq(c, b, N)) CHECK(poset_leq(c, a, N));
                }
            }
        }
}

TEST_CASE("index sets, epsilon and the Hilbert series") {
    CHECK(as_set(F_set(4, 3)) == std::set<C>{C{4}, C{2, 2}, C{2, 1, 1}, C{1, 2, 1}, C{1, 1, 2}, C{1, 1, 1, 1}});
    CHECK(F_set(5, 1).empty());
    CHECK(F_set(4, 2).size() == 3);
    CHECK(as_set(G_set(4, 3)) == std::set<C>{C{1, 1, 1, 1}, C{2, 1, 1}, C{1, 2, 1}, C{1, 1, 2}, C{3, 1}, C{2, 2}});
    CHECK(as_set(G_set(4, 2)) == std::set<C>{C{1, 1, 1, 1}, C{2, 1, 1}, C{1, 2, 1}});
    CHECK(G_set(0, 3) == std::vector<C>{C{}});
    CHECK(G_set(3, 1).empty());
    CHECK(epsilon(C{3, 1}, 3) == C{4});
    CHECK(epsilon(C{2, 2}, 3) == C{2, 2});
    CHECK_THROWS_AS(epsilon(C{3}, 3), InvalidInput);
    CHECK(hilbert_dim(4, 2) == 3);
    CHECK(hilbert_dim(4, 3) == 6);
    for (int N = 2; N <= 6; ++N)
        for (int n = 1; n < N; ++n) CHECK(hilbert_dim(n, N) == (std::uint64_t{1} << (n - 1)));

    for (int N = 2; N <= 5; ++N)
        for (int n = 0; n <= 8; ++n) {
            const auto F = F_set(n, N), G = G_set(n, N);
            CHECK(F.size() == hilbert_dim(n, N));
            CHECK(G.size() == hilbert_dim(n, N));
            std::set<C> image;
            for (const auto& g : G) {
                const C e = epsilon(g, N);
                CHECK(in_F_set(e, N));
                CHECK(epsilon_inv(e, N) == g);
                image.insert(e);
            }
            CHECK(image == as_set(F));
        }
}

TEST_CASE("hook factorization") {
    const auto h = hook_factorization(C{1, 3, 1, 4, 2});
    CHECK(h.segments == std::vector<C>{C{1, 3}, C{1, 4}, C{2}});
    CHECK(h.hook_length == 3);
    CHECK(descent_set(h.hook_composition) == IntSet{4, 9});
    CHECK(hook_factorization(C{5}).segments == std::vector<C>{C{5}});
    CHECK(hook_factorization(C{5}).hook_length == 1);
    CHECK(hook_factorization(C{2, 1, 1}).segments == std::vector<C>{C{2}, C{1, 1}});
    CHECK(hook_factorization(C{2, 1, 1}).hook_length == 2);
    for (int n = 1; n <= 10; ++n)
        for (const auto& c : compositions_of(n)) {
            const auto f = hook_factorization(c);
            for (const auto& s : f.segments) CHECK(is_hook(s));
            CHECK(descent_set(f.hook_composition) == peak_set_of_composition(c));
            C joined;
            for (const auto& s : f.segments) joined = joined + s;
            CHECK(joined == c);
        }
}

TEST_CASE("ribbon factorization") {
    CHECK(ribbon_factorization(C{3, 2, 1, 4}, C{2, 5, 2, 1}) == std::vector<C>{C{2, 1}, C{2}, C{1}, C{1, 2, 1}});
    CHECK(ribbon_factorization(C{2, 2}, C{4}) == std::vector<C>{C{2}, C{2}});
    CHECK(ribbon_factorization(C{2, 3}, C{2, 3}) == std::vector<C>{C{2}, C{3}});
    CHECK_THROWS_AS(ribbon_factorization(C{2}, C{1, 2}), InvalidInput);
    // reconstruction: cut points in D(J) concatenate, others glue
    for (int n = 1; n <= 8; ++n)
        for (const auto& i : compositions_of(n))
            for (const auto& j : compositions_of(n)) {
                const auto segs = ribbon_factorization(i, j);
                REQUIRE(segs.size() == static_cast<std::size_t>(i.length()));
                const IntSet dj = descent_set(j);
                C acc = segs[0];
                for (std::size_t k = 1; k < segs.size(); ++k) {
                    CHECK(segs[k].weight() == i[k]);
                    acc = dj.contains(acc.weight()) ? acc + segs[k] : glue(acc, segs[k]);
                }
                CHECK(acc == j);
            }
}

TEST_CASE("statistics h, alpha, b and the set H") {
    CHECK(h_stat(C{3}, C{1, 2}) == 1);
    CHECK(h_stat(C{3}, C{3}) == 0);
    CHECK(h_stat(C{3}, C{2, 1}) == kNegInfinity);
    CHECK(alpha_stat(C{4}, C{1, 2, 1}) == 3);
    CHECK(alpha_stat(C{2, 2}, C{1, 1, 2}) == 1);
    for (const auto& c : compositions_of(6)) CHECK(alpha_stat(c, c) == 0);
    CHECK(b_stat(C{5}, C{5}) == 0);
    CHECK(S_set(C{2, 1}) == IntSet{2, 3});
    CHECK(b_stat(C{2, 1}, C{2, 1}) == 0);
    // gate: P((2,2)) = {2} is not inside S((4)) = {}
    CHECK(b_stat(C{4}, C{2, 2}) == kNegInfinity);
    CHECK(HH_set(C{2, 2}, C{1, 1, 2}) == IntSet{2, 3});
    CHECK(HH_set(C{2, 2}, C{1, 1, 2}, HReading::LiteralPart) == IntSet{2});
    CHECK(HH_set(C{4}, C{4}) == IntSet{1});
    CHECK(HH_set(C{1, 2, 1}, C{1, 2, 1}) == IntSet{1, 2, 3});
    CHECK_THROWS_AS(h_stat(C{3}, C{2}), InvalidInput);
    CHECK_THROWS_AS(alpha_stat(C{3}, C{2}), InvalidInput);
    CHECK_THROWS_AS(b_stat(C{3}, C{2}), InvalidInput);
}

TEST_CASE("part counts") {
    CHECK(part_count(3, 1) == 5);
    CHECK(part_count(1, 1) == 1);
    CHECK(part_count(4, 2) == 5);
    for (int n = 1; n <= 12; ++n) {
        std::uint64_t total = 0;
        std::vector<std::uint64_t> direct(static_cast<std::size_t>(n + 1), 0);
        for (const auto& c : compositions_of(n)) {
            total += static_cast<std::uint64_t>(c.length());
            for (int p : c.parts()) ++direct[static_cast<std::size_t>(p)];
        }
        std::uint64_t sum = 0;
        for (int i = 1; i <= n; ++i) {
            CHECK(part_count(n, i) == direct[static_cast<std::size_t>(i)]);
            CHECK(part_count(n, i) == part_count(n - i + 1, 1));
            sum += part_count(n, i);
        }
        CHECK(sum == total);
        if (n >= 2) CHECK(part_count(n, 1) == static_cast<std::uint64_t>(n + 2) << (n - 2) >> 1);
    }
}

TEST_CASE("text formats") {
    CHECK(parse_composition(" [1, 2 ,1] ") == C{1, 2, 1});
    CHECK(parse_composition("[]") == C{});
    CHECK(C{1, 2, 1}.to_string() == "[1,2,1]");
    CHECK(parse_int_set("{1, 4,5}") == IntSet{1, 4, 5});
    CHECK(to_string(IntSet{1, 4, 5}) == "{1,4,5}");
    CHECK_THROWS_AS(parse_composition("[1,0]"), ParseError);
    CHECK_THROWS_AS(parse_composition("[1,2"), ParseError);
}
