#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nsym {

// A finite set of integers; used for descent sets D(I), peak sets P(I) and friends.
using IntSet = std::set<int>;

// A sequence of positive integers. Ordered canonically by weight, then by the
// numeric value of the descent-set bitmask (bit d-1 set iff d is a descent).
class Composition {
public:
    static constexpr int kMaxWeight = 63;

    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t k) const { return parts_[k]; }
    int front() const { return parts_.front(); }
    int back() const { return parts_.back(); }

    // Bit d-1 is set iff d is a partial sum (excluding the total).
    std::uint64_t descent_mask() const noexcept { return mask_; }

    // Concatenation I.J
    Composition operator+(const Composition& other) const;

    std::string to_string() const;

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.weight_ == b.weight_ && a.mask_ == b.mask_;
    }
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
        return a.mask_ <=> b.mask_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
    std::uint64_t mask_ = 0;
};

Composition parse_composition(std::string_view text);
IntSet parse_int_set(std::string_view text);
std::string to_string(const IntSet& set);

// Index of a composition of n among all compositions of n in canonical order.
inline std::size_t canonical_index(const Composition& c) { return static_cast<std::size_t>(c.descent_mask()); }

// ---------------------------------------------------------------------------
// Enumeration and descent sets

// All 2^{n-1} compositions of n in canonical order; {()} for n = 0.
std::vector<Composition> compositions_of(int n);

IntSet descent_set(const Composition& c);
Composition composition_from_descents(const IntSet& descents, int n);
Composition composition_from_mask(std::uint64_t mask, int n);

// I reverse-refines J (I ⪯ J) iff D(I) ⊆ D(J). Throws on weight mismatch.
bool reverse_refines(const Composition& i, const Composition& j);

// Ribbon-diagram conjugate I~.
Composition conjugate(const Composition& c);

// ---------------------------------------------------------------------------
// Permutations

// A bijection of [1, n] given by its images.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    // sigma(i) for 1 <= i <= n
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    // (this * other)(i) = this(other(i))
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// Parses one-line notation like "265341" (n <= 9) or "[2,6,5,3,4,1]".
Permutation parse_permutation(std::string_view text);

Composition descent_composition(const Permutation& sigma);
Composition peak_composition(const Permutation& sigma);

// ---------------------------------------------------------------------------
// Peaks

// P(I): D(I) with every d_i such that d_i - d_{i-1} = 1 removed (d_0 = 0).
IntSet peak_set_of_composition(const Composition& c);

// True iff P is the peak set of some permutation of [1, n].
bool is_valid_peak_set(const IntSet& p, int n);

// Compositions of n whose only part allowed to equal 1 is the last one.
bool is_peak_composition(const Composition& c);
std::vector<Composition> peak_compositions_of(int n);

// ---------------------------------------------------------------------------
// The order-N split poset P_n^(N)

// All J obtained from I by one split i_k -> (j, i_k - j), 1 <= j <= N-1, i_k - j >= 1.
std::vector<Composition> split_successors(const Composition& c, int order);

// True iff `upper` is reachable from `lower` by split steps (reflexive). Throws on weight mismatch.
bool poset_leq(const Composition& lower, const Composition& upper, int order);

// All J with poset_leq(J, I, N), in canonical order.
std::vector<Composition> lower_set(const Composition& c, int order);

// ---------------------------------------------------------------------------
// Index sets of Sym(N)

// Compositions of n with no part divisible by N.
std::vector<Composition> F_set(int n, int order);
// Compositions of n with all parts in [1,N] and last part in [1,N-1].
std::vector<Composition> G_set(int n, int order);
bool in_G_set(const Composition& c, int order);
bool in_F_set(const Composition& c, int order);

// N^{i_1} j_1 ... N^{i_r} j_r  ->  (N i_1 + j_1, ..., N i_r + j_r), and its inverse.
Composition epsilon(const Composition& c, int order);
Composition epsilon_inv(const Composition& c, int order);

// Coefficient of t^n in (1 - t^N) / (1 - t - ... - t^N).
std::uint64_t hilbert_dim(int n, int order);

// ---------------------------------------------------------------------------
// Statistics for the decomposition formulas

struct HookFactorization {
    std::vector<Composition> segments;  // each of shape (1^a, b)
    int hook_length = 0;                // hl(I) = |P(I)| + 1
    Composition hook_composition;       // H_I = (|H_1|, ..., |H_hl|)
};

HookFactorization hook_factorization(const Composition& c);
inline int hook_length(const Composition& c) { return static_cast<int>(peak_set_of_composition(c).size()) + 1; }

bool is_hook(const Composition& c);

// "H ▷ K": glue the last part of H to the first part of K.
Composition glue(const Composition& h, const Composition& k);

// H(I, J): cut the ribbon of J at the partial sums of I.
std::vector<Composition> ribbon_factorization(const Composition& i, const Composition& j);

// Integer statistic that may take the value -infinity (std::nullopt).
using ExtendedInt = std::optional<int>;
inline constexpr std::nullopt_t kNegInfinity = std::nullopt;
std::string to_string(ExtendedInt value);

ExtendedInt h_stat(const Composition& i, const Composition& j);
int alpha_stat(const Composition& i, const Composition& j);
IntSet S_set(const Composition& i);
ExtendedInt b_stat(const Composition& i, const Composition& j);

enum class HReading {
    PartialSum,  // j_1 + ... + j_l equals some i_1 + ... + i_k
    LiteralPart  // j_1 + ... + j_l equals some single part i_k
};
std::string to_string(HReading reading);

// ℋ(I, J) as a set of 1-based positions in J.
IntSet HH_set(const Composition& i, const Composition& j, HReading reading = HReading::PartialSum);

// Total multiplicity of the part i over all compositions of n.
std::uint64_t part_count(int n, int i);

}  // namespace nsym
