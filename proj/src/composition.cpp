#include "nsym/composition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

#include "nsym/errors.hpp"

namespace nsym {

namespace {

void require_same_weight(const Composition& a, const Composition& b, const char* op) {
    if (a.weight() != b.weight()) {
        throw InvalidInput(std::string(op) + ": weight mismatch between " + a.to_string() + " and " +
                           b.to_string());
    }
}

std::vector<int> partial_sums(const Composition& c) {
    std::vector<int> sums;
    sums.reserve(c.parts().size());
    int s = 0;
    for (int p : c.parts()) {
        s += p;
        sums.push_back(s);
    }
    return sums;
}

void skip_ws(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

std::vector<int> parse_int_list(std::string_view text, char open, char close) {
    std::size_t pos = 0;
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != open) throw ParseError(std::string("expected '") + open + "'", pos);
    ++pos;
    std::vector<int> values;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == close) {
        ++pos;
    } else {
        while (true) {
            skip_ws(text, pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
            if (ec != std::errc{}) throw ParseError("expected an integer", pos);
            pos = static_cast<std::size_t>(ptr - text.data());
            values.push_back(value);
            skip_ws(text, pos);
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == close) {
                ++pos;
                break;
            }
            throw ParseError(std::string("expected ',' or '") + close + "'", pos);
        }
    }
    skip_ws(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters", pos);
    return values;
}

}  // namespace

// ---------------------------------------------------------------------------

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) throw InvalidInput("composition parts must be positive");
        weight_ += parts_[k];
        if (weight_ > kMaxWeight) throw InvalidInput("composition weight exceeds " + std::to_string(kMaxWeight));
        if (k + 1 < parts_.size()) mask_ |= std::uint64_t{1} << (weight_ - 1);
    }
}

Composition Composition::operator+(const Composition& other) const {
    std::vector<int> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return Composition(std::move(parts));
}

std::string Composition::to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parts_[k]);
    }
    return out + "]";
}

Composition parse_composition(std::string_view text) {
    std::size_t pos = 0;
    skip_ws(text, pos);
    char open = pos < text.size() && text[pos] == '(' ? '(' : '[';
    char close = open == '(' ? ')' : ']';
    auto values = parse_int_list(text, open, close);
    for (int v : values)
        if (v < 1) throw ParseError("composition parts must be positive", 0);
    return Composition(std::move(values));
}

IntSet parse_int_set(std::string_view text) {
    auto values = parse_int_list(text, '{', '}');
    return IntSet(values.begin(), values.end());
}

std::string to_string(const IntSet& set) {
    std::string out = "{";
    bool first = true;
    for (int v : set) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(v);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw InvalidInput("compositions_of: n must be nonnegative");
    if (n == 0) return {Composition{}};
    if (n > Composition::kMaxWeight) throw InvalidInput("compositions_of: n too large");
    std::vector<Composition> out;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(composition_from_mask(mask, n));
    return out;
}

IntSet descent_set(const Composition& c) {
    IntSet out;
    auto sums = partial_sums(c);
    if (!sums.empty()) sums.pop_back();
    out.insert(sums.begin(), sums.end());
    return out;
}

Composition composition_from_mask(std::uint64_t mask, int n) {
    if (n == 0) return {};
    std::vector<int> parts;
    int current = 1;
    for (int d = 1; d < n; ++d) {
        if ((mask >> (d - 1)) & 1U) {
            parts.push_back(current);
            current = 1;
        } else {
            ++current;
        }
    }
    parts.push_back(current);
    return Composition(std::move(parts));
}

Composition composition_from_descents(const IntSet& descents, int n) {
    if (n < 0) throw InvalidInput("composition_from_descents: negative weight");
    std::uint64_t mask = 0;
    for (int d : descents) {
        if (d < 1 || d > n - 1)
            throw InvalidInput("composition_from_descents: " + std::to_string(d) + " outside [1, " +
                               std::to_string(n - 1) + "]");
        mask |= std::uint64_t{1} << (d - 1);
    }
    return composition_from_mask(mask, n);
}

bool reverse_refines(const Composition& i, const Composition& j) {
    require_same_weight(i, j, "reverse_refines");
    return (i.descent_mask() & ~j.descent_mask()) == 0;
}

Composition conjugate(const Composition& c) {
    const int n = c.weight();
    if (n == 0) return {};
    IntSet d = descent_set(c);
    IntSet conj;
    for (int x = 1; x < n; ++x)
        if (!d.contains(x)) conj.insert(n - x);
    return composition_from_descents(conj, n);
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
            throw InvalidInput("not a permutation of [1, n]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw InvalidInput("compose: permutation sizes differ");
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = images_[static_cast<std::size_t>(other.images_[i] - 1)];
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation parse_permutation(std::string_view text) {
    std::size_t pos = 0;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '[') return Permutation(parse_int_list(text, '[', ']'));
    std::vector<int> images;
    for (; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch < '1' || ch > '9') throw ParseError("expected a digit 1-9", pos);
        images.push_back(ch - '0');
    }
    return Permutation(std::move(images));
}

Composition descent_composition(const Permutation& sigma) {
    const int n = sigma.size();
    IntSet d;
    for (int i = 1; i < n; ++i)
        if (sigma(i) > sigma(i + 1)) d.insert(i);
    return composition_from_descents(d, n);
}

Composition peak_composition(const Permutation& sigma) {
    const int n = sigma.size();
    IntSet p;
    for (int i = 2; i < n; ++i)
        if (sigma(i - 1) < sigma(i) && sigma(i) > sigma(i + 1)) p.insert(i);
    return composition_from_descents(p, n);
}

// ---------------------------------------------------------------------------

IntSet peak_set_of_composition(const Composition& c) {
    IntSet out;
    int prev = 0;
    for (int d : descent_set(c)) {
        if (d - prev != 1) out.insert(d);
        prev = d;
    }
    return out;
}

bool is_valid_peak_set(const IntSet& p, int n) {
    for (int i : p) {
        if (i < 2 || i > n - 1) return false;
        if (p.contains(i - 1)) return false;
    }
    return true;
}

bool is_peak_composition(const Composition& c) {
    for (int k = 0; k + 1 < c.length(); ++k)
        if (c[static_cast<std::size_t>(k)] == 1) return false;
    return true;
}

std::vector<Composition> peak_compositions_of(int n) {
    std::vector<Composition> out;
    for (auto& c : compositions_of(n))
        if (is_peak_composition(c)) out.push_back(c);
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Composition> split_successors(const Composition& c, int order) {
    if (order < 1) throw InvalidInput("split_successors: N must be >= 1");
    std::set<Composition> out;
    const auto& parts = c.parts();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        for (int j = 1; j <= order - 1 && parts[k] - j >= 1; ++j) {
            std::vector<int> next(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(k));
            next.push_back(j);
            next.push_back(parts[k] - j);
            next.insert(next.end(), parts.begin() + static_cast<std::ptrdiff_t>(k) + 1, parts.end());
            out.insert(Composition(std::move(next)));
        }
    }
    return {out.begin(), out.end()};
}

bool poset_leq(const Composition& lower, const Composition& upper, int order) {
    require_same_weight(lower, upper, "poset_leq");
    if (lower == upper) return true;
    // every split adds one part, so only chains of length l(upper) - l(lower) can succeed
    std::set<Composition> frontier{lower};
    for (int step = lower.length(); step < upper.length(); ++step) {
        std::set<Composition> next;
        for (const auto& c : frontier)
            for (auto& s : split_successors(c, order)) next.insert(std::move(s));
        if (next.contains(upper)) return true;
        frontier = std::move(next);
    }
    return false;
}

std::vector<Composition> lower_set(const Composition& c, int order) {
    if (order < 1) throw InvalidInput("lower_set: N must be >= 1");
    // walk downwards: merging an adjacent pair (a, b) with a <= N-1 undoes a split
    std::set<Composition> seen{c};
    std::deque<Composition> queue{c};
    while (!queue.empty()) {
        Composition cur = std::move(queue.front());
        queue.pop_front();
        const auto& parts = cur.parts();
        for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
            if (parts[k] > order - 1) continue;
            std::vector<int> merged(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(k));
            merged.push_back(parts[k] + parts[k + 1]);
            merged.insert(merged.end(), parts.begin() + static_cast<std::ptrdiff_t>(k) + 2, parts.end());
            Composition m(std::move(merged));
            if (seen.insert(m).second) queue.push_back(std::move(m));
        }
    }
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------

bool in_F_set(const Composition& c, int order) {
    return std::none_of(c.parts().begin(), c.parts().end(), [order](int p) { return p % order == 0; });
}

bool in_G_set(const Composition& c, int order) {
    if (c.empty()) return true;
    if (std::any_of(c.parts().begin(), c.parts().end(), [order](int p) { return p > order; })) return false;
    return c.back() <= order - 1;
}

std::vector<Composition> F_set(int n, int order) {
    if (order < 1) throw InvalidInput("F_set: N must be >= 1");
    std::vector<Composition> out;
    for (auto& c : compositions_of(n))
        if (in_F_set(c, order)) out.push_back(std::move(c));
    return out;
}

std::vector<Composition> G_set(int n, int order) {
    if (order < 1) throw InvalidInput("G_set: N must be >= 1");
    std::vector<Composition> out;
    for (auto& c : compositions_of(n))
        if (in_G_set(c, order)) out.push_back(std::move(c));
    return out;
}

Composition epsilon(const Composition& c, int order) {
    if (!in_G_set(c, order)) throw InvalidInput("epsilon: " + c.to_string() + " is not in G^(N)");
    std::vector<int> out;
    int run = 0;
    for (int p : c.parts()) {
        if (p == order) {
            run += order;
        } else {
            out.push_back(run + p);
            run = 0;
        }
    }
    return Composition(std::move(out));
}

Composition epsilon_inv(const Composition& c, int order) {
    if (!in_F_set(c, order)) throw InvalidInput("epsilon_inv: " + c.to_string() + " is not in F^(N)");
    std::vector<int> out;
    for (int k : c.parts()) {
        out.insert(out.end(), static_cast<std::size_t>(k / order), order);
        out.push_back(k % order);
    }
    return Composition(std::move(out));
}

std::uint64_t hilbert_dim(int n, int order) {
    if (n < 0 || order < 1) throw InvalidInput("hilbert_dim: need n >= 0 and N >= 1");
    // b = 1 / (1 - t - ... - t^N), then multiply by (1 - t^N)
    std::vector<std::uint64_t> b(static_cast<std::size_t>(n) + 1, 0);
    b[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= std::min(m, order); ++k) b[static_cast<std::size_t>(m)] += b[static_cast<std::size_t>(m - k)];
    std::uint64_t dim = b[static_cast<std::size_t>(n)];
    if (n >= order) dim -= b[static_cast<std::size_t>(n - order)];
    return dim;
}

// ---------------------------------------------------------------------------

bool is_hook(const Composition& c) {
    for (int k = 0; k + 1 < c.length(); ++k)
        if (c[static_cast<std::size_t>(k)] != 1) return false;
    return !c.empty();
}

HookFactorization hook_factorization(const Composition& c) {
    if (c.weight() < 1) throw InvalidInput("hook_factorization: weight must be >= 1");
    HookFactorization out;
    std::vector<int> segment;
    std::vector<int> sizes;
    for (int k = 0; k < c.length(); ++k) {
        int p = c[static_cast<std::size_t>(k)];
        segment.push_back(p);
        if (p >= 2 || k + 1 == c.length()) {
            sizes.push_back(std::accumulate(segment.begin(), segment.end(), 0));
            out.segments.emplace_back(std::move(segment));
            segment.clear();
        }
    }
    out.hook_length = static_cast<int>(out.segments.size());
    out.hook_composition = Composition(std::move(sizes));
    return out;
}

Composition glue(const Composition& h, const Composition& k) {
    if (h.empty()) return k;
    if (k.empty()) return h;
    std::vector<int> parts = h.parts();
    parts.back() += k.front();
    parts.insert(parts.end(), k.parts().begin() + 1, k.parts().end());
    return Composition(std::move(parts));
}

std::vector<Composition> ribbon_factorization(const Composition& i, const Composition& j) {
    require_same_weight(i, j, "ribbon_factorization");
    const IntSet dj = descent_set(j);
    std::vector<Composition> out;
    int start = 0;
    for (int end : partial_sums(i)) {
        IntSet inner;
        for (auto it = dj.upper_bound(start); it != dj.end() && *it < end; ++it) inner.insert(*it - start);
        out.push_back(composition_from_descents(inner, end - start));
        start = end;
    }
    return out;
}

std::string to_string(ExtendedInt value) { return value ? std::to_string(*value) : std::string("-inf"); }

ExtendedInt h_stat(const Composition& i, const Composition& j) {
    int total = 0;
    for (const auto& h : ribbon_factorization(i, j)) {
        if (!is_hook(h)) return kNegInfinity;
        total += h.length() - 1;
    }
    return total;
}

int alpha_stat(const Composition& i, const Composition& j) {
    require_same_weight(i, j, "alpha_stat");
    const IntSet di = descent_set(i);
    int total = 0;
    int s = 0;
    for (int k = 0; k + 1 < j.length(); ++k) {
        s += j[static_cast<std::size_t>(k)];
        if (!di.contains(s)) total += j[static_cast<std::size_t>(k)];
    }
    return total;
}

namespace {

IntSet shifted(const IntSet& s) {
    IntSet out;
    for (int x : s) out.insert(x + 1);
    return out;
}

IntSet difference(const IntSet& a, const IntSet& b) {
    IntSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

IntSet set_union(const IntSet& a, const IntSet& b) {
    IntSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

}  // namespace

IntSet S_set(const Composition& i) {
    const IntSet d = descent_set(i);
    const IntSet d1 = shifted(d);
    return set_union(difference(d1, d), difference(d, d1));
}

ExtendedInt b_stat(const Composition& i, const Composition& j) {
    require_same_weight(i, j, "b_stat");
    const IntSet s = S_set(i);
    const IntSet hj = peak_set_of_composition(j);  // D(H_J)
    if (!std::includes(s.begin(), s.end(), hj.begin(), hj.end())) return kNegInfinity;
    const IntSet di = descent_set(i);
    const IntSet dj = descent_set(j);
    return static_cast<int>(set_union(shifted(difference(di, dj)), difference(dj, di)).size());
}

std::string to_string(HReading reading) {
    return reading == HReading::PartialSum ? "partial-sum" : "literal-part";
}

IntSet HH_set(const Composition& i, const Composition& j, HReading reading) {
    require_same_weight(i, j, "HH_set");
    std::set<int> targets;
    if (reading == HReading::PartialSum) {
        auto sums = partial_sums(i);
        targets.insert(sums.begin(), sums.end());
    } else {
        targets.insert(i.parts().begin(), i.parts().end());
    }
    IntSet out;
    auto sums = partial_sums(j);
    for (std::size_t l = 0; l < sums.size(); ++l)
        if (targets.contains(sums[l])) out.insert(static_cast<int>(l) + 1);
    return out;
}

std::uint64_t part_count(int n, int i) {
    if (i < 1 || i > n) throw InvalidInput("part_count: need 1 <= i <= n");
    // an occurrence of i splits n - i into a prefix and a suffix composition
    auto count = [](int m) -> std::uint64_t { return m == 0 ? 1 : std::uint64_t{1} << (m - 1); };
    std::uint64_t total = 0;
    for (int a = 0; a <= n - i; ++a) total += count(a) * count(n - i - a);
    return total;
}

}  // namespace nsym
