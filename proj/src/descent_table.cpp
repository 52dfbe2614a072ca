#include "nsym/descent_table.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "nsym/errors.hpp"

namespace nsym {

namespace {

std::atomic<int> g_oracle_limit{kDefaultOracleLimit};

std::mutex g_table_mutex;
std::map<int, std::shared_ptr<const DescentTable>> g_tables;

void check_capacity(int n, int limit) {
    if (n > limit)
        throw CapacityError("descent-algebra oracle limited to n <= " + std::to_string(limit) + " (requested n = " +
                                std::to_string(n) + ")",
                            limit);
}

std::uint64_t descent_mask_of(const std::vector<int>& images) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i + 1 < images.size(); ++i)
        if (images[i] > images[i + 1]) mask |= std::uint64_t{1} << i;
    return mask;
}

// A permutation with descent mask exactly `mask`: reverse each maximal block of
// consecutive values, e.g. mask for (2,1,2) -> [2,1,3,5,4].
std::vector<int> class_representative(std::uint64_t mask, int n) {
    Composition c = composition_from_mask(mask, n);
    // blocks are increasing runs; take decreasing values across blocks
    std::vector<int> images;
    int top = n;
    for (int part : c.parts()) {
        for (int k = part - 1; k >= 0; --k) images.push_back(top - k);
        top -= part;
    }
    return images;
}

std::filesystem::path cache_file(int n) {
    const char* dir = std::getenv("NSYM_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::filesystem::path(dir) / ("descent_table_n" + std::to_string(n) + "_v" +
                                         std::to_string(DescentTable::kFormatVersion) + ".txt");
}

}  // namespace

int oracle_limit() { return g_oracle_limit.load(); }

void set_oracle_limit(int n) {
    if (n < 0) throw InvalidInput("oracle limit must be nonnegative");
    g_oracle_limit.store(n);
}

std::vector<Permutation> descent_class(const Composition& c, int limit) {
    const int n = c.weight();
    check_capacity(n, limit);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        if (descent_mask_of(images) == c.descent_mask()) out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

// ---------------------------------------------------------------------------

DescentTable::DescentTable(int n, std::vector<std::int64_t> constants, std::vector<std::int64_t> class_sizes)
    : n_(n),
      dim_(n == 0 ? 1 : std::size_t{1} << (n - 1)),
      constants_(std::move(constants)),
      class_sizes_(std::move(class_sizes)) {
    if (constants_.size() != dim_ * dim_ * dim_ || class_sizes_.size() != dim_)
        throw InvalidInput("DescentTable: size does not match n");
}

std::int64_t DescentTable::constant(const Composition& i, const Composition& j, const Composition& k) const {
    if (i.weight() != n_ || j.weight() != n_ || k.weight() != n_)
        throw InvalidInput("DescentTable::constant: composition weight differs from n");
    return constant(canonical_index(i), canonical_index(j), canonical_index(k));
}

void DescentTable::save(const std::filesystem::path& file) const {
    std::filesystem::create_directories(file.parent_path());
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << "nsym-descent-table " << kFormatVersion << " " << n_ << "\n";
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (auto c = constant(i, j, k))
                        out << composition_from_mask(i, n_).to_string() << ' '
                            << composition_from_mask(j, n_).to_string() << ' '
                            << composition_from_mask(k, n_).to_string() << ' ' << c << '\n';
    }
    // rename publishes the complete file atomically
    std::filesystem::rename(tmp, file);
}

std::optional<DescentTable> DescentTable::load(const std::filesystem::path& file, int n) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::string magic;
    int version = 0, stored_n = -1;
    if (!(in >> magic >> version >> stored_n) || magic != "nsym-descent-table" || version != kFormatVersion ||
        stored_n != n)
        return std::nullopt;
    const std::size_t dim = n == 0 ? 1 : std::size_t{1} << (n - 1);
    std::vector<std::int64_t> constants(dim * dim * dim, 0);
    std::string a, b, c;
    std::int64_t value = 0;
    try {
        while (in >> a >> b >> c >> value) {
            Composition ci = parse_composition(a), cj = parse_composition(b), ck = parse_composition(c);
            if (ci.weight() != n || cj.weight() != n || ck.weight() != n) return std::nullopt;
            constants[(canonical_index(ci) * dim + canonical_index(cj)) * dim + canonical_index(ck)] = value;
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (!in.eof()) return std::nullopt;
    // class sizes: |D_{=K}| = sum_J c^K_{(n),J}... cheaper to recount
    std::vector<std::int64_t> sizes(dim, 0);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
        ++sizes[descent_mask_of(images)];
    } while (std::next_permutation(images.begin(), images.end()));
    return DescentTable(n, std::move(constants), std::move(sizes));
}

DescentTable build_descent_table(int n, int limit) {
    if (n < 0) throw InvalidInput("build_descent_table: n must be >= 0");
    check_capacity(n, limit);
    const std::size_t dim = n == 0 ? 1 : std::size_t{1} << (n - 1);
    std::vector<std::int64_t> constants(dim * dim * dim, 0);
    std::vector<std::int64_t> sizes(dim, 0);

    std::vector<std::vector<int>> perms;
    std::vector<std::uint64_t> masks;
    {
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 1);
        do {
            perms.push_back(images);
            masks.push_back(descent_mask_of(images));
            ++sizes[masks.back()];
        } while (std::next_permutation(images.begin(), images.end()));
    }

    // c^K_{I,J} = #{(x, y) : D(x) = I, D(y) = J, x y = z} for any fixed z in class K;
    // for each x the partner is y = x^{-1} z.
    std::vector<int> inv(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < dim; ++k) {
        const std::vector<int> z = class_representative(k, n);
        for (std::size_t p = 0; p < perms.size(); ++p) {
            const auto& x = perms[p];
            for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(x[static_cast<std::size_t>(i)] - 1)] = i + 1;
            for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(z[static_cast<std::size_t>(i)] - 1)];
            ++constants[(masks[p] * dim + descent_mask_of(y)) * dim + k];
        }
    }
    return DescentTable(n, std::move(constants), std::move(sizes));
}

const DescentTable& descent_table(int n) {
    check_capacity(n, oracle_limit());
    {
        std::lock_guard lock(g_table_mutex);
        if (auto it = g_tables.find(n); it != g_tables.end()) return *it->second;
    }
    const auto file = cache_file(n);
    std::optional<DescentTable> table;
    if (!file.empty()) table = DescentTable::load(file, n);
    if (!table) {
        table = build_descent_table(n, oracle_limit());
        if (!file.empty()) {
            try {
                table->save(file);
            } catch (const std::exception&) {
                // an unwritable cache directory only costs a rebuild next time
            }
        }
    }
    std::lock_guard lock(g_table_mutex);
    auto [it, inserted] = g_tables.try_emplace(n, std::make_shared<const DescentTable>(std::move(*table)));
    return *it->second;
}

Element internal_product(const Element& f, const Element& g) {
    const Element fr = to_basis(f, Basis::R);
    const Element gr = to_basis(g, Basis::R);
    Element out(Basis::R);
    // group terms by weight
    std::map<int, std::vector<std::pair<Composition, Scalar>>> by_weight_f, by_weight_g;
    for (const auto& [c, v] : fr.terms()) by_weight_f[c.weight()].emplace_back(c, v);
    for (const auto& [c, v] : gr.terms()) by_weight_g[c.weight()].emplace_back(c, v);
    for (const auto& [n, fterms] : by_weight_f) {
        auto it = by_weight_g.find(n);
        if (it == by_weight_g.end()) continue;
        const DescentTable& table = descent_table(n);
        const std::size_t dim = table.dimension();
        std::vector<Scalar> acc(dim, Scalar(0));
        std::vector<bool> touched(dim, false);
        for (const auto& [ci, a] : fterms) {
            for (const auto& [cj, b] : it->second) {
                const Scalar ab = a * b;
                // alpha(G) alpha(F) = D_{=J} D_{=I}
                const std::size_t j = canonical_index(cj), i = canonical_index(ci);
                for (std::size_t k = 0; k < dim; ++k) {
                    if (auto c = table.constant(j, i, k)) {
                        acc[k] += ab * Scalar(static_cast<long>(c));
                        touched[k] = true;
                    }
                }
            }
        }
        for (std::size_t k = 0; k < dim; ++k)
            if (touched[k]) out.add_term(composition_from_mask(k, n), acc[k]);
    }
    return out;
}

}  // namespace nsym
