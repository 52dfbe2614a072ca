#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "nsym/composition.hpp"
#include "nsym/element.hpp"

namespace nsym {

inline constexpr int kDefaultOracleLimit = 8;

// Largest n for which descent tables may be built. Process-wide, defaults to 8.
int oracle_limit();
void set_oracle_limit(int n);

// All permutations of [1, n] whose descent composition is `c`.
std::vector<Permutation> descent_class(const Composition& c, int limit = oracle_limit());

// Structure constants of Solomon's descent algebra Sigma_n in the basis of
// descent-class sums: D_{=I} D_{=J} = sum_K c^K_{I,J} D_{=K}, where the
// product of permutations is composition, (xy)(i) = x(y(i)).
class DescentTable {
public:
    static constexpr int kFormatVersion = 1;

    DescentTable() = default;
    DescentTable(int n, std::vector<std::int64_t> constants, std::vector<std::int64_t> class_sizes);

    int n() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return dim_; }
    std::int64_t constant(const Composition& i, const Composition& j, const Composition& k) const;
    std::int64_t constant(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[(i * dim_ + j) * dim_ + k];
    }
    std::int64_t class_size(const Composition& c) const { return class_sizes_[canonical_index(c)]; }

    void save(const std::filesystem::path& file) const;
    // nullopt if the file is missing, malformed, or has a different format version / n.
    static std::optional<DescentTable> load(const std::filesystem::path& file, int n);

private:
    int n_ = 0;
    std::size_t dim_ = 1;
    std::vector<std::int64_t> constants_;    // dim^3, indexed by canonical indices
    std::vector<std::int64_t> class_sizes_;  // dim
};

// Builds the table by scanning S_n once per target class. Throws CapacityError above `limit`.
DescentTable build_descent_table(int n, int limit = oracle_limit());

// Cached table for n: memory first, then $NSYM_CACHE_DIR (if set), then built and published.
const DescentTable& descent_table(int n);

// F * G = alpha^{-1}(alpha(G) alpha(F)) with alpha(R_I) = D_{=I}, computed weight by weight
// (terms of different weights multiply to zero). Result is in the R basis.
Element internal_product(const Element& f, const Element& g);

}  // namespace nsym
