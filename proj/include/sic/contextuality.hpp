#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sic/budget.hpp"
#include "sic/coloring.hpp"
#include "sic/ortho_graph.hpp"
#include "sic/ray.hpp"

namespace sic {

/// {0,1} value per ray with exactly one 1 in every basis of the set.
struct KsAssignment {
    std::vector<std::uint8_t> values;

    friend bool operator==(const KsAssignment&, const KsAssignment&) = default;
};

/// Every basis sums to exactly one; with `exclusivity`, no edge has both ends 1.
bool satisfies_bases(const OrthoGraph& g, std::span<const Basis> bases, const KsAssignment& f,
                     bool exclusivity);

/// Exhaustive exactly-one search over the given bases. Returns a satisfying
/// assignment or std::nullopt when none exists.
std::optional<KsAssignment> ks_colorable(const OrthoGraph& g, std::span<const Basis> bases,
                                         bool exclusivity = false, const Budget& budget = {});

/// Same, with bases = enumerate_bases(build_graph(s), s.dim()).
std::optional<KsAssignment> ks_colorable(const RaySet& s, bool exclusivity = false,
                                         const Budget& budget = {});

struct Verdict {
    std::string name;
    std::string hash;
    std::size_t dim = 0;
    std::size_t rays = 0;
    std::size_t edges = 0;
    std::size_t bases = 0;
    std::size_t chromatic_number = 0;
    std::size_t clique_number = 0;
    std::size_t independence_number = 0;
    bool is_sic = false;
    /// Empty when the KS question was not asked.
    std::optional<bool> is_ks;
    bool exclusivity = false;
    /// Set when the set has no basis, so f = 0 satisfies the KS condition.
    bool vacuous_ks = false;
    Coloring coloring;
    std::vector<std::size_t> clique_witness;
    std::vector<std::size_t> independent_witness;
    std::optional<KsAssignment> ks_assignment;
    std::string note;
    double elapsed_ms = 0.0;
};

struct AnalysisOptions {
    std::string name;
    bool ks = true;
    bool exclusivity = false;
    Budget budget;
};

/// Full analysis: graph invariants, SIC decision (chi > dim, false for
/// dim < 3) and, if requested, KS decision. Throws BudgetExceeded.
Verdict analyze(const RaySet& s, const AnalysisOptions& options = {});

/// analyze() without the KS question.
Verdict is_sic_set(const RaySet& s, const Budget& budget = {});

/// analyze() with the KS question; sets without a basis are not KS.
Verdict is_ks_set(const RaySet& s, bool exclusivity = false, const Budget& budget = {});

/// 64-bit FNV-1a of the serialized set, as 16 hex digits.
std::string set_hash(const RaySet& s);

/// Embeds every ray as (x, 0, ..., 0) in C^target_dim and appends the
/// standard basis vectors e_{dim+1}, ..., e_{target_dim}.
RaySet extend_set(const RaySet& base, std::size_t target_dim);

/// The d + 10 ray SIC set in dimension d >= 3 built from yu-oh-13.
RaySet construct_sic_set(std::size_t dim);

struct ExpectedProperties {
    std::size_t chromatic_number;
    std::size_t bases;
    bool is_sic;
    bool is_ks;
};

struct CatalogEntry {
    std::string name;
    std::size_t dim;
    std::int64_t sqrt_base;
    std::size_t ray_count;
    ExpectedProperties expected;
    std::string provenance;
    std::string_view text;

    RaySet rays() const;
};

const std::vector<CatalogEntry>& catalog();

/// Throws std::out_of_range for an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);
RaySet catalog_get(std::string_view name);

struct SubsetSearchResult {
    /// Indices into the searched set, ascending; empty when exhausted.
    std::optional<std::vector<std::size_t>> subset;
    std::optional<Verdict> verdict;
    std::size_t k_min = 0;
    std::size_t k_max = 0;
    std::size_t subsets_examined = 0;
};

/// Scans subsets of sizes k_min..k_max in lexicographic order and returns the
/// first one proving SIC, or an exhausted result. Throws
/// std::invalid_argument unless 1 <= k_min <= k_max <= |s|.
SubsetSearchResult minimal_subset_search(const RaySet& s, std::size_t k_min, std::size_t k_max,
                                         const Budget& budget = {});

struct TableRow {
    std::size_t dim = 0;
    std::size_t rays = 0;
    std::size_t chromatic_number = 0;
    bool is_sic = false;
    bool size_matches = false;       // rays == dim + 10
    bool chromatic_matches = false;  // chi == dim + 1
    std::string sic_cited;
    std::string sic_status;
    std::string ks_cited;
    std::string ks_status;
    bool ks_verified = false;
};

struct TableReport {
    std::vector<TableRow> rows;

    bool all_verified() const;
};

/// Throws std::invalid_argument unless 3 <= d_min <= d_max.
TableReport table_report(std::size_t d_min, std::size_t d_max, const Budget& budget = {});

} // namespace sic
