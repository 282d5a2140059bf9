#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sic/budget.hpp"
#include "sic/ortho_graph.hpp"

namespace sic {

/// Vertex coloring with colors in {0, ..., k-1}.
struct Coloring {
    std::size_t k = 0;
    std::vector<std::size_t> colors;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Every color below k and different colors on every edge.
bool is_proper(const OrthoGraph& g, const Coloring& c);

/// DSATUR greedy coloring; an upper bound on the chromatic number.
Coloring greedy_coloring(const OrthoGraph& g);

/// Exact k-colorability by DSATUR-ordered branch and bound.
///
/// Returns a proper coloring using at most k colors, or std::nullopt when the
/// exhaustive search proves none exists. Deterministic for a fixed input.
/// Throws BudgetExceeded if the budget runs out first.
std::optional<Coloring> k_colorable(const OrthoGraph& g, std::size_t k, const Budget& budget = {});

struct ChromaticResult {
    std::size_t chromatic_number = 0;
    Coloring witness;
};

/// Exact chromatic number with a witness coloring. The value chi - 1 is always
/// refuted by k_colorable; the clique number only seeds the search.
ChromaticResult chromatic_number(const OrthoGraph& g, const Budget& budget = {});

} // namespace sic
