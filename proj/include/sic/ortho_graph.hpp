#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sic/ray.hpp"
#include "sic/vertex_set.hpp"

namespace sic {

/// Simple undirected graph with bitset adjacency rows. Vertex i carries a
/// label (the index of the ray it came from).
class OrthoGraph {
public:
    OrthoGraph() = default;
    explicit OrthoGraph(std::size_t n);

    std::size_t size() const { return rows_.size(); }
    std::size_t edge_count() const;
    std::size_t degree(std::size_t v) const { return rows_[v].count(); }

    /// Throws std::invalid_argument on a self-loop or out-of-range vertex.
    void add_edge(std::size_t i, std::size_t j);
    bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    const VertexSet& neighbors(std::size_t v) const { return rows_[v]; }

    /// Edges (i, j) with i < j in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    const std::vector<std::size_t>& labels() const { return labels_; }
    void set_labels(std::vector<std::size_t> labels);

    OrthoGraph complement() const;

    /// Subgraph induced by `vertices`; vertex k of the result is vertices[k]
    /// and keeps its label.
    OrthoGraph induced(std::span<const std::size_t> vertices) const;

    friend bool operator==(const OrthoGraph&, const OrthoGraph&) = default;

private:
    std::vector<VertexSet> rows_;
    std::vector<std::size_t> labels_;
};

/// Orthogonality graph: one vertex per ray, edges between exactly orthogonal rays.
OrthoGraph build_graph(const RaySet& s);

/// d mutually adjacent vertices, ascending.
using Basis = std::vector<std::size_t>;

/// All d-cliques of g, each ascending, in lexicographic order.
std::vector<Basis> enumerate_bases(const OrthoGraph& g, std::size_t d);

/// Invariant value with a vertex set attaining it.
struct CliqueResult {
    std::size_t size = 0;
    std::vector<std::size_t> witness;
};

/// Exact maximum clique (branch and bound with a greedy coloring bound).
CliqueResult clique_number(const OrthoGraph& g);

/// Exact maximum independent set, as a maximum clique of the complement.
CliqueResult independence_number(const OrthoGraph& g);

bool is_clique(const OrthoGraph& g, std::span<const std::size_t> vertices);
bool is_independent(const OrthoGraph& g, std::span<const std::size_t> vertices);

/// `n <count>` followed by one `e i j` line per edge (0-indexed, i < j).
std::string write_edge_list(const OrthoGraph& g);
OrthoGraph parse_edge_list(std::string_view text);

} // namespace sic
