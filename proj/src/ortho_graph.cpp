#include "sic/ortho_graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace sic {

OrthoGraph::OrthoGraph(std::size_t n)
    : rows_(n, VertexSet(n))
    , labels_(n)
{
    std::iota(labels_.begin(), labels_.end(), std::size_t{0});
}

std::size_t OrthoGraph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& row : rows_)
        twice += row.count();
    return twice / 2;
}

void OrthoGraph::add_edge(std::size_t i, std::size_t j)
{
    if (i >= size() || j >= size())
        throw std::invalid_argument("edge endpoint out of range");
    if (i == j)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
    rows_[i].set(j);
    rows_[j].set(i);
}

std::vector<std::pair<std::size_t, std::size_t>> OrthoGraph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = rows_[i].next(i + 1); j < size(); j = rows_[i].next(j + 1))
            out.emplace_back(i, j);
    return out;
}

void OrthoGraph::set_labels(std::vector<std::size_t> labels)
{
    if (labels.size() != size())
        throw std::invalid_argument("label count does not match vertex count");
    labels_ = std::move(labels);
}

OrthoGraph OrthoGraph::complement() const
{
    OrthoGraph out(size());
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (!adjacent(i, j))
                out.add_edge(i, j);
    out.labels_ = labels_;
    return out;
}

OrthoGraph OrthoGraph::induced(std::span<const std::size_t> vertices) const
{
    OrthoGraph out(vertices.size());
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        out.labels_[a] = labels_.at(vertices[a]);
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (adjacent(vertices[a], vertices[b]))
                out.add_edge(a, b);
    }
    return out;
}

OrthoGraph build_graph(const RaySet& s)
{
    OrthoGraph g(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (is_orthogonal(s[i], s[j]))
                g.add_edge(i, j);
    return g;
}

namespace {

void extend_cliques(const OrthoGraph& g, std::size_t d, Basis& current, const VertexSet& candidates,
                    std::vector<Basis>& out)
{
    if (current.size() == d) {
        out.push_back(current);
        return;
    }
    if (current.size() + candidates.count() < d)
        return;
    for (std::size_t v = candidates.next(); v < g.size(); v = candidates.next(v + 1)) {
        VertexSet later = candidates & g.neighbors(v);
        for (std::size_t u = later.next(); u < g.size() && u <= v; u = later.next(u + 1))
            later.reset(u);
        current.push_back(v);
        extend_cliques(g, d, current, later, out);
        current.pop_back();
    }
}

// Sequential greedy coloring of `candidates`; returns vertices in color order
// with their color classes (1-based) so that bound[k] bounds any clique drawn
// from order[0..k].
void color_sort(const OrthoGraph& g, const VertexSet& candidates, std::vector<std::size_t>& order,
                std::vector<std::size_t>& bound)
{
    order.clear();
    bound.clear();
    VertexSet uncolored = candidates;
    std::size_t color = 0;
    while (!uncolored.empty()) {
        ++color;
        VertexSet available = uncolored;
        for (std::size_t v = available.next(); v < g.size(); v = available.next(v + 1)) {
            available -= g.neighbors(v);
            uncolored.reset(v);
            order.push_back(v);
            bound.push_back(color);
        }
    }
}

struct MaxCliqueSearch {
    const OrthoGraph& g;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;

    void expand(VertexSet candidates)
    {
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        color_sort(g, candidates, order, bound);
        for (std::size_t k = order.size(); k-- > 0;) {
            if (current.size() + bound[k] <= best.size())
                return;
            const std::size_t v = order[k];
            current.push_back(v);
            const VertexSet next = candidates & g.neighbors(v);
            if (next.empty()) {
                if (current.size() > best.size())
                    best = current;
            } else {
                expand(next);
            }
            current.pop_back();
            candidates.reset(v);
        }
    }
};

} // namespace

std::vector<Basis> enumerate_bases(const OrthoGraph& g, std::size_t d)
{
    std::vector<Basis> out;
    if (d == 0)
        return out;
    Basis current;
    extend_cliques(g, d, current, VertexSet::full(g.size()), out);
    return out;
}

bool is_clique(const OrthoGraph& g, std::span<const std::size_t> vertices)
{
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (vertices[a] == vertices[b] || !g.adjacent(vertices[a], vertices[b]))
                return false;
    return true;
}

bool is_independent(const OrthoGraph& g, std::span<const std::size_t> vertices)
{
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (vertices[a] == vertices[b] || g.adjacent(vertices[a], vertices[b]))
                return false;
    return true;
}

CliqueResult clique_number(const OrthoGraph& g)
{
    MaxCliqueSearch search{g, {}, {}};
    if (g.size() > 0)
        search.expand(VertexSet::full(g.size()));
    std::sort(search.best.begin(), search.best.end());
    if (!is_clique(g, search.best))
        throw std::logic_error("maximum clique witness is not a clique");
    return {search.best.size(), std::move(search.best)};
}

CliqueResult independence_number(const OrthoGraph& g)
{
    CliqueResult r = clique_number(g.complement());
    if (!is_independent(g, r.witness))
        throw std::logic_error("maximum independent set witness is not independent");
    return r;
}

std::string write_edge_list(const OrthoGraph& g)
{
    std::ostringstream out;
    out << "n " << g.size() << "\n";
    for (const auto& [i, j] : g.edges())
        out << "e " << i << ' ' << j << "\n";
    return out.str();
}

OrthoGraph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<OrthoGraph> g;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag.front() == '#')
            continue;
        if (tag == "n" && !g) {
            std::size_t n = 0;
            if (!(fields >> n))
                throw ParseError(line_no, 1, "expected 'n <count>'");
            g.emplace(n);
        } else if (tag == "e" && g) {
            std::size_t i = 0, j = 0;
            if (!(fields >> i >> j) || i >= j || j >= g->size())
                throw ParseError(line_no, 1, "expected 'e i j' with i < j < n");
            g->add_edge(i, j);
        } else {
            throw ParseError(line_no, 1, "unexpected '" + tag + "'");
        }
    }
    if (!g)
        throw ParseError(line_no + 1, 1, "missing 'n <count>' line");
    return std::move(*g);
}

} // namespace sic
