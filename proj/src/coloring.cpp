#include "sic/coloring.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sic {

namespace {

constexpr std::size_t uncolored = std::numeric_limits<std::size_t>::max();

// Colored-neighbor bookkeeping shared by the greedy and exact DSATUR passes.
class SaturationState {
public:
    SaturationState(const OrthoGraph& g, std::size_t max_colors)
        : g_(g)
        , k_(max_colors)
        , color_(g.size(), uncolored)
        , neighbor_color_count_(g.size() * max_colors, 0)
        , saturation_(g.size(), 0)
    {
    }

    std::size_t color(std::size_t v) const { return color_[v]; }
    std::size_t saturation(std::size_t v) const { return saturation_[v]; }
    bool blocked(std::size_t v, std::size_t c) const { return neighbor_color_count_[v * k_ + c] != 0; }

    // Saturation first, then degree, then lowest index.
    std::size_t select() const
    {
        std::size_t best = uncolored;
        for (std::size_t v = 0; v < g_.size(); ++v) {
            if (color_[v] != uncolored)
                continue;
            if (best == uncolored || saturation_[v] > saturation_[best]
                || (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best)))
                best = v;
        }
        return best;
    }

    // Returns false if some uncolored neighbor is left with no color in [0, k).
    bool assign(std::size_t v, std::size_t c)
    {
        color_[v] = c;
        bool ok = true;
        const auto& nbrs = g_.neighbors(v);
        for (std::size_t u = nbrs.next(); u < g_.size(); u = nbrs.next(u + 1)) {
            if (neighbor_color_count_[u * k_ + c]++ == 0) {
                ++saturation_[u];
                if (color_[u] == uncolored && saturation_[u] == k_)
                    ok = false;
            }
        }
        return ok;
    }

    void unassign(std::size_t v)
    {
        const std::size_t c = color_[v];
        color_[v] = uncolored;
        const auto& nbrs = g_.neighbors(v);
        for (std::size_t u = nbrs.next(); u < g_.size(); u = nbrs.next(u + 1))
            if (--neighbor_color_count_[u * k_ + c] == 0)
                --saturation_[u];
    }

    Coloring snapshot(std::size_t k) const { return {k, color_}; }

private:
    const OrthoGraph& g_;
    std::size_t k_;
    std::vector<std::size_t> color_;
    std::vector<std::size_t> neighbor_color_count_;
    std::vector<std::size_t> saturation_;
};

class ExactSearch {
public:
    ExactSearch(const OrthoGraph& g, std::size_t k, const Budget& budget)
        : g_(g)
        , k_(k)
        , budget_(budget)
        , state_(g, k)
    {
    }

    std::optional<Coloring> run()
    {
        if (search(0, 0))
            return state_.snapshot(k_);
        return std::nullopt;
    }

private:
    bool search(std::size_t colored, std::size_t used)
    {
        if (colored == g_.size())
            return true;
        if ((++nodes_ & 0x3ff) == 0)
            budget_.check();

        const std::size_t v = state_.select();
        // New colors only as used + 1: prunes the k! relabelings.
        const std::size_t limit = std::min(used + 1, k_);
        for (std::size_t c = 0; c < limit; ++c) {
            if (state_.blocked(v, c))
                continue;
            const bool ok = state_.assign(v, c);
            if (ok && search(colored + 1, std::max(used, c + 1)))
                return true;
            state_.unassign(v);
        }
        return false;
    }

    const OrthoGraph& g_;
    std::size_t k_;
    const Budget& budget_;
    SaturationState state_;
    std::size_t nodes_ = 0;
};

} // namespace

bool is_proper(const OrthoGraph& g, const Coloring& c)
{
    if (c.colors.size() != g.size())
        return false;
    for (std::size_t color : c.colors)
        if (color >= c.k)
            return false;
    for (const auto& [i, j] : g.edges())
        if (c.colors[i] == c.colors[j])
            return false;
    return true;
}

Coloring greedy_coloring(const OrthoGraph& g)
{
    const std::size_t n = g.size();
    SaturationState state(g, std::max<std::size_t>(n, 1));
    std::size_t used = 0;
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t v = state.select();
        std::size_t c = 0;
        while (state.blocked(v, c))
            ++c;
        state.assign(v, c);
        used = std::max(used, c + 1);
    }
    Coloring out = state.snapshot(used);
    if (!is_proper(g, out))
        throw std::logic_error("greedy coloring is not proper");
    return out;
}

std::optional<Coloring> k_colorable(const OrthoGraph& g, std::size_t k, const Budget& budget)
{
    budget.check();
    if (k == 0) {
        if (g.size() == 0)
            return Coloring{0, {}};
        return std::nullopt;
    }
    auto result = ExactSearch(g, k, budget).run();
    if (result && !is_proper(g, *result))
        throw std::logic_error("k_colorable produced an improper coloring");
    return result;
}

ChromaticResult chromatic_number(const OrthoGraph& g, const Budget& budget)
{
    if (g.size() == 0)
        return {0, {0, {}}};

    const std::size_t lower = std::max<std::size_t>(clique_number(g).size, 1);
    Coloring best = greedy_coloring(g);
    std::size_t chi = best.k;
    for (std::size_t k = lower; k < best.k; ++k) {
        if (auto c = k_colorable(g, k, budget)) {
            best = std::move(*c);
            chi = k;
            break;
        }
    }
    best.k = chi;

    // The loop refuted every k in [lower, chi); chi - 1 below the clique bound
    // still gets refuted by search.
    if (chi > 1 && chi == lower && k_colorable(g, chi - 1, budget))
        throw std::logic_error("chromatic number certification failed");
    if (!is_proper(g, best))
        throw std::logic_error("chromatic number witness is not proper");
    return {chi, std::move(best)};
}

} // namespace sic
