#include "lidcol/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>

namespace lidcol {

std::string_view to_string(SearchStatus status)
{
    switch (status) {
    case SearchStatus::exact: return "exact";
    case SearchStatus::lower_bound_only: return "lower-bound-only";
    case SearchStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

int greedy_clique_size(const Graph &g)
{
    int best = g.n() > 0 ? 1 : 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        std::vector<Vertex> clique{v};
        for (Vertex w : g.neighbours(v))
            if (std::ranges::all_of(clique, [&](Vertex x) { return g.adjacent(x, w); }))
                clique.push_back(w);
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

namespace {

constexpr int max_supported_colours = 64;

using Clock = std::chrono::steady_clock;

struct Limits {
    std::optional<std::uint64_t> node_limit;
    std::optional<Clock::time_point> deadline;
    std::uint64_t nodes = 0;
};

class Search {
public:
    Search(const Graph &g, int k, Mode mode, Limits &limits)
        : g_(g), k_(k), limits_(limits), colour_(static_cast<std::size_t>(g.n()), 0)
    {
        build_order();
        const int n = g.n();
        std::vector<int> position(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p)
            position[order_[p]] = p;

        // Earlier positions that must receive a different colour.
        conflicts_.resize(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> &out = conflicts_[position[v]];
            for (Vertex w : g.neighbours(v))
                if (position[w] < position[v])
                    out.push_back(w);
            if (mode == Mode::slid)
                for (Vertex u : g.distance_two_set(v))
                    if (position[u] < position[v])
                        out.push_back(u);
        }

        closed_.resize(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            closed_[v] = g.closed_neighbourhood(v);

        // Each non-twin edge is tested once, at the position where the last
        // vertex of N[u] u N[v] gets its colour.
        checks_.resize(static_cast<std::size_t>(n));
        for (auto [u, v] : g.edges()) {
            if (closed_[u] == closed_[v])
                continue;
            int last = 0;
            for (Vertex x : closed_[u])
                last = std::max(last, position[x]);
            for (Vertex x : closed_[v])
                last = std::max(last, position[x]);
            checks_[last].emplace_back(u, v);
        }
    }

    FindResult run()
    {
        FindResult result;
        std::uint64_t before = limits_.nodes;
        try {
            if (dfs(0, 0)) {
                result.outcome = FindResult::Outcome::found;
                result.witness = Colouring(colour_, k_);
            } else {
                result.outcome = FindResult::Outcome::none;
            }
        } catch (const BudgetExhausted &) {
            result.outcome = FindResult::Outcome::inconclusive;
        }
        result.nodes = limits_.nodes - before;
        return result;
    }

private:
    struct BudgetExhausted {};

    void build_order()
    {
        const int n = g_.n();
        std::vector<int> weight(static_cast<std::size_t>(n), 0);
        std::vector<char> placed(static_cast<std::size_t>(n), 0);
        for (int step = 0; step < n; ++step) {
            Vertex best = -1;
            for (Vertex v = 0; v < n; ++v)
                if (!placed[v] && (best < 0 || weight[v] > weight[best]))
                    best = v;
            placed[best] = 1;
            order_.push_back(best);
            for (Vertex w : g_.neighbours(best))
                ++weight[w];
        }
    }

    std::uint64_t closed_mask(Vertex v) const
    {
        std::uint64_t mask = 0;
        for (Vertex x : closed_[v])
            mask |= std::uint64_t{1} << (colour_[x] - 1);
        return mask;
    }

    void tick()
    {
        ++limits_.nodes;
        if (limits_.node_limit && limits_.nodes > *limits_.node_limit)
            throw BudgetExhausted{};
        if (limits_.deadline && (limits_.nodes & 1023) == 0 && Clock::now() > *limits_.deadline)
            throw BudgetExhausted{};
    }

    bool dfs(int p, int largest)
    {
        if (p == g_.n())
            return true;
        tick();
        const Vertex v = order_[p];
        const int limit = std::min(k_, largest + 1);
        for (Colour c = 1; c <= limit; ++c) {
            bool clash = false;
            for (Vertex w : conflicts_[p])
                if (colour_[w] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            colour_[v] = c;
            bool ok = true;
            for (auto [a, b] : checks_[p])
                if (closed_mask(a) == closed_mask(b)) {
                    ok = false;
                    break;
                }
            if (ok && dfs(p + 1, std::max(largest, c)))
                return true;
        }
        colour_[v] = 0;
        return false;
    }

    const Graph &g_;
    int k_;
    Limits &limits_;
    std::vector<Colour> colour_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> conflicts_;
    std::vector<std::vector<Vertex>> closed_;
    std::vector<std::vector<Edge>> checks_;
};

Limits limits_from(const SearchBudget &budget)
{
    Limits limits;
    limits.node_limit = budget.node_limit;
    if (budget.time_limit)
        limits.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(*budget.time_limit));
    return limits;
}

FindResult find_with_limits(const Graph &g, int k, Mode mode, Limits &limits)
{
    if (k < 1)
        throw InputError("find_with_k needs k >= 1");
    if (k > max_supported_colours)
        throw InputError("exact search supports at most " +
                         std::to_string(max_supported_colours) + " colours");
    if (g.n() == 0)
        return {FindResult::Outcome::found, Colouring({}, k), 0};
    return Search(g, k, mode, limits).run();
}

} // namespace

FindResult find_with_k(const Graph &g, int k, Mode mode, const SearchBudget &budget)
{
    auto limits = limits_from(budget);
    return find_with_limits(g, k, mode, limits);
}

ExactResult min_number(const Graph &g, Mode mode, const SearchBudget &budget)
{
    ExactResult result;
    if (g.n() == 0) {
        result.status = SearchStatus::exact;
        result.value = 0;
        result.witness = Colouring({}, 0);
        return result;
    }
    int lower = greedy_clique_size(g);
    if (mode == Mode::slid)
        lower = std::max(lower, g.max_degree() + 1);
    int upper = budget.max_palette > 0 ? budget.max_palette : g.n();
    upper = std::min(upper, max_supported_colours);

    auto limits = limits_from(budget);
    result.lower_bound = lower;
    result.status = SearchStatus::lower_bound_only;
    for (int k = lower; k <= upper; ++k) {
        auto found = find_with_limits(g, k, mode, limits);
        if (found.outcome == FindResult::Outcome::inconclusive) {
            result.status = SearchStatus::inconclusive;
            break;
        }
        if (found.outcome == FindResult::Outcome::found) {
            result.status = SearchStatus::exact;
            result.value = k;
            result.witness = Colouring::compact(
                std::vector<Colour>(found.witness->assignment().begin(),
                                    found.witness->assignment().end()));
            break;
        }
        result.lower_bound = k + 1;
    }
    result.nodes = limits.nodes;
    return result;
}

} // namespace lidcol
