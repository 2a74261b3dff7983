#pragma once

#include "lidcol/colouring.hpp"
#include "lidcol/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace lidcol {

struct SearchBudget {
    int max_palette = 0;                   // 0: number of vertices
    std::optional<std::uint64_t> node_limit;
    std::optional<double> time_limit;      // seconds of wall-clock time
};

enum class SearchStatus { exact, lower_bound_only, inconclusive };

std::string_view to_string(SearchStatus status);

/// Result of one fixed-k search.
struct FindResult {
    enum class Outcome { found, none, inconclusive };
    Outcome outcome = Outcome::none;
    std::optional<Colouring> witness;      // set iff outcome == found
    std::uint64_t nodes = 0;
};

struct ExactResult {
    SearchStatus status = SearchStatus::inconclusive;
    std::optional<int> value;              // set iff status == exact
    std::optional<Colouring> witness;      // set iff status == exact
    /// Every k below this was proved infeasible.
    int lower_bound = 0;
    std::uint64_t nodes = 0;
};

/// Depth-first search for a lid/slid-colouring with colours 1..k.
///
/// Vertices are coloured in a connected order starting at vertex 0 (next
/// vertex = most already-ordered neighbours, smallest id on ties). Colours
/// are tried in ascending order; a colour above (largest so far + 1) is
/// never tried. Properness (and in slid mode, distance-two properness) is
/// enforced on assignment; the bad-edge test for uv runs when the last
/// vertex of N[u] u N[v] is assigned. Closed-twin edges are skipped.
FindResult find_with_k(const Graph &g, int k, Mode mode, const SearchBudget &budget = {});

/// Smallest k with a colouring, searched upwards from a clique lower bound
/// (max closed neighbourhood size in slid mode) to budget.max_palette.
ExactResult min_number(const Graph &g, Mode mode, const SearchBudget &budget = {});

/// Size of the largest clique found greedily from each vertex.
int greedy_clique_size(const Graph &g);

} // namespace lidcol
