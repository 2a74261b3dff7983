#pragma once

#include "lidcol/colouring.hpp"
#include "lidcol/graph.hpp"

#include <functional>
#include <string_view>

namespace lidcol {

/// One application of a recolouring lemma inside a constructor.
struct LemmaInvocation {
    Mode lemma = Mode::lid;   // lid: first lemma, slid: second lemma
    Vertex vertex = 0;
    int degree = 0;           // degree of `vertex` in the current active subgraph
    int distance_two = 0;     // vertices at distance exactly two in that subgraph
    int max_degree = 0;       // the Delta the construction runs with
    int list_size = 0;

    /// 2 d (Delta - 1) for the first lemma, d1 + 2 d2 for the second.
    int size_bound() const;
};

struct ConstructionOptions {
    /// Called once per forbidden list built.
    std::function<void(const LemmaInvocation &)> on_lemma;
    /// Re-verify the active colouring before every lemma call and throw
    /// std::logic_error if it is not lid/slid.
#ifdef NDEBUG
    bool check_preconditions = false;
#else
    bool check_preconditions = true;
#endif
};

/// Degeneracy induction for lid-colourings. Palette 2(delta-1)^2 + d.
/// Requires delta >= max(3, max degree) and degeneracy <= d < delta.
Colouring lid_colour_degenerate(const Graph &g, int delta, int d,
                                const ConstructionOptions &options = {});

/// lid-colouring of any graph, component by component: the closed-form
/// patterns when Delta <= 2, the degenerate induction for non-regular
/// components and the regular-graph variant otherwise.
Colouring lid_colour(const Graph &g, const ConstructionOptions &options = {});

/// Degeneracy induction for slid-colourings. Palette
/// (delta-1)(2 delta-1) + 2d - 1. Requires delta >= max(2, max degree) and
/// degeneracy <= d < delta.
Colouring slid_colour_degenerate(const Graph &g, int delta, int d,
                                 const ConstructionOptions &options = {});

Colouring slid_colour(const Graph &g, const ConstructionOptions &options = {});

/// max over 1 <= d <= omega-1 of d (2 delta - 2d + 1).
int bound_M(int omega, int delta);

/// Simplicial elimination for chordal graphs. Palette bound_M(omega, Delta) + 1.
/// Throws InputError if g is not chordal or has no edge.
Colouring slid_colour_chordal(const Graph &g, const ConstructionOptions &options = {});

enum class BoundKind {
    max_degree_at_most_one,
    max_degree_two,
    degenerate,
    regular,
    chordal,
};

std::string_view to_string(BoundKind kind);

/// The upper bound a constructor is held to on g, and the parameters it
/// was computed from.
struct BoundInfo {
    BoundKind kind = BoundKind::degenerate;
    int value = 0;
    int max_degree = 0;
    int degeneracy = 0;
    int clique_number = 0; // only for BoundKind::chordal
};

BoundInfo applicable_bound(const Graph &g, Mode mode, bool chordal = false);

} // namespace lidcol
