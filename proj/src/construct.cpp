#include "lidcol/construct.hpp"

#include "lidcol/recolouring.hpp"
#include "lidcol/special_graphs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lidcol {

int LemmaInvocation::size_bound() const
{
    if (lemma == Mode::lid)
        return 2 * degree * (max_degree - 1);
    return degree + 2 * distance_two;
}

std::string_view to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::max_degree_at_most_one: return "max-degree<=1";
    case BoundKind::max_degree_two: return "max-degree-2";
    case BoundKind::degenerate: return "degenerate";
    case BoundKind::regular: return "regular";
    case BoundKind::chordal: return "chordal";
    }
    return "?";
}

int bound_M(int omega, int delta)
{
    if (omega < 2)
        throw InputError("bound_M needs omega >= 2");
    if (delta < omega - 1)
        throw InputError("bound_M needs delta >= omega - 1");
    int best = 0;
    for (int d = 1; d <= omega - 1; ++d)
        best = std::max(best, d * (2 * delta - 2 * d + 1));
    return best;
}

namespace {

int lid_degenerate_palette(int delta, int d) { return 2 * (delta - 1) * (delta - 1) + d; }
int slid_degenerate_palette(int delta, int d) { return (delta - 1) * (2 * delta - 1) + 2 * d - 1; }
int lid_regular_palette(int delta) { return 2 * delta * delta - 3 * delta + 3; }
int slid_regular_palette(int delta) { return 2 * delta * delta - delta + 1; }

/// Peel/restore machinery shared by every inductive construction. Vertices
/// outside `active` are "removed"; colours of removed vertices are 0.
class Builder {
public:
    Builder(const Graph &g, Mode mode, int delta, const ConstructionOptions &options)
        : g_(g), mode_(mode), delta_(delta), options_(options),
          active_(static_cast<std::size_t>(g.n()), 0), colour_(static_cast<std::size_t>(g.n()), 0)
    {
    }

    /// Colour the vertices of `target` with `palette` colours: peel in
    /// smallest-last order, restore in reverse.
    void fill_degenerate(const std::vector<char> &target, int palette)
    {
        auto order = smallest_last_order(g_, target);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            prepare_neighbours(*it, palette);
            insert_with_scratch(*it, palette + 1);
            if (!settle(*it, palette))
                throw std::logic_error("no free colour for restored vertex " +
                                       std::to_string(*it));
        }
    }

    /// Restore in reverse of a perfect elimination sequence; the removed
    /// vertex is simplicial, so no neighbour needs recolouring.
    void fill_simplicial(const std::vector<Vertex> &sequence, int palette)
    {
        for (auto it = sequence.rbegin(); it != sequence.rend(); ++it) {
            insert_with_scratch(*it, palette + 1);
            if (!settle(*it, palette))
                throw std::logic_error("no free colour for simplicial vertex " +
                                       std::to_string(*it));
        }
    }

    /// Before v is added back: recolour each active neighbour v_i with a
    /// colour outside its lemma list and outside L' (the colours of the
    /// first second-neighbours u_{j,1}); in slid mode also keep N(v)
    /// rainbow.
    void prepare_neighbours(Vertex v, int palette)
    {
        std::vector<Vertex> near;
        for (Vertex w : g_.neighbours(v))
            if (active_[w])
                near.push_back(w);

        ColourSet first_outside;
        for (Vertex vi : near)
            for (Vertex u : g_.neighbours(vi))
                if (u != v && active_[u] && !g_.adjacent(u, v)) {
                    first_outside.push_back(colour_[u]);
                    break;
                }

        for (Vertex vi : near) {
            auto list = lemma_list(vi);
            auto blocked = [&](Colour x) {
                if (list.contains(x) || std::ranges::find(first_outside, x) != first_outside.end())
                    return true;
                if (mode_ == Mode::slid)
                    for (Vertex vj : near)
                        if (vj != vi && colour_[vj] == x)
                            return true;
                return false;
            };
            Colour chosen = 0;
            for (Colour x = 1; x <= palette && chosen == 0; ++x)
                if (!blocked(x))
                    chosen = x;
            if (chosen == 0)
                throw std::logic_error("no free colour for neighbour " + std::to_string(vi));
            colour_[vi] = chosen;
        }
    }

    void insert_with_scratch(Vertex v, Colour scratch)
    {
        active_[v] = 1;
        colour_[v] = scratch;
    }

    /// Move v to the smallest palette colour outside its lemma list.
    /// Returns false (leaving v unchanged) if every palette colour is listed.
    bool settle(Vertex v, int palette)
    {
        auto list = lemma_list(v);
        for (Colour x = 1; x <= palette; ++x)
            if (!list.contains(x)) {
                colour_[v] = x;
                return true;
            }
        return false;
    }

    std::vector<char> &active() { return active_; }
    const std::vector<Colour> &colours() const { return colour_; }

private:
    ForbiddenList lemma_list(Vertex v)
    {
        ActiveColouring state{g_, active_, colour_};
        if (options_.check_preconditions)
            check_active_colouring();
        auto list = mode_ == Mode::lid ? forbidden_list_lid(state, v) : forbidden_list_slid(state, v);
        if (options_.on_lemma) {
            LemmaInvocation call;
            call.lemma = mode_;
            call.vertex = v;
            call.max_degree = delta_;
            call.list_size = list.size();
            std::vector<char> seen(static_cast<std::size_t>(g_.n()), 0);
            for (Vertex w : g_.neighbours(v))
                if (active_[w]) {
                    ++call.degree;
                    seen[w] = 1;
                }
            seen[v] = 1;
            for (Vertex w : g_.neighbours(v))
                if (active_[w])
                    for (Vertex u : g_.neighbours(w))
                        if (active_[u] && !seen[u]) {
                            seen[u] = 1;
                            ++call.distance_two;
                        }
            options_.on_lemma(call);
        }
        return list;
    }

    void check_active_colouring() const
    {
        std::vector<Vertex> members;
        std::vector<Colour> sub;
        for (Vertex v = 0; v < g_.n(); ++v)
            if (active_[v]) {
                members.push_back(v);
                sub.push_back(colour_[v]);
            }
        auto h = induced_subgraph(g_, members);
        auto report = verify(h, Colouring::compact(std::move(sub)), mode_);
        if (!report.accepted())
            throw std::logic_error("recolouring lemma called on a colouring that is not " +
                                   std::string(to_string(mode_)));
    }

    const Graph &g_;
    Mode mode_;
    int delta_;
    const ConstructionOptions &options_;
    std::vector<char> active_;
    std::vector<Colour> colour_;
};

void check_degenerate_parameters(const Graph &g, int delta, int d, int min_delta)
{
    if (g.n() < 1)
        throw InputError("graph has no vertices");
    if (delta < min_delta)
        throw InputError("delta must be at least " + std::to_string(min_delta));
    if (delta < g.max_degree())
        throw InputError("delta " + std::to_string(delta) + " is below the maximum degree " +
                         std::to_string(g.max_degree()));
    if (d >= delta)
        throw InputError("degeneracy parameter must be below delta");
    if (d < degeneracy_ordering(g).width)
        throw InputError("graph is not " + std::to_string(d) + "-degenerate");
}

Colouring degenerate(const Graph &g, Mode mode, int delta, int d, const ConstructionOptions &options)
{
    int palette = mode == Mode::lid ? lid_degenerate_palette(delta, d)
                                    : slid_degenerate_palette(delta, d);
    Builder builder(g, mode, delta, options);
    builder.fill_degenerate(std::vector<char>(static_cast<std::size_t>(g.n()), 1), palette);
    return Colouring(builder.colours(), palette);
}

/// Connected Delta-regular graph: colour G - v with the degenerate palette,
/// recolour N(v) with one (lid) or two (slid) extra colours, then give v a
/// fresh colour and move it into the smaller palette when the lemma allows.
Colouring regular(const Graph &g, Mode mode, const ConstructionOptions &options)
{
    const int delta = g.max_degree();
    const Vertex v = 0;
    int inner = mode == Mode::lid ? lid_degenerate_palette(delta, delta - 1)
                                  : slid_degenerate_palette(delta, delta - 1);
    int widened = inner + (mode == Mode::lid ? 1 : 2);
    int total = mode == Mode::lid ? lid_regular_palette(delta) : slid_regular_palette(delta);

    Builder builder(g, mode, delta, options);
    std::vector<char> rest(static_cast<std::size_t>(g.n()), 1);
    rest[v] = 0;
    builder.fill_degenerate(rest, inner);
    builder.prepare_neighbours(v, widened);
    builder.insert_with_scratch(v, total);
    builder.settle(v, widened);
    return Colouring(builder.colours(), total);
}

/// Walk a connected graph of maximum degree <= 2 from an end (or vertex 0
/// for a cycle) and return vertices in path/cycle order.
std::vector<Vertex> walk(const Graph &g)
{
    Vertex start = 0;
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) <= 1) {
            start = v;
            break;
        }
    std::vector<Vertex> order{start};
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    seen[start] = 1;
    while (static_cast<int>(order.size()) < g.n()) {
        Vertex next = -1;
        for (Vertex w : g.neighbours(order.back()))
            if (!seen[w]) {
                next = w;
                break;
            }
        if (next < 0)
            throw std::logic_error("walk: graph is not a path or cycle");
        seen[next] = 1;
        order.push_back(next);
    }
    return order;
}

Colouring low_degree(const Graph &g, Mode mode)
{
    if (g.n() == 1)
        return Colouring({1}, 1);
    auto order = walk(g);
    const int n = g.n();
    Colouring pattern;
    if (g.m() == n - 1)
        pattern = path_lid_colouring(n, mode);
    else if (n == 3)
        pattern = Colouring({1, 2, 3}, 3);
    else
        pattern = mode == Mode::lid ? cycle_lid_colouring(n) : cycle_slid_colouring(n);
    std::vector<Colour> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[order[i]] = pattern[i];
    return Colouring(std::move(out), pattern.palette_size());
}

Colouring colour_connected(const Graph &g, Mode mode, const ConstructionOptions &options)
{
    if (g.max_degree() <= 2)
        return low_degree(g, mode);
    if (g.is_regular())
        return regular(g, mode, options);
    return degenerate(g, mode, g.max_degree(), degeneracy_ordering(g).width, options);
}

Colouring by_components(const Graph &g, Mode mode, const ConstructionOptions &options)
{
    std::vector<Colour> out(static_cast<std::size_t>(g.n()), 0);
    int palette = 0;
    for (const auto &component : connected_components(g)) {
        auto part = colour_connected(induced_subgraph(g, component), mode, options);
        for (std::size_t i = 0; i < component.size(); ++i)
            out[component[i]] = part[static_cast<int>(i)];
        palette = std::max(palette, part.palette_size());
    }
    return Colouring(std::move(out), palette);
}

} // namespace

Colouring lid_colour_degenerate(const Graph &g, int delta, int d, const ConstructionOptions &options)
{
    check_degenerate_parameters(g, delta, d, 3);
    return degenerate(g, Mode::lid, delta, d, options);
}

Colouring lid_colour(const Graph &g, const ConstructionOptions &options)
{
    return by_components(g, Mode::lid, options);
}

Colouring slid_colour_degenerate(const Graph &g, int delta, int d, const ConstructionOptions &options)
{
    check_degenerate_parameters(g, delta, d, 2);
    return degenerate(g, Mode::slid, delta, d, options);
}

Colouring slid_colour(const Graph &g, const ConstructionOptions &options)
{
    return by_components(g, Mode::slid, options);
}

Colouring slid_colour_chordal(const Graph &g, const ConstructionOptions &options)
{
    if (g.n() < 1)
        throw InputError("graph has no vertices");
    auto peo = chordal_peo(g);
    if (!peo)
        throw InputError("graph is not chordal");
    int omega = clique_number_chordal(g, *peo);
    if (omega < 2)
        throw InputError("chordal construction needs at least one edge");
    int palette = bound_M(omega, g.max_degree()) + 1;
    Builder builder(g, Mode::slid, g.max_degree(), options);
    builder.fill_simplicial(peo->elimination_sequence(), palette);
    return Colouring(builder.colours(), palette);
}

BoundInfo applicable_bound(const Graph &g, Mode mode, bool chordal)
{
    BoundInfo info;
    info.max_degree = g.max_degree();
    info.degeneracy = g.n() > 0 ? degeneracy_ordering(g).width : 0;
    const int delta = info.max_degree;

    if (chordal) {
        auto peo = g.n() > 0 ? chordal_peo(g) : std::nullopt;
        if (!peo)
            throw InputError("graph is not chordal");
        info.kind = BoundKind::chordal;
        info.clique_number = clique_number_chordal(g, *peo);
        if (info.clique_number < 2)
            throw InputError("chordal bound needs at least one edge");
        info.value = bound_M(info.clique_number, delta) + 1;
        return info;
    }
    if (delta <= 1) {
        info.kind = BoundKind::max_degree_at_most_one;
        info.value = delta + 1;
        return info;
    }
    if (delta == 2) {
        info.kind = BoundKind::max_degree_two;
        info.value = mode == Mode::lid ? 5 : 7;
        return info;
    }
    bool has_regular_component = false;
    for (const auto &component : connected_components(g)) {
        auto h = induced_subgraph(g, component);
        if (h.max_degree() == delta && h.is_regular())
            has_regular_component = true;
    }
    if (has_regular_component) {
        info.kind = BoundKind::regular;
        info.value = mode == Mode::lid ? lid_regular_palette(delta) : slid_regular_palette(delta);
    } else {
        info.kind = BoundKind::degenerate;
        info.value = mode == Mode::lid ? lid_degenerate_palette(delta, info.degeneracy)
                                       : slid_degenerate_palette(delta, info.degeneracy);
    }
    return info;
}

} // namespace lidcol
