#include "lidcol/recolouring.hpp"

#include <algorithm>
#include <string>

namespace lidcol {

std::string_view to_string(ForbiddenRule rule)
{
    switch (rule) {
    case ForbiddenRule::neighbour_colour: return "neighbour-colour";
    case ForbiddenRule::type_a_closure: return "typeA-closure";
    case ForbiddenRule::type_a_witness: return "typeA-witness";
    case ForbiddenRule::type_b_witness: return "typeB-witness";
    case ForbiddenRule::type_b_outside: return "typeB-outside";
    case ForbiddenRule::distance2_colour: return "distance2-colour";
    case ForbiddenRule::distance2_witness: return "distance2-witness";
    }
    return "?";
}

ColourSet ForbiddenList::colours() const
{
    ColourSet out;
    out.reserve(entries_.size());
    for (const auto &[colour, rule] : entries_)
        out.push_back(colour);
    return out;
}

std::optional<ForbiddenRule> ForbiddenList::rule(Colour colour) const
{
    auto it = entries_.find(colour);
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

namespace {

bool is_active(const ActiveColouring &s, Vertex v) { return s.active[v] != 0; }

/// c(N[x] \ {excluded}) over active vertices.
ColourSet closed_colours(const ActiveColouring &s, Vertex x, Vertex excluded = -1)
{
    ColourSet out;
    if (x != excluded)
        out.push_back(s.colour[x]);
    for (Vertex y : s.graph.neighbours(x))
        if (y != excluded && is_active(s, y))
            out.push_back(s.colour[y]);
    std::ranges::sort(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Colour> smallest_of_difference(const ColourSet &a, const ColourSet &b)
{
    for (Colour x : a)
        if (!std::ranges::binary_search(b, x))
            return x;
    return std::nullopt;
}

void check_state(const ActiveColouring &s, Vertex v)
{
    s.graph.check_vertex(v);
    if (static_cast<int>(s.active.size()) != s.graph.n() ||
        static_cast<int>(s.colour.size()) != s.graph.n())
        throw InputError("active mask and colouring must cover every vertex");
    if (!is_active(s, v))
        throw InputError("vertex " + std::to_string(v) + " is not active");
}

/// Active neighbours of vi other than v that are not adjacent to v.
std::vector<Vertex> second_neighbours(const ActiveColouring &s, Vertex v, Vertex vi)
{
    std::vector<Vertex> out;
    for (Vertex u : s.graph.neighbours(vi))
        if (u != v && is_active(s, u) && !s.graph.adjacent(u, v))
            out.push_back(u);
    return out;
}

std::vector<char> full_mask(const Graph &g)
{
    return std::vector<char>(static_cast<std::size_t>(g.n()), 1);
}

void require_total(const Graph &g, const Colouring &c)
{
    if (c.size() != g.n())
        throw InputError("colouring size does not match the graph");
}

} // namespace

NeighbourClass classify_neighbour(const ActiveColouring &s, Vertex v, Vertex vi)
{
    check_state(s, v);
    check_state(s, vi);
    if (!s.graph.adjacent(v, vi))
        throw InputError("vertex " + std::to_string(vi) + " is not adjacent to " +
                         std::to_string(v));
    auto without_v = closed_colours(s, vi, v);
    for (Vertex u : second_neighbours(s, v, vi))
        if (closed_colours(s, u) == without_v)
            return {vi, NeighbourType::A};
    return {vi, NeighbourType::B};
}

NeighbourClass classify_neighbour(const Graph &g, const Colouring &c, Vertex v, Vertex vi)
{
    require_total(g, c);
    auto mask = full_mask(g);
    return classify_neighbour(ActiveColouring{g, mask, c.assignment()}, v, vi);
}

ForbiddenList forbidden_list_lid(const ActiveColouring &s, Vertex v)
{
    check_state(s, v);
    ForbiddenList list;
    const auto around_v = closed_colours(s, v);
    for (Vertex vi : s.graph.neighbours(v)) {
        if (!is_active(s, vi))
            continue;
        list.add(s.colour[vi], ForbiddenRule::neighbour_colour);
        const auto without_v = closed_colours(s, vi, v);

        if (classify_neighbour(s, v, vi).type == NeighbourType::A) {
            for (Colour x : without_v)
                list.add(x, ForbiddenRule::type_a_closure);
            // Witnesses are taken from every neighbour u != v of vi, not only
            // from those outside N[v]: an edge vi-vj inside N(v) can be
            // separated solely by a colour of N[vj] \ N[vi], and a type A vi
            // would otherwise leave that colour unguarded. The twin u with
            // c(N[u]) == c(N[vi] \ {v}) contributes nothing, so at most
            // Delta - 2 witnesses are added.
            for (Vertex u : s.graph.neighbours(vi)) {
                if (u == v || !is_active(s, u))
                    continue;
                if (auto x = smallest_of_difference(closed_colours(s, u, v), without_v))
                    list.add(*x, ForbiddenRule::type_a_witness);
            }
        } else {
            for (Vertex u : s.graph.neighbours(vi)) {
                if (u == v || !is_active(s, u))
                    continue;
                if (auto x = smallest_of_difference(closed_colours(s, u, v), without_v))
                    list.add(*x, ForbiddenRule::type_b_witness);
            }
            if (auto x = smallest_of_difference(closed_colours(s, vi), around_v))
                list.add(*x, ForbiddenRule::type_b_outside);
        }
    }
    return list;
}

ForbiddenList forbidden_list_lid(const Graph &g, const Colouring &c, Vertex v)
{
    require_total(g, c);
    g.check_vertex(v);
    if (!is_lid_colouring(g, c))
        throw PreconditionError("forbidden_list_lid needs a lid-colouring");
    auto mask = full_mask(g);
    return forbidden_list_lid(ActiveColouring{g, mask, c.assignment()}, v);
}

ForbiddenList forbidden_list_slid(const ActiveColouring &s, Vertex v)
{
    check_state(s, v);
    ForbiddenList list;
    for (Vertex vi : s.graph.neighbours(v))
        if (is_active(s, vi))
            list.add(s.colour[vi], ForbiddenRule::neighbour_colour);

    std::vector<Vertex> at_two;
    for (Vertex vi : s.graph.neighbours(v))
        if (is_active(s, vi))
            for (Vertex u : second_neighbours(s, v, vi))
                at_two.push_back(u);
    std::ranges::sort(at_two);
    at_two.erase(std::unique(at_two.begin(), at_two.end()), at_two.end());

    for (Vertex u : at_two)
        list.add(s.colour[u], ForbiddenRule::distance2_colour);
    for (Vertex u : at_two)
        for (Colour x : closed_colours(s, u))
            if (!list.contains(x)) {
                list.add(x, ForbiddenRule::distance2_witness);
                break;
            }
    return list;
}

ForbiddenList forbidden_list_slid(const Graph &g, const Colouring &c, Vertex v)
{
    require_total(g, c);
    g.check_vertex(v);
    if (!is_slid_colouring(g, c))
        throw PreconditionError("forbidden_list_slid needs a slid-colouring");
    auto mask = full_mask(g);
    return forbidden_list_slid(ActiveColouring{g, mask, c.assignment()}, v);
}

Colouring recolour(const Colouring &c, Vertex v, Colour colour)
{
    c.at(v);
    if (colour < 1 || colour > c.palette_size())
        throw InputError("colour " + std::to_string(colour) + " is outside the palette 1.." +
                         std::to_string(c.palette_size()));
    std::vector<Colour> next(c.assignment().begin(), c.assignment().end());
    next[static_cast<std::size_t>(v)] = colour;
    return Colouring(std::move(next), c.palette_size());
}

} // namespace lidcol
