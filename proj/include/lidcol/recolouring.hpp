#pragma once

#include "lidcol/colouring.hpp"
#include "lidcol/graph.hpp"

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace lidcol {

/// Which step of a recolouring lemma put a colour on the forbidden list.
enum class ForbiddenRule {
    neighbour_colour,  // c(v_i) for a neighbour v_i
    type_a_closure,    // c(N[v_i] \ {v}) for a type A neighbour
    type_a_witness,    // one colour of c(N[u]) \ c(N[v_i] \ {v}) per second neighbour u
    type_b_witness,    // one colour of c(N[u] \ {v}) \ c(N[v_i] \ {v}) per neighbour u of v_i
    type_b_outside,    // one colour of c(N[v_i]) \ c(N[v])
    distance2_colour,  // c(u) for u at distance exactly two
    distance2_witness, // one colour of c(N[u]) not yet listed, u at distance two
};

std::string_view to_string(ForbiddenRule rule);

/// Colours that must be avoided when recolouring one vertex. Each colour
/// remembers the first rule that added it.
class ForbiddenList {
public:
    void add(Colour colour, ForbiddenRule rule) { entries_.try_emplace(colour, rule); }
    bool contains(Colour colour) const { return entries_.contains(colour); }
    int size() const { return static_cast<int>(entries_.size()); }
    ColourSet colours() const;
    std::optional<ForbiddenRule> rule(Colour colour) const;
    const std::map<Colour, ForbiddenRule> &entries() const { return entries_; }

private:
    std::map<Colour, ForbiddenRule> entries_;
};

enum class NeighbourType { A, B };

struct NeighbourClass {
    Vertex vertex;
    NeighbourType type;
};

/// A colouring of the subgraph induced by the active vertices. Inactive
/// vertices are ignored; their colour entries are not read. Colours may
/// exceed any palette (the constructors park vertices on a scratch colour).
struct ActiveColouring {
    const Graph &graph;
    std::span<const char> active;
    std::span<const Colour> colour;
};

/// Type A iff some neighbour u of vi with u outside N[v] has
/// c(N[u]) == c(N[vi] \ {v}).
NeighbourClass classify_neighbour(const ActiveColouring &state, Vertex v, Vertex vi);
NeighbourClass classify_neighbour(const Graph &g, const Colouring &c, Vertex v, Vertex vi);

/// First recolouring lemma: colouring v with any colour outside the list
/// keeps a lid-colouring lid. Size is at most 2 deg(v) (Delta - 1) when
/// Delta >= 3.
ForbiddenList forbidden_list_lid(const ActiveColouring &state, Vertex v);
/// Checked entry point: throws PreconditionError if c is not lid on g.
ForbiddenList forbidden_list_lid(const Graph &g, const Colouring &c, Vertex v);

/// Second recolouring lemma, for slid-colourings. Size is at most
/// deg(v) + 2 |distance-two set of v|.
ForbiddenList forbidden_list_slid(const ActiveColouring &state, Vertex v);
/// Checked entry point: throws PreconditionError if c is not slid on g.
ForbiddenList forbidden_list_slid(const Graph &g, const Colouring &c, Vertex v);

/// Copy of c with v set to `colour`. Throws InputError if colour is outside
/// the palette.
Colouring recolour(const Colouring &c, Vertex v, Colour colour);

} // namespace lidcol
