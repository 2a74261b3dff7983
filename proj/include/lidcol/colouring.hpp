#pragma once

#include "lidcol/graph.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace lidcol {

using Colour = int;

/// Sorted, duplicate-free list of colours.
using ColourSet = std::vector<Colour>;

enum class Mode { lid, slid };

std::string_view to_string(Mode mode);
/// Accepts "lid" or "slid"; throws InputError otherwise.
Mode parse_mode(std::string_view text);

/// Total assignment of colours 1..palette_size to vertices 0..n-1.
class Colouring {
public:
    Colouring() = default;
    /// Throws InputError if any colour lies outside 1..palette_size.
    Colouring(std::vector<Colour> assignment, int palette_size);

    /// Palette is max(assignment).
    static Colouring compact(std::vector<Colour> assignment);

    int size() const { return static_cast<int>(assignment_.size()); }
    int palette_size() const { return palette_size_; }
    Colour operator[](Vertex v) const { return assignment_[static_cast<std::size_t>(v)]; }
    Colour at(Vertex v) const;
    std::span<const Colour> assignment() const { return assignment_; }

    /// Number of distinct colours that actually occur.
    int colours_used() const;

    friend bool operator==(const Colouring &, const Colouring &) = default;

private:
    std::vector<Colour> assignment_;
    int palette_size_ = 0;
};

/// c(S).
ColourSet colour_set(const Colouring &c, std::span<const Vertex> vertices);

/// Edges uv with N[u] != N[v] and c(N[u]) == c(N[v]), lexicographic.
std::vector<Edge> bad_edges(const Graph &g, const Colouring &c);

/// Symmetric difference of c(N[u]) and c(N[v]).
ColourSet separating_colours(const Graph &g, const Colouring &c, Vertex u, Vertex v);

struct InjectivityViolation {
    Vertex vertex;
    Colour colour;
    friend bool operator==(const InjectivityViolation &, const InjectivityViolation &) = default;
};

struct VerificationReport {
    Mode mode = Mode::lid;
    std::vector<Edge> improper_edges;
    std::vector<Edge> bad_edges;
    /// (v, colour) such that colour occurs at least twice in N[v].
    std::vector<InjectivityViolation> injectivity_violations;
    /// Pairs u < v at distance at most two that share a colour.
    std::vector<Edge> distance2_violations;
    bool is_lid = false;
    bool is_slid = false;

    /// Verdict for the requested mode.
    bool accepted() const { return mode == Mode::lid ? is_lid : is_slid; }

    friend bool operator==(const VerificationReport &, const VerificationReport &) = default;
};

/// Every violation list is filled regardless of `mode`; `mode` only selects
/// what accepted() reports. Throws InputError if c does not cover g.
VerificationReport verify(const Graph &g, const Colouring &c, Mode mode);

/// Fast yes/no versions used inside the constructors' test hooks.
bool is_lid_colouring(const Graph &g, const Colouring &c);
bool is_slid_colouring(const Graph &g, const Colouring &c);

} // namespace lidcol
