#include "lidcol/colouring.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lidcol {

std::string_view to_string(Mode mode)
{
    return mode == Mode::lid ? "lid" : "slid";
}

Mode parse_mode(std::string_view text)
{
    if (text == "lid")
        return Mode::lid;
    if (text == "slid")
        return Mode::slid;
    throw InputError("unknown mode '" + std::string(text) + "' (expected lid or slid)");
}

Colouring::Colouring(std::vector<Colour> assignment, int palette_size)
    : assignment_(std::move(assignment)), palette_size_(palette_size)
{
    if (palette_size_ < 0)
        throw InputError("palette size must be non-negative");
    for (std::size_t v = 0; v < assignment_.size(); ++v)
        if (assignment_[v] < 1 || assignment_[v] > palette_size_)
            throw InputError("vertex " + std::to_string(v) + " has colour " +
                             std::to_string(assignment_[v]) + " outside 1.." +
                             std::to_string(palette_size_));
}

Colouring Colouring::compact(std::vector<Colour> assignment)
{
    Colour top = assignment.empty() ? 0 : std::ranges::max(assignment);
    return Colouring(std::move(assignment), top);
}

Colour Colouring::at(Vertex v) const
{
    if (v < 0 || v >= size())
        throw InputError("vertex " + std::to_string(v) + " is not coloured");
    return assignment_[static_cast<std::size_t>(v)];
}

int Colouring::colours_used() const
{
    std::vector<char> seen(static_cast<std::size_t>(palette_size_) + 1, 0);
    int count = 0;
    for (Colour c : assignment_)
        if (!seen[c]) {
            seen[c] = 1;
            ++count;
        }
    return count;
}

ColourSet colour_set(const Colouring &c, std::span<const Vertex> vertices)
{
    ColourSet out;
    out.reserve(vertices.size());
    for (Vertex v : vertices)
        out.push_back(c.at(v));
    std::ranges::sort(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void require_total(const Graph &g, const Colouring &c)
{
    if (c.size() != g.n())
        throw InputError("colouring covers " + std::to_string(c.size()) +
                         " vertices but the graph has " + std::to_string(g.n()));
}

ColourSet closed_colours(const Graph &g, const Colouring &c, Vertex v)
{
    auto closed = g.closed_neighbourhood(v);
    return colour_set(c, closed);
}

} // namespace

std::vector<Edge> bad_edges(const Graph &g, const Colouring &c)
{
    require_total(g, c);
    std::vector<ColourSet> sets;
    sets.reserve(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v)
        sets.push_back(closed_colours(g, c, v));
    std::vector<Edge> out;
    for (auto [u, v] : g.edges())
        if (sets[u] == sets[v] && !g.closed_twins(u, v))
            out.emplace_back(u, v);
    return out;
}

ColourSet separating_colours(const Graph &g, const Colouring &c, Vertex u, Vertex v)
{
    require_total(g, c);
    if (u == v)
        throw InputError("separating_colours needs two distinct vertices");
    auto a = closed_colours(g, c, u);
    auto b = closed_colours(g, c, v);
    ColourSet out;
    std::ranges::set_symmetric_difference(a, b, std::back_inserter(out));
    return out;
}

VerificationReport verify(const Graph &g, const Colouring &c, Mode mode)
{
    require_total(g, c);
    VerificationReport report;
    report.mode = mode;

    for (auto [u, v] : g.edges())
        if (c[u] == c[v])
            report.improper_edges.emplace_back(u, v);
    report.bad_edges = bad_edges(g, c);

    // Every pair at distance <= 2 shares some closed neighbourhood, so
    // scanning each N[w] for repeated colours finds all clashes.
    std::set<Edge> clashes;
    for (Vertex w = 0; w < g.n(); ++w) {
        auto closed = g.closed_neighbourhood(w);
        std::ranges::sort(closed, [&](Vertex a, Vertex b) {
            return c[a] != c[b] ? c[a] < c[b] : a < b;
        });
        Colour last_reported = 0;
        for (std::size_t i = 0; i < closed.size(); ++i)
            for (std::size_t j = i + 1; j < closed.size() && c[closed[j]] == c[closed[i]]; ++j) {
                clashes.emplace(std::min(closed[i], closed[j]), std::max(closed[i], closed[j]));
                if (last_reported != c[closed[i]]) {
                    report.injectivity_violations.push_back({w, c[closed[i]]});
                    last_reported = c[closed[i]];
                }
            }
    }
    report.distance2_violations.assign(clashes.begin(), clashes.end());

    report.is_lid = report.improper_edges.empty() && report.bad_edges.empty();
    report.is_slid = report.is_lid && report.injectivity_violations.empty() &&
                     report.distance2_violations.empty();
    return report;
}

bool is_lid_colouring(const Graph &g, const Colouring &c)
{
    return verify(g, c, Mode::lid).is_lid;
}

bool is_slid_colouring(const Graph &g, const Colouring &c)
{
    return verify(g, c, Mode::slid).is_slid;
}

} // namespace lidcol
