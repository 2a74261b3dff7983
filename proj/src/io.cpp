#include "lidcol/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace lidcol {

namespace {

/// Integer tokens of all non-comment lines.
std::vector<long long> tokens(std::istream &in)
{
    std::vector<long long> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r\n\f\v");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream words(line);
        std::string word;
        while (words >> word) {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc{} || ptr != word.data() + word.size())
                throw ParseError("line " + std::to_string(line_no) + ": '" + word +
                                 "' is not an integer");
            out.push_back(value);
        }
    }
    return out;
}

int as_count(long long value, const char *what)
{
    if (value < 0 || value > 100'000'000)
        throw ParseError(std::string(what) + " out of range: " + std::to_string(value));
    return static_cast<int>(value);
}

std::ifstream open(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    return in;
}

} // namespace

Graph parse_graph(std::istream &in)
{
    auto t = tokens(in);
    if (t.size() < 2)
        throw ParseError("graph file needs a header line \"n m\"");
    const int n = as_count(t[0], "vertex count");
    const int m = as_count(t[1], "edge count");
    if (t.size() != 2 + 2 * static_cast<std::size_t>(m))
        throw ParseError("header announces " + std::to_string(m) + " edges but the file has " +
                         std::to_string((t.size() - 2) / 2) +
                         ((t.size() % 2) ? " and a dangling endpoint" : ""));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto u = t[2 + 2 * i];
        auto v = t[3 + 2 * i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge " + std::to_string(u) + " " + std::to_string(v) +
                             " has an endpoint outside 0.." + std::to_string(n - 1));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph::from_edge_list(n, edges);
    } catch (const ParseError &) {
        throw;
    } catch (const InputError &e) {
        throw ParseError(e.what());
    }
}

std::string serialize_graph(const Graph &g)
{
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Colouring parse_colouring(std::istream &in)
{
    auto t = tokens(in);
    if (t.size() < 2)
        throw ParseError("colouring file needs a header line \"n k\"");
    const int n = as_count(t[0], "vertex count");
    const int k = as_count(t[1], "palette size");
    if (t.size() != 2 + 2 * static_cast<std::size_t>(n))
        throw ParseError("header announces " + std::to_string(n) +
                         " vertices but the file lists a different number");
    std::vector<Colour> assignment(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        auto v = t[2 + 2 * i];
        auto c = t[3 + 2 * i];
        if (v < 0 || v >= n)
            throw ParseError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
        if (assignment[v] != 0)
            throw ParseError("vertex " + std::to_string(v) + " listed twice");
        if (c < 1 || c > k)
            throw ParseError("vertex " + std::to_string(v) + " has colour " + std::to_string(c) +
                             " outside 1.." + std::to_string(k));
        assignment[v] = static_cast<Colour>(c);
    }
    return Colouring(std::move(assignment), k);
}

std::string serialize_colouring(const Colouring &c)
{
    std::ostringstream out;
    out << c.size() << ' ' << c.palette_size() << '\n';
    for (Vertex v = 0; v < c.size(); ++v)
        out << v << ' ' << c[v] << '\n';
    return out.str();
}

Graph read_graph_file(const std::filesystem::path &path)
{
    if (path == "-")
        return parse_graph(std::cin);
    auto in = open(path);
    return parse_graph(in);
}

Colouring read_colouring_file(const std::filesystem::path &path)
{
    if (path == "-")
        return parse_colouring(std::cin);
    auto in = open(path);
    return parse_colouring(in);
}

} // namespace lidcol
