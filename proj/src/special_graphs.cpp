#include "lidcol/special_graphs.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace lidcol {

std::vector<Colour> WordPattern::expand() const
{
    std::vector<Colour> out;
    for (const auto &block : blocks)
        for (int r = 0; r < block.repeat; ++r)
            out.insert(out.end(), block.colours.begin(), block.colours.end());
    return out;
}

int WordPattern::length() const
{
    int total = 0;
    for (const auto &block : blocks)
        total += block.repeat * static_cast<int>(block.colours.size());
    return total;
}

namespace {

const std::vector<Colour> long_prefix{1, 2, 4, 3, 4, 1, 2, 3, 2};
const std::vector<Colour> short_prefix{4, 2};
const std::vector<Colour> period{1, 2, 3, 2};

// Not producible by [124341232][42](1232)^*; found by exhaustive search
// and re-verified by the test suite.
const std::vector<Colour> c5_witness{1, 2, 3, 4, 5};
const std::vector<Colour> c7_witness{1, 2, 1, 3, 4, 3, 5};

} // namespace

WordPattern lid_cycle_word(int n)
{
    if (n < 4 || n == 5 || n == 7)
        throw InputError("no lid cycle word of length " + std::to_string(n));
    // Lengths 9a + 2b + 4k with a, b in {0,1}: the residue mod 4 fixes a and b.
    const int a = (n % 4 == 1 || n % 4 == 3) ? 1 : 0;
    const int b = (n % 4 == 2 || n % 4 == 3) ? 1 : 0;
    WordPattern word;
    if (a)
        word.blocks.push_back({long_prefix, 1});
    if (b)
        word.blocks.push_back({short_prefix, 1});
    const int rest = n - 9 * a - 2 * b;
    if (rest < 0 || rest % 4 != 0)
        throw std::logic_error("lid cycle word length mismatch for n = " + std::to_string(n));
    word.blocks.push_back({period, rest / 4});
    return word;
}

int lid_cycle_value(int n)
{
    if (n < 3)
        throw InputError("cycles need at least 3 vertices");
    if (n == 3)
        return 3;
    if (n % 4 == 0)
        return 3;
    if (n == 5 || n == 7)
        return 5;
    return 4;
}

Colouring cycle_lid_colouring(int n)
{
    if (n < 4)
        throw InputError("cycle_lid_colouring needs n >= 4");
    if (n == 5)
        return Colouring::compact(c5_witness);
    if (n == 7)
        return Colouring::compact(c7_witness);
    return Colouring::compact(lid_cycle_word(n).expand());
}

int slid_cycle_value(int n)
{
    if (n < 4)
        throw InputError("slid cycle values need n >= 4");
    if (n % 4 == 0)
        return 4;
    if (n == 6 || n == 11)
        return 6;
    if (n == 7)
        return 7;
    return 5;
}

Colouring cycle_slid_colouring(int n)
{
    if (n < 4)
        throw InputError("cycle_slid_colouring needs n >= 4");
    std::vector<Colour> word;
    if (n == 6 || n == 7) {
        for (int i = 1; i <= n; ++i)
            word.push_back(i);
    } else if (n == 11) {
        word = {1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 6};
    } else {
        const int i = n % 4;
        for (int r = 0; r < i; ++r)
            word.insert(word.end(), {1, 2, 3, 4, 5});
        while (static_cast<int>(word.size()) < n)
            word.insert(word.end(), {1, 2, 3, 4});
    }
    return Colouring::compact(std::move(word));
}

Colouring path_lid_colouring(int n, Mode)
{
    if (n < 2)
        throw InputError("path_lid_colouring needs n >= 2");
    std::vector<Colour> word(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        word[i] = i % 4 + 1;
    return Colouring::compact(std::move(word));
}

Graph gen_cycle(int n)
{
    if (n < 3)
        throw InputError("gen_cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph gen_path(int n)
{
    if (n < 1)
        throw InputError("gen_path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph gen_complete(int k)
{
    if (k < 1)
        throw InputError("gen_complete needs k >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edge_list(k, edges);
}

int Lcg64::below(int bound)
{
    if (bound <= 0)
        throw InputError("Lcg64::below needs a positive bound");
    return static_cast<int>((next() >> 32) % static_cast<std::uint64_t>(bound));
}

Graph gen_random_connected(int n, int delta, std::uint64_t seed)
{
    if (n < 2)
        throw InputError("gen_random_connected needs n >= 2");
    if (delta < 2)
        throw InputError("gen_random_connected needs delta >= 2");
    Lcg64 rng(seed);
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::set<Edge> edges;
    for (int i = 1; i < n; ++i) {
        std::vector<int> eligible;
        for (int j = 0; j < i; ++j)
            if (degree[j] < delta)
                eligible.push_back(j);
        int j = eligible[rng.below(static_cast<int>(eligible.size()))];
        edges.emplace(j, i);
        ++degree[i];
        ++degree[j];
    }
    const int attempts = n * delta / 2;
    for (int t = 0; t < attempts; ++t) {
        int u = rng.below(n);
        int v = rng.below(n);
        if (u == v || degree[u] >= delta || degree[v] >= delta)
            continue;
        Edge e{std::min(u, v), std::max(u, v)};
        if (edges.insert(e).second) {
            ++degree[u];
            ++degree[v];
        }
    }
    std::vector<Edge> list(edges.begin(), edges.end());
    return Graph::from_edge_list(n, list);
}

Graph gen_ktree(int n, int k, std::uint64_t seed)
{
    if (k < 1)
        throw InputError("gen_ktree needs k >= 1");
    if (n < k + 1)
        throw InputError("gen_ktree needs n >= k + 1");
    Lcg64 rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            edges.emplace_back(i, j);
    std::vector<std::vector<Vertex>> cliques;
    for (int omit = 0; omit <= k; ++omit) {
        std::vector<Vertex> q;
        for (int i = 0; i <= k; ++i)
            if (i != omit)
                q.push_back(i);
        cliques.push_back(std::move(q));
    }
    for (int v = k + 1; v < n; ++v) {
        auto base = cliques[static_cast<std::size_t>(rng.below(static_cast<int>(cliques.size())))];
        for (Vertex u : base)
            edges.emplace_back(u, v);
        for (std::size_t p = 0; p < base.size(); ++p) {
            auto q = base;
            q[p] = v;
            cliques.push_back(std::move(q));
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph gen_projective_incidence(int q)
{
    if (q != 2 && q != 3)
        throw InputError("gen_projective_incidence supports q = 2 or 3");
    std::vector<std::array<int, 3>> vectors;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                std::array<int, 3> x{a, b, c};
                auto lead = std::ranges::find_if(x, [](int t) { return t != 0; });
                if (lead != x.end() && *lead == 1)
                    vectors.push_back(x);
            }
    const int count = static_cast<int>(vectors.size());
    std::vector<Edge> edges;
    for (int p = 0; p < count; ++p)
        for (int l = 0; l < count; ++l) {
            const auto &x = vectors[p];
            const auto &y = vectors[l];
            if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0)
                edges.emplace_back(p, count + l);
        }
    return Graph::from_edge_list(2 * count, edges);
}

} // namespace lidcol
