#pragma once

#include "lidcol/colouring.hpp"
#include "lidcol/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace lidcol {

/// A word such as [124341232][42](1232)^k: blocks of colours, each taken
/// either once (optional blocks) or a given number of times.
struct WordPattern {
    struct Block {
        std::vector<Colour> colours;
        int repeat = 1;
    };
    std::vector<Block> blocks;

    std::vector<Colour> expand() const;
    int length() const;
};

/// Optimal lid word for C_n, n >= 4 and n not 5 or 7. Throws InputError
/// for lengths the grammar cannot produce.
WordPattern lid_cycle_word(int n);

/// chi_lid(C_n). n = 3 is the triangle (closed twins, value 3).
int lid_cycle_value(int n);
/// lid-colouring of C_n (vertex i coloured by position i) with exactly
/// lid_cycle_value(n) colours.
Colouring cycle_lid_colouring(int n);

int slid_cycle_value(int n);
Colouring cycle_slid_colouring(int n);

/// Colours 1,2,3,4 repeated along the path 0-1-...-(n-1). Valid in both
/// modes.
Colouring path_lid_colouring(int n, Mode mode);

Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_complete(int k);

/// 64-bit LCG, state' = state * 6364136223846793005 + 1442695040888963407
/// (mod 2^64), seeded with the user seed. below(b) returns
/// (state' >> 32) % b.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    int below(int bound);

private:
    // Modulus 0 selects arithmetic mod 2^64.
    std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                    1442695040888963407ULL, 0>
        engine_;
};

/// Random spanning tree (vertex i attaches to a uniformly drawn earlier
/// vertex that still has degree < delta), then n * delta / 2 attempts to
/// add an edge between two drawn vertices, kept when both have spare
/// degree and are not yet adjacent.
Graph gen_random_connected(int n, int delta, std::uint64_t seed);

/// k-tree: K_{k+1}, then each new vertex joins a drawn k-clique.
Graph gen_ktree(int n, int k, std::uint64_t seed);

/// Point-line incidence graph of PG(2,q), q in {2,3}. Points are 0..N-1
/// and lines N..2N-1 with N = q^2+q+1, both listed in lexicographic order
/// of their normalised coordinate vectors.
Graph gen_projective_incidence(int q);

} // namespace lidcol
