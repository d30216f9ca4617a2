#pragma once

#include "blowup/blowups.hpp"
#include "blowup/ordered_graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace blowup {

/// Members are subsets of 0..n-1.
struct SetSystem {
    int n = 0;
    std::vector<Bitset> members;

    static SetSystem neighborhoods(const OrderedGraph & g);
    /// Throws InvalidInput on members of the wrong width.
    void validate() const;
};

inline constexpr int kDefaultShatterCap = 20;

/// Every subset of s is a trace of some member. Throws InvalidInput if |s| > cap
/// or s has repeated or out-of-range elements.
bool is_shattered(const SetSystem & f, std::span<const int> s, int cap = kDefaultShatterCap);

struct VcDimension {
    int dimension = 0;
    bool cap_hit = false;        ///< a set of size cap is shattered, so the true value is >= cap
    std::vector<int> witness;    ///< a shattered set of size `dimension`
};

/// Exact VC dimension up to cap. Shattered sets are grown in increasing element
/// order, extending only by elements that form a shattered pair with every
/// element already chosen.
VcDimension vc_dimension(const SetSystem & f, int cap);

struct PackingResult {
    int s = 0;
    std::vector<int> centers; ///< member indices
};

/// Greedy s-separated subfamily in member order (maximal by construction).
PackingResult haussler_packing(const SetSystem & f, int s);

struct PackingCheck {
    bool separated = false;
    bool maximal = false;
    bool ok() const { return separated && maximal; }
};

PackingCheck check_packing(const SetSystem & f, const PackingResult & r);

struct PackingBicliqueOptions {
    std::optional<int> d;            ///< VC dimension; computed when empty
    std::optional<int> q;            ///< biclique size; default floor(q_scale * n^{1/(d+1)})
    double q_scale = 0.25;
    int vc_cap = 4;
};

struct PackingBiclique {
    std::optional<Blowup> biclique;
    int d = 0;
    int q = 0;
    int s = 0;
    int trimmed_size = 0;
    int centers = 0;
    int part_size = 0;     ///< largest part of the center partition
    int common = 0;        ///< common neighbourhood of the chosen q vertices
    std::string message;
};

/// Proposition 7.2 pipeline. Throws PreconditionFailed when the density is below c
/// or the degree trim empties the graph; a too small part or common
/// neighbourhood is reported in the result.
PackingBiclique biclique_via_packing(const OrderedGraph & g, double c, const PackingBicliqueOptions & opt = {});

struct Vc1Report {
    std::uint64_t triangles = 0;
    std::uint64_t triangle_violations = 0;
    bool triangles_exhaustive = true;
    std::uint64_t p5_violations = 0;   ///< non-adjacent pairs (y2, y4) completing a bad P5
    std::optional<std::vector<int>> triangle_example; ///< x1, x2, x3, v
    std::optional<std::vector<int>> p5_example;       ///< y1..y5
    std::optional<std::pair<int, int>> shattered_pair;

    bool clean() const { return triangle_violations == 0 && p5_violations == 0; }
};

/// Exhaustive check of the two VC-1 structural facts. The P5 condition is decided
/// per non-adjacent pair: a bad P5 on (y2, y4) exists iff they have a common
/// neighbour and neither neighbourhood contains the other.
Vc1Report vc1_checks(const OrderedGraph & g, std::uint64_t triangle_budget = 100'000'000);

enum class Vc1Case { Auto, Dense, Triple };

struct DenseVc1Options {
    Vc1Case mode = Vc1Case::Auto;
    double dense_threshold = 0.99;   ///< Auto picks the dense case at or above this density
    double part_fraction = 0.1;      ///< m = part_fraction * n for the triple search
    double gamma = 0.1;              ///< (i,j) needs density >= 1-gamma, (j,k) <= gamma
    int attempts = 2000;
    std::uint64_t seed = 1;
    bool check_vc1 = true;
};

struct DenseVc1Result {
    Blowup biclique;
    Vc1Case used = Vc1Case::Dense;
    int trimmed_size = 0;   ///< dense case
    int classes = 0;        ///< dense case, parts of the complete multipartite graph
    int m = 0;              ///< triple case
    int attempts = 0;
    std::uint64_t laminar_pairs = 0;
};

/// Theorem 1.12 extraction for VC-dimension 1. Throws PreconditionFailed on low
/// density, a vc1_checks violation or an exhausted triple search.
DenseVc1Result dense_vc1_biclique(const OrderedGraph & g, double c, const DenseVc1Options & opt = {});

/// Bipartite half graph on sides 0..n/2-1 and n/2..n-1: a_i ~ b_j iff i + j >= threshold,
/// threshold chosen so that the edge density over C(n,2) is about `density` (<= 0.5).
OrderedGraph half_graph(int n, double density);

/// Complete multipartite graph with the given part sizes, parts consecutive.
OrderedGraph complete_multipartite(const std::vector<int> & sizes);

struct Vc2Example {
    OrderedGraph graph;      ///< complement of the core, both sides cliques
    OrderedGraph core;       ///< C4-free bipartite graph
    std::size_t removed = 0;
    bool c4_free = false;
    double density = 0.0;
    VcDimension vc;
    int biclique = 0;
    bool biclique_exhaustive = false;
};

/// C4-free random bipartite core at edge probability n^{-2/3}; the lexicographically
/// first C4 loses its lexicographically last edge until none remain.
Vc2Example make_vc2_no_b2_example(int n, std::uint64_t seed, const BicliqueOptions & biclique = {});

bool is_c4_free_bipartite(const OrderedGraph & core, int left);

} // namespace blowup
