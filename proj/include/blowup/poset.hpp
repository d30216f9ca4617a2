#pragma once

#include "blowup/bitset.hpp"
#include "blowup/blowups.hpp"
#include "blowup/ordered_graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace blowup {

/// Strict partial order on 0..n-1, stored transitively closed as up/down bitsets.
class Poset {
public:
    Poset() = default;
    explicit Poset(int n);

    /// a < b for every listed (a, b); the closure is taken. Throws InvalidInput on
    /// cycles (including a < a) and out-of-range elements.
    static Poset from_relations(int n, std::span<const std::pair<int, int>> relations);
    static Poset total_order(int n);
    static Poset antichain(int n) { return Poset(n); }

    int size() const { return static_cast<int>(up_.size()); }
    bool less(int a, int b) const { return up_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
    const Bitset & up(int a) const { return up_[static_cast<std::size_t>(a)]; }
    const Bitset & down(int a) const { return down_[static_cast<std::size_t>(a)]; }

    /// All closed pairs a < b, sorted.
    std::vector<std::pair<int, int>> relations() const;
    std::size_t relation_count() const;

    bool operator==(const Poset &) const = default;

private:
    std::vector<Bitset> up_, down_;
};

/// Kahn order with smallest-index tie breaking.
std::vector<int> linear_extension(const Poset & p);

struct OrderedPosetGraph {
    OrderedGraph graph;
    std::vector<int> order; ///< order[i] = element placed at vertex i
};

/// Edge iff incomparable; vertices follow linear_extension.
OrderedPosetGraph incomparability_graph(const Poset & p);
/// Edge iff comparable; vertices follow linear_extension.
OrderedPosetGraph comparability_graph(const Poset & p);
/// Same, with vertex v = element v.
OrderedGraph comparability_graph_by_element(const Poset & p);

/// Longest chain, increasing.
std::vector<int> longest_chain(const Poset & p);
std::vector<int> longest_chain(const Poset & p, std::span<const int> subset);

/// Mirsky layers of a subset: layers[i] = elements whose longest chain ending there has i+1 elements.
std::vector<std::vector<int>> height_layers(const Poset & p, std::span<const int> subset);

Poset random_dag_poset(int n, double p, std::uint64_t seed);
/// a < b iff a precedes b in two independent random permutations.
Poset random_perm2_poset(int n, std::uint64_t seed);
/// Consecutive antichain blocks of the given sizes, totally ordered block to block.
Poset block_poset(const std::vector<int> & sizes);

/// Blocks with blocks[u] < blocks[u+1] elementwise when ascending.
struct ChainBlocks {
    std::vector<std::vector<int>> blocks;
    bool ascending = true;
};

struct Dichotomy {
    enum class Kind { Chain, Antichain, Neither };
    Kind kind = Kind::Neither;
    ChainBlocks chain;                       ///< l blocks of t when Chain
    std::vector<std::vector<int>> antichain; ///< l pairwise incomparable sets of q when Antichain
    std::vector<int> largest_layer;          ///< the antichain that was split
};

/// A chain of l*t elements cut into l consecutive blocks, else l disjoint sets of
/// q taken from the largest Mirsky layer, else Neither. Throws InvalidInput unless l, t, q >= 1.
Dichotomy chain_or_antichain(const Poset & p, std::span<const int> subset, int l, int t, int q);
Dichotomy chain_or_antichain(const Poset & p, int l, int t, int q);

enum class PairRelation { Below, Above, Incomparable, Mixed };
/// Below: every x < every y; Above: every y < every x; Incomparable: no comparable pair.
PairRelation relate(const Poset & p, const std::vector<int> & x, const std::vector<int> & y);

struct PartitionParams {
    int k = 3;
    double eps = 0.5;
    std::optional<int> t, q, s, l;
};

/// Defaults: s = 10/eps, l = 10k/eps, q = eps^4 n/(1e5 k^2 log n), t = eps^7 n/(1e11 k^5), each at least 1.
struct ResolvedParams {
    int k, s, l, t, q;
    double eps;
};
ResolvedParams resolve_params(const PartitionParams & params, int n);

struct Partition {
    std::vector<int> v0;
    std::vector<std::vector<int>> parts;
    std::vector<int> interval;            ///< interval index of each part
    std::vector<int> group;               ///< chain index j inside the interval
    std::vector<int> level;               ///< block index u inside the chain, 0-based ascending
    std::vector<std::pair<int, int>> inhomogeneous; ///< part index pairs a < b
    int m0 = 0;                           ///< chain groups wanted per interval
    std::vector<int> achieved;            ///< chain groups extracted per interval
    bool v0_exceeds = false;              ///< |V0| > eps n after graceful degradation

    double inhomogeneous_fraction() const;
};

struct PartitionResult {
    ResolvedParams params{};
    std::optional<Partition> partition;
    std::optional<std::vector<std::vector<int>>> witness; ///< k sets of q, pairwise incomparable across
};

PartitionResult incomparability_partition(const Poset & p, const PartitionParams & params);

struct PartitionCheck {
    bool covers = false;       ///< V0 and parts are disjoint and cover every element
    bool equal_parts = false;
    bool v0_small = false;
    bool list_exact = false;   ///< listed pairs are exactly the inhomogeneous ones
    bool fraction_ok = false;
    bool witness_ok = false;
    bool ok() const;
};
PartitionCheck check_partition_result(const Poset & p, const PartitionResult & r);

struct Claim52Audit {
    std::vector<std::pair<int, int>> inhomogeneous; ///< (u, u'), 0-based levels
    bool count_ok = true;        ///< at most 2l - 1
    bool distinct_sums = true;   ///< all u + u' distinct
    bool ok() const { return count_ok && distinct_sums; }
};

/// blocks_low must lie entirely before blocks_high in the linear extension given by
/// position[]; throws PreconditionFailed otherwise.
Claim52Audit claim52_audit(const Poset & p, const ChainBlocks & blocks_low, const ChainBlocks & blocks_high,
    const std::vector<int> & position);

/// Audits every pair of chain groups from different intervals of a partition.
std::vector<Claim52Audit> audit_partition(const Poset & p, const Partition & part);

struct MultiOrder {
    std::vector<Poset> orders;

    int size() const { return orders.empty() ? 0 : orders.front().size(); }
    int r() const { return static_cast<int>(orders.size()); }
    /// Throws InvalidInput when the orders disagree on n.
    void validate() const;
    /// Union of the comparability graphs, vertex v = element v.
    OrderedGraph union_graph() const;
};

struct PVectors {
    std::vector<std::vector<int>> p; ///< p[x][i] for the x-th clique vertex
    bool injective = true;
};

/// Longest chain starting at each clique vertex inside the clique, per order.
/// Throws InvalidInput if the vertices are not a clique of the union graph.
PVectors p_vector(const std::vector<int> & clique, const MultiOrder & m);

struct R1Blowup {
    std::vector<int> pivots;                ///< x_2 < x_4 < ... < x_{2h-2}
    std::vector<std::vector<int>> intervals; ///< D_1 .. D_h
    Blowup blowup;                          ///< intervals cut to the smallest size
};

/// Pivot tuple maximizing |D_1| * ... * |D_h|; nullopt when there is no (2h-1)-chain.
std::optional<R1Blowup> find_blowup_r1(const Poset & p, int h);

enum class CliqueSource { Exact, Sampled };

struct MultiBlowupOptions {
    CliqueSource source = CliqueSource::Exact;
    std::uint64_t max_cliques = 1'000'000; ///< exact enumeration stops here
    std::uint64_t samples = 2000;          ///< random greedy cliques when sampled
    std::uint64_t seed = 1;
};

struct MultiBlowupResult {
    int order = -1;
    std::optional<R1Blowup> blowup;
    std::vector<std::uint64_t> tallies;
    std::uint64_t cliques = 0;
    std::uint64_t injectivity_violations = 0;
};

/// k = (2h-2)^r + 1. Throws PreconditionFailed when no k-clique is found.
MultiBlowupResult find_blowup_multi(const MultiOrder & m, int h, const MultiBlowupOptions & opt = {});

/// Cross pairs of different parts comparable in p.
bool verify_comparability_blowup(const Poset & p, const Blowup & b);

} // namespace blowup
