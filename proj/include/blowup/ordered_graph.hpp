#pragma once

#include "blowup/bitset.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace blowup {

/// Simple graph on the ordered vertex set 0..n-1 with bitset adjacency rows.
class OrderedGraph {
public:
    OrderedGraph() = default;
    explicit OrderedGraph(int n);

    /// Throws InvalidInput on loops or out-of-range endpoints; duplicates are merged.
    static OrderedGraph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static OrderedGraph complete(int n);

    int size() const { return static_cast<int>(rows_.size()); }

    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    const Bitset & neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(rows_[static_cast<std::size_t>(v)].count()); }
    std::size_t edge_count() const;
    /// Edge count over C(n, 2); 0 for n < 2.
    double density() const;

    /// Sorted list of edges (u < v).
    std::vector<std::pair<int, int>> edges() const;

    /// Subgraph on the given vertices, relabelled to 0..m-1 in the given order.
    OrderedGraph induced(std::span<const int> vertices) const;

    Bitset empty_set() const { return Bitset(static_cast<std::size_t>(size())); }
    Bitset vertex_set() const { return Bitset::full(static_cast<std::size_t>(size())); }

    bool operator==(const OrderedGraph &) const = default;

private:
    std::vector<Bitset> rows_;
};

/// Same vertex order, complementary edge set.
OrderedGraph complement(const OrderedGraph & g);

Bitset to_bitset(std::span<const int> vertices, int n);

} // namespace blowup
