#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace blowup {

enum class Color : std::uint8_t { Blue, Red };

/// Red/blue coloring of the complete graph on the ordered vertex set 0..n-1.
/// Pairs not marked red are blue. Stored as one red-neighbour mask per vertex,
/// so n is limited to 64.
class OrderedColoring {
public:
    static constexpr int kMaxVertices = 64;

    OrderedColoring() = default;
    /// All-blue coloring on n vertices.
    explicit OrderedColoring(int n);

    static OrderedColoring all_red(int n);
    /// Builds from 0-based red pairs; throws InvalidInput on loops, duplicates or out-of-range ends.
    static OrderedColoring from_red_edges(int n, std::span<const std::pair<int, int>> red);

    int size() const { return n_; }

    bool is_red(int i, int j) const { return (rows_[static_cast<std::size_t>(i)] >> j) & 1U; }
    Color color(int i, int j) const { return is_red(i, j) ? Color::Red : Color::Blue; }
    void set_color(int i, int j, Color c);

    std::uint64_t red_row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    /// Blue neighbours of i (excluding i itself).
    std::uint64_t blue_row(int i) const { return vertex_mask() & ~rows_[static_cast<std::size_t>(i)] & ~(std::uint64_t{1} << i); }
    std::uint64_t vertex_mask() const { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

    /// Sorted list of red pairs (i < j).
    std::vector<std::pair<int, int>> red_edges() const;

    /// Coloring on n+1 vertices whose last vertex is red towards the vertices set in `red_to_previous`.
    OrderedColoring with_vertex(std::uint64_t red_to_previous) const;

    bool operator==(const OrderedColoring &) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Directed graph on 0..n-1 with sorted, duplicate-free arcs.
struct DependencyDigraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;

    bool has_arc(int from, int to) const;
    bool operator==(const DependencyDigraph &) const = default;
};

/// For every consecutive red pair (i, i+1) and every j outside it that is blue to
/// both, adds the arcs j->i and j->i+1.
DependencyDigraph dependency_digraph(const OrderedColoring & coloring);

/// Kahn elimination; a pair of opposite arcs counts as a cycle.
bool is_acyclic(const DependencyDigraph & digraph);

/// Acyclicity of the dependency digraph, computed on bit masks without
/// materialising the arc list.
bool is_admissible(const OrderedColoring & coloring);

/// Out-neighbour masks of the dependency digraph (n <= 64).
std::vector<std::uint64_t> dependency_out_masks(const OrderedColoring & coloring);

/// Topological order of the dependency digraph using smallest-index tie breaking,
/// or nullopt when it has a cycle.
std::optional<std::vector<int>> dependency_topological_order(const OrderedColoring & coloring);

struct SubsetColoring {
    std::vector<int> vertices; ///< strictly increasing indices into the parent
    OrderedColoring coloring;  ///< relabelled to 0..k-1
};

/// Restriction to a strictly increasing vertex list. Throws InvalidInput otherwise.
SubsetColoring induce(const OrderedColoring & coloring, std::span<const int> vertices);

/// Exact search for a k-subset whose induced coloring is admissible. Subsets are
/// visited in colexicographic order and verdicts are cached per induced color
/// pattern. Throws InvalidInput unless 1 <= k <= n.
std::optional<std::vector<int>> has_admissible_subset(const OrderedColoring & coloring, int k);

/// Admissibility verdicts indexed by the colex pair pattern of a k-vertex coloring:
/// bit (j*(j-1)/2 + i) is set when pair (i, j), i < j, is red.
class AdmissibilityTable {
public:
    static constexpr int kMaxK = 7;

    /// Shared, lazily built table; 1 <= k <= kMaxK.
    static const AdmissibilityTable & get(int k);

    int k() const { return k_; }
    bool admissible(std::uint32_t pattern) const { return verdict_[pattern] != 0; }

private:
    explicit AdmissibilityTable(int k);

    int k_;
    std::vector<std::uint8_t> verdict_;
};

/// Colex pattern of the coloring induced on the given vertex mask (popcount <= 8).
std::uint32_t induced_pattern(const OrderedColoring & coloring, std::uint64_t subset);

} // namespace blowup
