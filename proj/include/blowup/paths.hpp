#pragma once

#include "blowup/coloring.hpp"
#include "blowup/ordered_graph.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace blowup {

enum class SearchStatus { Found, None, Timeout };

std::string to_string(SearchStatus s);

struct PathSearchResult {
    SearchStatus status = SearchStatus::None;
    std::vector<int> vertices; ///< increasing, set when Found
    std::uint64_t nodes = 0;
};

/// v0 < v1 < ... with consecutive vertices adjacent and every other pair non-adjacent.
bool is_induced_monotone_path(const OrderedGraph & g, std::span<const int> vertices);

/// Maximal runs [first, last] of consecutive vertices that induce cliques, covering 0..n-1.
std::vector<std::pair<int, int>> clique_intervals(const OrderedGraph & g);

/// Exhaustive backtracking for an induced monotone path on m vertices.
///
/// Candidates for the next vertex are N(last) above last, minus the
/// neighbourhoods of all earlier path vertices. A branch is cut when the
/// remaining clique intervals cannot hold the missing vertices: an induced path
/// meets a clique in at most two vertices. `None` is only reported after the
/// tree is exhausted; `Timeout` once more than node_budget nodes were expanded.
PathSearchResult find_induced_monotone_path(const OrderedGraph & g, int m,
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max());

/// Greedy realisation of the pair-by-pair embedding of an induced monotone path
/// x_0 < ... < x_{2k-1} with x_j in candidate_sets[j], guided by an admissible
/// coloring on k vertices. Consecutive pairs of the coloring are embedded in the
/// order in which they first appear in a topological order of its dependency
/// digraph; blue pairs take a vertex of maximum degree into the partner set, red
/// pairs any edge. The ends x_0 and x_{2k-1} are placed last. The returned path
/// is always verified; nullopt means the greedy choices got stuck.
/// Throws InvalidInput when the coloring is not admissible or the sets are not
/// ordered and disjoint.
std::optional<std::vector<int>> embed_monotone_path(const OrderedGraph & g,
    const std::vector<std::vector<int>> & candidate_sets, const OrderedColoring & pattern);

} // namespace blowup
