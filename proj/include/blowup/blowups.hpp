#pragma once

#include "blowup/ordered_graph.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace blowup {

/// k pairwise disjoint parts of a common size t, complete between parts.
struct Blowup {
    std::vector<std::vector<int>> parts;

    int k() const { return static_cast<int>(parts.size()); }
    int t() const { return parts.empty() ? 0 : static_cast<int>(parts.front().size()); }
};

/// Equal sizes, disjoint, in range, every cross-part pair an edge. Strict mode
/// also requires every part to be independent.
bool verify_blowup(const OrderedGraph & g, const Blowup & b, bool strict = false);

/// Same checks, but only pairs of parts joined by an edge of h must be complete.
bool verify_pattern_blowup(const OrderedGraph & g, const std::vector<std::vector<int>> & parts,
    const std::vector<std::pair<int, int>> & h);

struct BlowupSearchOptions {
    std::uint64_t node_budget = 50'000'000;
    /// Exact search is used while k*t stays at or below this.
    int exact_cap = 24;
    /// Restarts of the greedy mode.
    int restarts = 200;
    std::uint64_t seed = 1;
};

struct BlowupSearchResult {
    std::optional<Blowup> blowup;
    bool exhaustive = false; ///< the search tree was completed, so absence is a proof
    std::uint64_t nodes = 0;
};

BlowupSearchResult find_blowup(const OrderedGraph & g, int k, int t, const BlowupSearchOptions & opt = {});

struct BicliqueOptions {
    std::uint64_t node_budget = 50'000'000;
    /// Branch and bound below this vertex count, greedy with restarts above.
    int exact_cap = 80;
    int restarts = 200;
    std::uint64_t seed = 1;
};

/// Largest K_{t,t} found; exhaustive is set when branch and bound completed.
BlowupSearchResult find_balanced_biclique(const OrderedGraph & g, const BicliqueOptions & opt = {});

/// Maximum balanced biclique with one side in `left` and the other in `right`
/// (disjoint). Returns the number of nodes used and whether the search completed.
BlowupSearchResult max_biclique_between(const OrderedGraph & g, const std::vector<int> & left,
    const std::vector<int> & right, std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max());

/// Returns (X', Y') with X' in X, Y' in Y, |X'| = |Y'| and X' x Y' complete, or nullopt.
using BicliqueOracle = std::function<std::optional<std::pair<std::vector<int>, std::vector<int>>>(
    const OrderedGraph &, const std::vector<int> &, const std::vector<int> &)>;

/// Oracle backed by max_biclique_between.
BicliqueOracle exact_biclique_oracle(std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max());

struct AmplifyResult {
    std::optional<std::vector<std::vector<int>>> parts;
    std::optional<std::pair<int, int>> failed_edge;
    std::string message;
};

/// Processes the edges of h in order; after each oracle call the two parts are
/// replaced by the oracle's sides and every other part is cut to the new size.
/// Oracle answers are checked, and a bad or empty answer is reported as a failure
/// on that edge.
AmplifyResult amplify_blowup(const OrderedGraph & g, const std::vector<std::vector<int>> & parts,
    const std::vector<std::pair<int, int>> & h, const BicliqueOracle & oracle);

} // namespace blowup
