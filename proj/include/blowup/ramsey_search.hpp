#pragma once

#include "blowup/coloring.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace blowup {

struct SearchStats {
    std::uint64_t nodes = 0;          ///< extensions that survived the subset check
    std::uint64_t prunes = 0;         ///< extensions rejected because a new admissible subset appeared
    std::uint64_t subset_checks = 0;  ///< table lookups
    std::uint64_t frontier_items = 0;
    std::uint64_t frontier_completed = 0;
    double seconds = 0.0;

    SearchStats & operator+=(const SearchStats & o);
};

struct SearchOptions {
    /// Wall-clock budget; unlimited when empty.
    std::optional<std::chrono::duration<double>> budget;
    int workers = 1;
    /// Prefix length (in vertices) at which the search tree is cut into independent work items.
    int split_vertices = 5;
};

/// Pending work of an interrupted level verification. Every pending prefix is a
/// coloring on fewer than n vertices with no admissible k-subset.
struct FrontierSnapshot {
    int n = 0;
    int k = 0;
    std::uint64_t completed = 0;
    std::vector<OrderedColoring> pending;
};

enum class LevelStatus { Holds, Counterexample, Timeout };

std::string to_string(LevelStatus s);

struct LevelResult {
    LevelStatus status = LevelStatus::Holds;
    std::optional<OrderedColoring> counterexample;
    std::optional<FrontierSnapshot> frontier; ///< set on timeout
    SearchStats stats;
};

/// Decides whether every coloring on n vertices has an admissible k-subset.
/// Vertices are appended one at a time; a branch is dropped as soon as the
/// prefix contains an admissible k-subset, which every completion inherits.
/// Supports k <= AdmissibilityTable::kMaxK.
LevelResult verify_level(int n, int k, const SearchOptions & options = {});

/// Continues a level verification from a snapshot.
LevelResult resume_level(const FrontierSnapshot & snapshot, const SearchOptions & options = {});

struct RamseyResult {
    int k = 0;
    std::optional<int> f_value;           ///< empty on timeout
    std::optional<OrderedColoring> witness; ///< coloring on f_value-1 vertices, when f_value > k
    int lower_bound = 0;                  ///< f(k) >= lower_bound is certified by a found counterexample
    std::vector<int> levels_with_counterexample;
    std::optional<FrontierSnapshot> frontier;
    SearchStats stats;
};

/// Smallest N >= k for which verify_level(N, k) holds.
RamseyResult compute_f(int k, const SearchOptions & options = {});

struct WitnessCertificate {
    int k = 0;
    int n = 0;
    OrderedColoring coloring;
    std::string checked_at;
    std::string checker_version;
};

inline constexpr const char * kCheckerVersion = "blowup-checker/1";

/// Builds a certificate stamped with the current UTC time.
WitnessCertificate make_certificate(int k, const OrderedColoring & coloring);

/// True iff no k-subset of the stored coloring is admissible. Uses the arc-list
/// digraph and Kahn acyclicity route, independently of the search tables.
/// Throws InvalidInput on inconsistent n/k.
bool check_certificate(const WitnessCertificate & cert);

struct BlueLayerDecomposition {
    std::vector<int> sigma;               ///< vertices on the longest increasing blue path starting at v
    std::vector<std::vector<int>> layers; ///< layers[t-1] = { v : sigma[v] = t }
};

BlueLayerDecomposition blue_layers(const OrderedColoring & coloring);

/// Constructive admissible k-subset: a blue increasing path on k vertices, or
/// k+1-t pairwise red vertices of a layer S_t followed by a blue path of t
/// vertices from the last of them. Exists whenever n >= (k*k-k+2)/2.
std::optional<std::vector<int>> blue_layer_subset(const OrderedColoring & coloring, int k);

} // namespace blowup
