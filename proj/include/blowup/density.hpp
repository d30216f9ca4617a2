#pragma once

#include "blowup/ordered_graph.hpp"

#include <cstdint>

namespace blowup {

enum class DensityMode { Exact, Sample };

struct DensityOptions {
    DensityMode mode = DensityMode::Exact;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
    /// Exact counting is refused when C(n, r) exceeds this.
    double exact_cap = 5e7;
};

struct DensityEstimate {
    int r = 0;
    double point = 0.0;
    std::uint64_t samples = 0;
    double ci_halfwidth = 0.0; ///< Hoeffding, 99%
    bool exact = false;
    std::uint64_t seed = 0;
};

double binomial(int n, int r);

/// Number of r-cliques, by bitset branching.
std::uint64_t count_cliques(const OrderedGraph & g, int r);

/// Throws InvalidInput unless 1 <= r <= n, and when exact mode is asked above the cap.
/// Sampling is split into fixed chunks with derived seeds, so the estimate does
/// not depend on the worker count.
DensityEstimate clique_density(const OrderedGraph & g, int r, const DensityOptions & opt = {});

/// 99% two-sided Hoeffding half-width for a mean of N values in [0, 1].
double hoeffding_halfwidth(std::uint64_t n);

} // namespace blowup
