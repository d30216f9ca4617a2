#pragma once

#include "blowup/density.hpp"
#include "blowup/ordered_graph.hpp"
#include "blowup/paths.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace blowup {

using Point = std::vector<double>;

/// Normalized measure of {x in S^{h-1} : angle(x, pole) <= theta}, by adaptive
/// Gauss-Kronrod quadrature of sin^{h-2}. Throws InvalidInput for h < 2 or theta outside [0, pi].
double cap_measure(int h, double theta);

/// Same quantity through the regularized incomplete beta function.
double cap_fraction(int h, double theta);
/// Inverse of cap_fraction in theta.
double cap_angle(int h, double fraction);

/// Angular radius of the cap {x : |x - pole| <= d}.
double chord_to_angle(double d);

/// One cell of a zonal partition of S^{h-1}. ranges[0] is the polar angle
/// interval on S^{h-1}, ranges[1] the one on the next lower sphere, and the last
/// entry an azimuth interval on S^1. Full ranges ([0, pi] or [0, 2 pi]) are stored explicitly.
struct SphereCell {
    std::vector<std::pair<double, double>> ranges;
    double measure = 0.0;
    double diameter_bound = 2.0;
};

struct SpherePartition {
    int h = 0;
    std::vector<SphereCell> cells;
    double delta_target = 2.0;

    double max_diameter_bound() const;
    bool meets_target() const { return max_diameter_bound() <= delta_target; }

    /// Point whose angles sit at the measure midpoint of every range.
    Point center(std::size_t cell) const;
    /// Uniform point inside the cell.
    Point sample(std::size_t cell, std::mt19937_64 & rng) const;
    /// Index of the cell containing x (a nonzero vector, normalized internally).
    std::size_t locate(const Point & x) const;
};

/// Recursive zonal equal-measure partition: two polar caps plus collars, each
/// collar split by a partition of the lower-dimensional sphere.
/// Throws InvalidInput unless h >= 2 and 1 <= pieces <= 1e9.
SpherePartition partition_sphere(int h, std::int64_t pieces, double delta_target = 2.0);

double distance(const Point & a, const Point & b);

/// Largest distance between a point of A and a point of B. Throws on empty input.
double max_pairwise_distance(const std::vector<Point> & a, const std::vector<Point> & b);

/// True iff |p1-p2| >= 2-mu, |q1-q2| >= 2-mu and all |p_i - q_j| <= sqrt(2)-mu.
/// Throws InvalidInput on non-unit points or mu <= 0.
bool check_be_quadruple(const Point & p1, const Point & p2, const Point & q1, const Point & q2, double mu);

/// Smallest slack of the four-point configuration: negative iff check_be_quadruple holds.
double be_slack(const Point & p1, const Point & p2, const Point & q1, const Point & q2, double mu);

Point random_unit(int h, std::mt19937_64 & rng);

struct ConstructionSpec {
    int k = 4;
    int h = 9;
    int n = 2000;
    double eps = 0.5;
    std::uint64_t seed = 1;
    bool center_points = false;

    double mu() const;
    int groups() const { return k / 2; }
    int subparts() const { return k / 2; }
    int cells() const { return 2 * n / k; }
    /// Throws InvalidInput when k is odd or < 2, mu >= 1/4, or the sizes do not divide.
    void validate() const;
};

struct ConstructionGraph {
    ConstructionSpec spec;
    OrderedGraph graph;
    std::vector<int> group;   ///< per vertex, 0-based
    std::vector<int> subpart; ///< per vertex, 0-based
    std::vector<int> cell;    ///< partition cell the point was drawn from
    std::vector<Point> coords;

    /// 0 for non-edges, otherwise the edge type 1, 2 or 3.
    int edge_type(int u, int v) const;
};

ConstructionGraph build_construction(const ConstructionSpec & spec);

/// Recomputes every pair from coordinates and thresholds.
bool check_construction_edges(const ConstructionGraph & cg);

struct KernelScan {
    bool holds = true;
    std::uint64_t type2_edges = 0;
    std::uint64_t pairs_checked = 0;
    std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> violation;
};

/// No type-2 edges x1y1, x2y2 in different groups with all four cross pairs non-adjacent.
KernelScan scan_type2_kernel(const ConstructionGraph & cg);

struct VerifyConstructionOptions {
    std::uint64_t path_node_budget = 2'000'000'000;
    std::uint64_t density_samples = 200000;
    std::uint64_t biclique_node_budget = 20'000'000;
    int biclique_restarts = 20;
    std::uint64_t seed = 1;
    int workers = 1;
};

struct ConstructionReport {
    int path_length = 0;
    PathSearchResult path;
    KernelScan kernel;
    DensityEstimate complement_density;
    int biclique_size = 0;
    bool biclique_exhaustive = false;
};

ConstructionReport verify_construction(const ConstructionGraph & cg, const VerifyConstructionOptions & opt = {});

} // namespace blowup
