#include "blowup/sphere.hpp"

#include "blowup/blowups.hpp"
#include "blowup/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace blowup {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dim(int h)
{
    if (h < 2) throw InvalidInput("sphere dimension must satisfy h >= 2");
}

// Measure fraction of the polar range [a, b] on S^{d-1}; for d == 2 it is an azimuth range.
double range_fraction(int d, double a, double b)
{
    if (d == 2) return (b - a) / (2 * kPi);
    return cap_fraction(d, b) - cap_fraction(d, a);
}

struct Built {
    std::vector<std::vector<std::pair<double, double>>> ranges;
    std::vector<double> diameter;
};

Built build(int h, std::int64_t pieces)
{
    Built out;
    if (h == 2) {
        const double w = 2 * kPi / static_cast<double>(pieces);
        for (std::int64_t i = 0; i < pieces; ++i) {
            out.ranges.push_back({{w * static_cast<double>(i), i + 1 == pieces ? 2 * kPi : w * static_cast<double>(i + 1)}});
            out.diameter.push_back(w >= kPi ? 2.0 : 2 * std::sin(w / 2));
        }
        return out;
    }
    auto full_lower = [&] {
        std::vector<std::pair<double, double>> r;
        for (int d = h - 1; d >= 3; --d) r.emplace_back(0.0, kPi);
        r.emplace_back(0.0, 2 * kPi);
        return r;
    };
    auto add = [&](double a, double b, const std::vector<std::pair<double, double>> & lower, double d_low) {
        std::vector<std::pair<double, double>> r{{a, b}};
        r.insert(r.end(), lower.begin(), lower.end());
        out.ranges.push_back(std::move(r));
        const double max_sin = (a <= kPi / 2 && b >= kPi / 2) ? 1.0 : std::max(std::sin(a), std::sin(b));
        out.diameter.push_back(std::min(2.0, 2 * std::sin((b - a) / 2) + max_sin * d_low));
    };
    if (pieces == 1) {
        add(0.0, kPi, full_lower(), 2.0);
        return out;
    }
    if (pieces == 2) {
        add(0.0, kPi / 2, full_lower(), 2.0);
        add(kPi / 2, kPi, full_lower(), 2.0);
        return out;
    }
    const double n = static_cast<double>(pieces);
    const double cap = cap_angle(h, 1.0 / n);
    auto add_cap = [&](double a, double b) {
        add(a, b, full_lower(), 2.0);
        out.diameter.back() = cap <= kPi / 2 ? 2 * std::sin(cap) : 2.0;
    };
    add_cap(0.0, cap);

    const double area = 2 * std::pow(kPi, h / 2.0) / std::tgamma(h / 2.0);
    const double ideal_angle = std::pow(area / n, 1.0 / (h - 1));
    const int collars = std::max(1, static_cast<int>(std::lround((kPi - 2 * cap) / ideal_angle)));
    const double step = (kPi - 2 * cap) / collars;
    std::vector<std::int64_t> counts;
    double carry = 0.0;
    std::int64_t assigned = 0;
    for (int i = 0; i < collars; ++i) {
        const double ideal = n * range_fraction(h, cap + step * i, cap + step * (i + 1));
        std::int64_t m = std::llround(ideal + carry);
        if (i + 1 == collars) m = pieces - 2 - assigned;
        carry += ideal - static_cast<double>(m);
        m = std::max<std::int64_t>(m, 0);
        counts.push_back(m);
        assigned += m;
    }
    if (assigned != pieces - 2) throw InvariantViolation("collar counts do not add up");

    std::int64_t cumulative = 1;
    double lo = cap;
    for (std::int64_t m : counts) {
        if (m == 0) continue;
        cumulative += m;
        const double hi = cumulative == pieces - 1 ? kPi - cap : cap_angle(h, static_cast<double>(cumulative) / n);
        Built lower = build(h - 1, m);
        for (std::size_t c = 0; c < lower.ranges.size(); ++c) add(lo, hi, lower.ranges[c], lower.diameter[c]);
        lo = hi;
    }
    add_cap(kPi - cap, kPi);
    return out;
}

// Hyperspherical angles of x, matching the parametrisation used for cells.
std::vector<double> angles_of(const Point & x)
{
    const int h = static_cast<int>(x.size());
    std::vector<double> tail(static_cast<std::size_t>(h + 1), 0.0);
    for (int j = h - 1; j >= 0; --j) tail[static_cast<std::size_t>(j)] = tail[static_cast<std::size_t>(j + 1)] + x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    std::vector<double> a;
    for (int j = 0; j + 2 < h; ++j) a.push_back(std::atan2(std::sqrt(tail[static_cast<std::size_t>(j + 1)]), x[static_cast<std::size_t>(j)]));
    double phi = std::atan2(x[static_cast<std::size_t>(h - 1)], x[static_cast<std::size_t>(h - 2)]);
    if (phi < 0) phi += 2 * kPi;
    a.push_back(phi);
    return a;
}

Point point_from_angles(const std::vector<double> & a)
{
    const std::size_t levels = a.size();
    Point x(levels + 1);
    double s = 1.0;
    for (std::size_t j = 0; j + 1 < levels; ++j) {
        x[j] = s * std::cos(a[j]);
        s *= std::sin(a[j]);
    }
    x[levels - 1] = s * std::cos(a[levels - 1]);
    x[levels] = s * std::sin(a[levels - 1]);
    return x;
}

double norm(const Point & p)
{
    double s = 0.0;
    for (double v : p) s += v * v;
    return std::sqrt(s);
}

void require_unit(const Point & p)
{
    if (std::abs(norm(p) - 1.0) > 1e-9) throw InvalidInput("point is not on the unit sphere");
}

} // namespace

double cap_fraction(int h, double theta)
{
    check_dim(h);
    if (!(theta >= 0 && theta <= kPi)) throw InvalidInput("angle must lie in [0, pi]");
    if (h == 2) return theta / kPi;
    const double a = (h - 1) / 2.0;
    const bool upper = theta > kPi / 2;
    const double t = upper ? kPi - theta : theta;
    const double s = std::sin(t), c = std::cos(t);
    // I_{sin^2 t}(a, 1/2), evaluated on whichever argument keeps precision
    const double half = s * s <= 0.5 ? 0.5 * boost::math::ibeta(a, 0.5, s * s) : 0.5 * boost::math::ibetac(0.5, a, c * c);
    return upper ? 1.0 - half : half;
}

double cap_angle(int h, double fraction)
{
    check_dim(h);
    if (!(fraction >= 0 && fraction <= 1)) throw InvalidInput("fraction must lie in [0, 1]");
    if (h == 2) return fraction * kPi;
    if (fraction == 0) return 0.0;
    if (fraction == 1) return kPi;
    const bool upper = fraction > 0.5;
    const double p = 2 * (upper ? 1.0 - fraction : fraction);
    double y = 0.0;
    const double x = boost::math::ibeta_inv((h - 1) / 2.0, 0.5, p, &y);
    const double t = std::atan2(std::sqrt(x), std::sqrt(y));
    return upper ? kPi - t : t;
}

double cap_measure(int h, double theta)
{
    check_dim(h);
    if (!(theta >= 0 && theta <= kPi)) throw InvalidInput("angle must lie in [0, pi]");
    if (h == 2) return theta / kPi;
    using boost::math::quadrature::gauss_kronrod;
    auto f = [h](double x) { return std::pow(std::sin(x), h - 2); };
    const double total = boost::math::beta((h - 1) / 2.0, 0.5);
    double sum = gauss_kronrod<double, 61>::integrate(f, 0.0, std::min(theta, kPi / 2), 15, 1e-11);
    if (theta > kPi / 2) sum += gauss_kronrod<double, 61>::integrate(f, kPi / 2, theta, 15, 1e-11);
    return std::clamp(sum / total, 0.0, 1.0);
}

double chord_to_angle(double d)
{
    if (d <= 0) return 0.0;
    if (d >= 2) return kPi;
    return 2 * std::asin(d / 2);
}

double SpherePartition::max_diameter_bound() const
{
    double m = 0.0;
    for (const auto & c : cells) m = std::max(m, c.diameter_bound);
    return m;
}

Point SpherePartition::center(std::size_t cell) const
{
    const auto & r = cells.at(cell).ranges;
    std::vector<double> a;
    for (std::size_t j = 0; j < r.size(); ++j) {
        const int d = h - static_cast<int>(j);
        if (d == 2) a.push_back((r[j].first + r[j].second) / 2);
        else a.push_back(cap_angle(d, (cap_fraction(d, r[j].first) + cap_fraction(d, r[j].second)) / 2));
    }
    return point_from_angles(a);
}

Point SpherePartition::sample(std::size_t cell, std::mt19937_64 & rng) const
{
    const auto & r = cells.at(cell).ranges;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> a;
    for (std::size_t j = 0; j < r.size(); ++j) {
        const int d = h - static_cast<int>(j);
        const double w = u(rng);
        if (d == 2) {
            a.push_back(r[j].first + w * (r[j].second - r[j].first));
        } else {
            const double lo = cap_fraction(d, r[j].first), hi = cap_fraction(d, r[j].second);
            a.push_back(std::clamp(cap_angle(d, std::clamp(lo + w * (hi - lo), 0.0, 1.0)), r[j].first, r[j].second));
        }
    }
    return point_from_angles(a);
}

std::size_t SpherePartition::locate(const Point & x) const
{
    if (static_cast<int>(x.size()) != h) throw InvalidInput("point dimension mismatch");
    const auto a = angles_of(x);
    std::size_t best = 0;
    double best_excess = 1e300;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        double excess = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            const auto [lo, hi] = cells[c].ranges[j];
            excess = std::max({excess, lo - a[j], a[j] - hi});
        }
        if (excess <= 0) return c;
        if (excess < best_excess) {
            best_excess = excess;
            best = c;
        }
    }
    return best;
}

SpherePartition partition_sphere(int h, std::int64_t pieces, double delta_target)
{
    check_dim(h);
    if (pieces < 1 || pieces > 1'000'000'000) throw InvalidInput("number of pieces must lie in [1, 1e9]");
    Built b = build(h, pieces);
    SpherePartition p;
    p.h = h;
    p.delta_target = delta_target;
    for (std::size_t c = 0; c < b.ranges.size(); ++c) {
        SphereCell cell;
        cell.ranges = std::move(b.ranges[c]);
        cell.diameter_bound = b.diameter[c];
        cell.measure = 1.0;
        for (std::size_t j = 0; j < cell.ranges.size(); ++j)
            cell.measure *= range_fraction(h - static_cast<int>(j), cell.ranges[j].first, cell.ranges[j].second);
        p.cells.push_back(std::move(cell));
    }
    if (static_cast<std::int64_t>(p.cells.size()) != pieces) throw InvariantViolation("partition has the wrong number of cells");
    return p;
}

double distance(const Point & a, const Point & b)
{
    if (a.size() != b.size()) throw InvalidInput("point dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

double max_pairwise_distance(const std::vector<Point> & a, const std::vector<Point> & b)
{
    if (a.empty() || b.empty()) throw InvalidInput("point sets must be nonempty");
    double m = 0.0;
    for (const auto & x : a)
        for (const auto & y : b) m = std::max(m, distance(x, y));
    return m;
}

double be_slack(const Point & p1, const Point & p2, const Point & q1, const Point & q2, double mu)
{
    const double far = 2 - mu, near = std::sqrt(2.0) - mu;
    double slack = std::max(far - distance(p1, p2), far - distance(q1, q2));
    for (const Point * p : {&p1, &p2})
        for (const Point * q : {&q1, &q2}) slack = std::max(slack, distance(*p, *q) - near);
    return slack;
}

bool check_be_quadruple(const Point & p1, const Point & p2, const Point & q1, const Point & q2, double mu)
{
    if (!(mu > 0)) throw InvalidInput("mu must be positive");
    for (const Point * p : {&p1, &p2, &q1, &q2}) require_unit(*p);
    return be_slack(p1, p2, q1, q2, mu) <= 0;
}

Point random_unit(int h, std::mt19937_64 & rng)
{
    std::normal_distribution<double> g;
    Point p(static_cast<std::size_t>(h));
    double s = 0.0;
    do {
        for (auto & v : p) v = g(rng);
        s = norm(p);
    } while (s < 1e-12);
    for (auto & v : p) v /= s;
    return p;
}

double ConstructionSpec::mu() const { return eps / std::sqrt(static_cast<double>(h)); }

void ConstructionSpec::validate() const
{
    if (k < 2 || k % 2 != 0) throw InvalidInput("construction needs an even k >= 2");
    if (h < 2) throw InvalidInput("construction needs h >= 2");
    if (!(eps > 0)) throw InvalidInput("eps must be positive");
    if (!(mu() < 0.25)) throw InvalidInput("mu = eps/sqrt(h) must be below 1/4");
    if (n < k || n % k != 0) throw InvalidInput("n must be a positive multiple of k");
    if (cells() % subparts() != 0) throw InvalidInput("2n/k must be divisible by k/2");
}

int ConstructionGraph::edge_type(int u, int v) const
{
    if (u == v || !graph.adjacent(u, v)) return 0;
    const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
    if (group[su] != group[sv]) return 3;
    return subpart[su] == subpart[sv] ? 1 : 2;
}

ConstructionGraph build_construction(const ConstructionSpec & spec)
{
    spec.validate();
    const int cells = spec.cells();
    const int s = spec.groups(), t = spec.subparts();
    const int per_subpart = cells / t;
    const double mu = spec.mu();
    const auto partition = partition_sphere(spec.h, cells, mu / 4);
    std::mt19937_64 rng(spec.seed);

    ConstructionGraph cg;
    cg.spec = spec;
    std::vector<int> order(static_cast<std::size_t>(cells));
    for (int g = 0; g < s; ++g) {
        std::vector<Point> pts;
        for (int c = 0; c < cells; ++c)
            pts.push_back(spec.center_points ? partition.center(static_cast<std::size_t>(c)) : partition.sample(static_cast<std::size_t>(c), rng));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (int j = 0; j < t; ++j) {
            std::vector<int> members(order.begin() + j * per_subpart, order.begin() + (j + 1) * per_subpart);
            std::sort(members.begin(), members.end());
            for (int c : members) {
                cg.group.push_back(g);
                cg.subpart.push_back(j);
                cg.cell.push_back(c);
                cg.coords.push_back(pts[static_cast<std::size_t>(c)]);
            }
        }
    }
    const int n = static_cast<int>(cg.coords.size());
    cg.graph = OrderedGraph(n);
    const double far = 2 - mu, near = std::sqrt(2.0) - mu;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
            bool edge;
            if (cg.group[su] != cg.group[sv]) edge = distance(cg.coords[su], cg.coords[sv]) > near;
            else if (cg.subpart[su] == cg.subpart[sv]) edge = true;
            else edge = distance(cg.coords[su], cg.coords[sv]) >= far;
            if (edge) cg.graph.add_edge(u, v);
        }
    return cg;
}

bool check_construction_edges(const ConstructionGraph & cg)
{
    const int n = cg.graph.size();
    const double mu = cg.spec.mu();
    for (int u = 0; u < n; ++u) {
        const auto su = static_cast<std::size_t>(u);
        if (std::abs(norm(cg.coords[su]) - 1.0) > 1e-12) return false;
        if (u > 0) {
            const auto p = su - 1;
            if (std::make_pair(cg.group[p], cg.subpart[p]) > std::make_pair(cg.group[su], cg.subpart[su])) return false;
        }
        for (int v = u + 1; v < n; ++v) {
            const auto sv = static_cast<std::size_t>(v);
            const double d = distance(cg.coords[su], cg.coords[sv]);
            int want = 0;
            if (cg.group[su] != cg.group[sv]) want = d > std::sqrt(2.0) - mu ? 3 : 0;
            else if (cg.subpart[su] == cg.subpart[sv]) want = 1;
            else want = d >= 2 - mu ? 2 : 0;
            if (cg.edge_type(u, v) != want) return false;
        }
    }
    return true;
}

KernelScan scan_type2_kernel(const ConstructionGraph & cg)
{
    KernelScan scan;
    std::vector<std::pair<int, int>> type2;
    for (auto [u, v] : cg.graph.edges())
        if (cg.edge_type(u, v) == 2) type2.emplace_back(u, v);
    scan.type2_edges = type2.size();
    for (std::size_t a = 0; a < type2.size(); ++a) {
        auto [x1, y1] = type2[a];
        Bitset far_from_both = ~(cg.graph.neighbors(x1) | cg.graph.neighbors(y1));
        for (std::size_t b = a + 1; b < type2.size(); ++b) {
            auto [x2, y2] = type2[b];
            if (cg.group[static_cast<std::size_t>(x2)] == cg.group[static_cast<std::size_t>(x1)]) continue;
            ++scan.pairs_checked;
            if (far_from_both.test(static_cast<std::size_t>(x2)) && far_from_both.test(static_cast<std::size_t>(y2))) {
                scan.holds = false;
                scan.violation = {{x1, y1}, {x2, y2}};
                return scan;
            }
        }
    }
    return scan;
}

ConstructionReport verify_construction(const ConstructionGraph & cg, const VerifyConstructionOptions & opt)
{
    ConstructionReport rep;
    rep.path_length = 2 * cg.spec.k - 1;
    rep.path = find_induced_monotone_path(cg.graph, rep.path_length, opt.path_node_budget);
    rep.kernel = scan_type2_kernel(cg);

    const OrderedGraph comp = complement(cg.graph);
    const int n = comp.size();
    const int r = std::min(n, std::max(2, cg.spec.k * cg.spec.k / 4));
    DensityOptions d;
    d.seed = opt.seed;
    d.workers = opt.workers;
    if (binomial(n, r) <= 1e6) d.mode = DensityMode::Exact;
    else {
        d.mode = DensityMode::Sample;
        d.samples = opt.density_samples;
    }
    rep.complement_density = clique_density(comp, r, d);

    if (n >= 2) {
        BicliqueOptions b;
        b.node_budget = opt.biclique_node_budget;
        b.restarts = opt.biclique_restarts;
        b.seed = opt.seed;
        auto found = find_balanced_biclique(comp, b);
        rep.biclique_size = found.blowup ? found.blowup->t() : 0;
        rep.biclique_exhaustive = found.exhaustive;
    }
    return rep;
}

} // namespace blowup
