#include "blowup/vc.hpp"

#include "blowup/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace blowup {

namespace {

// members containing each element
std::vector<Bitset> columns(const SetSystem & f)
{
    std::vector<Bitset> col(static_cast<std::size_t>(f.n), Bitset(f.members.size()));
    for (std::size_t i = 0; i < f.members.size(); ++i) f.members[i].for_each([&](std::size_t x) { col[x].set(i); });
    return col;
}

class ShatterSearch {
public:
    ShatterSearch(const SetSystem & f, int cap) : f_(f), cap_(cap), col_(columns(f))
    {
        stamp_.assign(std::size_t{1} << std::min(cap, kDefaultShatterCap), 0);
    }

    VcDimension run()
    {
        const std::size_t m = f_.members.size();
        const auto n = static_cast<std::size_t>(f_.n);
        if (m == 0) return best_;
        if (cap_ == 0) {
            best_.cap_hit = true;
            return best_;
        }
        const Bitset all = Bitset::full(m);
        Bitset singles(n);
        for (std::size_t x = 0; x < n; ++x)
            if (col_[x].any() && col_[x] != all) singles.set(x);
        if (singles.none()) return best_;
        best_.dimension = 1;
        best_.witness = {static_cast<int>(singles.first())};
        if (cap_ == 1) {
            best_.cap_hit = true;
            return best_;
        }
        pair_.assign(n, Bitset(n));
        singles.for_each([&](std::size_t x) {
            for (std::size_t y = singles.next(x + 1); y < n; y = singles.next(y + 1)) {
                const auto & a = col_[x];
                const auto & b = col_[y];
                const std::size_t both = Bitset::intersection_count(a, b);
                const std::size_t ca = a.count(), cb = b.count();
                const bool ok = both > 0 && ca > both && cb > both && ca + cb - both < m;
                if (ok) {
                    pair_[x].set(y);
                    pair_[y].set(x);
                }
            }
        });
        std::vector<std::uint32_t> codes(m, 0);
        singles.for_each([&](std::size_t x) {
            if (done_) return;
            Bitset cand = pair_[x];
            cand.keep_above(x);
            set_.assign(1, static_cast<int>(x));
            for (std::size_t i = 0; i < m; ++i) codes[i] = col_[x].test(i);
            grow(codes, cand);
        });
        return best_;
    }

private:
    void grow(const std::vector<std::uint32_t> & codes, const Bitset & cand)
    {
        const std::size_t m = codes.size();
        std::vector<std::uint32_t> next(m);
        for (std::size_t x = cand.first(); x < cand.size() && !done_; x = cand.next(x + 1)) {
            Bitset rest = cand & pair_[x];
            rest.keep_above(x);
            const int size = static_cast<int>(set_.size()) + 1;
            for (std::size_t i = 0; i < m; ++i) next[i] = (codes[i] << 1) | static_cast<std::uint32_t>(col_[x].test(i));
            if (!shattered(next, size)) continue;
            set_.push_back(static_cast<int>(x));
            if (size > best_.dimension) {
                best_.dimension = size;
                best_.witness = set_;
            }
            if (size >= cap_) {
                best_.cap_hit = true;
                done_ = true;
            } else if (size + static_cast<int>(rest.count()) > best_.dimension) {
                grow(next, rest);
            }
            set_.pop_back();
        }
    }

    bool shattered(const std::vector<std::uint32_t> & codes, int size)
    {
        const std::size_t need = std::size_t{1} << size;
        if (codes.size() < need) return false;
        ++epoch_;
        std::size_t distinct = 0;
        for (auto c : codes)
            if (stamp_[c] != epoch_) {
                stamp_[c] = epoch_;
                if (++distinct == need) return true;
            }
        return false;
    }

    const SetSystem & f_;
    int cap_;
    std::vector<Bitset> col_;
    std::vector<Bitset> pair_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<int> set_;
    VcDimension best_;
    bool done_ = false;
};

std::vector<int> trim_low_degree(const OrderedGraph & g, double min_degree)
{
    const int n = g.size();
    Bitset alive = g.vertex_set();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v)
            if (alive.test(static_cast<std::size_t>(v)) && static_cast<double>(Bitset::intersection_count(g.neighbors(v), alive)) < min_degree) {
                alive.reset(static_cast<std::size_t>(v));
                changed = true;
            }
    }
    return alive.to_vector();
}

std::size_t edges_between(const OrderedGraph & g, const std::vector<int> & a, const Bitset & b)
{
    std::size_t e = 0;
    for (int v : a) e += Bitset::intersection_count(g.neighbors(v), b);
    return e;
}

} // namespace

SetSystem SetSystem::neighborhoods(const OrderedGraph & g)
{
    SetSystem f;
    f.n = g.size();
    for (int v = 0; v < g.size(); ++v) f.members.push_back(g.neighbors(v));
    return f;
}

void SetSystem::validate() const
{
    if (n < 0) throw InvalidInput("negative ground set size");
    for (const auto & m : members)
        if (m.size() != static_cast<std::size_t>(n)) throw InvalidInput("set system member has the wrong ground set");
}

bool is_shattered(const SetSystem & f, std::span<const int> s, int cap)
{
    f.validate();
    if (static_cast<int>(s.size()) > cap) throw InvalidInput("shatter check of " + std::to_string(s.size()) + " elements exceeds cap " + std::to_string(cap));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= f.n) throw InvalidInput("element out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (s[i] == s[j]) throw InvalidInput("repeated element");
    }
    std::vector<char> seen(std::size_t{1} << s.size(), 0);
    std::size_t distinct = 0;
    for (const auto & m : f.members) {
        std::size_t code = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (m.test(static_cast<std::size_t>(s[i]))) code |= std::size_t{1} << i;
        if (!seen[code]) {
            seen[code] = 1;
            ++distinct;
        }
    }
    return distinct == seen.size();
}

VcDimension vc_dimension(const SetSystem & f, int cap)
{
    f.validate();
    if (cap < 0) throw InvalidInput("cap must be non-negative");
    if (cap > kDefaultShatterCap) throw InvalidInput("cap above " + std::to_string(kDefaultShatterCap));
    return ShatterSearch(f, cap).run();
}

PackingResult haussler_packing(const SetSystem & f, int s)
{
    f.validate();
    if (s < 1) throw InvalidInput("separation must be positive");
    PackingResult r{s, {}};
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        bool far = true;
        for (int c : r.centers)
            if (Bitset::difference_count(f.members[i], f.members[static_cast<std::size_t>(c)]) < static_cast<std::size_t>(s)) {
                far = false;
                break;
            }
        if (far) r.centers.push_back(static_cast<int>(i));
    }
    return r;
}

PackingCheck check_packing(const SetSystem & f, const PackingResult & r)
{
    PackingCheck c{true, true};
    const auto s = static_cast<std::size_t>(r.s);
    std::vector<char> is_center(f.members.size(), 0);
    for (std::size_t a = 0; a < r.centers.size(); ++a) {
        const auto ca = static_cast<std::size_t>(r.centers[a]);
        if (ca >= f.members.size() || is_center[ca]) return {};
        is_center[ca] = 1;
        for (std::size_t b = 0; b < a; ++b)
            if (Bitset::difference_count(f.members[ca], f.members[static_cast<std::size_t>(r.centers[b])]) < s) c.separated = false;
    }
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        if (is_center[i]) continue;
        bool close = false;
        for (int ctr : r.centers) close = close || Bitset::difference_count(f.members[i], f.members[static_cast<std::size_t>(ctr)]) < s;
        if (!close) c.maximal = false;
    }
    return c;
}

PackingBiclique biclique_via_packing(const OrderedGraph & g, double c, const PackingBicliqueOptions & opt)
{
    if (!(c > 0 && c <= 1)) throw InvalidInput("density parameter must lie in (0, 1]");
    const int n = g.size();
    if (n < 2 || g.density() < c) throw PreconditionFailed("edge density below c");
    PackingBiclique out;
    const auto alive = trim_low_degree(g, c * n / 2);
    if (alive.empty()) throw PreconditionFailed("degree trim removed every vertex");
    const OrderedGraph h = g.induced(alive);
    const int m = h.size();
    out.trimmed_size = m;
    const SetSystem f = SetSystem::neighborhoods(h);
    out.d = std::max(1, opt.d ? *opt.d : vc_dimension(f, opt.vc_cap).dimension);
    const double d = out.d;
    out.s = std::max(1, static_cast<int>(std::floor(std::pow(m, 1 - 1 / (d + 1)))));
    out.q = opt.q ? *opt.q : std::max(1, static_cast<int>(std::floor(opt.q_scale * std::pow(n, 1 / (d + 1)))));
    if (out.q < 1) throw InvalidInput("q must be positive");

    const auto packing = haussler_packing(f, out.s);
    out.centers = static_cast<int>(packing.centers.size());
    std::vector<int> part(static_cast<std::size_t>(m), -1);
    for (std::size_t i = 0; i < packing.centers.size(); ++i) part[static_cast<std::size_t>(packing.centers[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> parts(packing.centers.size());
    for (int v = 0; v < m; ++v) {
        auto & p = part[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < packing.centers.size() && p < 0; ++i)
            if (Bitset::difference_count(h.neighbors(v), h.neighbors(packing.centers[i])) <= static_cast<std::size_t>(out.s)) p = static_cast<int>(i);
        if (p < 0) throw InvariantViolation("packing is not maximal");
        parts[static_cast<std::size_t>(p)].push_back(v);
    }
    const auto & big = *std::max_element(parts.begin(), parts.end(), [](const auto & a, const auto & b) { return a.size() < b.size(); });
    out.part_size = static_cast<int>(big.size());
    if (out.part_size < out.q) {
        out.message = "largest part has " + std::to_string(out.part_size) + " vertices, fewer than q = " + std::to_string(out.q);
        return out;
    }
    Bitset common = h.vertex_set();
    for (int i = 0; i < out.q; ++i) common &= h.neighbors(big[static_cast<std::size_t>(i)]);
    out.common = static_cast<int>(common.count());
    if (out.common < out.q) {
        out.message = "common neighbourhood has " + std::to_string(out.common) + " vertices, fewer than q = " + std::to_string(out.q);
        return out;
    }
    Blowup b;
    b.parts.resize(2);
    for (int i = 0; i < out.q; ++i) b.parts[0].push_back(alive[static_cast<std::size_t>(big[static_cast<std::size_t>(i)])]);
    auto cv = common.to_vector();
    for (int i = 0; i < out.q; ++i) b.parts[1].push_back(alive[static_cast<std::size_t>(cv[static_cast<std::size_t>(i)])]);
    if (!verify_blowup(g, b)) throw InvariantViolation("packing biclique failed verification");
    out.biclique = std::move(b);
    return out;
}

Vc1Report vc1_checks(const OrderedGraph & g, std::uint64_t triangle_budget)
{
    Vc1Report rep;
    const int n = g.size();
    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    const std::uint64_t tail = n % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n % 64)) - 1;

    for (int a = 0; a < n && rep.triangles_exhaustive; ++a) {
        const Bitset na = ~g.neighbors(a);
        Bitset later = g.neighbors(a);
        later.keep_above(static_cast<std::size_t>(a));
        for (std::size_t b = later.first(); b < later.size() && rep.triangles_exhaustive; b = later.next(b + 1)) {
            const Bitset nb = ~g.neighbors(static_cast<int>(b));
            const Bitset both = na & nb;
            const Bitset either = na | nb;
            Bitset thirds = later & g.neighbors(static_cast<int>(b));
            thirds.keep_above(b);
            const std::uint64_t * pb = both.data();
            const std::uint64_t * pe = either.data();
            for (std::size_t c = thirds.first(); c < thirds.size(); c = thirds.next(c + 1)) {
                if (++rep.triangles > triangle_budget) {
                    rep.triangles_exhaustive = false;
                    break;
                }
                const std::uint64_t * pc = g.neighbors(static_cast<int>(c)).data();
                for (std::size_t w = 0; w < words; ++w) {
                    std::uint64_t bad = pb[w] | (~pc[w] & pe[w]);
                    if (w + 1 == words) bad &= tail;
                    if (!bad) continue;
                    ++rep.triangle_violations;
                    if (!rep.triangle_example) {
                        const int v = static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bad)));
                        rep.triangle_example = std::vector<int>{a, static_cast<int>(b), static_cast<int>(c), v};
                        std::vector<int> missed;
                        for (int x : {a, static_cast<int>(b), static_cast<int>(c)})
                            if (!g.adjacent(v, x)) missed.push_back(x);
                        rep.shattered_pair = std::pair{missed[0], missed[1]};
                    }
                    break;
                }
            }
        }
    }

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            const auto & na = g.neighbors(a);
            const auto & nb = g.neighbors(b);
            if (!na.intersects(nb) || na.is_subset_of(nb) || nb.is_subset_of(na)) continue;
            ++rep.p5_violations;
            if (!rep.p5_example) {
                Bitset only_a = na, only_b = nb;
                only_a.subtract(nb);
                only_b.subtract(na);
                const int mid = static_cast<int>((na & nb).first());
                rep.p5_example = std::vector<int>{static_cast<int>(only_a.first()), a, mid, b, static_cast<int>(only_b.first())};
                if (!rep.shattered_pair) rep.shattered_pair = std::pair{a, b};
            }
        }
    return rep;
}

DenseVc1Result dense_vc1_biclique(const OrderedGraph & g, double c, const DenseVc1Options & opt)
{
    if (!(c > 0 && c <= 1)) throw InvalidInput("density parameter must lie in (0, 1]");
    const int n = g.size();
    if (n < 4 || g.density() < c) throw PreconditionFailed("edge density below c");
    if (opt.check_vc1) {
        auto rep = vc1_checks(g);
        if (!rep.clean()) throw PreconditionFailed("graph has VC dimension at least 2 (vc1_checks found a violation)");
    }
    auto broken = [&](const std::string & what) -> void {
        if (opt.check_vc1) throw InvariantViolation(what);
        throw PreconditionFailed(what);
    };

    DenseVc1Result out;
    out.used = opt.mode == Vc1Case::Auto ? (g.density() >= opt.dense_threshold ? Vc1Case::Dense : Vc1Case::Triple) : opt.mode;

    if (out.used == Vc1Case::Dense) {
        const auto alive = trim_low_degree(g, 2.0 * n / 3);
        out.trimmed_size = static_cast<int>(alive.size());
        if (alive.empty()) throw PreconditionFailed("degree trim removed every vertex");
        const Bitset alive_set = to_bitset(alive, n);
        Bitset open = alive_set;
        std::vector<std::vector<int>> classes;
        while (open.any()) {
            const int u = static_cast<int>(open.first());
            const Bitset nu = g.neighbors(u) & alive_set;
            Bitset cls = alive_set;
            cls.subtract(nu);
            cls.for_each([&](std::size_t w) {
                if ((g.neighbors(static_cast<int>(w)) & alive_set) != nu) broken("non-adjacent vertices with different neighbourhoods after the trim");
            });
            classes.push_back(cls.to_vector());
            open.subtract(cls);
        }
        out.classes = static_cast<int>(classes.size());
        std::stable_sort(classes.begin(), classes.end(), [](const auto & a, const auto & b) { return a.size() > b.size(); });
        std::vector<int> side[2];
        for (const auto & cls : classes) {
            auto & s = side[0].size() <= side[1].size() ? side[0] : side[1];
            s.insert(s.end(), cls.begin(), cls.end());
        }
        const std::size_t t = std::min(side[0].size(), side[1].size());
        if (t == 0) throw PreconditionFailed("trimmed graph has a single part");
        for (auto & s : side) {
            std::sort(s.begin(), s.end());
            s.resize(t);
            out.biclique.parts.push_back(s);
        }
        if (!verify_blowup(g, out.biclique)) throw InvariantViolation("dense case biclique failed verification");
        return out;
    }

    const int m = std::max(1, static_cast<int>(opt.part_fraction * n));
    if (3 * m > n) throw InvalidInput("part_fraction too large for three disjoint parts");
    out.m = m;
    std::mt19937_64 rng(opt.seed);
    std::vector<std::size_t> dist(static_cast<std::size_t>(n));
    std::vector<int> order(static_cast<std::size_t>(n));
    // the m unused vertices whose neighbourhoods are closest to a random pivot
    auto cluster = [&](Bitset & used) {
        std::vector<int> free;
        for (int v = 0; v < n; ++v)
            if (!used.test(static_cast<std::size_t>(v))) free.push_back(v);
        const int z = free[rng() % free.size()];
        for (int v : free) dist[static_cast<std::size_t>(v)] = Bitset::difference_count(g.neighbors(v), g.neighbors(z));
        std::stable_sort(free.begin(), free.end(), [&](int a, int b) { return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)]; });
        free.resize(static_cast<std::size_t>(m));
        std::sort(free.begin(), free.end());
        for (int v : free) used.set(static_cast<std::size_t>(v));
        return free;
    };
    const double mm = static_cast<double>(m) * m;
    for (out.attempts = 1; out.attempts <= opt.attempts; ++out.attempts) {
        Bitset used = g.empty_set();
        const auto vi = cluster(used);
        const auto vj = cluster(used);
        const auto vk = cluster(used);
        const Bitset si = to_bitset(vi, n), sk = to_bitset(vk, n);
        if (static_cast<double>(edges_between(g, vj, si)) < (1 - opt.gamma) * mm) continue;
        if (static_cast<double>(edges_between(g, vj, sk)) > opt.gamma * mm) continue;
        Bitset uj = g.empty_set();
        for (int u : vj) {
            const auto di = static_cast<double>(Bitset::intersection_count(g.neighbors(u), si));
            const auto dk = static_cast<double>(Bitset::intersection_count(g.neighbors(u), sk));
            if (di > 0.8 * m && dk < 0.2 * m) uj.set(static_cast<std::size_t>(u));
        }
        int v = -1;
        std::size_t best = 0;
        for (int x : vi) {
            const std::size_t d = Bitset::intersection_count(g.neighbors(x), uj);
            if (v < 0 || d > best) {
                v = x;
                best = d;
            }
        }
        if (static_cast<double>(best) < 0.75 * m) continue;
        const auto a = (g.neighbors(v) & uj).to_vector();
        const Bitset as = to_bitset(a, n);
        for (int u : a)
            if (g.neighbors(u).intersects(as)) broken("common neighbourhood N_U(v) is not independent");
        int low = a.front();
        std::size_t low_deg = Bitset::intersection_count(g.neighbors(low), si);
        for (std::size_t x = 0; x < a.size(); ++x) {
            const Bitset nx = g.neighbors(a[x]) & si;
            if (nx.count() < low_deg) {
                low = a[x];
                low_deg = nx.count();
            }
            for (std::size_t y = x + 1; y < a.size(); ++y) {
                ++out.laminar_pairs;
                const Bitset ny = g.neighbors(a[y]) & si;
                if (!nx.is_subset_of(ny) && !ny.is_subset_of(nx)) broken("neighbourhoods in V_i are not nested");
            }
        }
        auto b = (g.neighbors(low) & si).to_vector();
        const std::size_t t = std::min(a.size(), b.size());
        out.biclique.parts = {std::vector<int>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(t)),
            std::vector<int>(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(t))};
        if (t == 0 || !verify_blowup(g, out.biclique)) throw InvariantViolation("triple case biclique failed verification");
        return out;
    }
    throw PreconditionFailed("triple search budget exhausted after " + std::to_string(opt.attempts) + " attempts");
}

OrderedGraph half_graph(int n, double density)
{
    if (n < 2 || n % 2) throw InvalidInput("half graph needs an even n >= 2");
    const long long h = n / 2;
    const double pairs = static_cast<double>(n) * (n - 1) / 2;
    auto edges = [&](long long t) {
        long long e = 0;
        for (long long i = 0; i < h; ++i) e += std::clamp(h - std::max(0LL, t - i), 0LL, h);
        return e;
    };
    long long best_t = 0;
    double best_gap = 2;
    for (long long t = 0; t <= 2 * h - 1; ++t) {
        const double gap = std::abs(static_cast<double>(edges(t)) / pairs - density);
        if (gap < best_gap) {
            best_gap = gap;
            best_t = t;
        }
    }
    OrderedGraph g(n);
    for (long long i = 0; i < h; ++i)
        for (long long j = std::max(0LL, best_t - i); j < h; ++j) g.add_edge(static_cast<int>(i), static_cast<int>(h + j));
    return g;
}

OrderedGraph complete_multipartite(const std::vector<int> & sizes)
{
    std::vector<int> part;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 0) throw InvalidInput("negative part size");
        part.insert(part.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
    }
    const int n = static_cast<int>(part.size());
    OrderedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) g.add_edge(u, v);
    return g;
}

bool is_c4_free_bipartite(const OrderedGraph & core, int left)
{
    for (int a = 0; a < left; ++a)
        for (int b = a + 1; b < left; ++b)
            if (Bitset::intersection_count(core.neighbors(a), core.neighbors(b)) > 1) return false;
    return true;
}

Vc2Example make_vc2_no_b2_example(int n, std::uint64_t seed, const BicliqueOptions & biclique)
{
    if (n < 2 || n % 2) throw InvalidInput("n must be even and at least 2");
    const int h = n / 2;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(std::pow(static_cast<double>(n), -2.0 / 3));
    Vc2Example ex;
    ex.core = OrderedGraph(n);
    for (int a = 0; a < h; ++a)
        for (int b = h; b < n; ++b)
            if (coin(rng)) ex.core.add_edge(a, b);
    for (int a = 0; a < h; ++a)
        for (int a2 = a + 1; a2 < h; ++a2)
            while (true) {
                const Bitset common = ex.core.neighbors(a) & ex.core.neighbors(a2);
                const std::size_t first = common.first();
                const std::size_t second = common.next(first + 1);
                if (second >= common.size()) break;
                ex.core.remove_edge(a2, static_cast<int>(second));
                ++ex.removed;
            }
    ex.c4_free = is_c4_free_bipartite(ex.core, h);
    ex.graph = complement(ex.core);
    ex.density = ex.graph.density();
    ex.vc = vc_dimension(SetSystem::neighborhoods(ex.graph), 3);
    auto bc = find_balanced_biclique(ex.graph, biclique);
    ex.biclique = bc.blowup ? bc.blowup->t() : 0;
    ex.biclique_exhaustive = bc.exhaustive;
    return ex;
}

} // namespace blowup
