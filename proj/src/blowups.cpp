#include "blowup/blowups.hpp"

#include "blowup/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace blowup {

namespace {

bool parts_well_formed(const OrderedGraph & g, const std::vector<std::vector<int>> & parts)
{
    if (parts.empty()) return true;
    const std::size_t t = parts.front().size();
    Bitset seen = g.empty_set();
    for (const auto & p : parts) {
        if (p.size() != t) return false;
        for (int v : p) {
            if (v < 0 || v >= g.size() || seen.test(static_cast<std::size_t>(v))) return false;
            seen.set(static_cast<std::size_t>(v));
        }
    }
    return true;
}

bool complete_between(const OrderedGraph & g, const std::vector<int> & a, const std::vector<int> & b)
{
    for (int u : a)
        for (int v : b)
            if (!g.adjacent(u, v)) return false;
    return true;
}

Blowup normalized(std::vector<std::vector<int>> parts)
{
    for (auto & p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end());
    return Blowup{std::move(parts)};
}

class ExactBlowupSearch {
public:
    ExactBlowupSearch(const OrderedGraph & g, int k, int t, std::uint64_t budget) :
        g_(g), k_(k), t_(t), budget_(budget), parts_(static_cast<std::size_t>(k)),
        common_(static_cast<std::size_t>(k), g.vertex_set())
    {
    }

    BlowupSearchResult run()
    {
        BlowupSearchResult res;
        bool found = go(0);
        res.nodes = nodes_;
        res.exhaustive = !aborted_;
        if (found) res.blowup = normalized(parts_);
        return res;
    }

private:
    bool go(int from)
    {
        if (++nodes_ > budget_) {
            aborted_ = true;
            return false;
        }
        int opened = 0;
        bool done = true;
        for (const auto & p : parts_) {
            opened += !p.empty();
            done = done && static_cast<int>(p.size()) == t_;
        }
        if (done) return true;

        const int n = g_.size();
        Bitset above = g_.vertex_set();
        if (from > 0) above.keep_above(static_cast<std::size_t>(from - 1));
        Bitset all_common = above;
        for (int q = 0; q < opened; ++q) all_common &= common_[static_cast<std::size_t>(q)];

        std::vector<Bitset> allowed;
        Bitset any = g_.empty_set();
        for (int p = 0; p < opened; ++p) {
            Bitset c = above;
            for (int q = 0; q < opened; ++q)
                if (q != p) c &= common_[static_cast<std::size_t>(q)];
            const int missing = t_ - static_cast<int>(parts_[static_cast<std::size_t>(p)].size());
            if (static_cast<int>(c.count()) < missing) return false;
            if (missing > 0) any |= c;
            allowed.push_back(std::move(c));
        }
        const int unopened = k_ - opened;
        if (unopened > 0) {
            if (static_cast<int>(all_common.count()) < unopened * t_) return false;
            any |= all_common;
        }
        int missing_total = 0;
        for (const auto & p : parts_) missing_total += t_ - static_cast<int>(p.size());
        if (static_cast<int>(any.count()) < missing_total) return false;

        const std::size_t w = any.first();
        if (w >= static_cast<std::size_t>(n)) return false;
        const int v = static_cast<int>(w);

        for (int p = 0; p < opened; ++p) {
            auto & part = parts_[static_cast<std::size_t>(p)];
            if (static_cast<int>(part.size()) < t_ && allowed[static_cast<std::size_t>(p)].test(w)) {
                if (place(p, v)) return true;
                if (aborted_) return false;
            }
        }
        if (unopened > 0 && all_common.test(w)) {
            if (place(opened, v)) return true;
            if (aborted_) return false;
        }
        return go(v + 1);
    }

    bool place(int p, int v)
    {
        auto & part = parts_[static_cast<std::size_t>(p)];
        Bitset saved = common_[static_cast<std::size_t>(p)];
        part.push_back(v);
        common_[static_cast<std::size_t>(p)] &= g_.neighbors(v);
        bool ok = go(v + 1);
        if (!ok) {
            part.pop_back();
            common_[static_cast<std::size_t>(p)] = std::move(saved);
        }
        return ok;
    }

    const OrderedGraph & g_;
    int k_, t_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<std::vector<int>> parts_;
    std::vector<Bitset> common_;
};

BlowupSearchResult greedy_blowup(const OrderedGraph & g, int k, int t, const BlowupSearchOptions & opt)
{
    BlowupSearchResult res;
    std::mt19937_64 rng(opt.seed);
    std::vector<int> order(static_cast<std::size_t>(g.size()));
    std::iota(order.begin(), order.end(), 0);
    for (int r = 0; r < opt.restarts && res.nodes < opt.node_budget; ++r) {
        if (r > 0) std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::vector<int>> parts(static_cast<std::size_t>(k));
        std::vector<Bitset> common(static_cast<std::size_t>(k), g.vertex_set());
        int filled = 0;
        for (int v : order) {
            ++res.nodes;
            int best = -1;
            for (int p = 0; p < k; ++p) {
                if (static_cast<int>(parts[static_cast<std::size_t>(p)].size()) == t) continue;
                bool ok = true;
                for (int q = 0; q < k && ok; ++q)
                    if (q != p) ok = common[static_cast<std::size_t>(q)].test(static_cast<std::size_t>(v));
                if (ok && (best < 0 || parts[static_cast<std::size_t>(p)].size() < parts[static_cast<std::size_t>(best)].size())) best = p;
            }
            if (best < 0) continue;
            parts[static_cast<std::size_t>(best)].push_back(v);
            common[static_cast<std::size_t>(best)] &= g.neighbors(v);
            if (static_cast<int>(parts[static_cast<std::size_t>(best)].size()) == t && ++filled == k) break;
        }
        if (filled == k) {
            Blowup b = normalized(std::move(parts));
            if (!verify_blowup(g, b)) throw InvariantViolation("greedy blowup failed verification");
            res.blowup = std::move(b);
            return res;
        }
    }
    return res;
}

class BicliqueSearch {
public:
    BicliqueSearch(const OrderedGraph & g, std::uint64_t budget) : g_(g), budget_(budget) {}

    void run(const Bitset & left, const Bitset & right)
    {
        std::vector<int> a;
        expand(a, right, left);
    }

    std::size_t best = 0;
    std::vector<int> best_a, best_b;
    std::uint64_t nodes = 0;
    bool aborted = false;

private:
    void expand(std::vector<int> & a, const Bitset & common, Bitset cand)
    {
        if (++nodes > budget_) {
            aborted = true;
            return;
        }
        const std::size_t t = std::min(a.size(), common.count());
        if (t > best) {
            best = t;
            best_a.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(t));
            best_b = common.to_vector();
            best_b.resize(t);
        }
        if (common.count() <= best) return;
        std::size_t remaining = cand.count();
        for (std::size_t w = cand.first(); w < cand.size() && !aborted; w = cand.next(w + 1)) {
            if (a.size() + remaining <= best) return;
            --remaining;
            cand.reset(w);
            Bitset next_common = common & g_.neighbors(static_cast<int>(w));
            if (next_common.count() <= best) continue;
            Bitset next_cand = g_.empty_set();
            cand.for_each([&](std::size_t u) {
                if (Bitset::intersection_count(next_common, g_.neighbors(static_cast<int>(u))) > best) next_cand.set(u);
            });
            a.push_back(static_cast<int>(w));
            expand(a, next_common, next_cand);
            a.pop_back();
        }
    }

    const OrderedGraph & g_;
    std::uint64_t budget_;
};

BlowupSearchResult greedy_biclique(const OrderedGraph & g, const BicliqueOptions & opt)
{
    BlowupSearchResult res;
    const int n = g.size();
    std::vector<int> seeds(static_cast<std::size_t>(n));
    std::iota(seeds.begin(), seeds.end(), 0);
    std::stable_sort(seeds.begin(), seeds.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::mt19937_64 rng(opt.seed);
    if (static_cast<int>(seeds.size()) > opt.restarts) {
        std::shuffle(seeds.begin() + opt.restarts / 2, seeds.end(), rng);
        seeds.resize(static_cast<std::size_t>(opt.restarts));
    }
    std::size_t best = 0;
    std::vector<int> best_a, best_b;
    for (int s : seeds) {
        if (res.nodes >= opt.node_budget) break;
        std::vector<int> a{s};
        Bitset in_a = g.empty_set();
        in_a.set(static_cast<std::size_t>(s));
        Bitset common = g.neighbors(s);
        while (true) {
            const std::size_t t = std::min(a.size(), common.count());
            if (t > best) {
                best = t;
                best_a.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(t));
                best_b = common.to_vector();
                best_b.resize(t);
            }
            if (common.count() <= a.size() || res.nodes >= opt.node_budget) break;
            int pick = -1;
            std::size_t pick_count = 0;
            for (int u = 0; u < n; ++u) {
                if (in_a.test(static_cast<std::size_t>(u))) continue;
                ++res.nodes;
                std::size_t c = Bitset::intersection_count(common, g.neighbors(u));
                if (c > pick_count) {
                    pick = u;
                    pick_count = c;
                }
            }
            if (pick < 0 || pick_count <= best) break;
            a.push_back(pick);
            in_a.set(static_cast<std::size_t>(pick));
            common &= g.neighbors(pick);
        }
    }
    if (best > 0) res.blowup = normalized({best_a, best_b});
    return res;
}

} // namespace

bool verify_blowup(const OrderedGraph & g, const Blowup & b, bool strict)
{
    if (!parts_well_formed(g, b.parts)) return false;
    for (std::size_t i = 0; i < b.parts.size(); ++i) {
        for (std::size_t j = i + 1; j < b.parts.size(); ++j)
            if (!complete_between(g, b.parts[i], b.parts[j])) return false;
        if (strict)
            for (std::size_t x = 0; x < b.parts[i].size(); ++x)
                for (std::size_t y = x + 1; y < b.parts[i].size(); ++y)
                    if (g.adjacent(b.parts[i][x], b.parts[i][y])) return false;
    }
    return true;
}

bool verify_pattern_blowup(const OrderedGraph & g, const std::vector<std::vector<int>> & parts,
    const std::vector<std::pair<int, int>> & h)
{
    if (!parts_well_formed(g, parts)) return false;
    const int k = static_cast<int>(parts.size());
    for (auto [a, b] : h) {
        if (a < 0 || b < 0 || a >= k || b >= k || a == b) return false;
        if (!complete_between(g, parts[static_cast<std::size_t>(a)], parts[static_cast<std::size_t>(b)])) return false;
    }
    return true;
}

BlowupSearchResult find_blowup(const OrderedGraph & g, int k, int t, const BlowupSearchOptions & opt)
{
    if (k < 1 || t < 1) throw InvalidInput("blowup needs k >= 1 and t >= 1");
    if (static_cast<long long>(k) * t > g.size()) return {std::nullopt, true, 0};
    BlowupSearchResult res = k * t <= opt.exact_cap ? ExactBlowupSearch(g, k, t, opt.node_budget).run()
                                                    : greedy_blowup(g, k, t, opt);
    if (res.blowup && !verify_blowup(g, *res.blowup)) throw InvariantViolation("blowup failed verification");
    return res;
}

BlowupSearchResult max_biclique_between(const OrderedGraph & g, const std::vector<int> & left,
    const std::vector<int> & right, std::uint64_t node_budget)
{
    for (int v : left)
        if (v < 0 || v >= g.size()) throw InvalidInput("vertex out of range");
    for (int v : right)
        if (v < 0 || v >= g.size()) throw InvalidInput("vertex out of range");
    Bitset l = to_bitset(left, g.size());
    Bitset r = to_bitset(right, g.size());
    if (l.intersects(r)) throw InvalidInput("biclique sides must be disjoint");
    BicliqueSearch s(g, node_budget);
    s.run(l, r);
    BlowupSearchResult res;
    res.nodes = s.nodes;
    res.exhaustive = !s.aborted;
    if (s.best > 0) res.blowup = Blowup{{s.best_a, s.best_b}};
    return res;
}

BlowupSearchResult find_balanced_biclique(const OrderedGraph & g, const BicliqueOptions & opt)
{
    if (g.size() < 2) throw InvalidInput("biclique search needs at least two vertices");
    BlowupSearchResult res;
    if (g.size() <= opt.exact_cap) {
        BicliqueSearch s(g, opt.node_budget);
        s.run(g.vertex_set(), g.vertex_set());
        res.nodes = s.nodes;
        res.exhaustive = !s.aborted;
        if (s.best > 0) res.blowup = normalized({s.best_a, s.best_b});
    } else {
        res = greedy_biclique(g, opt);
    }
    if (res.blowup && !verify_blowup(g, *res.blowup)) throw InvariantViolation("biclique failed verification");
    return res;
}

BicliqueOracle exact_biclique_oracle(std::uint64_t node_budget)
{
    return [node_budget](const OrderedGraph & g, const std::vector<int> & x, const std::vector<int> & y)
               -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
        auto res = max_biclique_between(g, x, y, node_budget);
        if (!res.blowup) return std::nullopt;
        return std::make_pair(res.blowup->parts[0], res.blowup->parts[1]);
    };
}

AmplifyResult amplify_blowup(const OrderedGraph & g, const std::vector<std::vector<int>> & parts,
    const std::vector<std::pair<int, int>> & h, const BicliqueOracle & oracle)
{
    if (!parts_well_formed(g, parts)) throw InvalidInput("parts must be disjoint, in range and of equal size");
    const int k = static_cast<int>(parts.size());
    for (auto [a, b] : h)
        if (a < 0 || b < 0 || a >= k || b >= k || a == b) throw InvalidInput("pattern edge out of range");

    AmplifyResult out;
    auto w = parts;
    for (auto [a, b] : h) {
        auto & wa = w[static_cast<std::size_t>(a)];
        auto & wb = w[static_cast<std::size_t>(b)];
        auto answer = oracle(g, wa, wb);
        if (!answer || answer->first.empty()) {
            out.failed_edge = {a, b};
            out.message = "oracle returned no biclique";
            return out;
        }
        auto & [xa, yb] = *answer;
        Bitset in_a = to_bitset(wa, g.size()), in_b = to_bitset(wb, g.size());
        bool valid = xa.size() == yb.size() && complete_between(g, xa, yb);
        for (int v : xa) valid = valid && v >= 0 && v < g.size() && in_a.test(static_cast<std::size_t>(v));
        for (int v : yb) valid = valid && v >= 0 && v < g.size() && in_b.test(static_cast<std::size_t>(v));
        if (valid) {
            std::vector<int> sa = xa, sb = yb;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            valid = std::adjacent_find(sa.begin(), sa.end()) == sa.end() && std::adjacent_find(sb.begin(), sb.end()) == sb.end();
        }
        if (!valid) {
            out.failed_edge = {a, b};
            out.message = "oracle answer is not a balanced biclique inside the given parts";
            return out;
        }
        const std::size_t s = xa.size();
        wa = xa;
        wb = yb;
        for (auto & p : w) {
            if (p.size() > s) p.resize(s);
            std::sort(p.begin(), p.end());
        }
    }
    if (!verify_pattern_blowup(g, w, h)) throw InvariantViolation("amplified parts failed verification");
    out.parts = std::move(w);
    return out;
}

} // namespace blowup
