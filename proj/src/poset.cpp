#include "blowup/poset.hpp"

#include "blowup/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>

namespace blowup {

namespace {

std::vector<int> positions(const std::vector<int> & order)
{
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    return pos;
}

// Longest chain ending at each subset element; subset is sorted by a linear extension first.
std::vector<int> chain_lengths(const Poset & p, std::vector<int> & sorted, std::vector<int> & prev)
{
    const auto pos = positions(linear_extension(p));
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) { return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]; });
    std::vector<int> len(sorted.size(), 1);
    prev.assign(sorted.size(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const Bitset & below = p.down(sorted[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (below.test(static_cast<std::size_t>(sorted[j])) && len[j] + 1 > len[i]) {
                len[i] = len[j] + 1;
                prev[i] = static_cast<int>(j);
            }
    }
    return len;
}

bool well_formed(int n, const std::vector<std::vector<int>> & parts)
{
    if (parts.empty()) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto & part : parts) {
        if (part.size() != parts.front().size()) return false;
        for (int v : part) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    return true;
}

} // namespace

Poset::Poset(int n)
{
    if (n < 0) throw InvalidInput("negative poset size");
    up_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    down_ = up_;
}

Poset Poset::from_relations(int n, std::span<const std::pair<int, int>> relations)
{
    Poset p(n);
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : relations) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidInput("relation (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        if (a == b) throw InvalidInput("relation is not irreflexive at " + std::to_string(a));
        succ[static_cast<std::size_t>(a)].push_back(b);
        ++indeg[static_cast<std::size_t>(b)];
    }
    std::vector<int> order;
    std::vector<int> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (int w : succ[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
    if (static_cast<int>(order.size()) != n) throw InvalidInput("relations contain a cycle");
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto & row = p.up_[static_cast<std::size_t>(*it)];
        for (int w : succ[static_cast<std::size_t>(*it)]) {
            row.set(static_cast<std::size_t>(w));
            row |= p.up_[static_cast<std::size_t>(w)];
        }
    }
    for (int a = 0; a < n; ++a) p.up_[static_cast<std::size_t>(a)].for_each([&](std::size_t b) { p.down_[b].set(static_cast<std::size_t>(a)); });
    return p;
}

Poset Poset::total_order(int n)
{
    std::vector<std::pair<int, int>> rel;
    for (int v = 0; v + 1 < n; ++v) rel.emplace_back(v, v + 1);
    return from_relations(n, rel);
}

std::vector<std::pair<int, int>> Poset::relations() const
{
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a) up(a).for_each([&](std::size_t b) { out.emplace_back(a, static_cast<int>(b)); });
    return out;
}

std::size_t Poset::relation_count() const
{
    std::size_t c = 0;
    for (const auto & r : up_) c += r.count();
    return c;
}

std::vector<int> linear_extension(const Poset & p)
{
    const int n = p.size();
    std::vector<std::size_t> indeg(static_cast<std::size_t>(n));
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v) {
        indeg[static_cast<std::size_t>(v)] = p.down(v).count();
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    }
    std::vector<int> order;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        p.up(v).for_each([&](std::size_t w) {
            if (--indeg[w] == 0) ready.push(static_cast<int>(w));
        });
    }
    return order;
}

OrderedPosetGraph incomparability_graph(const Poset & p)
{
    OrderedPosetGraph out{OrderedGraph(p.size()), linear_extension(p)};
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            if (!p.comparable(out.order[static_cast<std::size_t>(i)], out.order[static_cast<std::size_t>(j)])) out.graph.add_edge(i, j);
    return out;
}

OrderedPosetGraph comparability_graph(const Poset & p)
{
    auto inc = incomparability_graph(p);
    return {complement(inc.graph), inc.order};
}

OrderedGraph comparability_graph_by_element(const Poset & p)
{
    OrderedGraph g(p.size());
    for (int a = 0; a < p.size(); ++a) p.up(a).for_each([&](std::size_t b) { g.add_edge(a, static_cast<int>(b)); });
    return g;
}

std::vector<int> longest_chain(const Poset & p, std::span<const int> subset)
{
    std::vector<int> sorted(subset.begin(), subset.end());
    if (sorted.empty()) return {};
    std::vector<int> prev;
    auto len = chain_lengths(p, sorted, prev);
    int at = static_cast<int>(std::max_element(len.begin(), len.end()) - len.begin());
    std::vector<int> chain;
    for (; at >= 0; at = prev[static_cast<std::size_t>(at)]) chain.push_back(sorted[static_cast<std::size_t>(at)]);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<int> longest_chain(const Poset & p)
{
    std::vector<int> all(static_cast<std::size_t>(p.size()));
    std::iota(all.begin(), all.end(), 0);
    return longest_chain(p, all);
}

std::vector<std::vector<int>> height_layers(const Poset & p, std::span<const int> subset)
{
    std::vector<int> sorted(subset.begin(), subset.end());
    std::vector<int> prev;
    auto len = chain_lengths(p, sorted, prev);
    std::vector<std::vector<int>> layers;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto h = static_cast<std::size_t>(len[i]);
        if (layers.size() < h) layers.resize(h);
        layers[h - 1].push_back(sorted[i]);
    }
    for (auto & l : layers) std::sort(l.begin(), l.end());
    return layers;
}

Poset random_dag_poset(int n, double prob, std::uint64_t seed)
{
    if (n < 0 || prob < 0 || prob > 1) throw InvalidInput("random poset needs n >= 0 and 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::vector<int> hidden(static_cast<std::size_t>(n));
    std::iota(hidden.begin(), hidden.end(), 0);
    std::shuffle(hidden.begin(), hidden.end(), rng);
    std::bernoulli_distribution coin(prob);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) rel.emplace_back(hidden[static_cast<std::size_t>(i)], hidden[static_cast<std::size_t>(j)]);
    return Poset::from_relations(n, rel);
}

Poset random_perm2_poset(int n, std::uint64_t seed)
{
    if (n < 0) throw InvalidInput("negative poset size");
    std::mt19937_64 rng(seed);
    std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    std::vector<std::pair<int, int>> rel;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (a[static_cast<std::size_t>(x)] < a[static_cast<std::size_t>(y)] && b[static_cast<std::size_t>(x)] < b[static_cast<std::size_t>(y)]) rel.emplace_back(x, y);
    return Poset::from_relations(n, rel);
}

Poset block_poset(const std::vector<int> & sizes)
{
    std::vector<int> block;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 0) throw InvalidInput("negative block size");
        block.insert(block.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
    }
    const int n = static_cast<int>(block.size());
    std::vector<std::pair<int, int>> rel;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (block[static_cast<std::size_t>(x)] + 1 == block[static_cast<std::size_t>(y)]) rel.emplace_back(x, y);
    return Poset::from_relations(n, rel);
}

Dichotomy chain_or_antichain(const Poset & p, std::span<const int> subset, int l, int t, int q)
{
    if (l < 1 || t < 1 || q < 1) throw InvalidInput("l, t and q must be positive");
    Dichotomy d;
    auto chain = longest_chain(p, subset);
    const auto need_chain = static_cast<std::size_t>(l) * static_cast<std::size_t>(t);
    if (chain.size() >= need_chain) {
        d.kind = Dichotomy::Kind::Chain;
        for (int u = 0; u < l; ++u)
            d.chain.blocks.emplace_back(chain.begin() + u * t, chain.begin() + (u + 1) * t);
        return d;
    }
    auto layers = height_layers(p, subset);
    for (auto & layer : layers)
        if (layer.size() > d.largest_layer.size()) d.largest_layer = layer;
    if (d.largest_layer.size() >= static_cast<std::size_t>(l) * static_cast<std::size_t>(q)) {
        d.kind = Dichotomy::Kind::Antichain;
        for (int u = 0; u < l; ++u)
            d.antichain.emplace_back(d.largest_layer.begin() + u * q, d.largest_layer.begin() + (u + 1) * q);
    }
    return d;
}

Dichotomy chain_or_antichain(const Poset & p, int l, int t, int q)
{
    std::vector<int> all(static_cast<std::size_t>(p.size()));
    std::iota(all.begin(), all.end(), 0);
    return chain_or_antichain(p, all, l, t, q);
}

PairRelation relate(const Poset & p, const std::vector<int> & x, const std::vector<int> & y)
{
    std::size_t below = 0, above = 0;
    for (int a : x)
        for (int b : y) {
            below += p.less(a, b);
            above += p.less(b, a);
        }
    const std::size_t all = x.size() * y.size();
    if (below == 0 && above == 0) return PairRelation::Incomparable;
    if (below == all) return PairRelation::Below;
    if (above == all) return PairRelation::Above;
    return PairRelation::Mixed;
}

ResolvedParams resolve_params(const PartitionParams & params, int n)
{
    if (params.k < 2) throw InvalidInput("k must be at least 2");
    if (!(params.eps > 0 && params.eps < 1)) throw InvalidInput("eps must lie in (0, 1)");
    if (n < 2) throw InvalidInput("poset too small");
    const double e = params.eps, k = params.k, ln = std::log(static_cast<double>(n));
    ResolvedParams r{};
    r.k = params.k;
    r.eps = e;
    r.s = params.s.value_or(static_cast<int>(std::ceil(10 / e)));
    r.l = params.l.value_or(static_cast<int>(std::ceil(10 * k / e)));
    r.q = params.q.value_or(std::max(1, static_cast<int>(std::pow(e, 4) * n / (1e5 * k * k * ln))));
    r.t = params.t.value_or(std::max(1, static_cast<int>(std::pow(e, 7) * n / (1e11 * std::pow(k, 5)))));
    if (r.s < 1 || r.l < 1 || r.q < 1 || r.t < 1) throw InvalidInput("partition parameters must be positive");
    if (static_cast<long long>(r.s) * r.l * r.t > n) throw InvalidInput("s * l * t exceeds n");
    return r;
}

double Partition::inhomogeneous_fraction() const
{
    const double m = static_cast<double>(parts.size());
    if (m < 2) return 0.0;
    return static_cast<double>(inhomogeneous.size()) / (m * (m - 1) / 2);
}

PartitionResult incomparability_partition(const Poset & p, const PartitionParams & params)
{
    const int n = p.size();
    PartitionResult res;
    res.params = resolve_params(params, n);
    const auto & rp = res.params;
    const auto ext = linear_extension(p);
    const std::size_t witness_size = static_cast<std::size_t>(rp.k) * static_cast<std::size_t>(rp.q);

    Partition part;
    part.m0 = static_cast<int>(std::ceil((1 - rp.eps) * n / (static_cast<double>(rp.s) * rp.t * rp.l)));
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < rp.s; ++i) {
        std::vector<int> remaining(ext.begin() + static_cast<std::ptrdiff_t>(static_cast<long long>(i) * n / rp.s),
            ext.begin() + static_cast<std::ptrdiff_t>(static_cast<long long>(i + 1) * n / rp.s));
        int j = 0;
        while (j < part.m0) {
            auto d = chain_or_antichain(p, remaining, rp.l, rp.t, rp.q);
            if (d.kind == Dichotomy::Kind::Chain) {
                for (int u = 0; u < rp.l; ++u) {
                    const auto & block = d.chain.blocks[static_cast<std::size_t>(u)];
                    part.parts.push_back(block);
                    part.interval.push_back(i);
                    part.group.push_back(j);
                    part.level.push_back(u);
                    for (int v : block) used[static_cast<std::size_t>(v)] = 1;
                }
                std::erase_if(remaining, [&](int v) { return used[static_cast<std::size_t>(v)] != 0; });
                ++j;
                continue;
            }
            if (d.largest_layer.size() >= witness_size) {
                std::vector<std::vector<int>> w;
                for (int a = 0; a < rp.k; ++a)
                    w.emplace_back(d.largest_layer.begin() + a * rp.q, d.largest_layer.begin() + (a + 1) * rp.q);
                res.witness = std::move(w);
                return res;
            }
            break;
        }
        part.achieved.push_back(j);
    }
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)]) part.v0.push_back(v);
    part.v0_exceeds = static_cast<double>(part.v0.size()) > rp.eps * n;
    for (std::size_t a = 0; a < part.parts.size(); ++a)
        for (std::size_t b = a + 1; b < part.parts.size(); ++b)
            if (relate(p, part.parts[a], part.parts[b]) == PairRelation::Mixed) part.inhomogeneous.emplace_back(static_cast<int>(a), static_cast<int>(b));
    res.partition = std::move(part);
    return res;
}

bool PartitionCheck::ok() const
{
    return witness_ok || (covers && equal_parts && v0_small && list_exact && fraction_ok);
}

PartitionCheck check_partition_result(const Poset & p, const PartitionResult & r)
{
    PartitionCheck c;
    const int n = p.size();
    if (r.witness) {
        const auto & w = *r.witness;
        bool ok = static_cast<int>(w.size()) == r.params.k && well_formed(n, w) && !w.empty() && static_cast<int>(w.front().size()) == r.params.q;
        for (std::size_t a = 0; a < w.size() && ok; ++a)
            for (std::size_t b = a + 1; b < w.size() && ok; ++b) ok = relate(p, w[a], w[b]) == PairRelation::Incomparable;
        c.witness_ok = ok;
        return c;
    }
    if (!r.partition) return c;
    const auto & part = *r.partition;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    bool in_range = true;
    for (int v : part.v0) in_range = in_range && v >= 0 && v < n && ++count[static_cast<std::size_t>(v)];
    for (const auto & q : part.parts)
        for (int v : q) in_range = in_range && v >= 0 && v < n && ++count[static_cast<std::size_t>(v)];
    c.covers = in_range && std::all_of(count.begin(), count.end(), [](int x) { return x == 1; });
    c.equal_parts = std::all_of(part.parts.begin(), part.parts.end(), [&](const auto & q) { return static_cast<int>(q.size()) == r.params.t; });
    c.v0_small = static_cast<double>(part.v0.size()) <= r.params.eps * n;
    std::set<std::pair<int, int>> listed(part.inhomogeneous.begin(), part.inhomogeneous.end());
    bool exact = listed.size() == part.inhomogeneous.size();
    for (std::size_t a = 0; a < part.parts.size() && exact; ++a)
        for (std::size_t b = a + 1; b < part.parts.size() && exact; ++b) {
            const bool mixed = relate(p, part.parts[a], part.parts[b]) == PairRelation::Mixed;
            exact = mixed == listed.contains({static_cast<int>(a), static_cast<int>(b)});
        }
    c.list_exact = exact;
    c.fraction_ok = part.inhomogeneous_fraction() <= r.params.eps;
    return c;
}

Claim52Audit claim52_audit(const Poset & p, const ChainBlocks & blocks_low, const ChainBlocks & blocks_high,
    const std::vector<int> & position)
{
    auto low = blocks_low.blocks, high = blocks_high.blocks;
    if (!blocks_low.ascending) std::reverse(low.begin(), low.end());
    if (!blocks_high.ascending) std::reverse(high.begin(), high.end());
    int last_low = -1, first_high = p.size();
    for (const auto & b : low)
        for (int v : b) last_low = std::max(last_low, position.at(static_cast<std::size_t>(v)));
    for (const auto & b : high)
        for (int v : b) first_high = std::min(first_high, position.at(static_cast<std::size_t>(v)));
    if (last_low >= first_high) throw PreconditionFailed("first chain group must precede the second in the linear extension");

    Claim52Audit audit;
    std::set<int> sums;
    for (std::size_t u = 0; u < low.size(); ++u)
        for (std::size_t w = 0; w < high.size(); ++w)
            if (relate(p, low[u], high[w]) == PairRelation::Mixed) {
                audit.inhomogeneous.emplace_back(static_cast<int>(u), static_cast<int>(w));
                if (!sums.insert(static_cast<int>(u + w)).second) audit.distinct_sums = false;
            }
    const std::size_t l = std::max(low.size(), high.size());
    audit.count_ok = audit.inhomogeneous.size() <= 2 * l - 1;
    return audit;
}

std::vector<Claim52Audit> audit_partition(const Poset & p, const Partition & part)
{
    std::map<std::pair<int, int>, ChainBlocks> groups;
    for (std::size_t a = 0; a < part.parts.size(); ++a) {
        auto & g = groups[{part.interval[a], part.group[a]}];
        const auto u = static_cast<std::size_t>(part.level[a]);
        if (g.blocks.size() <= u) g.blocks.resize(u + 1);
        g.blocks[u] = part.parts[a];
    }
    const auto pos = positions(linear_extension(p));
    std::vector<Claim52Audit> out;
    for (auto a = groups.begin(); a != groups.end(); ++a)
        for (auto b = std::next(a); b != groups.end(); ++b)
            if (a->first.first < b->first.first) out.push_back(claim52_audit(p, a->second, b->second, pos));
    return out;
}

void MultiOrder::validate() const
{
    for (const auto & o : orders)
        if (o.size() != size()) throw InvalidInput("orders of a MultiOrder must share the ground set");
}

OrderedGraph MultiOrder::union_graph() const
{
    validate();
    OrderedGraph g(size());
    for (const auto & o : orders)
        for (int a = 0; a < size(); ++a) o.up(a).for_each([&](std::size_t b) { g.add_edge(a, static_cast<int>(b)); });
    return g;
}

PVectors p_vector(const std::vector<int> & clique, const MultiOrder & m)
{
    m.validate();
    const std::size_t k = clique.size();
    for (std::size_t a = 0; a < k; ++a) {
        if (clique[a] < 0 || clique[a] >= m.size()) throw InvalidInput("clique vertex out of range");
        for (std::size_t b = a + 1; b < k; ++b) {
            bool adj = false;
            for (const auto & o : m.orders) adj = adj || o.comparable(clique[a], clique[b]);
            if (!adj) throw InvalidInput("vertices do not form a clique of the union graph");
        }
    }
    PVectors out;
    out.p.assign(k, std::vector<int>(static_cast<std::size_t>(m.r()), 0));
    for (int i = 0; i < m.r(); ++i) {
        const auto & o = m.orders[static_cast<std::size_t>(i)];
        std::function<int(std::size_t)> chain_from = [&](std::size_t x) {
            int & memo = out.p[x][static_cast<std::size_t>(i)];
            if (memo > 0) return memo;
            int best = 1;
            for (std::size_t y = 0; y < k; ++y)
                if (o.less(clique[x], clique[y])) best = std::max(best, 1 + chain_from(y));
            return memo = best;
        };
        for (std::size_t x = 0; x < k; ++x) chain_from(x);
    }
    std::set<std::vector<int>> seen(out.p.begin(), out.p.end());
    out.injective = seen.size() == k;
    return out;
}

std::optional<R1Blowup> find_blowup_r1(const Poset & p, int h)
{
    if (h < 2) throw InvalidInput("h must be at least 2");
    const int n = p.size();
    const auto ext = linear_extension(p);
    // score[j][y]: best product of |D_1|..|D_{j+1}| with pivot x_{2(j+1)} = y
    std::vector<std::vector<double>> score(static_cast<std::size_t>(h - 1), std::vector<double>(static_cast<std::size_t>(n), 0.0));
    std::vector<std::vector<int>> from(static_cast<std::size_t>(h - 1), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int y = 0; y < n; ++y) score[0][static_cast<std::size_t>(y)] = static_cast<double>(p.down(y).count());
    for (int j = 1; j < h - 1; ++j)
        for (int y : ext)
            p.down(y).for_each([&](std::size_t x) {
                const double prev = score[static_cast<std::size_t>(j - 1)][x];
                if (prev <= 0) return;
                const double mid = static_cast<double>(Bitset::intersection_count(p.up(static_cast<int>(x)), p.down(y)));
                if (prev * mid > score[static_cast<std::size_t>(j)][static_cast<std::size_t>(y)]) {
                    score[static_cast<std::size_t>(j)][static_cast<std::size_t>(y)] = prev * mid;
                    from[static_cast<std::size_t>(j)][static_cast<std::size_t>(y)] = static_cast<int>(x);
                }
            });
    int best = -1;
    double best_score = 0.0;
    for (int y = 0; y < n; ++y) {
        const double s = score[static_cast<std::size_t>(h - 2)][static_cast<std::size_t>(y)] * static_cast<double>(p.up(y).count());
        if (s > best_score) {
            best_score = s;
            best = y;
        }
    }
    if (best < 0) return std::nullopt;

    R1Blowup out;
    for (int j = h - 2, y = best; j >= 0; y = from[static_cast<std::size_t>(j)][static_cast<std::size_t>(y)], --j) out.pivots.push_back(y);
    std::reverse(out.pivots.begin(), out.pivots.end());
    out.intervals.push_back(p.down(out.pivots.front()).to_vector());
    for (std::size_t i = 1; i < out.pivots.size(); ++i) out.intervals.push_back((p.up(out.pivots[i - 1]) & p.down(out.pivots[i])).to_vector());
    out.intervals.push_back(p.up(out.pivots.back()).to_vector());
    std::size_t t = out.intervals.front().size();
    for (const auto & d : out.intervals) t = std::min(t, d.size());
    for (const auto & d : out.intervals) out.blowup.parts.emplace_back(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(t));
    if (t == 0 || !verify_comparability_blowup(p, out.blowup)) throw InvariantViolation("r=1 blowup failed verification");
    return out;
}

bool verify_comparability_blowup(const Poset & p, const Blowup & b)
{
    if (!well_formed(p.size(), b.parts)) return false;
    for (std::size_t i = 0; i < b.parts.size(); ++i)
        for (std::size_t j = i + 1; j < b.parts.size(); ++j)
            for (int x : b.parts[i])
                for (int y : b.parts[j])
                    if (!p.comparable(x, y)) return false;
    return true;
}

MultiBlowupResult find_blowup_multi(const MultiOrder & m, int h, const MultiBlowupOptions & opt)
{
    if (h < 2) throw InvalidInput("h must be at least 2");
    if (m.r() < 1) throw InvalidInput("MultiOrder needs at least one order");
    m.validate();
    const int n = m.size();
    long long k = 1;
    for (int i = 0; i < m.r() && k <= n; ++i) k *= 2LL * h - 2;
    ++k;

    MultiBlowupResult res;
    res.tallies.assign(static_cast<std::size_t>(m.r()), 0);
    auto examine = [&](const std::vector<int> & clique) {
        ++res.cliques;
        auto pv = p_vector(clique, m);
        if (!pv.injective) ++res.injectivity_violations;
        for (int i = 0; i < m.r(); ++i) {
            bool tall = false;
            for (const auto & v : pv.p) tall = tall || v[static_cast<std::size_t>(i)] >= 2 * h - 1;
            if (tall) ++res.tallies[static_cast<std::size_t>(i)];
        }
    };

    if (k <= n) {
        const OrderedGraph g = m.union_graph();
        const auto kk = static_cast<std::size_t>(k);
        if (opt.source == CliqueSource::Exact) {
            std::vector<int> current;
            std::function<void(const Bitset &)> grow = [&](const Bitset & cand) {
                if (res.cliques >= opt.max_cliques) return;
                if (current.size() == kk) {
                    examine(current);
                    return;
                }
                if (current.size() + cand.count() < kk) return;
                for (std::size_t v = cand.first(); v < cand.size() && res.cliques < opt.max_cliques; v = cand.next(v + 1)) {
                    Bitset next = cand & g.neighbors(static_cast<int>(v));
                    next.keep_above(v);
                    current.push_back(static_cast<int>(v));
                    grow(next);
                    current.pop_back();
                }
            };
            grow(g.vertex_set());
        } else {
            std::mt19937_64 rng(opt.seed);
            for (std::uint64_t s = 0; s < opt.samples; ++s) {
                std::vector<int> clique{static_cast<int>(rng() % static_cast<std::uint64_t>(n))};
                Bitset cand = g.neighbors(clique[0]);
                while (clique.size() < kk && cand.any()) {
                    auto options = cand.to_vector();
                    int v = options[rng() % options.size()];
                    clique.push_back(v);
                    cand &= g.neighbors(v);
                }
                if (clique.size() == kk) {
                    std::sort(clique.begin(), clique.end());
                    examine(clique);
                }
            }
        }
    }
    if (res.cliques == 0) throw PreconditionFailed("no k-cliques found in the union graph");
    res.order = static_cast<int>(std::max_element(res.tallies.begin(), res.tallies.end()) - res.tallies.begin());
    res.blowup = find_blowup_r1(m.orders[static_cast<std::size_t>(res.order)], h);
    return res;
}

} // namespace blowup
