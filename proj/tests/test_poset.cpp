#include "blowup/error.hpp"
#include "blowup/poset.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace blowup;

namespace {

Poset antichain(int n) { return Poset::from_relations(n, {}); }

// brute force over all subsets, n <= 12
int brute_longest_chain(const Poset & p, const std::vector<int> & subset)
{
    const int m = static_cast<int>(subset.size());
    int best = 0;
    for (int mask = 1; mask < (1 << m); ++mask) {
        bool chain = true;
        for (int i = 0; i < m && chain; ++i)
            for (int j = i + 1; j < m && chain; ++j)
                if ((mask >> i & 1) && (mask >> j & 1)) chain = p.comparable(subset[i], subset[j]);
        if (chain) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
    }
    return best;
}

int brute_largest_antichain(const Poset & p, const std::vector<int> & subset)
{
    const int m = static_cast<int>(subset.size());
    int best = 0;
    for (int mask = 1; mask < (1 << m); ++mask) {
        bool anti = true;
        for (int i = 0; i < m && anti; ++i)
            for (int j = i + 1; j < m && anti; ++j)
                if ((mask >> i & 1) && (mask >> j & 1)) anti = !p.comparable(subset[i], subset[j]);
        if (anti) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
    }
    return best;
}

bool is_chain(const Poset & p, const std::vector<int> & c)
{
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (!p.less(c[i], c[i + 1])) return false;
    return true;
}

} // namespace

TEST_CASE("closure and validation")
{
    std::vector<std::pair<int, int>> rel{{0, 1}, {1, 2}, {2, 3}};
    auto p = Poset::from_relations(4, rel);
    CHECK(p.less(0, 3));
    CHECK(p.relation_count() == 6);
    auto again = Poset::from_relations(4, p.relations());
    CHECK(again == p);
    std::vector<std::pair<int, int>> cyc{{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(Poset::from_relations(3, cyc), InvalidInput);
    std::vector<std::pair<int, int>> loop{{1, 1}};
    CHECK_THROWS_AS(Poset::from_relations(3, loop), InvalidInput);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto r = random_dag_poset(25, 0.15, seed);
        CHECK(Poset::from_relations(25, r.relations()) == r);
        for (int a = 0; a < 25; ++a) CHECK(!r.less(a, a));
    }
}

TEST_CASE("linear extension uses smallest ready element")
{
    std::vector<std::pair<int, int>> rel{{2, 0}, {3, 1}};
    auto p = Poset::from_relations(4, rel);
    CHECK(linear_extension(p) == std::vector<int>{2, 0, 3, 1});
    auto q = random_dag_poset(60, 0.1, 3);
    auto ext = linear_extension(q);
    std::vector<int> pos(60);
    for (int i = 0; i < 60; ++i) pos[static_cast<std::size_t>(ext[static_cast<std::size_t>(i)])] = i;
    for (auto [a, b] : q.relations()) CHECK(pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]);
}

TEST_CASE("incomparability graph examples")
{
    CHECK(incomparability_graph(Poset::total_order(6)).graph.edge_count() == 0);
    CHECK(incomparability_graph(antichain(6)).graph.edge_count() == 15);
    std::vector<std::pair<int, int>> rel{{0, 1}};
    auto g = incomparability_graph(Poset::from_relations(3, rel));
    // order is 0,1,2 so positions are element ids
    CHECK(g.order == std::vector<int>{0, 1, 2});
    CHECK(g.graph.edge_count() == 2);
    CHECK(g.graph.adjacent(0, 2));
    CHECK(g.graph.adjacent(1, 2));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto p = random_dag_poset(30, 0.1, seed);
        auto inc = incomparability_graph(p);
        auto com = comparability_graph(p);
        CHECK(inc.order == com.order);
        CHECK(inc.graph.edge_count() + com.graph.edge_count() == 30 * 29 / 2);
        for (int i = 0; i < 30; ++i)
            for (int j = i + 1; j < 30; ++j) CHECK(inc.graph.adjacent(i, j) != com.graph.adjacent(i, j));
        CHECK(comparability_graph_by_element(p).edge_count() == p.relation_count());
    }
}

TEST_CASE("longest chain")
{
    CHECK(longest_chain(Poset::total_order(9)).size() == 9);
    CHECK(longest_chain(antichain(9)).size() == 1);
    CHECK(longest_chain(antichain(0)).empty());
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const int n = 3 + static_cast<int>(seed % 8);
        auto p = seed % 2 ? random_dag_poset(n, 0.3, seed) : random_perm2_poset(n, seed);
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        auto c = longest_chain(p);
        CHECK(is_chain(p, c));
        CHECK(static_cast<int>(c.size()) == brute_longest_chain(p, all));
        auto layers = height_layers(p, all);
        CHECK(layers.size() == c.size());
        for (const auto & l : layers)
            for (std::size_t i = 0; i < l.size(); ++i)
                for (std::size_t j = i + 1; j < l.size(); ++j) CHECK(!p.comparable(l[i], l[j]));
    }
}

TEST_CASE("chain or antichain examples")
{
    auto d = chain_or_antichain(Poset::total_order(12), 3, 4, 2);
    REQUIRE(d.kind == Dichotomy::Kind::Chain);
    REQUIRE(d.chain.blocks.size() == 3);
    CHECK(relate(Poset::total_order(12), d.chain.blocks[0], d.chain.blocks[1]) == PairRelation::Below);
    auto a = chain_or_antichain(antichain(12), 3, 2, 4);
    REQUIRE(a.kind == Dichotomy::Kind::Antichain);
    CHECK(a.antichain.size() == 3);
    for (const auto & s : a.antichain) CHECK(s.size() == 4);
    CHECK_THROWS_AS(chain_or_antichain(antichain(3), 0, 1, 1), InvalidInput);
}

TEST_CASE("neither is confirmed by brute force")
{
    int neither = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 4 + static_cast<int>(rng() % 9);
        auto p = random_dag_poset(n, 0.25, seed);
        const int l = 2, t = 1 + static_cast<int>(rng() % 3), q = 1 + static_cast<int>(rng() % 3);
        auto d = chain_or_antichain(p, l, t, q);
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        if (d.kind == Dichotomy::Kind::Neither) {
            ++neither;
            CHECK(brute_longest_chain(p, all) < l * t);
            // Mirsky layers give the largest layer only, an antichain of size >= l*q may still exist
            CHECK(static_cast<int>(d.largest_layer.size()) < l * q);
        } else if (d.kind == Dichotomy::Kind::Chain) {
            std::vector<int> flat;
            for (const auto & b : d.chain.blocks) flat.insert(flat.end(), b.begin(), b.end());
            CHECK(is_chain(p, flat));
        } else {
            for (std::size_t i = 0; i < d.antichain.size(); ++i)
                for (std::size_t j = i + 1; j < d.antichain.size(); ++j)
                    CHECK(relate(p, d.antichain[i], d.antichain[j]) == PairRelation::Incomparable);
            CHECK(brute_largest_antichain(p, all) >= l * q);
        }
    }
    CHECK(neither > 0);
}

TEST_CASE("partition on a total order")
{
    PartitionParams pp;
    pp.k = 3;
    pp.eps = 0.5;
    pp.s = 4;
    pp.l = 3;
    pp.t = 5;
    pp.q = 2;
    auto p = Poset::total_order(240);
    auto r = incomparability_partition(p, pp);
    REQUIRE(r.partition);
    CHECK(r.partition->inhomogeneous.empty());
    CHECK(check_partition_result(p, r).ok());
    for (const auto & a : audit_partition(p, *r.partition)) CHECK(a.ok());
}

TEST_CASE("partition on an antichain gives a witness")
{
    PartitionParams pp;
    pp.k = 3;
    pp.eps = 0.5;
    pp.s = 2;
    pp.l = 2;
    pp.t = 2;
    pp.q = 4;
    auto p = antichain(60);
    auto r = incomparability_partition(p, pp);
    REQUIRE(r.witness);
    CHECK(r.witness->size() == 3);
    CHECK(check_partition_result(p, r).witness_ok);
}

TEST_CASE("partition parameters")
{
    auto r = resolve_params({}, 100000);
    CHECK(r.s == 20);
    CHECK(r.l == 60);
    CHECK(r.t == 1);
    CHECK(r.q == 1);
    PartitionParams bad;
    bad.eps = 1.5;
    CHECK_THROWS_AS(resolve_params(bad, 100), InvalidInput);
    PartitionParams big;
    big.t = 50;
    CHECK_THROWS_AS(resolve_params(big, 1000), InvalidInput);
}

TEST_CASE("random partitions pass the checker and Claim 5.2")
{
    PartitionParams pp;
    pp.k = 3;
    pp.eps = 0.5;
    pp.s = 2;
    pp.l = 4;
    pp.t = 3;
    pp.q = 8;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto p = random_dag_poset(600, seed % 2 ? 0.1 : 0.3, seed);
        auto r = incomparability_partition(p, pp);
        auto c = check_partition_result(p, r);
        CHECK(c.ok());
        if (r.partition) {
            CHECK(c.list_exact);
            auto audits = audit_partition(p, *r.partition);
            CHECK(!audits.empty());
            for (const auto & a : audits) CHECK(a.ok());
        }
    }
}

TEST_CASE("claim 5.2 audit examples")
{
    auto p = Poset::total_order(20);
    std::vector<int> pos(20);
    for (int i = 0; i < 20; ++i) pos[static_cast<std::size_t>(i)] = i;
    ChainBlocks low{{{0, 1}, {2, 3}, {4, 5}}, true};
    ChainBlocks high{{{10, 11}, {12, 13}, {14, 15}}, true};
    auto a = claim52_audit(p, low, high, pos);
    CHECK(a.inhomogeneous.empty());
    CHECK(a.ok());
    CHECK_THROWS_AS(claim52_audit(p, high, low, pos), PreconditionFailed);

    // two chains 0<1<2<3 and 4<5<6<7 with nothing between
    std::vector<std::pair<int, int>> rel{{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}};
    auto two = Poset::from_relations(8, rel);
    std::vector<int> p2(8);
    for (int i = 0; i < 8; ++i) p2[static_cast<std::size_t>(i)] = i;
    auto b = claim52_audit(two, {{{0}, {1}, {2}, {3}}, true}, {{{4}, {5}, {6}, {7}}, true}, p2);
    CHECK(b.inhomogeneous.empty());
}

TEST_CASE("p vectors")
{
    MultiOrder one{{Poset::total_order(5)}};
    auto pv = p_vector({0, 1, 2, 3, 4}, one);
    for (int i = 0; i < 5; ++i) CHECK(pv.p[static_cast<std::size_t>(i)][0] == 5 - i);
    CHECK(pv.injective);

    std::vector<std::pair<int, int>> rev{{2, 1}, {1, 0}};
    MultiOrder two{{Poset::total_order(3), Poset::from_relations(3, rev)}};
    auto p2 = p_vector({0, 1, 2}, two);
    CHECK(p2.p[0] == std::vector<int>{3, 1});
    CHECK(p2.p[1] == std::vector<int>{2, 2});
    CHECK(p2.p[2] == std::vector<int>{1, 3});

    MultiOrder anti{{antichain(3)}};
    CHECK_THROWS_AS(p_vector({0, 1}, anti), InvalidInput);
}

TEST_CASE("r = 1 blowups")
{
    auto blocks = block_poset({5, 5, 5});
    auto b = find_blowup_r1(blocks, 2);
    REQUIRE(b);
    CHECK(b->blowup.k() == 2);
    CHECK(b->blowup.t() >= 5);
    CHECK(verify_comparability_blowup(blocks, b->blowup));

    CHECK(!find_blowup_r1(antichain(10), 2));

    auto tot = find_blowup_r1(Poset::total_order(9), 2);
    REQUIRE(tot);
    CHECK(tot->pivots == std::vector<int>{4});
    CHECK(tot->blowup.t() == 4);

    auto h3 = find_blowup_r1(block_poset({4, 4, 4, 4, 4}), 3);
    REQUIRE(h3);
    CHECK(h3->blowup.k() == 3);
    CHECK(h3->blowup.t() == 4);
    CHECK_THROWS_AS(find_blowup_r1(blocks, 1), InvalidInput);
}

TEST_CASE("multi-order blowups")
{
    MultiOrder m{{Poset::total_order(12), antichain(12)}};
    auto r = find_blowup_multi(m, 2);
    CHECK(r.order == 0);
    REQUIRE(r.blowup);
    CHECK(verify_comparability_blowup(m.orders[0], r.blowup->blowup));
    CHECK(r.injectivity_violations == 0);

    MultiOrder none{{antichain(12), antichain(12)}};
    CHECK_THROWS_AS(find_blowup_multi(none, 2), PreconditionFailed);

    MultiOrder single{{block_poset({5, 5, 5})}};
    auto s = find_blowup_multi(single, 2);
    CHECK(s.order == 0);
    REQUIRE(s.blowup);
    CHECK(s.blowup->blowup.t() >= 5);

    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const int n = 20 + static_cast<int>(seed % 21);
        MultiOrder mo{{random_perm2_poset(n, seed), random_dag_poset(n, 0.2, seed + 100)}};
        MultiBlowupOptions opt;
        opt.max_cliques = 20000;
        try {
            auto res = find_blowup_multi(mo, 2, opt);
            CHECK(res.injectivity_violations == 0);
            REQUIRE(res.blowup);
            CHECK(verify_comparability_blowup(mo.orders[static_cast<std::size_t>(res.order)], res.blowup->blowup));
        } catch (const PreconditionFailed &) {
        }
        opt.source = CliqueSource::Sampled;
        opt.seed = seed;
        try {
            CHECK(find_blowup_multi(mo, 2, opt).injectivity_violations == 0);
        } catch (const PreconditionFailed &) {
        }
    }
}
