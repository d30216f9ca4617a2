#include "blowup/error.hpp"
#include "blowup/vc.hpp"

#include <doctest.h>

#include <random>

using namespace blowup;

namespace {

OrderedGraph random_graph(int n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    OrderedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// all subsets, traces as masks
int brute_vc(const SetSystem & f)
{
    int best = f.members.empty() ? 0 : 0;
    for (unsigned s = 1; s < (1U << f.n); ++s) {
        const int k = __builtin_popcount(s);
        if (k <= best) continue;
        std::vector<char> seen(1U << k, 0);
        int distinct = 0;
        for (const auto & m : f.members) {
            unsigned code = 0;
            int bit = 0;
            for (int x = 0; x < f.n; ++x)
                if (s >> x & 1) code |= static_cast<unsigned>(m.test(static_cast<std::size_t>(x))) << bit++;
            if (!seen[code]) {
                seen[code] = 1;
                ++distinct;
            }
        }
        if (distinct == (1 << k)) best = k;
    }
    return best;
}

SetSystem family(int n, const std::vector<std::vector<int>> & sets)
{
    SetSystem f;
    f.n = n;
    for (const auto & s : sets) f.members.push_back(to_bitset(s, n));
    return f;
}

} // namespace

TEST_CASE("shattering examples")
{
    auto k5 = SetSystem::neighborhoods(OrderedGraph::complete(5));
    CHECK(is_shattered(k5, std::vector<int>{}));
    CHECK(!is_shattered(k5, std::vector<int>{0, 3}));
    CHECK(is_shattered(k5, std::vector<int>{2}));
    auto all = family(2, {{}, {0}, {1}, {0, 1}});
    CHECK(is_shattered(all, std::vector<int>{0, 1}));
    std::vector<int> big(21);
    for (int i = 0; i < 21; ++i) big[static_cast<std::size_t>(i)] = i;
    auto wide = family(25, {{}});
    CHECK_THROWS_AS(is_shattered(wide, big), InvalidInput);
    CHECK_THROWS_AS(is_shattered(all, std::vector<int>{0, 0}), InvalidInput);
}

TEST_CASE("vc dimension examples")
{
    CHECK(vc_dimension(SetSystem::neighborhoods(OrderedGraph(6)), 5).dimension == 0);
    for (int n = 3; n <= 8; ++n) CHECK(vc_dimension(SetSystem::neighborhoods(OrderedGraph::complete(n)), 5).dimension == 1);
    auto all = family(3, {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
    auto r = vc_dimension(all, 3);
    CHECK(r.dimension == 3);
    CHECK(r.cap_hit);
    auto capped = vc_dimension(all, 2);
    CHECK(capped.dimension == 2);
    CHECK(capped.cap_hit);
    CHECK(is_shattered(all, capped.witness));
}

TEST_CASE("vc dimension against brute force")
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const int n = 4 + static_cast<int>(seed % 9);
        const double p = 0.2 + 0.6 * static_cast<double>(seed % 7) / 6;
        auto f = SetSystem::neighborhoods(random_graph(n, p, seed));
        auto r = vc_dimension(f, 10);
        CHECK(r.dimension == brute_vc(f));
        if (r.dimension > 0) CHECK(is_shattered(f, r.witness));
    }
}

TEST_CASE("packing")
{
    auto same = family(4, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(haussler_packing(same, 1).centers.size() == 1);
    auto singles = family(6, {{0}, {1}, {2}, {3}, {4}, {5}});
    CHECK(haussler_packing(singles, 2).centers.size() == 6);
    CHECK(haussler_packing(singles, 3).centers.size() == 1);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto f = SetSystem::neighborhoods(random_graph(40, 0.5, seed));
        const int s = 5 + static_cast<int>(seed % 20);
        auto r = haussler_packing(f, s);
        CHECK(check_packing(f, r).ok());
    }
    CHECK_THROWS_AS(haussler_packing(same, 0), InvalidInput);
}

TEST_CASE("biclique via packing")
{
    std::vector<int> sizes{200, 200};
    auto kb = complete_multipartite(sizes);
    auto r = biclique_via_packing(kb, 0.4);
    REQUIRE(r.biclique);
    CHECK(r.d == 1);
    CHECK(r.q == 5);
    CHECK(r.biclique->t() == r.q);
    CHECK(verify_blowup(kb, *r.biclique));

    PackingBicliqueOptions big;
    big.q = 60;
    auto r2 = biclique_via_packing(kb, 0.4, big);
    REQUIRE(r2.biclique);
    CHECK(r2.biclique->t() == 60);

    auto kn = OrderedGraph::complete(50);
    auto rk = biclique_via_packing(kn, 0.9);
    REQUIRE(rk.biclique);
    CHECK(verify_blowup(kn, *rk.biclique));

    CHECK_THROWS_AS(biclique_via_packing(random_graph(60, 0.05, 1), 0.3), PreconditionFailed);

    PackingBicliqueOptions huge;
    huge.q = 300;
    auto r3 = biclique_via_packing(kb, 0.4, huge);
    CHECK(!r3.biclique);
    CHECK(!r3.message.empty());
}

TEST_CASE("vc1 checks")
{
    std::vector<int> parts{4, 4, 4};
    CHECK(vc1_checks(complete_multipartite(parts)).clean());
    CHECK(vc1_checks(half_graph(40, 0.3)).clean());
    // C5
    std::vector<std::pair<int, int>> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    auto g5 = OrderedGraph::from_edges(5, c5);
    auto rep5 = vc1_checks(g5);
    CHECK(!rep5.clean());
    CHECK(vc_dimension(SetSystem::neighborhoods(g5), 4).dimension >= 2);
    REQUIRE(rep5.shattered_pair);
    auto f5 = SetSystem::neighborhoods(g5);
    CHECK(is_shattered(f5, std::vector<int>{rep5.shattered_pair->first, rep5.shattered_pair->second}));

    // triangle 0,1,2 plus a pendant vertex 3 on 0
    std::vector<std::pair<int, int>> tp{{0, 1}, {1, 2}, {0, 2}, {0, 3}};
    auto rep = vc1_checks(OrderedGraph::from_edges(4, tp));
    CHECK(rep.triangle_violations == 1);
    REQUIRE(rep.triangle_example);
    CHECK((*rep.triangle_example)[3] == 3);

    // a clean report never coexists with VC >= 2 witnesses from the two facts
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto g = random_graph(9, 0.5, seed);
        auto r = vc1_checks(g);
        auto f = SetSystem::neighborhoods(g);
        if (!r.clean()) {
            REQUIRE(r.shattered_pair);
            CHECK(is_shattered(f, std::vector<int>{r.shattered_pair->first, r.shattered_pair->second}));
            CHECK(vc_dimension(f, 4).dimension >= 2);
        }
        if (r.p5_example) {
            const auto & y = *r.p5_example;
            CHECK(g.adjacent(y[0], y[1]));
            CHECK(g.adjacent(y[1], y[2]));
            CHECK(g.adjacent(y[2], y[3]));
            CHECK(g.adjacent(y[3], y[4]));
            CHECK(!g.adjacent(y[0], y[3]));
            CHECK(!g.adjacent(y[1], y[3]));
            CHECK(!g.adjacent(y[1], y[4]));
        }
    }
}

TEST_CASE("dense vc1 biclique")
{
    std::vector<int> tri{100, 100, 100};
    auto g3 = complete_multipartite(tri);
    DenseVc1Options dense;
    dense.mode = Vc1Case::Dense;
    auto r3 = dense_vc1_biclique(g3, 0.6, dense);
    CHECK(r3.classes == 3);
    CHECK(r3.biclique.t() >= 100);
    CHECK(verify_blowup(g3, r3.biclique));

    std::vector<int> many(150, 2);
    auto gm = complete_multipartite(many);
    CHECK(gm.density() >= 0.99);
    auto rm = dense_vc1_biclique(gm, 0.99);
    CHECK(rm.used == Vc1Case::Dense);
    CHECK(rm.biclique.t() * 5 >= gm.size());
    CHECK(verify_blowup(gm, rm.biclique));

    auto hg = half_graph(400, 0.3);
    CHECK(hg.density() == doctest::Approx(0.3).epsilon(0.01));
    CHECK(vc_dimension(SetSystem::neighborhoods(hg), 3).dimension == 1);
    auto rh = dense_vc1_biclique(hg, 0.29);
    CHECK(rh.used == Vc1Case::Triple);
    CHECK(rh.laminar_pairs > 0);
    CHECK(rh.biclique.t() > 0);
    CHECK(verify_blowup(hg, rh.biclique));

    std::vector<int> two{100, 100};
    auto kb = complete_multipartite(two);
    auto rb = dense_vc1_biclique(kb, 0.5);
    CHECK(verify_blowup(kb, rb.biclique));
    // degree n/2 is below the 2n/3 trim
    CHECK_THROWS_AS(dense_vc1_biclique(kb, 0.5, dense), PreconditionFailed);

    std::vector<std::pair<int, int>> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    CHECK_THROWS_AS(dense_vc1_biclique(OrderedGraph::from_edges(5, c5), 0.4), PreconditionFailed);
    CHECK_THROWS_AS(dense_vc1_biclique(kb, 0.9), PreconditionFailed);
}

TEST_CASE("vc2 example")
{
    BicliqueOptions bo;
    bo.restarts = 5;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        auto ex = make_vc2_no_b2_example(120, seed, bo);
        CHECK(ex.c4_free);
        CHECK(ex.vc.dimension <= 2);
        CHECK(!ex.vc.cap_hit);
        CHECK(ex.density > 0.4);
        CHECK(ex.graph.edge_count() + ex.core.edge_count() == 120u * 119u / 2);
    }
    CHECK_THROWS_AS(make_vc2_no_b2_example(7, 1), InvalidInput);
}
