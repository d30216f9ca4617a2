#include "doctest.h"

#include "blowup/blowups.hpp"
#include "blowup/density.hpp"
#include "blowup/error.hpp"
#include "blowup/ordered_graph.hpp"
#include "blowup/paths.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace blowup;

namespace {

OrderedGraph random_graph(int n, double p, std::mt19937_64 & rng)
{
    std::bernoulli_distribution coin(p);
    OrderedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

OrderedGraph path_graph(int m)
{
    OrderedGraph g(m);
    for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
    return g;
}

// Complete multipartite graph on consecutive blocks.
OrderedGraph multipartite(const std::vector<int> & sizes)
{
    int n = 0;
    std::vector<int> block;
    for (std::size_t b = 0; b < sizes.size(); ++b)
        for (int i = 0; i < sizes[b]; ++i, ++n) block.push_back(static_cast<int>(b));
    OrderedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (block[static_cast<std::size_t>(u)] != block[static_cast<std::size_t>(v)]) g.add_edge(u, v);
    return g;
}

bool brute_path(const OrderedGraph & g, int m)
{
    const int n = g.size();
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (m > n) return false;
    while (true) {
        bool ok = true;
        for (int a = 0; a < m && ok; ++a)
            for (int b = a + 1; b < m && ok; ++b)
                ok = g.adjacent(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]) == (b == a + 1);
        if (ok) return true;
        int i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

TEST_CASE("complement")
{
    CHECK(complement(OrderedGraph::complete(6)).edge_count() == 0);
    std::vector<std::pair<int, int>> e{{0, 1}};
    auto g = OrderedGraph::from_edges(3, e);
    std::vector<std::pair<int, int>> want{{0, 2}, {1, 2}};
    CHECK(complement(g).edges() == want);
    std::mt19937_64 rng(1);
    auto r = random_graph(40, 0.3, rng);
    CHECK(complement(complement(r)) == r);
    std::vector<std::pair<int, int>> loop{{2, 2}};
    CHECK_THROWS_AS(OrderedGraph::from_edges(3, loop), InvalidInput);
}

TEST_CASE("induced monotone paths: examples")
{
    auto p = find_induced_monotone_path(path_graph(6), 6);
    REQUIRE(p.status == SearchStatus::Found);
    CHECK(p.vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(find_induced_monotone_path(OrderedGraph::complete(10), 3).status == SearchStatus::None);
    CHECK(find_induced_monotone_path(OrderedGraph::complete(10), 2).status == SearchStatus::Found);
    std::mt19937_64 rng(2);
    auto g = random_graph(60, 0.5, rng);
    CHECK(find_induced_monotone_path(g, 12, 5).status == SearchStatus::Timeout);
    CHECK_THROWS_AS(find_induced_monotone_path(g, 0), InvalidInput);
}

TEST_CASE("induced monotone paths agree with enumeration")
{
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        const int n = 6 + static_cast<int>(rng() % 9);
        const int m = 2 + static_cast<int>(rng() % 5);
        auto g = random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
        auto r = find_induced_monotone_path(g, m);
        REQUIRE((r.status == SearchStatus::Found) == brute_path(g, m));
        if (r.status == SearchStatus::Found) REQUIRE(is_induced_monotone_path(g, r.vertices));
    }
    auto g = random_graph(30, 0.5, rng);
    auto r = find_induced_monotone_path(g, 5);
    CHECK((r.status == SearchStatus::Found) == brute_path(g, 5));
}

TEST_CASE("clique intervals")
{
    auto g = multipartite({1, 1, 1, 2, 1});
    auto iv = clique_intervals(g);
    std::vector<std::pair<int, int>> want{{0, 3}, {4, 5}};
    CHECK(iv == want);
}

TEST_CASE("clique density")
{
    CHECK(clique_density(OrderedGraph::complete(8), 3).point == 1.0);
    CHECK(clique_density(OrderedGraph(8), 2).point == 0.0);
    auto k4 = OrderedGraph::complete(4);
    OrderedGraph g(5);
    for (auto [u, v] : k4.edges()) g.add_edge(u, v);
    auto d = clique_density(g, 3);
    CHECK(d.exact);
    CHECK(d.ci_halfwidth == 0.0);
    CHECK(d.point == doctest::Approx(0.4));
    CHECK(clique_density(complement(OrderedGraph(7)), 5).point == 1.0);
    DensityOptions big;
    big.exact_cap = 5;
    CHECK_THROWS_AS(clique_density(g, 2, big), InvalidInput);
    CHECK_THROWS_AS(clique_density(g, 6), InvalidInput);
}

TEST_CASE("sampled density stays inside its interval")
{
    std::mt19937_64 rng(4);
    int misses = 0;
    for (int it = 0; it < 100; ++it) {
        const int n = 8 + static_cast<int>(rng() % 13);
        const int r = 2 + static_cast<int>(rng() % 3);
        auto g = random_graph(n, 0.6, rng);
        double exact = clique_density(g, r).point;
        DensityOptions o;
        o.mode = DensityMode::Sample;
        o.samples = 20000;
        o.seed = static_cast<std::uint64_t>(it);
        auto est = clique_density(g, r, o);
        CHECK_FALSE(est.exact);
        misses += std::abs(est.point - exact) > est.ci_halfwidth;
    }
    CHECK(misses == 0);
}

TEST_CASE("sampling does not depend on worker count")
{
    std::mt19937_64 rng(5);
    auto g = random_graph(30, 0.5, rng);
    DensityOptions o;
    o.mode = DensityMode::Sample;
    o.samples = 50000;
    o.seed = 42;
    auto a = clique_density(g, 3, o);
    o.workers = 4;
    auto b = clique_density(g, 3, o);
    CHECK(a.point == b.point);
}

TEST_CASE("find_blowup examples")
{
    auto g = multipartite({3, 3, 3});
    auto r = find_blowup(g, 3, 3);
    REQUIRE(r.blowup);
    CHECK(r.blowup->parts == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    CHECK(verify_blowup(g, *r.blowup, true));

    auto none = find_blowup(OrderedGraph(6), 2, 1);
    CHECK_FALSE(none.blowup);
    CHECK(none.exhaustive);

    std::mt19937_64 rng(6);
    for (int it = 0; it < 5; ++it) {
        auto h = random_graph(60, 0.15, rng);
        std::vector<int> perm(60);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int a = 0; a < 8; ++a)
            for (int b = 8; b < 16; ++b) h.add_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        auto found = find_blowup(h, 2, 8);
        REQUIRE(found.blowup);
        CHECK(verify_blowup(h, *found.blowup));
        auto bic = find_balanced_biclique(h);
        REQUIRE(bic.blowup);
        CHECK(bic.blowup->t() >= 8);
        CHECK(verify_blowup(h, *bic.blowup));
    }
}

TEST_CASE("greedy blowup mode only returns verified structures")
{
    auto g = multipartite({10, 10, 10});
    auto r = find_blowup(g, 3, 10);
    REQUIRE(r.blowup);
    CHECK(verify_blowup(g, *r.blowup));
    CHECK_FALSE(r.exhaustive);
}

TEST_CASE("balanced biclique")
{
    auto g = multipartite({5, 7});
    auto r = find_balanced_biclique(g);
    REQUIRE(r.blowup);
    CHECK(r.blowup->t() == 5);
    CHECK(r.exhaustive);
    CHECK(find_balanced_biclique(OrderedGraph::complete(6)).blowup->t() == 3);
    CHECK_FALSE(find_balanced_biclique(OrderedGraph(6)).blowup);
    BicliqueOptions greedy;
    greedy.exact_cap = 0;
    auto gr = find_balanced_biclique(multipartite({20, 20}), greedy);
    REQUIRE(gr.blowup);
    CHECK(gr.blowup->t() == 20);
}

TEST_CASE("strict mode checks independence")
{
    auto g = OrderedGraph::complete(4);
    Blowup b{{{0, 1}, {2, 3}}};
    CHECK(verify_blowup(g, b));
    CHECK_FALSE(verify_blowup(g, b, true));
    Blowup uneven{{{0, 1}, {2}}};
    CHECK_FALSE(verify_blowup(g, uneven));
}

TEST_CASE("amplifier")
{
    auto g = multipartite({20, 20, 20});
    std::vector<std::vector<int>> parts(3);
    for (int v = 0; v < 60; ++v) parts[static_cast<std::size_t>(v / 20)].push_back(v);

    auto none = amplify_blowup(g, parts, {}, exact_biclique_oracle());
    REQUIRE(none.parts);
    CHECK(*none.parts == parts);

    auto bip = multipartite({10, 10});
    std::vector<std::vector<int>> two{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {10, 11, 12, 13, 14, 15, 16, 17, 18, 19}};
    auto one = amplify_blowup(bip, two, {{0, 1}}, exact_biclique_oracle());
    REQUIRE(one.parts);
    CHECK(*one.parts == two);

    std::vector<std::pair<int, int>> k3{{0, 1}, {0, 2}, {1, 2}};
    auto tri = amplify_blowup(g, parts, k3, exact_biclique_oracle());
    REQUIRE(tri.parts);
    CHECK((*tri.parts)[0].size() > 0);
    CHECK(verify_pattern_blowup(g, *tri.parts, k3));

    auto empty = amplify_blowup(OrderedGraph(60), parts, {{0, 1}}, exact_biclique_oracle());
    CHECK_FALSE(empty.parts);
    REQUIRE(empty.failed_edge);
    CHECK(*empty.failed_edge == std::pair<int, int>{0, 1});

    BicliqueOracle liar = [](const OrderedGraph &, const std::vector<int> & x, const std::vector<int> &) {
        return std::optional{std::make_pair(std::vector<int>{x[0]}, std::vector<int>{x[1]})};
    };
    auto bad = amplify_blowup(g, parts, k3, liar);
    CHECK_FALSE(bad.parts);
    CHECK(bad.failed_edge);
}

TEST_CASE("embed_monotone_path")
{
    const int k = 3;
    std::vector<std::vector<int>> sets;
    for (int j = 0; j < 2 * k; ++j) sets.push_back({4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3});
    OrderedGraph g(8 * k);
    for (int j = 0; j + 1 < 2 * k; ++j)
        for (int a : sets[static_cast<std::size_t>(j)])
            for (int b : sets[static_cast<std::size_t>(j + 1)]) g.add_edge(a, b);
    std::vector<std::pair<int, int>> red{{0, 1}};
    auto chi = OrderedColoring::from_red_edges(k, red);
    auto p = embed_monotone_path(g, sets, chi);
    REQUIRE(p);
    CHECK(is_induced_monotone_path(g, *p));
    CHECK(embed_monotone_path(g, sets, OrderedColoring(k)));
    CHECK(embed_monotone_path(g, sets, OrderedColoring::all_red(k)));

    CHECK_FALSE(embed_monotone_path(OrderedGraph::complete(8 * k), sets, chi));

    std::vector<std::pair<int, int>> cyc{{0, 1}, {2, 3}};
    std::vector<std::vector<int>> eight;
    for (int j = 0; j < 8; ++j) eight.push_back({j});
    CHECK_THROWS_AS(embed_monotone_path(OrderedGraph(8), eight, OrderedColoring::from_red_edges(4, cyc)), InvalidInput);
}
