#include "doctest.h"

#include "blowup/coloring.hpp"
#include "blowup/error.hpp"
#include "blowup/reference.hpp"

#include <random>

using namespace blowup;

namespace {

OrderedColoring red(int n, std::vector<std::pair<int, int>> one_based)
{
    for (auto & [a, b] : one_based) {
        --a;
        --b;
    }
    return OrderedColoring::from_red_edges(n, one_based);
}

std::set<std::pair<int, int>> one_based_arcs(const DependencyDigraph & d)
{
    std::set<std::pair<int, int>> s;
    for (auto [a, b] : d.arcs) s.insert({a + 1, b + 1});
    return s;
}

} // namespace

TEST_CASE("digraph of the three-vertex coloring with one red pair")
{
    auto c = red(3, {{1, 2}});
    CHECK(one_based_arcs(dependency_digraph(c)) == std::set<std::pair<int, int>>{{3, 1}, {3, 2}});
    CHECK(is_acyclic(dependency_digraph(c)));
    CHECK(is_admissible(c));
}

TEST_CASE("all blue and all red give empty digraphs")
{
    for (int n = 1; n <= 9; ++n) {
        CHECK(dependency_digraph(OrderedColoring(n)).arcs.empty());
        CHECK(dependency_digraph(OrderedColoring::all_red(n)).arcs.empty());
        CHECK(is_admissible(OrderedColoring(n)));
        CHECK(is_admissible(OrderedColoring::all_red(n)));
    }
}

TEST_CASE("two red pairs on four vertices")
{
    auto c = red(4, {{1, 2}, {3, 4}});
    std::set<std::pair<int, int>> want{{3, 1}, {3, 2}, {4, 1}, {4, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
    CHECK(one_based_arcs(dependency_digraph(c)) == want);
    CHECK_FALSE(is_admissible(c));
    CHECK_FALSE(is_acyclic(dependency_digraph(c)));
}

TEST_CASE("is_acyclic on hand-made digraphs")
{
    CHECK(is_acyclic(DependencyDigraph{5, {}}));
    CHECK_FALSE(is_acyclic(DependencyDigraph{3, {{0, 2}, {2, 0}}}));
    CHECK_FALSE(is_acyclic(DependencyDigraph{3, {{0, 1}, {1, 2}, {2, 0}}}));
    CHECK(is_acyclic(DependencyDigraph{3, {{0, 1}, {0, 2}, {1, 2}}}));
}

TEST_CASE("induce")
{
    auto c = red(4, {{1, 2}, {3, 4}});
    std::vector<int> v{0, 1, 2};
    auto s = induce(c, v);
    CHECK(s.coloring == red(3, {{1, 2}}));
    std::vector<int> all{0, 1, 2, 3};
    CHECK(induce(c, all).coloring == c);
    std::vector<int> one{2};
    CHECK(induce(c, one).coloring.size() == 1);
    std::vector<int> bad{2, 1};
    CHECK_THROWS_AS(induce(c, bad), InvalidInput);
    std::vector<int> out{0, 4};
    CHECK_THROWS_AS(induce(c, out), InvalidInput);

    std::mt19937_64 rng(7);
    auto r = ref::from_code(9, rng());
    std::vector<int> pick{1, 3, 4, 8};
    auto sub = induce(r, pick);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) CHECK(sub.coloring.is_red(a, b) == r.is_red(pick[static_cast<std::size_t>(a)], pick[static_cast<std::size_t>(b)]));
}

TEST_CASE("consecutiveness is taken inside the subset")
{
    // 1-3 red with 2 dropped: in the subset (1,3,4) the pair (1,3) is consecutive.
    auto c = red(4, {{1, 3}});
    std::vector<int> v{0, 2, 3};
    auto s = induce(c, v);
    CHECK(one_based_arcs(dependency_digraph(s.coloring)) == std::set<std::pair<int, int>>{{3, 1}, {3, 2}});
    CHECK(dependency_digraph(c).arcs.empty());
}

TEST_CASE("from_red_edges rejects bad input")
{
    std::vector<std::pair<int, int>> loop{{1, 1}}, dup{{0, 1}, {1, 0}}, range{{0, 5}};
    CHECK_THROWS_AS(OrderedColoring::from_red_edges(3, loop), InvalidInput);
    CHECK_THROWS_AS(OrderedColoring::from_red_edges(3, dup), InvalidInput);
    CHECK_THROWS_AS(OrderedColoring::from_red_edges(3, range), InvalidInput);
}

TEST_CASE("has_admissible_subset examples")
{
    auto c = red(4, {{1, 2}, {3, 4}});
    auto s = has_admissible_subset(c, 3);
    REQUIRE(s);
    CHECK(is_admissible(induce(c, *s).coloring));
    CHECK_FALSE(has_admissible_subset(c, 4));
    CHECK(*has_admissible_subset(OrderedColoring(6), 4) == std::vector<int>{0, 1, 2, 3});
    auto adm = red(5, {{1, 2}, {2, 3}});
    REQUIRE(is_admissible(adm));
    CHECK(*has_admissible_subset(adm, 5) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(has_admissible_subset(c, 0), InvalidInput);
    CHECK_THROWS_AS(has_admissible_subset(c, 5), InvalidInput);
}

TEST_CASE("digraph and admissibility agree with the literal loops for n <= 5")
{
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < total; ++code) {
            auto c = ref::from_code(n, code);
            auto d = dependency_digraph(c);
            auto want = ref::dependency_arcs(c);
            REQUIRE(one_based_arcs(d) == want);
            REQUIRE(is_admissible(c) == ref::acyclic(n, want));
            REQUIRE(is_acyclic(d) == ref::acyclic(n, want));
        }
    }
}

TEST_CASE("random agreement for n <= 8 and k-subset search")
{
    std::mt19937_64 rng(20261017);
    for (int it = 0; it < 3000; ++it) {
        const int n = 2 + static_cast<int>(rng() % 7);
        auto c = ref::from_code(n, rng());
        REQUIRE(one_based_arcs(dependency_digraph(c)) == ref::dependency_arcs(c));
        REQUIRE(is_admissible(c) == ref::admissible(c));
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        auto found = has_admissible_subset(c, k);
        REQUIRE(found.has_value() == ref::has_admissible_k_subset(c, k));
        if (found) REQUIRE(ref::admissible(ref::restrict_to(c, *found)));
    }
}

TEST_CASE("topological order respects arcs")
{
    std::mt19937_64 rng(3);
    for (int it = 0; it < 500; ++it) {
        auto c = ref::from_code(7, rng());
        auto order = dependency_topological_order(c);
        REQUIRE(order.has_value() == is_admissible(c));
        if (!order) continue;
        std::vector<int> pos(7);
        for (int i = 0; i < 7; ++i) pos[static_cast<std::size_t>((*order)[static_cast<std::size_t>(i)])] = i;
        for (auto [a, b] : dependency_digraph(c).arcs) CHECK(pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]);
    }
}

TEST_CASE("admissibility table matches direct checks")
{
    for (int k = 1; k <= 6; ++k) {
        const auto & t = AdmissibilityTable::get(k);
        const std::uint32_t total = 1U << (k * (k - 1) / 2);
        for (std::uint32_t p = 0; p < total; ++p) {
            OrderedColoring c(k);
            for (int j = 1; j < k; ++j)
                for (int i = 0; i < j; ++i)
                    if (p >> (j * (j - 1) / 2 + i) & 1U) c.set_color(i, j, Color::Red);
            REQUIRE(t.admissible(p) == ref::admissible(c));
        }
    }
}

TEST_CASE("monotonicity under restriction to a prefix")
{
    // Colorings on 5 vertices always have admissible 4-subsets, so extensions do too.
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        auto c = ref::from_code(6, rng());
        CHECK(has_admissible_subset(c, 4));
    }
}
