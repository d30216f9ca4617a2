#include "doctest.h"

#include "blowup/error.hpp"
#include "blowup/ramsey_search.hpp"
#include "blowup/reference.hpp"

#include <random>

using namespace blowup;

TEST_CASE("small levels")
{
    CHECK(verify_level(3, 3).status == LevelStatus::Holds);
    CHECK(verify_level(1, 1).status == LevelStatus::Holds);
    auto r = verify_level(4, 4);
    REQUIRE(r.status == LevelStatus::Counterexample);
    REQUIRE(r.counterexample);
    CHECK_FALSE(has_admissible_subset(*r.counterexample, 4));
    std::vector<std::pair<int, int>> want{{0, 1}, {2, 3}};
    CHECK(r.counterexample->red_edges() == want);
}

TEST_CASE("levels agree with full enumeration for N <= 5")
{
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            bool holds = true;
            const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
            for (std::uint64_t code = 0; code < total && holds; ++code)
                holds = ref::has_admissible_k_subset(ref::from_code(n, code), k);
            CAPTURE(n);
            CAPTURE(k);
            CHECK((verify_level(n, k).status == LevelStatus::Holds) == holds);
        }
}

TEST_CASE("compute_f for small k")
{
    const int want[] = {0, 1, 2, 3, 5, 7};
    for (int k = 1; k <= 5; ++k) {
        auto r = compute_f(k);
        REQUIRE(r.f_value);
        CHECK(*r.f_value == want[k]);
        if (*r.f_value > k) {
            REQUIRE(r.witness);
            CHECK(r.witness->size() == *r.f_value - 1);
            CHECK(check_certificate(make_certificate(k, *r.witness)));
        }
    }
}

TEST_CASE("certificates")
{
    std::vector<std::pair<int, int>> red{{0, 1}, {2, 3}};
    auto c = OrderedColoring::from_red_edges(4, red);
    auto cert = make_certificate(4, c);
    CHECK(cert.checker_version == kCheckerVersion);
    CHECK_FALSE(cert.checked_at.empty());
    CHECK(check_certificate(cert));
    CHECK_FALSE(check_certificate(make_certificate(3, OrderedColoring(3))));
    cert.n = 5;
    CHECK_THROWS_AS(check_certificate(cert), InvalidInput);
}

TEST_CASE("timeout produces a frontier that resumes to the same verdict")
{
    SearchOptions opt;
    opt.budget = std::chrono::duration<double>(0.0);
    opt.split_vertices = 4;
    auto r = verify_level(7, 5, opt);
    REQUIRE(r.status == LevelStatus::Timeout);
    REQUIRE(r.frontier);
    CHECK(r.frontier->n == 7);
    for (const auto & p : r.frontier->pending)
        if (p.size() >= 5) CHECK_FALSE(has_admissible_subset(p, 5));
    auto resumed = resume_level(*r.frontier);
    CHECK(resumed.status == LevelStatus::Holds);
}

TEST_CASE("worker count does not change the answer")
{
    SearchOptions opt;
    opt.workers = 3;
    auto a = verify_level(8, 6, opt);
    auto b = verify_level(8, 6);
    REQUIRE(a.status == LevelStatus::Counterexample);
    REQUIRE(b.status == LevelStatus::Counterexample);
    CHECK(*a.counterexample == *b.counterexample);
}

TEST_CASE("blue layers")
{
    auto d = blue_layers(OrderedColoring(5));
    CHECK(d.sigma == std::vector<int>{5, 4, 3, 2, 1});
    auto all_red = blue_layers(OrderedColoring::all_red(4));
    CHECK(all_red.sigma == std::vector<int>{1, 1, 1, 1});
    REQUIRE(all_red.layers.size() == 1);
    CHECK(all_red.layers[0].size() == 4);
}

TEST_CASE("blue_layer_subset")
{
    CHECK(*blue_layer_subset(OrderedColoring(6), 4) == std::vector<int>{0, 1, 2, 3});
    CHECK(*blue_layer_subset(OrderedColoring::all_red(6), 4) == std::vector<int>{0, 1, 2, 3});
    std::mt19937_64 rng(5);
    for (int k = 3; k <= 5; ++k) {
        const int n = (k * k - k + 2) / 2;
        for (int it = 0; it < 500; ++it) {
            auto c = ref::from_code(n, rng());
            auto s = blue_layer_subset(c, k);
            REQUIRE(s);
            REQUIRE(static_cast<int>(s->size()) == k);
            REQUIRE(ref::admissible(ref::restrict_to(c, *s)));
        }
    }
}

TEST_CASE("restriction closure on random completions")
{
    std::mt19937_64 rng(9);
    for (int it = 0; it < 200; ++it) {
        auto prefix = ref::from_code(5, rng());
        if (!has_admissible_subset(prefix, 4)) continue;
        auto c = prefix;
        for (int v = 5; v < 8; ++v) c = c.with_vertex(rng() & ((std::uint64_t{1} << v) - 1));
        CHECK(has_admissible_subset(c, 4));
    }
}
