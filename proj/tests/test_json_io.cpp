#include "blowup/error.hpp"
#include "blowup/json_io.hpp"

#include <doctest.h>

using namespace blowup;
using io::Json;

TEST_CASE("coloring json is 1-based and byte stable")
{
    std::vector<std::pair<int, int>> red{{2, 3}, {0, 1}};
    auto c = OrderedColoring::from_red_edges(4, red);
    auto j = io::to_json(c);
    CHECK(io::dump(j) == "{\n  \"n\": 4,\n  \"red\": [\n    [\n      1,\n      2\n    ],\n    [\n      3,\n      4\n    ]\n  ]\n}\n");
    auto back = io::coloring_from_json(io::parse_json(io::dump(j)));
    CHECK(back == c);
    CHECK(io::dump(io::to_json(back)) == io::dump(j));
    CHECK_THROWS_AS(io::coloring_from_json(io::parse_json(R"({"n": 3, "red": [[0, 1]]})")), InvalidInput);
    CHECK_THROWS_AS(io::coloring_from_json(io::parse_json(R"({"n": 3, "red": [[2, 1]]})")), InvalidInput);
    CHECK_THROWS_AS(io::coloring_from_json(io::parse_json(R"({"red": []})")), InvalidInput);
}

TEST_CASE("parse errors carry line and column")
{
    try {
        io::parse_json("{\n  \"n\": 3,\n  \"edges\": [1, }\n", "g.json");
        FAIL("expected a parse error");
    } catch (const InvalidInput & e) {
        CHECK(std::string(e.what()).rfind("g.json:3:", 0) == 0);
    }
}

TEST_CASE("certificate and frontier round trip")
{
    auto c = OrderedColoring::from_red_edges(3, std::vector<std::pair<int, int>>{{0, 2}});
    auto cert = make_certificate(2, c);
    auto back = io::certificate_from_json(io::parse_json(io::dump(io::to_json(cert))));
    CHECK(back.k == 2);
    CHECK(back.n == 3);
    CHECK(back.coloring == c);
    CHECK(back.checked_at == cert.checked_at);
    CHECK(back.checker_version == kCheckerVersion);

    FrontierSnapshot f{7, 5, 12, {OrderedColoring(3), c}};
    auto fb = io::frontier_from_json(io::parse_json(io::dump(io::to_json(f))));
    CHECK(fb.n == 7);
    CHECK(fb.k == 5);
    CHECK(fb.completed == 12);
    CHECK(fb.pending == f.pending);
}

TEST_CASE("graph and poset round trip")
{
    auto g = OrderedGraph::from_edges(5, std::vector<std::pair<int, int>>{{0, 4}, {1, 2}});
    auto j = io::to_json(g);
    CHECK(j["edges"][0] == Json::array({1, 5}));
    CHECK(io::graph_from_json(j) == g);
    CHECK_THROWS_AS(io::graph_from_json(io::parse_json(R"({"n": 2, "edges": [[1, 1]]})")), InvalidInput);
    CHECK_THROWS_AS(io::graph_from_json(io::parse_json(R"({"n": 2, "edges": [[1, 3]]})")), InvalidInput);

    auto p = io::poset_from_json(io::parse_json(R"({"n": 3, "relations": [[1, 2], [2, 3]]})"));
    CHECK(p.less(0, 2));
    CHECK(io::poset_from_json(io::to_json(p)) == p);
    CHECK_THROWS_AS(io::poset_from_json(io::parse_json(R"({"n": 2, "relations": [[1, 2], [2, 1]]})")), InvalidInput);
    CHECK(io::to_dot(g).find("1 -- 5;") != std::string::npos);
}

TEST_CASE("construction round trip")
{
    ConstructionSpec spec;
    spec.k = 4;
    spec.h = 4;
    spec.n = 40;
    spec.eps = 0.3;
    spec.seed = 9;
    auto cg = build_construction(spec);
    const auto text = io::dump(io::to_json(cg));
    auto back = io::construction_from_json(io::parse_json(text));
    CHECK(back.graph == cg.graph);
    CHECK(back.coords == cg.coords);
    CHECK(back.group == cg.group);
    CHECK(check_construction_edges(back));
    CHECK(io::dump(io::to_json(back)) == text);
    CHECK(io::dump(io::to_json(build_construction(spec))) == text);

    auto bad = io::parse_json(text);
    bad["groups"][0] = 7;
    CHECK_THROWS_AS(io::construction_from_json(bad), InvalidInput);
}

TEST_CASE("report payloads")
{
    auto p = Poset::total_order(40);
    PartitionParams pp;
    pp.k = 3;
    pp.eps = 0.5;
    pp.s = 2;
    pp.l = 2;
    pp.t = 2;
    pp.q = 2;
    auto r = incomparability_partition(p, pp);
    auto j = io::to_json(r);
    CHECK(j["kind"] == "partition");
    CHECK(j["parts"][0][0].get<int>() >= 1);
    CHECK(io::to_json(check_partition_result(p, r))["ok"] == true);
    Blowup b{{{0, 1}, {2, 3}}};
    CHECK(io::to_json(b)["parts"] == Json::parse("[[1,2],[3,4]]"));
}
