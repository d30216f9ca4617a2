#include "blowup/json_io.hpp"

#include "blowup/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace blowup::io {

namespace {

int get_int(const Json & j, const char * key)
{
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) throw InvalidInput(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

const Json & get_array(const Json & j, const char * key)
{
    if (!j.is_object() || !j.contains(key) || !j[key].is_array()) throw InvalidInput(std::string("missing array field \"") + key + "\"");
    return j[key];
}

std::vector<int> ints_from_json(const Json & j, const char * key, std::size_t expect)
{
    const auto & a = get_array(j, key);
    if (a.size() != expect) throw InvalidInput(std::string("field \"") + key + "\" has the wrong length");
    std::vector<int> out;
    for (const auto & x : a) {
        if (!x.is_number_integer()) throw InvalidInput(std::string("field \"") + key + "\" must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

} // namespace

Json parse_json(const std::string & text, const std::string & source)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error & e) {
        std::size_t line = 1, col = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        if (auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
        throw InvalidInput(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
    }
}

Json read_json_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

void write_text_file(const std::string & path, const std::string & text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
}

std::string dump(const Json & j) { return j.dump(2) + "\n"; }

Json pairs_to_json(const std::vector<std::pair<int, int>> & pairs)
{
    Json a = Json::array();
    for (auto [u, v] : pairs) a.push_back({u + 1, v + 1});
    return a;
}

std::vector<std::pair<int, int>> pairs_from_json(const Json & j, int n, const std::string & what)
{
    if (!j.is_array()) throw InvalidInput(what + " must be an array of pairs");
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto & p = j[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            throw InvalidInput(what + "[" + std::to_string(i) + "] is not a pair of integers");
        const int a = p[0].get<int>(), b = p[1].get<int>();
        if (a < 1 || b < 1 || a > n || b > n) throw InvalidInput(what + "[" + std::to_string(i) + "] has an endpoint outside 1.." + std::to_string(n));
        out.emplace_back(a - 1, b - 1);
    }
    return out;
}

Json sets_to_json(const std::vector<std::vector<int>> & sets)
{
    Json a = Json::array();
    for (const auto & s : sets) {
        Json row = Json::array();
        for (int v : s) row.push_back(v + 1);
        a.push_back(row);
    }
    return a;
}

Json to_json(const OrderedColoring & c)
{
    return Json{{"n", c.size()}, {"red", pairs_to_json(c.red_edges())}};
}

OrderedColoring coloring_from_json(const Json & j)
{
    const int n = get_int(j, "n");
    if (n < 0 || n > OrderedColoring::kMaxVertices) throw InvalidInput("coloring n must lie in 0..64");
    auto red = pairs_from_json(get_array(j, "red"), n, "red");
    for (auto [a, b] : red)
        if (a >= b) throw InvalidInput("red pairs must satisfy i < j");
    return OrderedColoring::from_red_edges(n, red);
}

Json to_json(const WitnessCertificate & cert)
{
    return Json{{"k", cert.k}, {"n", cert.n}, {"red", pairs_to_json(cert.coloring.red_edges())}, {"checked_at", cert.checked_at},
        {"checker_version", cert.checker_version}};
}

WitnessCertificate certificate_from_json(const Json & j)
{
    WitnessCertificate c;
    c.k = get_int(j, "k");
    c.n = get_int(j, "n");
    c.coloring = coloring_from_json(j);
    c.checked_at = j.value("checked_at", "");
    c.checker_version = j.value("checker_version", "");
    return c;
}

Json to_json(const FrontierSnapshot & f)
{
    Json pending = Json::array();
    for (const auto & c : f.pending) pending.push_back(to_json(c));
    return Json{{"n", f.n}, {"k", f.k}, {"completed", f.completed}, {"pending", pending}};
}

FrontierSnapshot frontier_from_json(const Json & j)
{
    FrontierSnapshot f;
    f.n = get_int(j, "n");
    f.k = get_int(j, "k");
    if (j.contains("completed")) f.completed = j["completed"].get<std::uint64_t>();
    for (const auto & c : get_array(j, "pending")) {
        auto col = coloring_from_json(c);
        if (col.size() >= f.n) throw InvalidInput("frontier prefix is not shorter than n");
        f.pending.push_back(std::move(col));
    }
    return f;
}

Json to_json(const OrderedGraph & g)
{
    return Json{{"n", g.size()}, {"edges", pairs_to_json(g.edges())}};
}

OrderedGraph graph_from_json(const Json & j)
{
    const int n = get_int(j, "n");
    if (n < 0) throw InvalidInput("graph n must be non-negative");
    auto edges = pairs_from_json(get_array(j, "edges"), n, "edges");
    return OrderedGraph::from_edges(n, edges);
}

Json to_json(const Poset & p)
{
    return Json{{"n", p.size()}, {"relations", pairs_to_json(p.relations())}};
}

Poset poset_from_json(const Json & j)
{
    const int n = get_int(j, "n");
    if (n < 0) throw InvalidInput("poset n must be non-negative");
    return Poset::from_relations(n, pairs_from_json(get_array(j, "relations"), n, "relations"));
}

Json to_json(const ConstructionGraph & cg)
{
    Json j = to_json(cg.graph);
    j["params"] = {{"k", cg.spec.k}, {"h", cg.spec.h}, {"n", cg.spec.n}, {"eps", cg.spec.eps}, {"seed", cg.spec.seed},
        {"center_points", cg.spec.center_points}};
    Json groups = Json::array(), subparts = Json::array(), cells = Json::array(), coords = Json::array(), types = Json::array();
    for (int v = 0; v < cg.graph.size(); ++v) {
        groups.push_back(cg.group[static_cast<std::size_t>(v)] + 1);
        subparts.push_back(cg.subpart[static_cast<std::size_t>(v)] + 1);
        cells.push_back(cg.cell[static_cast<std::size_t>(v)] + 1);
        coords.push_back(cg.coords[static_cast<std::size_t>(v)]);
    }
    for (auto [u, v] : cg.graph.edges()) types.push_back(cg.edge_type(u, v));
    j["groups"] = groups;
    j["subparts"] = subparts;
    j["cells"] = cells;
    j["coords"] = coords;
    j["edge_type"] = types;
    return j;
}

ConstructionGraph construction_from_json(const Json & j)
{
    ConstructionGraph cg;
    cg.graph = graph_from_json(j);
    const auto n = static_cast<std::size_t>(cg.graph.size());
    if (!j.contains("params") || !j["params"].is_object()) throw InvalidInput("missing object field \"params\"");
    const auto & s = j["params"];
    cg.spec.k = get_int(s, "k");
    cg.spec.h = get_int(s, "h");
    cg.spec.n = get_int(s, "n");
    cg.spec.eps = s.value("eps", 0.0);
    cg.spec.seed = s.value("seed", std::uint64_t{1});
    cg.spec.center_points = s.value("center_points", false);
    cg.spec.validate();
    if (static_cast<std::size_t>(cg.spec.n) != n) throw InvalidInput("spec.n differs from the graph size");
    for (int & x : cg.group = ints_from_json(j, "groups", n)) --x;
    for (int & x : cg.subpart = ints_from_json(j, "subparts", n)) --x;
    if (j.contains("cells")) {
        for (int & x : cg.cell = ints_from_json(j, "cells", n)) --x;
    } else {
        cg.cell.assign(n, -1);
    }
    const auto & coords = get_array(j, "coords");
    if (coords.size() != n) throw InvalidInput("field \"coords\" has the wrong length");
    for (const auto & c : coords) {
        if (!c.is_array() || c.size() != static_cast<std::size_t>(cg.spec.h)) throw InvalidInput("each coordinate must have h entries");
        cg.coords.push_back(c.get<Point>());
    }
    for (std::size_t v = 0; v < n; ++v)
        if (cg.group[v] < 0 || cg.group[v] >= cg.spec.groups() || cg.subpart[v] < 0 || cg.subpart[v] >= cg.spec.subparts())
            throw InvalidInput("group or subpart label out of range at vertex " + std::to_string(v + 1));
    if (j.contains("edge_type")) {
        const auto types = ints_from_json(j, "edge_type", cg.graph.edge_count());
        const auto edges = cg.graph.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (cg.edge_type(edges[i].first, edges[i].second) != types[i]) throw InvalidInput("edge_type disagrees with groups/subparts at edge " + std::to_string(i + 1));
    }
    return cg;
}

Json to_json(const Blowup & b)
{
    return Json{{"k", b.k()}, {"t", b.t()}, {"parts", sets_to_json(b.parts)}};
}

Json to_json(const DensityEstimate & d)
{
    return Json{{"r", d.r}, {"point", d.point}, {"samples", d.samples}, {"ci_halfwidth", d.ci_halfwidth}, {"exact", d.exact}, {"seed", d.seed}};
}

Json to_json(const ConstructionReport & r)
{
    Json path{{"length", r.path_length}, {"status", to_string(r.path.status)}, {"nodes", r.path.nodes}};
    if (r.path.status == SearchStatus::Found) {
        Json vs = Json::array();
        for (int v : r.path.vertices) vs.push_back(v + 1);
        path["vertices"] = vs;
    }
    Json kernel{{"holds", r.kernel.holds}, {"type2_edges", r.kernel.type2_edges}, {"pairs_checked", r.kernel.pairs_checked}};
    if (r.kernel.violation) {
        const auto & [e1, e2] = *r.kernel.violation;
        kernel["violation"] = pairs_to_json({e1, e2});
    }
    return Json{{"path", path}, {"kernel", kernel}, {"complement_density", to_json(r.complement_density)},
        {"biclique", {{"size", r.biclique_size}, {"exhaustive", r.biclique_exhaustive}}}};
}

Json to_json(const PartitionResult & r)
{
    const auto & p = r.params;
    Json j{{"params", {{"k", p.k}, {"eps", p.eps}, {"s", p.s}, {"l", p.l}, {"t", p.t}, {"q", p.q}}}};
    if (r.witness) {
        j["kind"] = "witness";
        j["witness"] = sets_to_json(*r.witness);
        return j;
    }
    j["kind"] = "partition";
    if (!r.partition) return j;
    const auto & part = *r.partition;
    Json v0 = Json::array();
    for (int v : part.v0) v0.push_back(v + 1);
    j["m0"] = part.m0;
    j["achieved"] = part.achieved;
    j["v0"] = v0;
    j["v0_exceeds"] = part.v0_exceeds;
    j["parts"] = sets_to_json(part.parts);
    j["interval"] = part.interval;
    j["group"] = part.group;
    j["level"] = part.level;
    j["inhomogeneous"] = pairs_to_json(part.inhomogeneous);
    j["inhomogeneous_fraction"] = part.inhomogeneous_fraction();
    return j;
}

Json to_json(const PartitionCheck & c)
{
    return Json{{"ok", c.ok()}, {"covers", c.covers}, {"equal_parts", c.equal_parts}, {"v0_small", c.v0_small}, {"list_exact", c.list_exact},
        {"fraction_ok", c.fraction_ok}, {"witness_ok", c.witness_ok}};
}

std::string to_dot(const OrderedGraph & g, const std::string & name)
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.size(); ++v) out << "  " << v + 1 << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u + 1 << " -- " << v + 1 << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace blowup::io
