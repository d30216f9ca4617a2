// blowup: command-line front end.
// Report: {"command", "config", "result", "timings", "version"}; exit 0 ok, 2 verified negative, 1 error.
#include "blowup/blowups.hpp"
#include "blowup/coloring.hpp"
#include "blowup/density.hpp"
#include "blowup/error.hpp"
#include "blowup/experiments.hpp"
#include "blowup/json_io.hpp"
#include "blowup/paths.hpp"
#include "blowup/poset.hpp"
#include "blowup/ramsey_search.hpp"
#include "blowup/sphere.hpp"
#include "blowup/vc.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace blowup;
using io::Json;

namespace {

constexpr const char * kVersion = "blowup 1.0.0";

enum Exit { Ok = 0, Error = 1, Negative = 2 };

struct Globals {
    std::uint64_t seed = 1;
    double budget = 0; // seconds, 0 = none
    int workers = 1;
    std::string out;
    std::string format = "json";
};

struct Outcome {
    int code = Ok;
    Json result = Json::object();
    std::optional<OrderedGraph> graph; // for --format dot
    Json rows;                          // for --format csv, array of flat objects
    std::string artifact;               // raw object written to --out by generators
};

std::string csv_cell(const Json & v)
{
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string to_csv(const Outcome & o)
{
    std::ostringstream s;
    if (o.rows.is_array() && !o.rows.empty()) {
        std::vector<std::string> keys;
        for (auto it = o.rows.front().begin(); it != o.rows.front().end(); ++it) keys.push_back(it.key());
        for (std::size_t i = 0; i < keys.size(); ++i) s << (i ? "," : "") << keys[i];
        s << '\n';
        for (const auto & row : o.rows) {
            for (std::size_t i = 0; i < keys.size(); ++i) s << (i ? "," : "") << csv_cell(row.value(keys[i], Json()));
            s << '\n';
        }
        return s.str();
    }
    s << "key,value\n";
    for (auto it = o.result.begin(); it != o.result.end(); ++it)
        if (!it->is_structured()) s << it.key() << ',' << csv_cell(*it) << '\n';
    return s.str();
}

Json stats_json(const SearchStats & st)
{
    return {{"nodes", st.nodes}, {"prunes", st.prunes}, {"subset_checks", st.subset_checks}, {"frontier_items", st.frontier_items},
        {"frontier_completed", st.frontier_completed}};
}

SearchOptions search_options(const Globals & g)
{
    SearchOptions o;
    o.workers = g.workers;
    if (g.budget > 0) o.budget = std::chrono::duration<double>(g.budget);
    return o;
}

Json load(const std::string & path) { return io::read_json_file(path); }

OrderedGraph load_graph(const std::string & path)
{
    Json j = load(path);
    if (j.contains("result") && j["result"].contains("graph")) j = j["result"]["graph"];
    return io::graph_from_json(j);
}

Poset load_poset(const std::string & path)
{
    Json j = load(path);
    if (j.contains("result") && j["result"].contains("poset")) j = j["result"]["poset"];
    return io::poset_from_json(j);
}

std::vector<std::pair<int, int>> parse_pattern(const std::string & text)
{
    // "0-1,1-2" (0-based) or a name: K2 K3 K4 P3 P4 C4
    if (text == "K2") return {{0, 1}};
    if (text == "K3") return {{0, 1}, {0, 2}, {1, 2}};
    if (text == "K4") return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    if (text == "P3") return {{0, 1}, {1, 2}};
    if (text == "P4") return {{0, 1}, {1, 2}, {2, 3}};
    if (text == "C4") return {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    std::vector<std::pair<int, int>> h;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw InvalidInput("bad pattern edge \"" + item + "\"");
        h.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    if (h.empty()) throw InvalidInput("empty pattern");
    return h;
}

// ---- ramsey

Outcome ramsey_f(const Globals & g, int k, const std::string & resume, const std::string & frontier_out)
{
    Outcome o;
    auto opt = search_options(g);
    if (!resume.empty()) {
        auto snap = io::frontier_from_json(load(resume));
        auto lv = resume_level(snap, opt);
        o.result = {{"k", snap.k}, {"n", snap.n}, {"status", to_string(lv.status)}, {"stats", stats_json(lv.stats)}};
        if (lv.counterexample) o.result["witness"] = io::to_json(make_certificate(snap.k, *lv.counterexample));
        if (lv.status == LevelStatus::Holds) o.result["conclusion"] = "f(" + std::to_string(snap.k) + ") <= " + std::to_string(snap.n);
        if (lv.frontier) {
            o.result["frontier"] = io::to_json(*lv.frontier);
            if (!frontier_out.empty()) io::write_text_file(frontier_out, io::dump(io::to_json(*lv.frontier)));
            o.code = Error;
        }
        return o;
    }
    auto r = compute_f(k, opt);
    o.result = {{"k", k}, {"f_value", r.f_value ? Json(*r.f_value) : Json()}, {"lower_bound", r.lower_bound},
        {"levels_with_counterexample", r.levels_with_counterexample}, {"stats", stats_json(r.stats)}};
    if (r.witness) o.result["witness"] = io::to_json(make_certificate(k, *r.witness));
    if (!r.f_value) {
        o.result["status"] = "timeout";
        if (r.frontier) {
            o.result["frontier"] = io::to_json(*r.frontier);
            if (!frontier_out.empty()) io::write_text_file(frontier_out, io::dump(io::to_json(*r.frontier)));
        }
        o.code = Error;
    }
    return o;
}

Outcome ramsey_witness(const Globals & g, int n, int k)
{
    Outcome o;
    auto lv = verify_level(n, k, search_options(g));
    o.result = {{"n", n}, {"k", k}, {"status", to_string(lv.status)}, {"stats", stats_json(lv.stats)}};
    if (lv.counterexample) {
        auto cert = make_certificate(k, *lv.counterexample);
        o.result["certificate"] = io::to_json(cert);
        o.artifact = io::dump(io::to_json(cert));
    } else if (lv.status == LevelStatus::Holds) {
        o.result["conclusion"] = "no witness: every coloring on " + std::to_string(n) + " vertices has an admissible " + std::to_string(k) + "-subset";
        o.code = Negative;
    } else {
        o.code = Error;
    }
    return o;
}

Outcome ramsey_check(const std::string & path)
{
    Outcome o;
    auto cert = io::certificate_from_json(load(path));
    const bool ok = check_certificate(cert);
    o.result = {{"k", cert.k}, {"n", cert.n}, {"valid", ok}, {"checker_version", kCheckerVersion}};
    o.code = ok ? Ok : Negative;
    return o;
}

// ---- construct / verify

Outcome construct_sphere(const Globals & g, ConstructionSpec spec, int retries)
{
    Outcome o;
    Json attempts = Json::array();
    std::optional<ConstructionGraph> chosen;
    for (int a = 0; a <= retries && !chosen; ++a) {
        spec.seed = g.seed + static_cast<std::uint64_t>(a);
        auto cg = build_construction(spec);
        const OrderedGraph comp = complement(cg.graph);
        const int r = std::min(comp.size(), std::max(2, spec.k * spec.k / 4));
        DensityOptions d;
        d.mode = binomial(comp.size(), r) <= 1e6 ? DensityMode::Exact : DensityMode::Sample;
        d.seed = spec.seed;
        d.workers = g.workers;
        auto dens = clique_density(comp, r, d);
        const bool positive = dens.point > 0;
        attempts.push_back({{"seed", spec.seed}, {"edges", cg.graph.edge_count()}, {"complement_density", io::to_json(dens)}, {"positive", positive}});
        if (positive) chosen = std::move(cg);
    }
    o.result = {{"params", {{"k", spec.k}, {"h", spec.h}, {"n", spec.n}, {"eps", spec.eps}, {"mu", spec.mu()}}}, {"attempts", attempts}};
    o.rows = attempts;
    if (!chosen) {
        o.result["conclusion"] = "no seed gave positive complement clique density";
        o.code = Negative;
        return o;
    }
    o.result["seed"] = chosen->spec.seed;
    o.graph = chosen->graph;
    o.artifact = io::dump(io::to_json(*chosen));
    return o;
}

Outcome verify_construction_cmd(const Globals & g, const std::string & path, std::uint64_t node_budget)
{
    Outcome o;
    Json j = load(path);
    auto cg = io::construction_from_json(j);
    VerifyConstructionOptions vo;
    vo.seed = g.seed;
    vo.workers = g.workers;
    if (node_budget) vo.path_node_budget = node_budget;
    const bool edges_ok = check_construction_edges(cg);
    auto rep = verify_construction(cg, vo);
    o.result = io::to_json(rep);
    o.result["edges_consistent"] = edges_ok;
    o.result["seed"] = g.seed;
    if (!edges_ok || rep.path.status == SearchStatus::Found || !rep.kernel.holds) o.code = Negative;
    else if (rep.path.status == SearchStatus::Timeout) o.code = Error;
    return o;
}

// ---- poset

Outcome poset_partition(const Globals &, const std::string & path, PartitionParams pp, bool desk)
{
    Outcome o;
    auto p = load_poset(path);
    if (desk) {
        const int n = p.size();
        if (!pp.s) pp.s = 5;
        if (!pp.l) pp.l = 8;
        if (!pp.t) pp.t = std::max(1, n / 600);
        if (!pp.q) pp.q = std::max(1, n / 150);
    }
    auto res = incomparability_partition(p, pp);
    auto check = check_partition_result(p, res);
    o.result = io::to_json(res);
    o.result["check"] = io::to_json(check);
    if (res.partition) {
        std::uint64_t bad = 0, total = 0;
        for (const auto & a : audit_partition(p, *res.partition)) {
            ++total;
            bad += !a.ok();
        }
        o.result["claim52_audits"] = total;
        o.result["claim52_failures"] = bad;
        if (bad) o.code = Negative;
    }
    if (!check.ok()) o.code = Negative;
    return o;
}

Outcome poset_blowup(const Globals & g, const std::vector<std::string> & paths, int h, bool sampled)
{
    Outcome o;
    MultiOrder m;
    for (const auto & p : paths) m.orders.push_back(load_poset(p));
    m.validate();
    Json tallies;
    if (m.r() == 1) {
        auto b = find_blowup_r1(m.orders[0], h);
        if (!b) {
            o.result = {{"order", 0}, {"conclusion", "no chain of length " + std::to_string(2 * h - 1)}};
            o.code = Negative;
            return o;
        }
        o.result = {{"order", 0}, {"pivots", b->pivots}, {"blowup", io::to_json(b->blowup)},
            {"verified", verify_comparability_blowup(m.orders[0], b->blowup)}};
        return o;
    }
    MultiBlowupOptions opt;
    opt.source = sampled ? CliqueSource::Sampled : CliqueSource::Exact;
    opt.seed = g.seed;
    auto r = find_blowup_multi(m, h, opt);
    o.result = {{"order", r.order}, {"tallies", r.tallies}, {"cliques", r.cliques}, {"injectivity_violations", r.injectivity_violations},
        {"seed", g.seed}};
    if (r.blowup) {
        o.result["pivots"] = r.blowup->pivots;
        o.result["blowup"] = io::to_json(r.blowup->blowup);
        o.result["verified"] = verify_comparability_blowup(m.orders[static_cast<std::size_t>(r.order)], r.blowup->blowup);
    } else {
        o.code = Negative;
    }
    return o;
}

Outcome poset_gen(const Globals & g, const std::string & model, int n, double p)
{
    Outcome o;
    Poset poset;
    if (model == "dag") poset = random_dag_poset(n, p, g.seed);
    else if (model == "perm2") poset = random_perm2_poset(n, g.seed);
    else if (model == "chain") poset = Poset::total_order(n);
    else if (model == "antichain") poset = Poset::antichain(n);
    else throw InvalidInput("unknown poset model \"" + model + "\"");
    o.result = {{"model", model}, {"n", n}, {"seed", g.seed}, {"relations", poset.relation_count()}, {"poset", io::to_json(poset)}};
    o.graph = comparability_graph_by_element(poset);
    o.artifact = io::dump(io::to_json(poset));
    return o;
}

// ---- vc

Outcome vc_dim(const std::string & path, int cap)
{
    Outcome o;
    auto f = SetSystem::neighborhoods(load_graph(path));
    auto r = vc_dimension(f, cap);
    Json w = Json::array();
    for (int x : r.witness) w.push_back(x + 1);
    o.result = {{"n", f.n}, {"vc_dimension", r.dimension}, {"cap", cap}, {"cap_hit", r.cap_hit}, {"witness", w}};
    return o;
}

Outcome vc_biclique(const Globals & g, const std::string & path, double c, std::optional<int> d, const std::string & method)
{
    Outcome o;
    auto graph = load_graph(path);
    if (c <= 0) c = graph.density();
    if (method == "packing") {
        PackingBicliqueOptions opt;
        opt.d = d;
        auto r = biclique_via_packing(graph, c, opt);
        o.result = {{"method", "packing"}, {"c", c}, {"d", r.d}, {"q", r.q}, {"s", r.s}, {"trimmed_size", r.trimmed_size}, {"centers", r.centers},
            {"message", r.message}};
        if (r.biclique) {
            o.result["biclique"] = io::to_json(*r.biclique);
            o.result["verified"] = verify_blowup(graph, *r.biclique);
        } else {
            o.code = Negative;
        }
        return o;
    }
    if (method != "vc1") throw InvalidInput("unknown method \"" + method + "\" (packing|vc1)");
    DenseVc1Options opt;
    opt.seed = g.seed;
    auto r = dense_vc1_biclique(graph, c, opt);
    o.result = {{"method", "vc1"}, {"c", c}, {"case", r.used == Vc1Case::Dense ? "dense" : "triple"}, {"trimmed_size", r.trimmed_size},
        {"m", r.m}, {"attempts", r.attempts}, {"seed", g.seed}, {"biclique", io::to_json(r.biclique)},
        {"verified", verify_blowup(graph, r.biclique)}};
    return o;
}

Outcome vc_gen_vc2(const Globals & g, int n)
{
    Outcome o;
    BicliqueOptions bo;
    bo.seed = g.seed;
    auto ex = make_vc2_no_b2_example(n, g.seed, bo);
    o.result = {{"n", n}, {"seed", g.seed}, {"removed", ex.removed}, {"c4_free", ex.c4_free}, {"density", ex.density},
        {"vc_dimension", ex.vc.dimension}, {"vc_cap_hit", ex.vc.cap_hit}, {"biclique_found", ex.biclique},
        {"biclique_exhaustive", ex.biclique_exhaustive}, {"graph", io::to_json(ex.graph)}};
    o.graph = ex.graph;
    o.artifact = io::dump(io::to_json(ex.graph));
    if (!ex.c4_free || ex.vc.dimension > 2) o.code = Negative;
    return o;
}

// ---- graph

Outcome graph_density(const Globals & g, const std::string & path, int r, std::uint64_t samples)
{
    Outcome o;
    auto graph = load_graph(path);
    DensityOptions d;
    d.seed = g.seed;
    d.workers = g.workers;
    if (samples) {
        d.mode = DensityMode::Sample;
        d.samples = samples;
    }
    o.result = io::to_json(clique_density(graph, r, d));
    return o;
}

Outcome graph_path(const std::string & path, int m, std::uint64_t budget)
{
    Outcome o;
    auto graph = load_graph(path);
    auto r = find_induced_monotone_path(graph, m, budget ? budget : std::numeric_limits<std::uint64_t>::max());
    Json v = Json::array();
    for (int x : r.vertices) v.push_back(x + 1);
    o.result = {{"m", m}, {"status", to_string(r.status)}, {"vertices", v}, {"nodes", r.nodes}};
    if (r.status == SearchStatus::None) o.code = Negative;
    if (r.status == SearchStatus::Timeout) o.code = Error;
    return o;
}

Outcome graph_blowup(const Globals & g, const std::string & path, int k, int t)
{
    Outcome o;
    auto graph = load_graph(path);
    BlowupSearchOptions opt;
    opt.seed = g.seed;
    auto r = k == 2 && t == 0 ? find_balanced_biclique(graph, BicliqueOptions{.seed = g.seed}) : find_blowup(graph, k, t, opt);
    o.result = {{"k", k}, {"t", t}, {"found", r.blowup.has_value()}, {"exhaustive", r.exhaustive}, {"nodes", r.nodes}, {"seed", g.seed}};
    if (r.blowup) o.result["blowup"] = io::to_json(*r.blowup);
    else if (r.exhaustive) o.code = Negative;
    else o.code = Error;
    return o;
}

Outcome graph_amplify(const std::string & path, const std::string & parts_path, const std::string & pattern, std::uint64_t budget)
{
    Outcome o;
    auto graph = load_graph(path);
    Json pj = load(parts_path);
    if (pj.contains("parts")) pj = pj["parts"];
    std::vector<std::vector<int>> parts;
    for (const auto & part : pj) {
        std::vector<int> s;
        for (const auto & v : part) {
            const int x = v.get<int>();
            if (x < 1 || x > graph.size()) throw InvalidInput(parts_path + ": vertex " + std::to_string(x) + " out of range");
            s.push_back(x - 1);
        }
        parts.push_back(std::move(s));
    }
    auto h = parse_pattern(pattern);
    auto r = amplify_blowup(graph, parts, h, exact_biclique_oracle(budget ? budget : std::numeric_limits<std::uint64_t>::max()));
    o.result = {{"pattern", io::pairs_to_json(h)}, {"message", r.message}};
    if (r.parts) {
        o.result["parts"] = io::sets_to_json(*r.parts);
        o.result["verified"] = verify_pattern_blowup(graph, *r.parts, h);
    } else {
        if (r.failed_edge) o.result["failed_edge"] = {r.failed_edge->first, r.failed_edge->second};
        o.code = Negative;
    }
    return o;
}

Outcome graph_gen(const Globals & g, const std::string & model, int n, double p)
{
    Outcome o;
    OrderedGraph graph;
    if (model == "gnp") {
        std::mt19937_64 rng(g.seed);
        std::bernoulli_distribution coin(p);
        graph = OrderedGraph(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) graph.add_edge(u, v);
    } else if (model == "complete") {
        graph = OrderedGraph::complete(n);
    } else if (model == "half") {
        graph = half_graph(n, p);
    } else {
        throw InvalidInput("unknown graph model \"" + model + "\" (gnp|complete|half)");
    }
    o.result = {{"model", model}, {"n", n}, {"seed", g.seed}, {"edges", graph.edge_count()}, {"graph", io::to_json(graph)}};
    o.graph = graph;
    o.artifact = io::dump(io::to_json(graph));
    return o;
}

Outcome graph_complement(const std::string & path)
{
    Outcome o;
    auto c = complement(load_graph(path));
    o.result = {{"n", c.size()}, {"edges", c.edge_count()}, {"graph", io::to_json(c)}};
    o.graph = c;
    o.artifact = io::dump(io::to_json(c));
    return o;
}

// ---- repro

Outcome repro(const Globals & g, const std::string & name, bool quick, Json & timings)
{
    Outcome o;
    experiments::Config cfg;
    cfg.seed = g.seed;
    cfg.workers = g.workers;
    cfg.k6_level10 = !quick;
    std::vector<std::string> names;
    if (name == "all")
        for (const auto & info : experiments::catalog()) names.push_back(info.name);
    else
        names.push_back(name);
    Json results = Json::array();
    bool all_pass = true;
    for (const auto & nm : names) {
        auto r = experiments::run(nm, cfg);
        std::fprintf(stderr, "[%s] %2d %-16s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.summary.c_str());
        all_pass = all_pass && r.pass;
        timings[r.name] = r.seconds;
        results.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}});
        o.rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}});
    }
    o.result = {{"seed", g.seed}, {"criteria", results}, {"all_pass", all_pass}};
    o.code = all_pass ? Ok : Negative;
    return o;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Ordered Ramsey search, sphere constructions, poset partitions and VC biclique tools", "blowup"};
    app.set_help_flag("--help", "print help");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file with option defaults");

    Globals g;
    app.add_option("--seed", g.seed, "random seed")->envname("BLOWUP_SEED");
    app.add_option("--budget", g.budget, "time budget in seconds (0 = none)")->envname("BLOWUP_BUDGET")->check(CLI::NonNegativeNumber);
    app.add_option("--workers", g.workers, "worker threads")->envname("BLOWUP_WORKERS")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "output file")->envname("BLOWUP_OUT");
    app.add_option("--format", g.format, "json|csv|dot")->envname("BLOWUP_FORMAT")->check(CLI::IsMember({"json", "csv", "dot"}));

    std::function<Outcome()> action;
    Json timings = Json::object();

    // ramsey
    auto * ramsey = app.add_subcommand("ramsey", "ordered Ramsey function f(k)")->require_subcommand(1)->fallthrough();
    int rk = 0, rn = 0;
    std::string resume, frontier_out, cert_path;
    auto * rf = ramsey->add_subcommand("f", "compute f(k)")->fallthrough();
    rf->add_option("--k", rk)->required()->check(CLI::Range(1, 8));
    rf->add_option("--resume", resume, "frontier snapshot to continue")->check(CLI::ExistingFile);
    rf->add_option("--frontier", frontier_out, "write the frontier here on timeout");
    rf->callback([&] { action = [&] { return ramsey_f(g, rk, resume, frontier_out); }; });
    auto * rw = ramsey->add_subcommand("witness", "search a coloring on n vertices with no admissible k-subset")->fallthrough();
    rw->add_option("--n", rn)->required()->check(CLI::Range(1, 20));
    rw->add_option("--k", rk)->required()->check(CLI::Range(1, 8));
    rw->callback([&] { action = [&] { return ramsey_witness(g, rn, rk); }; });
    auto * rc = ramsey->add_subcommand("check", "re-check a witness certificate")->fallthrough();
    rc->add_option("--cert", cert_path)->required()->check(CLI::ExistingFile);
    rc->callback([&] { action = [&] { return ramsey_check(cert_path); }; });

    // construct / verify
    ConstructionSpec spec;
    int retries = 3;
    auto * construct = app.add_subcommand("construct", "lower-bound constructions")->require_subcommand(1)->fallthrough();
    auto * cs = construct->add_subcommand("sphere", "random sphere construction")->fallthrough();
    cs->add_option("--k", spec.k, "path parameter (even)")->capture_default_str();
    cs->add_option("--h", spec.h, "sphere dimension")->capture_default_str();
    cs->add_option("--n", spec.n, "vertices")->capture_default_str();
    cs->add_option("--eps", spec.eps)->capture_default_str();
    cs->add_flag("--center-points", spec.center_points, "use cell centres instead of random points");
    cs->add_option("--retries", retries, "fresh seeds tried when the density is zero")->capture_default_str();
    cs->callback([&] { action = [&] { return construct_sphere(g, spec, retries); }; });

    std::string in_path;
    std::uint64_t node_budget = 0;
    auto * verify = app.add_subcommand("verify", "verify constructed objects")->require_subcommand(1)->fallthrough();
    auto * vcon = verify->add_subcommand("construction", "path, kernel, density and biclique report")->fallthrough();
    vcon->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
    vcon->add_option("--nodes", node_budget, "path search node budget");
    vcon->callback([&] { action = [&] { return verify_construction_cmd(g, in_path, node_budget); }; });

    // poset
    PartitionParams pp;
    bool desk = false;
    auto * poset = app.add_subcommand("poset", "poset partitions and blowups")->require_subcommand(1)->fallthrough();
    auto * pa = poset->add_subcommand("partition", "incomparability partition")->fallthrough();
    pa->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
    pa->add_option("--k", pp.k)->capture_default_str();
    pa->add_option("--eps", pp.eps)->capture_default_str();
    pa->add_option("--t", pp.t);
    pa->add_option("--q", pp.q);
    pa->add_option("--s", pp.s);
    pa->add_option("--l", pp.l);
    std::string scale = "full";
    pa->add_option("--scale", scale, "full|desk")->check(CLI::IsMember({"full", "desk"}))->capture_default_str();
    pa->callback([&] {
        desk = scale == "desk";
        action = [&] { return poset_partition(g, in_path, pp, desk); };
    });
    std::vector<std::string> in_paths;
    int h = 2;
    bool sampled = false;
    auto * pb = poset->add_subcommand("blowup", "comparability blowup from r orders")->fallthrough();
    pb->add_option("--in", in_paths)->required()->check(CLI::ExistingFile);
    pb->add_option("--h", h)->required()->check(CLI::Range(2, 64));
    pb->add_flag("--sampled", sampled, "sample cliques instead of enumerating");
    pb->callback([&] { action = [&] { return poset_blowup(g, in_paths, h, sampled); }; });
    std::string model = "dag";
    int gn = 100;
    double gp = 0.1;
    auto * pg = poset->add_subcommand("gen", "random poset")->fallthrough();
    pg->add_option("--model", model, "dag|perm2|chain|antichain")->capture_default_str();
    pg->add_option("--n", gn)->required()->check(CLI::PositiveNumber);
    pg->add_option("--p", gp)->capture_default_str();
    pg->callback([&] { action = [&] { return poset_gen(g, model, gn, gp); }; });

    // vc
    int cap = 4;
    double c = 0;
    std::optional<int> d;
    std::string method = "vc1";
    auto * vc = app.add_subcommand("vc", "VC-dimension tools")->require_subcommand(1)->fallthrough();
    auto * vd = vc->add_subcommand("dim", "VC dimension of the neighbourhood system")->fallthrough();
    vd->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
    vd->add_option("--cap", cap)->check(CLI::Range(1, kDefaultShatterCap))->capture_default_str();
    vd->callback([&] { action = [&] { return vc_dim(in_path, cap); }; });
    auto * vb = vc->add_subcommand("biclique", "balanced biclique in a dense graph")->fallthrough();
    vb->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
    vb->add_option("--c", c, "density lower bound (default: the graph's density)");
    vb->add_option("--d", d, "VC dimension bound (packing method)");
    vb->add_option("--method", method, "vc1|packing")->capture_default_str();
    vb->callback([&] { action = [&] { return vc_biclique(g, in_path, c, d, method); }; });
    auto * vg = vc->add_subcommand("gen-vc2", "dense VC-2 graph without a balanced biclique of linear size")->fallthrough();
    vg->add_option("--n", gn)->required()->check(CLI::Range(4, 5000));
    vg->callback([&] { action = [&] { return vc_gen_vc2(g, gn); }; });

    // graph
    int r = 3, m = 3, k = 2, t = 0;
    std::uint64_t samples = 0;
    std::string parts_path, pattern = "K2";
    auto * graph = app.add_subcommand("graph", "ordered graph tools")->require_subcommand(1)->fallthrough();
    auto * gd = graph->add_subcommand("density", "K_r density")->fallthrough();
    gd->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
    gd->add_option("--r", r)->check(CLI::Range(1, 64))->capture_default_str();
    gd->add_option("--samples", samples, "Monte Carlo samples (0 = exact)");
    gd->callback([&] { action = [&] { return graph_density(g, in_path, r, samples); }; });
    auto * gpth = graph->add_subcommand("path", "induced monotone path on m vertices")->fallthrough();
    gpth->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
    gpth->add_option("--m", m)->required()->check(CLI::Range(1, 64));
    gpth->add_option("--nodes", node_budget, "node budget (0 = none)");
    gpth->callback([&] { action = [&] { return graph_path(in_path, m, node_budget); }; });
    auto * gb = graph->add_subcommand("blowup", "K_k[t] search; --k 2 without --t gives the largest balanced biclique")->fallthrough();
    gb->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
    gb->add_option("--k", k)->capture_default_str();
    gb->add_option("--t", t);
    gb->callback([&] { action = [&] { return graph_blowup(g, in_path, k, t); }; });
    auto * ga = graph->add_subcommand("amplify", "amplify an H-blowup with the exact biclique oracle")->fallthrough();
    ga->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
    ga->add_option("--parts", parts_path, "JSON list of vertex sets (1-based)")->required()->check(CLI::ExistingFile);
    ga->add_option("--pattern", pattern, "K2|K3|K4|P3|P4|C4 or 0-1,1-2,...")->capture_default_str();
    ga->add_option("--nodes", node_budget, "oracle node budget (0 = none)");
    ga->callback([&] { action = [&] { return graph_amplify(in_path, parts_path, pattern, node_budget); }; });
    auto * gg = graph->add_subcommand("gen", "random or structured graph")->fallthrough();
    gg->add_option("--model", model, "gnp|complete|half")->capture_default_str();
    gg->add_option("--n", gn)->required()->check(CLI::PositiveNumber);
    gg->add_option("--p", gp, "edge probability / half-graph density")->capture_default_str();
    gg->callback([&] {
        if (model == "dag") model = "gnp";
        action = [&] { return graph_gen(g, model, gn, gp); };
    });
    auto * gc = graph->add_subcommand("complement", "complement graph")->fallthrough();
    gc->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
    gc->callback([&] { action = [&] { return graph_complement(in_path); }; });

    // repro
    std::string experiment;
    bool quick = false;
    auto * rp = app.add_subcommand("repro", "run acceptance experiments (all or one name)")->fallthrough();
    rp->add_option("name", experiment, "all | ramsey-small | ramsey-k5 | ... | amplifier")->required();
    rp->add_flag("--quick", quick, "skip the long level-10 search of ramsey-k6");
    rp->callback([&] { action = [&] { return repro(g, experiment, quick, timings); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? Ok : Error;
    }

    std::string command;
    for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
    Json config = {{"seed", g.seed}, {"budget", g.budget}, {"workers", g.workers}, {"out", g.out}, {"format", g.format}};

    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        out = action();
    } catch (const InvalidInput & e) {
        std::cerr << "error: " << e.what() << '\n';
        return Error;
    } catch (const PreconditionFailed & e) {
        std::cerr << "error: precondition failed: " << e.what() << '\n';
        return Error;
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return Error;
    }
    timings["total_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string text;
    if (g.format == "dot") {
        if (!out.graph) {
            std::cerr << "error: this command produces no graph for --format dot\n";
            return Error;
        }
        text = io::to_dot(*out.graph);
    } else if (g.format == "csv") {
        text = to_csv(out);
    } else {
        text = io::dump(Json{{"command", command}, {"config", config}, {"result", out.result}, {"timings", timings}, {"version", kVersion}});
    }

    try {
        if (!g.out.empty() && !out.artifact.empty() && g.format == "json") {
            // generators write the object itself, the report goes to stdout
            io::write_text_file(g.out, out.artifact);
            std::cout << text;
        } else if (!g.out.empty()) {
            io::write_text_file(g.out, text);
        } else {
            std::cout << text;
        }
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return Error;
    }
    return out.code;
}
