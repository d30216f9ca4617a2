// Runs every acceptance criterion and prints one line each.
// Usage: acceptance [--json FILE] [--skip-level10] [--workers N] [names...]
#include "blowup/experiments.hpp"

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

using namespace blowup;

int main(int argc, char ** argv)
{
    experiments::Config cfg;
    std::string json_out;
    std::vector<std::string> names;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--json" && i + 1 < argc) json_out = argv[++i];
        else if (a == "--skip-level10") cfg.k6_level10 = false;
        else if (a == "--workers" && i + 1 < argc) cfg.workers = std::atoi(argv[++i]);
        else names.push_back(a);
    }
    if (names.empty())
        for (const auto & info : experiments::catalog()) names.push_back(info.name);

    int failed = 0;
    io::Json all = io::Json::array();
    for (const auto & name : names) {
        experiments::Result r;
        try {
            r = experiments::run(name, cfg);
        } catch (const std::exception & e) {
            r.name = name;
            r.summary = std::string("error: ") + e.what();
        }
        failed += !r.pass;
        std::printf("[%s] criterion %2d %-16s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.summary.c_str());
        std::fflush(stdout);
        all.push_back(experiments::to_json(r));
    }
    if (!json_out.empty()) std::ofstream(json_out) << all.dump(2) << '\n';
    std::printf("%d/%zu criteria passed\n", static_cast<int>(names.size()) - failed, names.size());
    return failed ? 1 : 0;
}
