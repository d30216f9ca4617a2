#pragma once

#include "blowup/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace blowup::experiments {

struct Config {
    std::uint64_t seed = 1;
    int workers = 1;
    /// Criterion 3: also verify level N = 10 (about 20 s on one core).
    bool k6_level10 = true;
};

struct Result {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string summary;
    double seconds = 0.0;
    io::Json details;
};

struct Info {
    int id;
    std::string name;
    std::string title;
};

const std::vector<Info> & catalog();

/// Accepts a catalog name or its number. Throws InvalidInput for unknown names.
Result run(const std::string & name, const Config & config = {});

io::Json to_json(const Result & r);

} // namespace blowup::experiments
