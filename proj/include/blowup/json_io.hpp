#pragma once

#include "blowup/blowups.hpp"
#include "blowup/coloring.hpp"
#include "blowup/ordered_graph.hpp"
#include "blowup/poset.hpp"
#include "blowup/ramsey_search.hpp"
#include "blowup/sphere.hpp"

#include <json.hpp>

#include <string>
#include <vector>

// Files use 1-based vertex labels; everything in memory is 0-based.
namespace blowup::io {

using Json = nlohmann::ordered_json;

/// Parses text; syntax errors become InvalidInput carrying "source:line:column".
Json parse_json(const std::string & text, const std::string & source = "<input>");
Json read_json_file(const std::string & path);
void write_text_file(const std::string & path, const std::string & text);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json & j);

Json pairs_to_json(const std::vector<std::pair<int, int>> & pairs);
std::vector<std::pair<int, int>> pairs_from_json(const Json & j, int n, const std::string & what);
Json sets_to_json(const std::vector<std::vector<int>> & sets);

Json to_json(const OrderedColoring & c);
OrderedColoring coloring_from_json(const Json & j);

Json to_json(const WitnessCertificate & cert);
WitnessCertificate certificate_from_json(const Json & j);

Json to_json(const FrontierSnapshot & f);
FrontierSnapshot frontier_from_json(const Json & j);

Json to_json(const OrderedGraph & g);
OrderedGraph graph_from_json(const Json & j);

/// Closed relation list, sorted.
Json to_json(const Poset & p);
Poset poset_from_json(const Json & j);

Json to_json(const ConstructionGraph & cg);
ConstructionGraph construction_from_json(const Json & j);

Json to_json(const Blowup & b);
Json to_json(const DensityEstimate & d);
Json to_json(const ConstructionReport & r);
Json to_json(const PartitionResult & r);
Json to_json(const PartitionCheck & c);

std::string to_dot(const OrderedGraph & g, const std::string & name = "G");

} // namespace blowup::io
