#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "superds/charformulas.hpp"
#include "superds/dsreduce.hpp"
#include "superds/levels.hpp"
#include "superds/vacuum.hpp"

namespace superds {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);  ///< "p/q" string
Json to_json(const Weight& w);    ///< parse_weight-compatible string
Json to_json(const std::vector<Weight>& ws);
Json to_json(const Base& b);
Json to_json(const SuperRootDatum& d);
Json to_json(const DSReport& r);
Json to_json(const P123Report& r);
Json to_json(const LevelDatum& l);
Json to_json(const CharSeries& s);
Json to_json(const GradedTable& t);
Json to_json(const Verdict& v);
Json to_json(const Lemtt2Result& r);

std::vector<Weight> weights_from_json(const Json& j);
/// Throws Parse on malformed input.
GradedTable table_from_json(const Json& j);

/// Reads and parses a JSON file; throws Parse with the file name on failure.
Json read_json_file(const std::string& path);

}  // namespace superds
