#pragma once

// JSON forms of the library's values. Rationals are strings "p/q" (or "p");
// cells and intervals are keyed "i,j" and "u,v"; minors "i,j,k".
//
//   labeling  {"r":2,"s":3,"labels":{"1,1":"2","1,2":"5",...}}
//   profile   {"r":2,"s":3,"rows":{"1,1":"...",...},"cols":{"1,1":"...",...}}
//   ideal     [[1,1],[2,1],...]
//   word      {"kind":"ST_i","i":2,"entries":["...",...]}

#include <string>

#include <json.hpp>

#include "rowmotion/lgv.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/report.hpp"
#include "rowmotion/rsk.hpp"
#include "rowmotion/st_words.hpp"

namespace rowmotion {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& value);
/// Accepts "p/q" strings and JSON integers. Throws DomainError otherwise.
Rational rational_from_json(const Json& value);

/// Parses "a,b" into two integers. Throws DomainError on anything else.
std::pair<int, int> parse_pair(const std::string& text);

Json labeling_to_json(const Labeling& x);
/// Requires every cell of the r x s rectangle exactly once. Labels are not
/// checked against an algebra; callers validate.
Labeling labeling_from_json(const Json& json);

Json cells_to_json(const std::vector<Cell>& cells);
std::vector<Cell> cells_from_json(const Json& json);
Json ideal_to_json(const OrderIdeal& ideal);
Json antichain_to_json(const Antichain& antichain);

/// Stored (support) entries only.
Json minor_array_to_json(const MinorArray& w);

Json profile_to_json(const ChainSumProfile& profile);
/// "r" and "s" may be omitted; they are then read off the largest keys.
ChainSumProfile profile_from_json(const Json& json);

Json st_word_to_json(const STWord& word);

Json path_collection_to_json(const RPathCollection& collection);
Json path_collection_to_json(const GRPathCollection& collection);

Json report_to_json(const CheckReport& report);

/// Reads and parses a JSON file. Throws DomainError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace rowmotion
