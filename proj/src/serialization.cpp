#include "rowmotion/serialization.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace rowmotion {

Json rational_to_json(const Rational& value) { return value.to_string(); }

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw DomainError("expected a rational string, got " + value.dump());
}

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("expected \"a,b\", got \"" + text + "\"");
  auto parse_int = [&](std::string_view part) {
    int value = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || end != part.data() + part.size() || part.empty()) {
      throw DomainError("expected \"a,b\", got \"" + text + "\"");
    }
    return value;
  };
  const std::string_view view(text);
  return {parse_int(view.substr(0, comma)), parse_int(view.substr(comma + 1))};
}

namespace {

std::string key(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

int required_int(const Json& json, const char* field) {
  if (!json.is_object() || !json.contains(field) || !json[field].is_number_integer()) {
    throw DomainError(std::string("missing integer field \"") + field + "\"");
  }
  return json[field].get<int>();
}

Json sums_to_json(const std::map<std::pair<int, int>, Rational>& sums) {
  Json out = Json::object();
  for (const auto& [uv, value] : sums) out[key(uv.first, uv.second)] = rational_to_json(value);
  return out;
}

std::map<std::pair<int, int>, Rational> sums_from_json(const Json& json, int limit,
                                                       const char* field) {
  if (!json.is_object()) throw DomainError(std::string("\"") + field + "\" must be an object");
  std::map<std::pair<int, int>, Rational> out;
  for (const auto& [k, v] : json.items()) {
    const auto uv = parse_pair(k);
    if (uv.first < 1 || uv.first > uv.second || uv.second > limit) {
      throw DomainError(std::string("interval key ") + k + " out of range in \"" + field + "\"");
    }
    out[uv] = rational_from_json(v);
  }
  for (int u = 1; u <= limit; ++u) {
    for (int v = u; v <= limit; ++v) {
      if (!out.contains({u, v})) {
        throw DomainError(std::string("\"") + field + "\" is missing " + key(u, v));
      }
    }
  }
  return out;
}

int largest_key(const Json& json) {
  int best = 0;
  if (json.is_object()) {
    for (const auto& [k, v] : json.items()) best = std::max(best, parse_pair(k).second);
  }
  return best;
}

}  // namespace

Json labeling_to_json(const Labeling& x) {
  Json labels = Json::object();
  for (int i = 1; i <= x.rect().r; ++i) {
    for (int j = 1; j <= x.rect().s; ++j) labels[key(i, j)] = rational_to_json(x[{i, j}]);
  }
  return Json{{"r", x.rect().r}, {"s", x.rect().s}, {"labels", labels}};
}

Labeling labeling_from_json(const Json& json) {
  const Rect rect = Rect::make(required_int(json, "r"), required_int(json, "s"));
  if (!json.contains("labels") || !json["labels"].is_object()) {
    throw DomainError("missing object field \"labels\"");
  }
  Labeling x(rect);
  std::set<std::pair<int, int>> seen;
  for (const auto& [k, v] : json["labels"].items()) {
    const auto [i, j] = parse_pair(k);
    if (!rect.contains({i, j})) throw DomainError("label key " + k + " outside the rectangle");
    if (!seen.insert({i, j}).second) throw DomainError("duplicate label key " + k);
    x.set({i, j}, rational_from_json(v));
  }
  if (static_cast<int>(seen.size()) != rect.size()) {
    throw DomainError("expected " + std::to_string(rect.size()) + " labels, got " +
                      std::to_string(seen.size()));
  }
  return x;
}

Json cells_to_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (const Cell& c : cells) out.push_back({c.i, c.j});
  return out;
}

std::vector<Cell> cells_from_json(const Json& json) {
  if (!json.is_array()) throw DomainError("expected an array of [i,j] pairs");
  std::vector<Cell> out;
  for (const auto& pair : json) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw DomainError("expected [i,j], got " + pair.dump());
    }
    out.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return out;
}

Json ideal_to_json(const OrderIdeal& ideal) { return cells_to_json(ideal.cells()); }

Json antichain_to_json(const Antichain& antichain) {
  return cells_to_json(antichain.cells());
}

Json minor_array_to_json(const MinorArray& w) {
  Json out = Json::object();
  const int n = w.size();
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= n - k + 1; ++i) {
      for (int j = 1; j <= n - k + 1; ++j) {
        out[std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k)] =
            rational_to_json(w.at(i, j, k));
      }
    }
  }
  return out;
}

Json profile_to_json(const ChainSumProfile& profile) {
  return Json{{"r", profile.rect.r},
              {"s", profile.rect.s},
              {"rows", sums_to_json(profile.rows)},
              {"cols", sums_to_json(profile.cols)}};
}

ChainSumProfile profile_from_json(const Json& json) {
  if (!json.is_object() || !json.contains("rows") || !json.contains("cols")) {
    throw DomainError("profile needs \"rows\" and \"cols\" objects");
  }
  const int r = json.contains("r") ? required_int(json, "r") : largest_key(json["rows"]);
  const int s = json.contains("s") ? required_int(json, "s") : largest_key(json["cols"]);
  const Rect rect = Rect::make(r, s);
  return {rect, sums_from_json(json["rows"], r, "rows"), sums_from_json(json["cols"], s, "cols")};
}

Json st_word_to_json(const STWord& word) {
  Json out{{"kind", word.kind_name()}};
  if (word.kind == WordKind::row) out["i"] = word.index;
  if (word.kind == WordKind::column) out["j"] = word.index;
  Json entries = Json::array();
  for (const auto& e : word.entries) entries.push_back(rational_to_json(e));
  out["entries"] = entries;
  return out;
}

Json path_collection_to_json(const RPathCollection& collection) {
  Json out = Json::array();
  for (const auto& path : collection.paths) out.push_back(cells_to_json(path));
  return out;
}

Json path_collection_to_json(const GRPathCollection& collection) {
  Json out = Json::array();
  for (const auto& path : collection.paths) {
    Json edges = Json::array();
    for (const auto& e : path.edges) {
      edges.push_back({{e.from.i, e.from.j}, {e.to.i, e.to.j}});
    }
    out.push_back({{"start", {path.start.i, path.start.j}}, {"edges", edges}});
  }
  return out;
}

Json report_to_json(const CheckReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"where", v.where}, {"detail", v.detail}});
  }
  return Json{{"name", report.name},
              {"status", report.ok() ? "pass" : "fail"},
              {"checked", report.checked},
              {"skipped", report.skipped},
              {"violations", violations}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace rowmotion
