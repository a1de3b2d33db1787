#include "togglekit/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace togglekit {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

RectCoord coord_from_key(const std::string& key) {
  std::istringstream in(key);
  int i = 0, j = 0;
  char comma = 0;
  if (!(in >> i >> comma >> j) || comma != ',' || !(in >> std::ws).eof())
    throw std::invalid_argument("cell key must be \"i,j\": " + key);
  return {i, j};
}

}  // namespace

json labeling_to_json(const Labeling& x) {
  json rows = json::array();
  for (int i = 1; i <= x.shape().r; ++i) {
    json row = json::array();
    for (int j = 1; j <= x.shape().s; ++j) row.push_back(rat_str(x.at({i, j})));
    rows.push_back(std::move(row));
  }
  return json{{"shape", {{"r", x.shape().r}, {"s", x.shape().s}}},
              {"realm", realm_str(x.realm())},
              {"values", std::move(rows)}};
}

Labeling labeling_from_json(const json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("realm") || !j.contains("values"))
    throw std::invalid_argument("labeling JSON needs shape, realm, values");
  const json& sh = j.at("shape");
  RectShape shape{sh.at("r").get<int>(), sh.at("s").get<int>()};
  Realm realm = parse_realm(j.at("realm").get<std::string>());
  const json& rows = j.at("values");
  if (!rows.is_array() || static_cast<int>(rows.size()) != shape.r)
    throw std::invalid_argument("values must hold r rows");
  std::vector<std::vector<Rat>> parsed;
  parsed.reserve(rows.size());
  for (const json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != shape.s)
      throw std::invalid_argument("every row must hold s entries");
    std::vector<Rat> out;
    out.reserve(row.size());
    for (const json& v : row) out.push_back(rat_from_json(v));
    parsed.push_back(std::move(out));
  }
  Labeling x = Labeling::from_rows(realm, parsed);
  if (realm == Realm::Birational && !x.positive())
    throw std::invalid_argument("birational labeling must be strictly positive");
  return x;
}

json moon_to_json(const MoonPoly& m) {
  json cells = json::array();
  for (RectCoord p : m.cells) cells.push_back(json::array({p.i, p.j}));
  return json{{"cells", std::move(cells)}};
}

MoonPoly moon_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cells") || !j.at("cells").is_array())
    throw std::invalid_argument("polyomino JSON needs a cells array");
  std::vector<RectCoord> cells;
  for (const json& c : j.at("cells")) {
    if (!c.is_array() || c.size() != 2)
      throw std::invalid_argument("each cell must be a [i,j] pair");
    cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
  }
  return MoonPoly::of(std::move(cells));
}

json filling_to_json(const Filling& x) {
  json j = moon_to_json(x.poly);
  json vals = json::object();
  for (const auto& [p, v] : x.values)
    vals[std::to_string(p.i) + "," + std::to_string(p.j)] = rat_str(v);
  j["values"] = std::move(vals);
  return j;
}

Filling filling_from_json(const json& j) {
  MoonPoly m = moon_from_json(j);
  if (!j.contains("values") || !j.at("values").is_object())
    throw std::invalid_argument("filling JSON needs a values object");
  std::map<RectCoord, Rat> values;
  for (const auto& [key, v] : j.at("values").items()) values[coord_from_key(key)] = rat_from_json(v);
  return Filling::of(std::move(m), std::move(values));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

}  // namespace togglekit
