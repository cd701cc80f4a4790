#include "duplex/json_io.hpp"

#include <json.hpp>

namespace duplex {

namespace {

using nlohmann::json;

json cube_to_json(const Cube& c) { return json::array({c.x, c.y, c.z}); }

json cell_to_json(const Cell& c) { return json::array({c.x, c.y}); }

int int_field(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw InputError(std::string("expected an integer for ") + what);
  return j.get<int>();
}

Cube cube_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw InputError("expected a cube as [x,y,z]");
  return Cube{int_field(j[0], "cube x"), int_field(j[1], "cube y"),
              int_field(j[2], "cube z")};
}

Cell cell_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw InputError("expected a cell as [x,y]");
  return Cell{int_field(j[0], "cell x"), int_field(j[1], "cell y")};
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return j;
}

}  // namespace

std::string tiling_to_json(const BaseShape& base, const Tiling& t) {
  json lines = json::array();
  std::string ascii = base_to_ascii(base);
  std::string line;
  for (char ch : ascii) {
    if (ch == '\n') {
      lines.push_back(line);
      line.clear();
    } else {
      line += ch;
    }
  }
  lines.push_back(line);

  json dominoes = json::array();
  for (const Domino& d : t.dominoes)
    dominoes.push_back(json::array({cube_to_json(d.a), cube_to_json(d.b)}));

  json doc;
  doc["base"] = lines;
  doc["dominoes"] = dominoes;
  return doc.dump();
}

RawTiling raw_tiling_from_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("base") || !doc.contains("dominoes"))
    throw InputError("tiling document needs \"base\" and \"dominoes\"");
  const json& base = doc["base"];
  if (!base.is_array()) throw InputError("\"base\" must be a list of lines");
  RawTiling raw;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!base[i].is_string())
      throw InputError("\"base\" must be a list of lines");
    if (i) raw.base_text += '\n';
    raw.base_text += base[i].get<std::string>();
  }
  const json& dominoes = doc["dominoes"];
  if (!dominoes.is_array())
    throw InputError("\"dominoes\" must be a list of cube pairs");
  for (const json& d : dominoes) {
    if (!d.is_array() || d.size() != 2)
      throw InputError("each domino must be a pair of cubes");
    raw.cube_pairs.emplace_back(cube_from_json(d[0]), cube_from_json(d[1]));
  }
  return raw;
}

Tiling tiling_from_raw(const RawTiling& raw) {
  std::vector<Domino> ds;
  ds.reserve(raw.cube_pairs.size());
  for (const auto& [a, b] : raw.cube_pairs) {
    if (a == b) throw InputError("domino with two equal cubes");
    ds.emplace_back(a, b);
  }
  return Tiling::from_dominoes(std::move(ds));
}

std::string sock_to_json(const Sock& s) {
  json cycles = json::array();
  for (const Cycle& c : s.cycles) {
    json vertices = json::array();
    for (const Cell& v : c.vertices) vertices.push_back(cell_to_json(v));
    json floors = json::array();
    for (int f : c.floors) floors.push_back(f);
    json entry;
    entry["floors"] = floors;
    entry["vertices"] = vertices;
    cycles.push_back(entry);
  }
  json jewels = json::array();
  for (const Cell& v : s.jewels) jewels.push_back(cell_to_json(v));
  json doc;
  doc["cycles"] = cycles;
  doc["jewels"] = jewels;
  return doc.dump();
}

Sock sock_from_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("cycles") || !doc.contains("jewels"))
    throw InputError("sock document needs \"cycles\" and \"jewels\"");
  Sock s;
  for (const json& v : doc["jewels"]) s.jewels.push_back(cell_from_json(v));
  for (const json& entry : doc["cycles"]) {
    if (!entry.is_object() || !entry.contains("vertices") ||
        !entry.contains("floors"))
      throw InputError("each cycle needs \"vertices\" and \"floors\"");
    std::vector<Cell> vertices;
    for (const json& v : entry["vertices"]) vertices.push_back(cell_from_json(v));
    std::vector<int> floors;
    for (const json& f : entry["floors"])
      floors.push_back(int_field(f, "floor tag"));
    try {
      s.cycles.push_back(Cycle::make(std::move(vertices), std::move(floors)));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("bad cycle: ") + e.what());
    }
  }
  return s;
}

std::string laurent_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, c}));
  return terms.dump();
}

LaurentPoly laurent_from_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_array()) throw InputError("expected a list of [exponent, coefficient]");
  LaurentPoly p;
  for (const json& term : doc) {
    if (!term.is_array() || term.size() != 2)
      throw InputError("expected a list of [exponent, coefficient]");
    if (!term[0].is_number_integer() || !term[1].is_number_integer())
      throw InputError("exponents and coefficients must be integers");
    p.add(term[0].get<int>(), term[1].get<std::int64_t>());
  }
  return p;
}

}  // namespace duplex
