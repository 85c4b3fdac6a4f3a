#include <set>

#include "madic/error.hpp"
#include "madic/spinal.hpp"

namespace madic {

using nlohmann::json;

namespace {

void require_keys(const json& j, const std::set<std::string>& allowed, std::string_view where) {
  if (!j.is_object()) throw ParseError(std::string(where) + " must be an object");
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw ParseError("unknown key '" + k + "' in " + std::string(where));
  }
}

const json& required(const json& j, const std::string& key, std::string_view where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing '" + key + "' in " + std::string(where));
  return *it;
}

std::size_t parse_degree(const json& j) {
  const json& m = required(j, "m", "group spec");
  if (!m.is_number_integer() || m.get<long long>() < 2 || m.get<long long>() > 255) {
    throw ParseError("'m' must be an integer in [2, 255]");
  }
  return m.get<std::size_t>();
}

Perm perm_from(const json& j, std::size_t m) {
  if (!j.is_string()) throw ParseError("permutations are written as strings");
  try {
    return parse_perm(j.get<std::string>(), m);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

GenMap genmap_from(const json& j, std::size_t m) {
  if (!j.is_object()) throw ParseError("generator map must be an object");
  GenMap map;
  for (const auto& [name, tuple] : j.items()) {
    if (!tuple.is_array()) throw ParseError("tuple for '" + name + "' must be an array");
    std::vector<Perm> perms;
    for (const auto& p : tuple) perms.push_back(perm_from(p, m));
    map.emplace(name, std::move(perms));
  }
  return map;
}

std::vector<GenMap> genmaps_from(const json& j, std::size_t m) {
  if (!j.is_array()) throw ParseError("'preperiod' and 'period' must be arrays");
  std::vector<GenMap> maps;
  for (const auto& g : j) maps.push_back(genmap_from(g, m));
  return maps;
}

json genmaps_to(const std::vector<GenMap>& maps) {
  json out = json::array();
  for (const auto& map : maps) {
    json o = json::object();
    for (const auto& [name, tuple] : map) {
      json t = json::array();
      for (const auto& p : tuple) t.push_back(to_cycles(p));
      o[name] = std::move(t);
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

GroupSpec parse_group_spec(const json& j) {
  if (!j.is_object()) throw ParseError("group spec must be a JSON object");
  if (j.contains("E")) {
    require_keys(j, {"m", "E"}, "multi-GGS spec");
    const std::size_t m = parse_degree(j);
    const json& rows = j.at("E");
    if (!rows.is_array() || rows.size() != m - 1) {
      throw ParseError("'E' must be an array of m-1 = " + std::to_string(m - 1) + " rows");
    }
    std::vector<ZmodVector> parsed;
    std::size_t width = 0;
    for (const auto& row : rows) {
      if (!row.is_array()) throw ParseError("rows of 'E' must be arrays");
      ZmodVector v;
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw ParseError("entries of 'E' must be integers");
        v.push_back(x.get<Residue>());
      }
      if (!parsed.empty() && v.size() != width) throw ParseError("rows of 'E' differ in length");
      width = v.size();
      parsed.push_back(std::move(v));
    }
    if (width == 0) throw ParseError("'E' has no columns");
    return MultiGGSData{ZmodMatrix(m, width, parsed)};
  }

  require_keys(j, {"m", "rooted", "directed"}, "group spec");
  PolyspinalData data;
  data.m = parse_degree(j);
  if (auto it = j.find("rooted"); it != j.end()) {
    if (!it->is_array()) throw ParseError("'rooted' must be an array");
    for (const auto& p : *it) data.rooted.push_back(perm_from(p, data.m));
  }
  const json& directed = required(j, "directed", "group spec");
  if (!directed.is_array()) throw ParseError("'directed' must be an array");
  for (const auto& d : directed) {
    require_keys(d, {"path", "generators", "preperiod", "period"}, "directed datum");
    DirectedDatum datum;
    const json& path = required(d, "path", "directed datum");
    if (!path.is_number_integer() || path.get<long long>() < 0) {
      throw ParseError("'path' must be a letter");
    }
    datum.path = path.get<Letter>();
    const json& gens = required(d, "generators", "directed datum");
    if (!gens.is_array()) throw ParseError("'generators' must be an array");
    for (const auto& g : gens) {
      if (!g.is_string()) throw ParseError("generator names must be strings");
      datum.generators.push_back(g.get<std::string>());
    }
    if (auto it = d.find("preperiod"); it != d.end()) datum.preperiod = genmaps_from(*it, data.m);
    datum.period = genmaps_from(required(d, "period", "directed datum"), data.m);
    data.directed.push_back(std::move(datum));
  }
  try {
    check_syntax(data);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return data;
}

GroupSpec parse_group_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_group_spec(j);
}

json to_json(const PolyspinalData& data) {
  json out;
  out["m"] = data.m;
  out["rooted"] = json::array();
  for (const auto& p : data.rooted) out["rooted"].push_back(to_cycles(p));
  out["directed"] = json::array();
  for (const auto& d : data.directed) {
    json o;
    o["path"] = d.path;
    o["generators"] = d.generators;
    o["preperiod"] = genmaps_to(d.preperiod);
    o["period"] = genmaps_to(d.period);
    out["directed"].push_back(std::move(o));
  }
  return out;
}

json to_json(const MultiGGSData& data) {
  json out;
  out["m"] = data.degree();
  json rows = json::array();
  for (const auto& r : data.E.row_list()) rows.push_back(r);
  out["E"] = std::move(rows);
  return out;
}

}  // namespace madic
