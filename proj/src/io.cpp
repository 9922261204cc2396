#include "plic/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace plic {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void parse_fail_at(const std::string& text, std::size_t byte,
                                const std::string& what) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  fail(Errc::ParseError, what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col));
}

void reject_unknown_keys(const ordered_json& obj,
                         const std::vector<std::string>& allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const auto& k : allowed) ok = ok || it.key() == k;
    if (!ok)
      fail(Errc::ParseError, "unknown field '" + it.key() + "' in " + where);
  }
}

std::array<std::string, 3> triple_strings(const ordered_json& arr,
                                          const std::string& id) {
  if (!arr.is_array() || arr.size() != 3)
    fail(Errc::ParseError, "coords of '" + id + "' must be a 3-element array");
  std::array<std::string, 3> out;
  for (int i = 0; i < 3; ++i) {
    if (!arr[i].is_string())
      fail(Errc::ParseError, "coords of '" + id + "' must hold rational strings");
    out[i] = arr[i].get<std::string>();
  }
  return out;
}

}  // namespace

StructureFile parse_structure_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail_at(text, e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
  }
  if (!j.is_object()) fail(Errc::ParseError, "top level must be an object");
  reject_unknown_keys(j, {"name", "points", "lines", "coords"}, "structure file");
  if (!j.contains("name") || !j["name"].is_string())
    fail(Errc::ParseError, "missing string field 'name'");
  if (!j.contains("points") || !j["points"].is_array())
    fail(Errc::ParseError, "missing array field 'points'");
  if (!j.contains("lines") || !j["lines"].is_array())
    fail(Errc::ParseError, "missing array field 'lines'");

  StructureFile out;
  out.name = j["name"].get<std::string>();

  std::vector<std::string> pids;
  for (const auto& p : j["points"]) {
    if (!p.is_string()) fail(Errc::ParseError, "point ids must be strings");
    pids.push_back(p.get<std::string>());
  }
  std::vector<std::string> lids;
  std::vector<std::pair<std::string, std::string>> inc;
  for (const auto& l : j["lines"]) {
    if (!l.is_object()) fail(Errc::ParseError, "each line must be an object");
    reject_unknown_keys(l, {"id", "points"}, "line entry");
    if (!l.contains("id") || !l["id"].is_string())
      fail(Errc::ParseError, "line entry misses string 'id'");
    if (!l.contains("points") || !l["points"].is_array())
      fail(Errc::ParseError, "line entry misses array 'points'");
    std::string lid = l["id"].get<std::string>();
    lids.push_back(lid);
    for (const auto& p : l["points"]) {
      if (!p.is_string()) fail(Errc::ParseError, "line point ids must be strings");
      inc.emplace_back(p.get<std::string>(), lid);
    }
  }

  IncidenceStructure s;
  try {
    s = IncidenceStructure::make(pids, lids, inc);
  } catch (const Error& e) {
    if (e.code() == Errc::GirthViolation) throw;
    fail(Errc::ValidationError, e.what());
  }

  Realization r;
  if (j.contains("coords")) {
    if (!j["coords"].is_object()) fail(Errc::ParseError, "'coords' must be an object");
    reject_unknown_keys(j["coords"], {"points", "lines"}, "coords");
    out.has_coords = true;
    if (j["coords"].contains("points"))
      for (auto it = j["coords"]["points"].begin(); it != j["coords"]["points"].end(); ++it) {
        if (s.point_index(it.key()) < 0)
          fail(Errc::ValidationError, "coords name unknown point '" + it.key() + "'");
        r.set_point(it.key(), ProjPoint::parse(triple_strings(it.value(), it.key())));
      }
    if (j["coords"].contains("lines"))
      for (auto it = j["coords"]["lines"].begin(); it != j["coords"]["lines"].end(); ++it) {
        if (s.line_index(it.key()) < 0)
          fail(Errc::ValidationError, "coords name unknown line '" + it.key() + "'");
        r.set_line(it.key(), ProjLine::parse(triple_strings(it.value(), it.key())));
      }
    for (const auto& id : s.point_ids())
      if (!r.point(id))
        fail(Errc::ValidationError, "coords present but point '" + id + "' uncovered");
    for (const auto& id : s.line_ids())
      if (!r.line(id))
        fail(Errc::ValidationError, "coords present but line '" + id + "' uncovered");
  }

  out.data = Realized{std::move(s), std::move(r)};
  return out;
}

StructureFile load_structure(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_structure_json(ss.str());
}

std::string structure_json(const StructureFile& f) {
  ordered_json j;
  j["name"] = f.name;
  j["points"] = ordered_json::array();
  for (const auto& id : f.data.inc.point_ids()) j["points"].push_back(id);
  j["lines"] = ordered_json::array();
  for (int l = 0; l < f.data.inc.num_lines(); ++l) {
    ordered_json e;
    e["id"] = f.data.inc.line_ids()[l];
    e["points"] = ordered_json::array();
    for (int p : f.data.inc.points_of_line(l))
      e["points"].push_back(f.data.inc.point_ids()[p]);
    j["lines"].push_back(std::move(e));
  }
  if (f.has_coords) {
    ordered_json cp = ordered_json::object();
    for (const auto& id : f.data.inc.point_ids()) {
      const ProjPoint* p = f.data.coords.point(id);
      if (!p) fail(Errc::UnmappedId, "point '" + id + "' lacks coordinates on save");
      cp[id] = {p->coords()[0].get_str(), p->coords()[1].get_str(),
                p->coords()[2].get_str()};
    }
    ordered_json cl = ordered_json::object();
    for (const auto& id : f.data.inc.line_ids()) {
      const ProjLine* l = f.data.coords.line(id);
      if (!l) fail(Errc::UnmappedId, "line '" + id + "' lacks coordinates on save");
      cl[id] = {l->coeffs()[0].get_str(), l->coeffs()[1].get_str(),
                l->coeffs()[2].get_str()};
    }
    j["coords"] = ordered_json::object();
    j["coords"]["points"] = std::move(cp);
    j["coords"]["lines"] = std::move(cl);
  }
  return j.dump(2) + "\n";
}

void save_structure(const std::string& path, const StructureFile& f) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::ParseError, "cannot write '" + path + "'");
  out << structure_json(f);
}

}  // namespace plic
