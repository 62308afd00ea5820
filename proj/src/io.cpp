#include "msplit/io.hpp"

#include <fstream>

namespace msplit {

ojson parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  ojson j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
  return j;
}

void write_file(const std::string& path, const ojson& j) {
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, "cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

static const ojson& field(const ojson& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(errc::parse_error, std::string("missing field '") + key + "'");
  return *it;
}

ojson space_to_json(const FinSpace& s, std::size_t opens_cap) {
  ojson j;
  j["name"] = s.name();
  j["points"] = s.labels();
  ojson opens = ojson::array();
  for (Mask m : s.all_opens(opens_cap)) {
    ojson one = ojson::array();
    for (auto p : bits(m)) one.push_back(s.label(p));
    opens.push_back(std::move(one));
  }
  j["opens"] = std::move(opens);
  return j;
}

FinSpace space_from_json(const ojson& j) {
  std::string name = field(j, "name").get<std::string>();
  auto labels = field(j, "points").get<std::vector<std::string>>();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (idx.count(labels[i])) fail(errc::duplicate_label, "label '" + labels[i] + "' repeated");
    idx[labels[i]] = i;
  }
  std::vector<Mask> opens;
  for (const auto& one : field(j, "opens")) {
    Mask m = 0;
    for (const auto& l : one) {
      auto it = idx.find(l.get<std::string>());
      if (it == idx.end())
        fail(errc::unknown_label, "open mentions unknown point '" + l.get<std::string>() + "'");
      m |= pt(it->second);
    }
    opens.push_back(m);
  }
  return FinSpace::build(std::move(name), std::move(labels), opens);
}

void Workspace::add_space(const FinSpace& s) {
  auto it = spaces_.find(s.name());
  if (it != spaces_.end() && !(it->second == s))
    fail(errc::duplicate_label, "a different space is already loaded as '" + s.name() + "'");
  spaces_.insert_or_assign(s.name(), s);
}

const FinSpace& Workspace::space(const std::string& name) const {
  auto it = spaces_.find(name);
  if (it == spaces_.end()) fail(errc::dangling_reference, "space '" + name + "' is not loaded");
  return it->second;
}

FinSpace Workspace::load_space(const std::string& path) {
  FinSpace s = space_from_json(parse_file(path));
  add_space(s);
  return s;
}

PointMap Workspace::map_from_json(const ojson& j) const {
  const FinSpace& dom = space(field(j, "domain").get<std::string>());
  const FinSpace& cod = space(field(j, "codomain").get<std::string>());
  std::vector<std::uint8_t> tbl(dom.size());
  std::vector<bool> set(dom.size(), false);
  for (const auto& [from, to] : field(j, "map").items()) {
    std::size_t x = dom.index(from);
    tbl[x] = static_cast<std::uint8_t>(cod.index(to.get<std::string>()));
    set[x] = true;
  }
  for (std::size_t x = 0; x < dom.size(); ++x)
    if (!set[x]) fail(errc::parse_error, "map misses point '" + dom.label(x) + "'");
  return PointMap(dom, cod, std::move(tbl));
}

MultiMap Workspace::multimap_from_json(const ojson& j) const {
  const FinSpace& dom = space(field(j, "domain").get<std::string>());
  const FinSpace& cod = space(field(j, "codomain").get<std::string>());
  std::vector<Mask> val(dom.size(), 0);
  std::vector<bool> set(dom.size(), false);
  for (const auto& [from, tos] : field(j, "map").items()) {
    std::size_t x = dom.index(from);
    for (const auto& to : tos) val[x] |= pt(cod.index(to.get<std::string>()));
    set[x] = true;
  }
  for (std::size_t x = 0; x < dom.size(); ++x)
    if (!set[x]) fail(errc::parse_error, "multimap misses point '" + dom.label(x) + "'");
  return MultiMap(dom, cod, std::move(val));
}

PointMap Workspace::load_map(const std::string& path) { return map_from_json(parse_file(path)); }

MultiMap Workspace::load_multimap(const std::string& path) {
  return multimap_from_json(parse_file(path));
}

ReglueDatum Workspace::load_reglue(const std::string& path) {
  ojson j = parse_file(path);
  auto sub = [&](const char* key) -> ojson {
    const ojson& v = field(j, key);
    if (v.is_string()) return parse_file(v.get<std::string>());
    return v;
  };
  FinSpace z = space_from_json(sub("Z"));
  add_space(z);
  PointMap px = map_from_json(sub("pX"));
  PointMap py = map_from_json(sub("pY"));
  PointMap pxinv = map_from_json(sub("pXinv"));
  return ReglueDatum::make(std::move(z), std::move(px), std::move(py), std::move(pxinv));
}

ojson map_to_json(const PointMap& f, const std::string& name) {
  ojson j;
  j["name"] = name;
  j["domain"] = f.dom.name();
  j["codomain"] = f.cod.name();
  ojson m;
  for (std::size_t x = 0; x < f.dom.size(); ++x) m[f.dom.label(x)] = f.cod.label(f.tbl[x]);
  j["map"] = std::move(m);
  return j;
}

ojson multimap_to_json(const MultiMap& f, const std::string& name) {
  ojson j;
  j["name"] = name;
  j["domain"] = f.dom.name();
  j["codomain"] = f.cod.name();
  ojson m;
  for (std::size_t x = 0; x < f.dom.size(); ++x) {
    ojson tos = ojson::array();
    for (auto y : bits(f.val[x])) tos.push_back(f.cod.label(y));
    m[f.dom.label(x)] = std::move(tos);
  }
  j["map"] = std::move(m);
  return j;
}

ojson reglue_to_json(const ReglueDatum& d) {
  ojson j;
  j["Z"] = space_to_json(d.Z);
  j["pX"] = map_to_json(d.pX, "pX");
  j["pY"] = map_to_json(d.pY, "pY");
  j["pXinv"] = map_to_json(d.pXinv, "pXinv");
  return j;
}

static ojson mask_labels(const FinSpace& s, Mask m) {
  ojson a = ojson::array();
  for (auto p : bits(m)) a.push_back(s.label(p));
  return a;
}

ojson ev_family_report(const EvFamily& fam, const PointMap& f) {
  ojson j;
  j["point"] = f.dom.label(fam.at);
  ojson sets = ojson::array();
  for (Mask z : fam.sets) sets.push_back(mask_labels(fam.codomain, z));
  j["sets"] = std::move(sets);
  ojson minimal = ojson::array();
  for (Mask z : fam.minimal) minimal.push_back(mask_labels(fam.codomain, z));
  j["minimal"] = std::move(minimal);
  j["continuous_at"] = fam.continuous_at(f);
  j["split_at"] = fam.split_at(f);
  return j;
}

ojson witness_report_to_json(const WitnessReport& rep) {
  ojson j;
  j["claim"] = rep.claim;
  j["depth"] = rep.depth;
  j["verdict"] = rep.pass ? "consistent at depth" : "FAILED";
  ojson ev = ojson::array();
  for (const auto& e : rep.evidence) {
    ojson one;
    one["input"] = e.input;
    one["output"] = e.output;
    one["check"] = e.check;
    ev.push_back(std::move(one));
  }
  j["evidence"] = std::move(ev);
  return j;
}

} // namespace msplit
