#pragma once

// File formats and the CLI workspace.
//
//   space file:    {"name": str, "points": [labels], "opens": [[labels]]}
//   function file: {"name": str, "domain": space, "codomain": space,
//                   "map": {label: label}}
//   multimap file: same, with "map": {label: [labels]}
//   reglue file:   {"Z": space|path, "pX": fn|path, "pY": fn|path,
//                   "pXinv": fn|path}
//
// Functions reference spaces by name, so spaces load first.  Saving is
// canonical (opens ascending, fixed key order), which makes save/load/save a
// fixpoint and reports regression-diffable.

#include <map>
#include <string>

#include "json.hpp"
#include "msplit/gallery.hpp"
#include "msplit/multisplit.hpp"
#include "msplit/reglue.hpp"

namespace msplit {

using ojson = nlohmann::ordered_json;

ojson space_to_json(const FinSpace& s, std::size_t opens_cap = 20);
FinSpace space_from_json(const ojson& j);

class Workspace {
public:
  void add_space(const FinSpace& s);
  const FinSpace& space(const std::string& name) const;

  FinSpace load_space(const std::string& path);
  PointMap load_map(const std::string& path);
  MultiMap load_multimap(const std::string& path);
  ReglueDatum load_reglue(const std::string& path);

  PointMap map_from_json(const ojson& j) const;
  MultiMap multimap_from_json(const ojson& j) const;

private:
  std::map<std::string, FinSpace> spaces_;
};

ojson map_to_json(const PointMap& f, const std::string& name);
ojson multimap_to_json(const MultiMap& f, const std::string& name);
ojson reglue_to_json(const ReglueDatum& d);

ojson ev_family_report(const EvFamily& fam, const PointMap& f);
ojson witness_report_to_json(const WitnessReport& rep);

ojson parse_file(const std::string& path);
void write_file(const std::string& path, const ojson& j);

} // namespace msplit
