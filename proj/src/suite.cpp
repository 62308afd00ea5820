#include "msplit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "msplit/io.hpp"

namespace msplit {

namespace {

// ---------------------------------------------------------------- instances

struct Instance {
  std::vector<FinSpace> spaces;
  std::vector<PointMap> maps;
  std::vector<MultiMap> multimaps;
  ojson aux = ojson::object();
};

std::size_t space_idx(Instance& inst, const FinSpace& s) {
  for (std::size_t i = 0; i < inst.spaces.size(); ++i)
    if (inst.spaces[i] == s) return i;
  inst.spaces.push_back(s);
  return inst.spaces.size() - 1;
}

Instance make_instance(std::vector<FinSpace> spaces, std::vector<PointMap> maps,
                       std::vector<MultiMap> multimaps = {}, ojson aux = ojson::object()) {
  Instance inst;
  inst.spaces = std::move(spaces);
  inst.maps = std::move(maps);
  inst.multimaps = std::move(multimaps);
  inst.aux = std::move(aux);
  return inst;
}

ojson inst_to_json(const Instance& in) {
  Instance copy = in; // space_idx may append referenced spaces
  ojson j;
  ojson maps = ojson::array();
  for (const auto& f : copy.maps) {
    ojson m;
    m["dom"] = space_idx(copy, f.dom);
    m["cod"] = space_idx(copy, f.cod);
    m["tbl"] = f.tbl;
    maps.push_back(std::move(m));
  }
  ojson mms = ojson::array();
  for (const auto& f : copy.multimaps) {
    ojson m;
    m["dom"] = space_idx(copy, f.dom);
    m["cod"] = space_idx(copy, f.cod);
    m["val"] = f.val;
    mms.push_back(std::move(m));
  }
  ojson spaces = ojson::array();
  for (const auto& s : copy.spaces) spaces.push_back(space_to_json(s));
  j["spaces"] = std::move(spaces);
  j["maps"] = std::move(maps);
  j["multimaps"] = std::move(mms);
  j["aux"] = copy.aux;
  return j;
}

Instance inst_from_json(const ojson& j) {
  Instance in;
  for (const auto& s : j.at("spaces")) in.spaces.push_back(space_from_json(s));
  for (const auto& m : j.at("maps"))
    in.maps.emplace_back(in.spaces.at(m.at("dom").get<std::size_t>()),
                         in.spaces.at(m.at("cod").get<std::size_t>()),
                         m.at("tbl").get<std::vector<std::uint8_t>>());
  for (const auto& m : j.at("multimaps"))
    in.multimaps.emplace_back(in.spaces.at(m.at("dom").get<std::size_t>()),
                              in.spaces.at(m.at("cod").get<std::size_t>()),
                              m.at("val").get<std::vector<Mask>>());
  in.aux = j.at("aux");
  return in;
}

// ---------------------------------------------------------------- utilities

using Emit = std::function<void(Instance&&)>;

const std::vector<FinSpace>& spaces_upto(int nmax) {
  static std::vector<FinSpace> cache[5];
  nmax = std::clamp(nmax, 1, 4);
  if (cache[nmax].empty())
    for (int n = 1; n <= nmax; ++n)
      for (auto& s : enumerate_topologies(n)) cache[nmax].push_back(s);
  return cache[nmax];
}

std::vector<FinSpace> discretes_upto(int nmax) {
  std::vector<FinSpace> v;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    v.push_back(FinSpace::discrete("D" + std::to_string(n), labels));
  }
  return v;
}

enum class Cod { any, discrete };

// Exhaustive (size <= exhaustive_max) plus `trials` random map instances.
void gen_maps(const SuiteOptions& opt, Cod cod, std::size_t rand_max, const Emit& emit) {
  if (opt.exhaustive_max > 0) {
    const auto& xs = spaces_upto(std::min(opt.exhaustive_max, 3));
    const auto ys = cod == Cod::discrete ? discretes_upto(std::min(opt.exhaustive_max, 3))
                                         : spaces_upto(std::min(opt.exhaustive_max, 3));
    for (const auto& x : xs)
      for (const auto& y : ys)
        for_each_map(x, y, [&](const PointMap& f) { emit(make_instance({x, y}, {f})); });
  }
  Rng rng(opt.seed);
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    FinSpace x = rng.space(1 + rng.below(rand_max));
    FinSpace y = cod == Cod::discrete ? rng.discrete_space(1 + rng.below(rand_max))
                                      : rng.space(1 + rng.below(rand_max));
    emit(make_instance({x, y}, {rng.map(x, y)}));
  }
}

bool small_enough_for_oracle(const Instance& in) {
  for (const auto& s : in.spaces)
    if (s.size() > 4) return false;
  return true;
}

bool continuity_oracle(const PointMap& f) {
  for (Mask v : f.cod.all_opens())
    if (!f.dom.is_open(f.preimage(v))) return false;
  return true;
}

bool closed_map_oracle(const PointMap& f) {
  for (Mask v : f.dom.all_opens())
    if (!f.cod.is_closed(f.image(f.dom.full() & ~v))) return false;
  return true;
}

PointMap projection_to_domain(const GraphClosure& gc, const PointMap& f, Mask part) {
  FinSpace zs = subspace(gc.prod, part);
  std::vector<std::uint8_t> tbl;
  for (auto g : bits(part)) tbl.push_back(static_cast<std::uint8_t>(g / f.cod.size()));
  return PointMap(zs, f.dom, std::move(tbl));
}

// All (Zf, Zg) pairs when few, a minimal-times-minimal sample otherwise.
std::vector<std::pair<Mask, Mask>> family_pairs(const EvFamily& a, const EvFamily& b) {
  std::vector<std::pair<Mask, Mask>> out;
  if (a.sets.size() * b.sets.size() <= 64) {
    for (Mask za : a.sets)
      for (Mask zb : b.sets) out.emplace_back(za, zb);
  } else {
    for (std::size_t i = 0; i < std::min<std::size_t>(4, a.minimal.size()); ++i)
      for (std::size_t j = 0; j < std::min<std::size_t>(4, b.minimal.size()); ++j)
        out.emplace_back(a.minimal[i], b.minimal[j]);
    out.emplace_back(a.sets.back(), b.sets.back());
  }
  return out;
}

// ---------------------------------------------------------------- properties

struct Property {
  const char* name;
  const char* note;
  std::function<void(const SuiteOptions&, const Emit&)> generate;
  std::function<bool(const Instance&, const SuiteOptions&)> check;
};

bool check_strategy_agreement(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  for (std::size_t p = 0; p < f.dom.size(); ++p)
    for (Mask z = 1; z <= f.cod.full(); ++z)
      if (is_ev_set(f, p, z, Strategy::fast) != is_ev_set(f, p, z, Strategy::definitional))
        return false;
  return true;
}

bool check_reduction(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  const Strategy s = small_enough_for_oracle(in) ? Strategy::definitional : Strategy::fast;
  for (std::size_t p = 0; p < f.dom.size(); ++p) {
    Mask xp = xp_set(f, p);
    for (Mask z = 1; z <= f.cod.full(); ++z) {
      if (!condition_b(f, p, z, s)) continue;
      Mask extracted = z & xp; // the points of z where condition (a) holds
      if (extracted == 0) return false;
      if (!is_ev_set(f, p, extracted, Strategy::fast)) return false;
    }
  }
  return true;
}

bool check_fp_inclusion(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  for (std::size_t p = 0; p < f.dom.size(); ++p) {
    EvFamily fam = ev_family(f, p);
    if (fam.sets.empty()) return false;
    for (Mask z : fam.sets)
      if (!fam.member(z | pt(f.tbl[p]))) return false;
  }
  return true;
}

bool check_interval(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  for (std::size_t p = 0; p < f.dom.size(); ++p) {
    EvFamily fam = ev_family(f, p);
    for (Mask z : fam.sets)
      for (Mask zt : fam.sets) {
        Mask extra = zt & ~z;
        for (Mask sub = extra;; sub = (sub - 1) & extra) {
          if (!fam.member(z | sub)) return false;
          if (sub == 0) break;
        }
      }
  }
  return true;
}

bool check_unique(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  if (!separation_flags(f.cod).hausdorff) return true;
  for (std::size_t p = 0; p < f.dom.size(); ++p) {
    EvFamily fam = ev_family(f, p);
    Mask canonical = f.image(f.dom.min_open(p));
    if (fam.sets.size() != 1) return false;
    if (fam.sets[0] != canonical || fam.sets[0] != xp_set(f, p)) return false;
  }
  return true;
}

bool check_compose(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  const PointMap& g = in.maps[1];
  PointMap gf = compose(g, f);
  const bool tiny = small_enough_for_oracle(in);
  std::vector<EvFamily> fam_g;
  for (std::size_t y = 0; y < g.dom.size(); ++y) fam_g.push_back(ev_family(g, y));

  for (std::size_t p = 0; p < f.dom.size(); ++p) {
    EvFamily fam_f = ev_family(f, p);
    for (Mask zf : fam_f.sets) {
      // Enumerate all per-y choices when few, else two canonical ones.
      std::vector<std::size_t> ys;
      for (auto y : bits(zf)) ys.push_back(y);
      unsigned long long combos = 1;
      for (auto y : ys) combos *= fam_g[y].sets.size();
      std::vector<std::vector<Mask>> choices;
      if (combos <= 64) {
        std::vector<std::size_t> idx(ys.size(), 0);
        for (;;) {
          std::vector<Mask> one;
          for (std::size_t i = 0; i < ys.size(); ++i) one.push_back(fam_g[ys[i]].sets[idx[i]]);
          choices.push_back(std::move(one));
          std::size_t i = ys.size();
          bool done = true;
          while (i-- > 0) {
            if (++idx[i] < fam_g[ys[i]].sets.size()) {
              done = false;
              break;
            }
            idx[i] = 0;
          }
          if (done) break;
        }
      } else {
        std::vector<Mask> lo, hi;
        for (auto y : ys) {
          lo.push_back(fam_g[y].minimal.front());
          hi.push_back(fam_g[y].sets.back());
        }
        choices.push_back(std::move(lo));
        choices.push_back(std::move(hi));
      }
      for (const auto& choice : choices) {
        auto chooser = [&](std::size_t y) {
          for (std::size_t i = 0; i < ys.size(); ++i)
            if (ys[i] == y) return choice[i];
          fail(errc::internal_mismatch, "chooser asked outside zf");
        };
        ComposeEv ce = compose_ev(f, g, p, zf, chooser);
        if (!condition_b(gf, p, ce.z_tilde, Strategy::fast)) return false;
        if (tiny && !condition_b(gf, p, ce.z_tilde, Strategy::definitional)) return false;
        if (ce.ev_subset == 0) return false;
        if (!is_ev_set(gf, p, ce.ev_subset, Strategy::fast)) return false;
      }
    }
  }
  return true;
}

bool check_xp(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  for (std::size_t p = 0; p < f.dom.size(); ++p) {
    Mask meet = f.cod.full();
    for (Mask u : f.dom.all_opens())
      if (has(u, p)) meet &= f.cod.closure(f.image(u));
    if (meet != xp_set(f, p)) return false;
  }
  return true;
}

bool check_star_usc(const Instance& in, const SuiteOptions&) {
  MultiMap fs = star(in.maps[0]);
  return is_usc(fs, Strategy::fast).value && is_usc(fs, Strategy::definitional).value;
}

bool check_star_usco_closed(const Instance& in, const SuiteOptions&) {
  MultiMap fs = star(in.maps[0]);
  if (!is_usco(fs)) return false;
  GraphClosure gc = graph_and_closure(fs);
  return gc.closed.mask == gc.graph.mask;
}

bool check_graph(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  GraphClosure gc = graph_and_closure(f);
  GraphClosure gs = graph_and_closure(star(f));
  return gc.closed.mask == gs.graph.mask;
}

bool check_proj_closed(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  GraphClosure gs = graph_and_closure(star(f));
  return is_closed_map(projection_to_domain(gs, f, gs.graph.mask));
}

bool check_finusc(const Instance& in, const SuiteOptions& opt) {
  const MultiMap& g = in.multimaps[0];
  if (small_enough_for_oracle(in) && is_usc(g).value != is_usc(g, Strategy::definitional).value)
    return false;
  if (!is_usc(g).value || !g.all_non_empty()) return true;
  PreMsReport rep = is_pre_multi_split(g, opt.selection_cap);
  return rep.value && rep.fp_certifies_all;
}

bool check_star_pms(const Instance& in, const SuiteOptions& opt) {
  PreMsReport rep = is_pre_multi_split(star(in.maps[0]), opt.selection_cap);
  return rep.value && rep.fp_certifies_all;
}

bool check_minusco(const Instance& in, const SuiteOptions& opt) {
  const MultiMap& g = in.multimaps[0];
  if (!g.all_non_empty() || !is_usco(g)) return true;
  if (!is_minimal_usco(g, opt.selection_cap)) return true;
  MultiMap expect = g;
  bool ok = true;
  SelectionStream(g).for_each(
      [&](const PointMap& s) {
        if (!(star(s) == expect)) ok = false;
      },
      opt.selection_cap);
  return ok;
}

bool check_cont_iff(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  ContinuityEquivalence ce = continuity_equivalence(f);
  if (ce.continuous != ce.msc_and_closed_graph) return false;
  if (small_enough_for_oracle(in) && ce.continuous != continuity_oracle(f)) return false;
  return true;
}

bool check_fto(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  ProjectionCheck pc = graph_projection_check(f, f.cod.size());
  if (!pc.within_bound) return false;
  MultiMap fs = star(f);
  for (std::size_t x = 0; x < f.dom.size(); ++x)
    if (pc.fiber_sizes[x] != static_cast<std::size_t>(count(fs.val[x]))) return false;
  return true;
}

bool check_union(const Instance& in, const SuiteOptions& opt) {
  const PointMap& f = in.maps[0];
  const PointMap& g = in.maps[1];
  MultiMap u = mm_combine(MultiMap::lift(f), MultiMap::lift(g), CombineMode::set_union);
  std::vector<EvFamily> fam_f, fam_g;
  for (std::size_t p = 0; p < f.dom.size(); ++p) {
    fam_f.push_back(ev_family(f, p));
    fam_g.push_back(ev_family(g, p));
  }
  bool ok = true;
  SelectionStream(u).for_each(
      [&](const PointMap& h) {
        for (std::size_t p = 0; p < f.dom.size() && ok; ++p)
          for (auto [zf, zg] : family_pairs(fam_f[p], fam_g[p]))
            if (!condition_b(h, p, zf | zg, Strategy::fast)) {
              ok = false;
              break;
            }
      },
      opt.selection_cap);
  return ok;
}

bool check_sub_union(const Instance& in, const SuiteOptions& opt) {
  const MultiMap& f1 = in.multimaps[0];
  const MultiMap& f2 = in.multimaps[1];
  auto submasks = in.aux.at("sub").get<std::vector<Mask>>();
  std::vector<Mask> val(f1.dom.size());
  for (std::size_t x = 0; x < f1.dom.size(); ++x) {
    val[x] = f1.val[x] & submasks[x];
    if (val[x] == 0) val[x] = pt(*bits(f1.val[x]).begin());
  }
  MultiMap sub(f1.dom, f1.cod, std::move(val));
  if (!is_pre_multi_split(sub, opt.selection_cap).value) return false;
  return is_pre_multi_split(mm_combine(f1, f2, CombineMode::set_union), opt.selection_cap).value;
}

bool check_invimg(const Instance& in, const SuiteOptions& opt) {
  const PointMap& f = in.maps[0];
  MultiMap inv = inverse_image_multifunction(f);
  bool closed = is_closed_map(f);
  if (is_usc(inv).value != closed) return false;
  if (small_enough_for_oracle(in) && closed != closed_map_oracle(f)) return false;
  if (closed && f.is_surjective()) {
    PreMsReport rep = is_pre_multi_split(inv, opt.selection_cap);
    if (!rep.value || !rep.fp_certifies_all) return false;
  }
  return true;
}

bool check_quot(const Instance& in, const SuiteOptions& opt) {
  const FinSpace& x = in.spaces[0];
  auto classes = in.aux.at("classes").get<std::vector<Mask>>();
  Quotient q = quotient_space(x, classes);
  std::vector<std::uint8_t> tbl(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) tbl[p] = q.class_of[p];
  PointMap proj(x, q.space, std::move(tbl));
  if (!is_quotient_map(proj)) return false;
  if (!separation_flags(q.space).hausdorff) return true;
  if (!is_closed_map(proj)) return false;
  PreMsReport rep = is_pre_multi_split(inverse_image_multifunction(proj), opt.selection_cap);
  return rep.value && rep.fp_certifies_all;
}

bool check_equiv6(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  const PointMap& g = in.maps[1];
  if (!is_split_homeo(PointMap::identity(f.dom)).value) return false;
  if (!is_split_homeo(f).value) return false;
  if (!is_split_homeo(f.inverse()).value) return false;
  if (!is_split_homeo(compose(g, f)).value) return false;
  if (f.dom.size() >= 2 && is_split_homeo(PointMap::constant(f.dom, f.cod, 0)).value)
    return false; // non-injective maps never qualify
  return true;
}

bool check_invstar(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  PointMap finv = f.inverse();
  for (std::size_t y0 = 0; y0 < f.cod.size(); ++y0)
    if (inverse_star(f, y0) != pt(finv.tbl[y0])) return false;
  return true;
}

bool check_equiv7(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  const PointMap& g = in.maps[1];
  if (!validate_reglue(ReglueDatum::identity(f.dom)).ok()) return false;
  ReglueDatum d1 = reglue_from_splithomeo(f);
  if (!validate_reglue(d1).ok()) return false;
  ReglueDatum rev = d1.reversed();
  if (!validate_reglue(rev).ok() || !(rev.f == f.inverse())) return false;
  ReglueDatum d2 = reglue_from_splithomeo(g);
  ReglueDatum comp = reglue_transitive(d1, d2);
  if (!validate_reglue(comp).ok()) return false;
  return comp.f == compose(g, f);
}

bool check_roundtrip(const Instance& in, const SuiteOptions&) {
  const PointMap& f = in.maps[0];
  PointMap back = splithomeo_from_reglue(reglue_from_splithomeo(f));
  if (!(back == f)) return false;
  if (in.maps.size() > 1) {
    const PointMap& g = in.maps[1];
    ReglueDatum comp = reglue_transitive(reglue_from_splithomeo(f), reglue_from_splithomeo(g));
    if (!validate_reglue(comp).ok()) return false;
    if (!(comp.f == compose(g, f))) return false;
  }
  return true;
}

// Generators for bijection-shaped instances.
void gen_bijections(const SuiteOptions& opt, bool discrete_only, bool with_second,
                    std::size_t rand_max, const Emit& emit) {
  auto emit_pair = [&](const FinSpace& x, const FinSpace& y, const FinSpace& z,
                       std::vector<std::uint8_t> perm1, std::vector<std::uint8_t> perm2) {
    std::vector<PointMap> maps;
    maps.emplace_back(x, y, std::move(perm1));
    if (with_second) maps.emplace_back(y, z, std::move(perm2));
    std::vector<FinSpace> spaces = {x, y};
    if (with_second) spaces.push_back(z);
    emit(make_instance(std::move(spaces), std::move(maps)));
  };
  if (opt.exhaustive_max > 0) {
    int nmax = std::min(opt.exhaustive_max, discrete_only ? 4 : 2);
    auto pool = discrete_only ? discretes_upto(nmax) : spaces_upto(nmax);
    for (const auto& x : pool)
      for (const auto& y : pool) {
        if (x.size() != y.size()) continue;
        std::vector<std::uint8_t> perm(x.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::uint8_t>(i);
        do {
          if (!with_second) {
            emit_pair(x, y, y, perm, {});
            continue;
          }
          for (const auto& z : pool) {
            if (z.size() != y.size()) continue;
            std::vector<std::uint8_t> perm2(x.size());
            for (std::size_t i = 0; i < perm2.size(); ++i)
              perm2[i] = static_cast<std::uint8_t>(i);
            do {
              emit_pair(x, y, z, perm, perm2);
            } while (std::next_permutation(perm2.begin(), perm2.end()));
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
  }
  Rng rng(opt.seed);
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    std::size_t n = 1 + rng.below(rand_max);
    FinSpace x = discrete_only ? rng.discrete_space(n) : rng.space(n);
    FinSpace y = discrete_only ? FinSpace::discrete("E" + std::to_string(n), x.labels())
                               : rng.space(n);
    FinSpace z = discrete_only ? FinSpace::discrete("F" + std::to_string(n), x.labels()) : rng.space(n);
    auto perm_of = [&](std::size_t m) {
      std::vector<std::uint8_t> p(m);
      for (std::size_t i = 0; i < m; ++i) p[i] = static_cast<std::uint8_t>(i);
      for (std::size_t i = m; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
      return p;
    };
    emit_pair(x, y, z, perm_of(n), perm_of(n));
  }
}

const std::vector<Property>& registry() {
  static const std::vector<Property> props = [] {
    std::vector<Property> v;

    auto maps_gen = [](Cod cod, std::size_t rand_max) {
      return [cod, rand_max](const SuiteOptions& opt, const Emit& emit) {
        gen_maps(opt, cod, rand_max, emit);
      };
    };
    auto two_maps_gen = [](int ex_cap, std::size_t rand_max, bool composable) {
      return [ex_cap, rand_max, composable](const SuiteOptions& opt, const Emit& emit) {
        if (opt.exhaustive_max > 0) {
          const auto& pool = spaces_upto(std::min(opt.exhaustive_max, ex_cap));
          for (const auto& x : pool)
            for (const auto& y : pool) {
              if (composable) {
                for (const auto& z : pool)
                  for_each_map(x, y, [&](const PointMap& f) {
                    for_each_map(y, z, [&](const PointMap& g) {
                      emit(make_instance({x, y, z}, {f, g}));
                    });
                  });
              } else {
                for_each_map(x, y, [&](const PointMap& f) {
                  for_each_map(x, y, [&](const PointMap& g) {
                    emit(make_instance({x, y}, {f, g}));
                  });
                });
              }
            }
        }
        Rng rng(opt.seed);
        for (std::uint64_t t = 0; t < opt.trials; ++t) {
          FinSpace x = rng.space(1 + rng.below(rand_max));
          FinSpace y = rng.space(1 + rng.below(rand_max));
          if (composable) {
            FinSpace z = rng.space(1 + rng.below(rand_max));
            emit(make_instance({x, y, z}, {rng.map(x, y), rng.map(y, z)}));
          } else {
            emit(make_instance({x, y}, {rng.map(x, y), rng.map(x, y)}));
          }
        }
      };
    };
    auto multimap_gen = [](Cod cod, std::size_t rand_max, bool usc_ify, int count) {
      return [cod, rand_max, usc_ify, count](const SuiteOptions& opt, const Emit& emit) {
        if (opt.exhaustive_max > 0) {
          const auto& xs = spaces_upto(std::min(opt.exhaustive_max, 2));
          const auto ys =
              cod == Cod::discrete ? discretes_upto(2) : spaces_upto(std::min(opt.exhaustive_max, 2));
          for (const auto& x : xs)
            for (const auto& y : ys) {
              // every non-empty-valued multimap on these small spaces
              std::vector<Mask> val(x.size(), 1);
              for (;;) {
                Instance inst = make_instance({x, y}, {}, {MultiMap(x, y, val)});
                if (count == 2) {
                  inst.multimaps.push_back(inst.multimaps[0]);
                  inst.aux["sub"] = std::vector<Mask>(x.size(), ~Mask{0});
                }
                emit(std::move(inst));
                std::size_t i = x.size();
                bool done = true;
                while (i-- > 0) {
                  if (++val[i] <= y.full()) {
                    done = false;
                    break;
                  }
                  val[i] = 1;
                }
                if (done) break;
              }
            }
        }
        Rng rng(opt.seed);
        for (std::uint64_t t = 0; t < opt.trials; ++t) {
          FinSpace x = rng.space(1 + rng.below(rand_max));
          FinSpace y = cod == Cod::discrete ? rng.discrete_space(1 + rng.below(rand_max))
                                            : rng.space(1 + rng.below(rand_max));
          MultiMap m = rng.multimap(x, y, false);
          if (usc_ify && !is_usc(m).value) {
            std::vector<Mask> val(x.size());
            for (std::size_t p = 0; p < x.size(); ++p) {
              val[p] = 0;
              for (auto q : bits(x.min_open(p))) val[p] |= m.val[q];
            }
            m = MultiMap(x, y, std::move(val));
          }
          Instance inst = make_instance({x, y}, {}, {m});
          if (count == 2) {
            inst.multimaps.push_back(rng.multimap(x, y, false));
            std::vector<Mask> sub(x.size());
            for (auto& s : sub) s = rng.below(y.full() + 1);
            inst.aux["sub"] = sub;
          }
          emit(std::move(inst));
        }
      };
    };

    v.push_back({"P_strategy_agreement",
                 "the fast extended-value characterization agrees with the definitional one",
                 maps_gen(Cod::any, 4), check_strategy_agreement});
    v.push_back({"P_reduction",
                 "a finite set satisfying condition (b) contains an extended-value set",
                 maps_gen(Cod::any, 4), check_reduction});
    v.push_back({"P_fp_inclusion",
                 "adjoining f(p) to an extended-value set yields an extended-value set",
                 maps_gen(Cod::any, 4), check_fp_inclusion});
    v.push_back({"P_interval",
                 "sets between Z and the union of two extended-value sets are extended-value sets",
                 maps_gen(Cod::any, 4), check_interval});
    v.push_back({"P_unique",
                 "with a Hausdorff codomain the extended-value set is unique and equals f(U_p)",
                 maps_gen(Cod::discrete, 5), check_unique});
    v.push_back({"P_compose",
                 "the union of chosen extended-value sets certifies condition (b) for g after f",
                 two_maps_gen(2, 5, true), check_compose});
    v.push_back({"P_xp", "cl(f(U_p)) equals the meet of cl(f(U)) over all opens U containing p",
                 maps_gen(Cod::any, 4), check_xp});
    v.push_back({"P_star_usc", "the star multifunction is upper semicontinuous",
                 maps_gen(Cod::discrete, 6), check_star_usc});
    v.push_back({"P_star_usco_closed", "the star multifunction is usco and has a closed graph",
                 maps_gen(Cod::discrete, 6), check_star_usco_closed});
    v.push_back({"P_graph", "the closure of gr(f) equals gr(f*) exactly",
                 maps_gen(Cod::discrete, 6), check_graph});
    v.push_back({"P_proj_closed", "the projection of gr(f*) onto the domain is a closed map",
                 maps_gen(Cod::discrete, 6), check_proj_closed});
    v.push_back({"P_finusc",
                 "non-empty finite u.s.c. multifunctions are pre-multi-split with F(p) certificates",
                 multimap_gen(Cod::any, 5, true, 1), check_finusc});
    v.push_back({"P_star_pms", "the star multifunction is pre-multi-split",
                 maps_gen(Cod::discrete, 5), check_star_pms});
    v.push_back({"P_minusco", "selections of a finite minimal usco map all share it as their star",
                 multimap_gen(Cod::discrete, 4, false, 1), check_minusco});
    v.push_back({"P_cont_iff",
                 "continuity is equivalent to multi-split continuity with a closed graph",
                 maps_gen(Cod::discrete, 5), check_cont_iff});
    v.push_back({"P_fto",
                 "fibers of the closed graph projection match the star sizes and stay bounded",
                 maps_gen(Cod::discrete, 5), check_fto});
    v.push_back({"P_union",
                 "unions of extended-value sets certify condition (b) for selections of f or g",
                 two_maps_gen(2, 5, false), check_union});
    v.push_back({"P_sub_union",
                 "non-empty submultifunctions and finite unions stay pre-multi-split",
                 multimap_gen(Cod::any, 4, false, 2), check_sub_union});
    v.push_back({"P_invimg",
                 "the fiber multifunction is u.s.c. exactly for closed maps, pre-multi-split when "
                 "also surjective",
                 maps_gen(Cod::any, 4), check_invimg});
    v.push_back({"P_quot",
                 "fiber multifunctions of quotients with Hausdorff images are pre-multi-split",
                 [](const SuiteOptions& opt, const Emit& emit) {
                   auto emit_parts = [&](const FinSpace& x, const std::vector<Mask>& classes) {
                     Instance inst = make_instance({x}, {});
                     inst.aux["classes"] = classes;
                     emit(std::move(inst));
                   };
                   if (opt.exhaustive_max > 0) {
                     for (const auto& x : spaces_upto(std::min(opt.exhaustive_max, 3))) {
                       // all partitions via restricted growth strings
                       std::vector<std::uint8_t> rgs(x.size(), 0);
                       for (;;) {
                         std::uint8_t k = 0;
                         for (auto c : rgs) k = std::max<std::uint8_t>(k, c);
                         std::vector<Mask> classes(k + 1, 0);
                         for (std::size_t p = 0; p < x.size(); ++p) classes[rgs[p]] |= pt(p);
                         emit_parts(x, classes);
                         std::size_t i = x.size();
                         bool done = true;
                         while (i-- > 1) {
                           std::uint8_t maxv = 0;
                           for (std::size_t j = 0; j < i; ++j) maxv = std::max(maxv, rgs[j]);
                           if (rgs[i] <= maxv) {
                             ++rgs[i];
                             for (std::size_t j = i + 1; j < x.size(); ++j) rgs[j] = 0;
                             done = false;
                             break;
                           }
                           rgs[i] = 0;
                         }
                         if (done) break;
                       }
                     }
                   }
                   Rng rng(opt.seed);
                   for (std::uint64_t t = 0; t < opt.trials; ++t) {
                     FinSpace x = rng.space(1 + rng.below(5));
                     emit_parts(x, rng.partition(x));
                   }
                 },
                 check_quot});
    v.push_back({"P_equiv6", "split homeomorphism is reflexive, symmetric and transitive",
                 [](const SuiteOptions& opt, const Emit& emit) {
                   gen_bijections(opt, false, true, 4, emit);
                 },
                 check_equiv6});
    v.push_back({"P_invstar", "the inverse star is the transpose of gr(f*)",
                 [](const SuiteOptions& opt, const Emit& emit) {
                   gen_bijections(opt, true, false, 4, emit);
                 },
                 check_invstar});
    v.push_back({"P_equiv7",
                 "cut-and-reglue equivalence is reflexive, symmetric and transitive",
                 [](const SuiteOptions& opt, const Emit& emit) {
                   gen_bijections(opt, true, true, 4, emit);
                 },
                 check_equiv7});
    v.push_back({"P_roundtrip",
                 "reglue data built from a split homeomorphism recover it exactly",
                 [](const SuiteOptions& opt, const Emit& emit) {
                   gen_bijections(opt, true, true, 4, emit);
                 },
                 check_roundtrip});
    v.push_back({"P_compactness",
                 "vacuous here: every finite space is compact, so preservation cannot fail; "
                 "checked structurally",
                 [](const SuiteOptions&, const Emit& emit) {
                   emit(make_instance({FinSpace::discrete("D2", {"a", "b"})}, {}));
                 },
                 [](const Instance& in, const SuiteOptions&) {
                   return product_space(in.spaces[0], in.spaces[0]).size() == 4;
                 }});
    v.push_back({"P_subcontinuity",
                 "vacuous here: every net in a finite space has a cluster point, so every "
                 "multifunction is subcontinuous",
                 [](const SuiteOptions&, const Emit& emit) {
                   FinSpace d = FinSpace::discrete("D1", {"a"});
                   emit(make_instance({d}, {}, {MultiMap(d, d, {1})}));
                 },
                 [](const Instance& in, const SuiteOptions&) {
                   return is_subcontinuous(in.multimaps[0]);
                 }});
    return v;
  }();
  return props;
}

const Property& find_property(const std::string& name) {
  for (const auto& p : registry())
    if (name == p.name) return p;
  fail(errc::unknown_property, "no property named '" + name + "'");
}

} // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& p : registry()) v.push_back(p.name);
    return v;
  }();
  return names;
}

const std::string& property_note(const std::string& name) {
  static std::string note;
  note = find_property(name).note;
  return note;
}

PropertyResult run_property(const std::string& name, const SuiteOptions& opt) {
  const Property& p = find_property(name);
  PropertyResult res;
  res.name = p.name;
  auto t0 = std::chrono::steady_clock::now();
  p.generate(opt, [&](Instance&& inst) {
    ++res.trials;
    try {
      if (!p.check(inst, opt)) {
        ojson rec;
        rec["property"] = p.name;
        rec["seed"] = opt.seed;
        rec["instance"] = inst_to_json(inst);
        res.failures.push_back(rec.dump());
      }
    } catch (const error& e) {
      if (e.code() == errc::search_space_too_large) {
        ++res.skipped;
      } else {
        ojson rec;
        rec["property"] = p.name;
        rec["seed"] = opt.seed;
        rec["error"] = e.what();
        rec["instance"] = inst_to_json(inst);
        res.failures.push_back(rec.dump());
      }
    }
  });
  std::sort(res.failures.begin(), res.failures.end());
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::vector<PropertyResult> run_all(const SuiteOptions& opt) {
  std::vector<PropertyResult> out;
  for (const auto& name : property_names()) out.push_back(run_property(name, opt));
  return out;
}

bool replay_failure(const std::string& record) {
  ojson rec = ojson::parse(record);
  const Property& p = find_property(rec.at("property").get<std::string>());
  Instance inst = inst_from_json(rec.at("instance"));
  SuiteOptions opt;
  try {
    return !p.check(inst, opt);
  } catch (const error&) {
    return true;
  }
}

} // namespace msplit
