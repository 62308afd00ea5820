#include "msplit/multisplit.hpp"

#include <algorithm>

namespace msplit {

namespace {
FastEvFault g_fault = FastEvFault::none;
}

void set_fast_ev_fault(FastEvFault f) { g_fault = f; }
FastEvFault fast_ev_fault() { return g_fault; }

void require_hausdorff(const FinSpace& s, const char* what) {
  if (!separation_flags(s).hausdorff)
    fail(errc::not_hausdorff, std::string(what) + " needs a Hausdorff codomain, '" + s.name() +
                                  "' is not");
}

bool condition_a(const PointMap& f, std::size_t p, Mask z, Strategy s) {
  if (s == Strategy::fast) return subset(z, f.cod.closure(f.image(f.dom.min_open(p))));
  for (auto y : bits(z))
    for (Mask u : f.dom.all_opens()) {
      if (!has(u, p)) continue;
      Mask img = f.image(u);
      for (Mask v : f.cod.all_opens())
        if (has(v, y) && (img & v) == 0) return false;
    }
  return true;
}

bool condition_b(const PointMap& f, std::size_t p, Mask z, Strategy s) {
  if (s == Strategy::fast) return subset(f.image(f.dom.min_open(p)), f.cod.hull(z));
  for (Mask v : f.cod.all_opens()) {
    if (!subset(z, v)) continue;
    bool some_u = false;
    for (Mask u : f.dom.all_opens())
      if (has(u, p) && subset(f.image(u), v)) {
        some_u = true;
        break;
      }
    if (!some_u) return false;
  }
  return true;
}

bool is_ev_set(const PointMap& f, std::size_t p, Mask z, Strategy s) {
  if (!subset(z, f.cod.full())) fail(errc::space_mismatch, "candidate outside the codomain");
  if (z == 0) fail(errc::empty_candidate, "extended-value sets are non-empty");
  if (s == Strategy::fast) {
    bool a = g_fault == FastEvFault::drop_closure || condition_a(f, p, z, Strategy::fast);
    bool b = g_fault == FastEvFault::drop_cover || condition_b(f, p, z, Strategy::fast);
    return a && b;
  }
  return condition_a(f, p, z, Strategy::definitional) &&
         condition_b(f, p, z, Strategy::definitional);
}

bool EvFamily::member(Mask z) const {
  return std::binary_search(sets.begin(), sets.end(), z);
}

bool EvFamily::continuous_at(const PointMap& f) const { return member(pt(f.tbl[at])); }

bool EvFamily::split_at(const PointMap& f) const {
  Mask fp = pt(f.tbl[at]);
  for (Mask z : sets)
    if (count(z) <= 2 && (z & fp)) return true;
  return false;
}

EvFamily ev_family(const PointMap& f, std::size_t p) {
  if (f.cod.size() > kEvFamilyMaxCodomain)
    fail(errc::search_space_too_large,
         "family enumeration is capped at codomains of " +
             std::to_string(kEvFamilyMaxCodomain) + " points");
  EvFamily fam;
  fam.codomain = f.cod;
  fam.at = p;
  const Mask full = f.cod.full();
  for (Mask z = 1; z <= full && z != 0; ++z)
    if (is_ev_set(f, p, z, Strategy::fast)) fam.sets.push_back(z);
  for (Mask z : fam.sets) {
    bool minimal = true;
    for (Mask w : fam.sets)
      if (w != z && subset(w, z)) {
        minimal = false;
        break;
      }
    if (minimal) fam.minimal.push_back(z);
  }
  return fam;
}

Mask xp_set(const PointMap& f, std::size_t p) {
  return f.cod.closure(f.image(f.dom.min_open(p)));
}

MultiMap star(const PointMap& f) {
  require_hausdorff(f.cod, "the star multifunction");
  std::vector<Mask> v(f.dom.size());
  for (std::size_t p = 0; p < f.dom.size(); ++p) {
    v[p] = xp_set(f, p);
    if (f.cod.size() <= kEvFamilyMaxCodomain) {
      EvFamily fam = ev_family(f, p);
      if (fam.sets.size() != 1 || fam.sets[0] != v[p])
        fail(errc::internal_mismatch,
             "star value disagrees with the extended-value family at '" + f.dom.label(p) + "'");
    }
  }
  return MultiMap(f.dom, f.cod, std::move(v));
}

static MscResult msc_points(const PointMap& f, std::size_t lo, std::size_t hi) {
  MscResult r;
  for (std::size_t p = lo; p < hi; ++p) {
    Mask cert = f.image(f.dom.min_open(p));
    if (!is_ev_set(f, p, cert, Strategy::fast))
      fail(errc::internal_mismatch, "canonical certificate rejected at '" + f.dom.label(p) + "'");
    r.certificates.push_back(cert);
  }
  return r;
}

MscResult is_multi_split(const PointMap& f) { return msc_points(f, 0, f.dom.size()); }

MscResult is_multi_split_at(const PointMap& f, std::size_t p) { return msc_points(f, p, p + 1); }

ComposeEv compose_ev(const PointMap& f, const PointMap& g, std::size_t p, Mask zf,
                     const std::function<Mask(std::size_t)>& choose_for_g) {
  require_same_space(f.cod, g.dom, "composition construction");
  if (!is_ev_set(f, p, zf, Strategy::fast))
    fail(errc::invalid_choice, "zf is not an extended-value set of f at '" + f.dom.label(p) + "'");
  ComposeEv r;
  for (auto y : bits(zf)) {
    Mask zy = choose_for_g(y);
    if (!is_ev_set(g, y, zy, Strategy::fast))
      fail(errc::invalid_choice,
           "chosen set is not an extended-value set of g at '" + g.dom.label(y) + "'");
    r.z_tilde |= zy;
  }
  PointMap gf = compose(g, f);
  r.ev_subset = r.z_tilde & gf.cod.closure(gf.image(gf.dom.min_open(p)));
  return r;
}

static PreMsReport pre_ms(const MultiMap& f, std::size_t lo, std::size_t hi,
                          unsigned long long cap) {
  SelectionStream sel(f);
  PreMsReport rep;
  unsigned long long idx = 0;
  sel.for_each(
      [&](const PointMap& s) {
        for (std::size_t p = lo; p < hi; ++p) {
          if (!is_multi_split_at(s, p).value) rep.value = false; // unreachable on finite spaces
          if (!condition_b(s, p, f.val[p], Strategy::fast)) {
            rep.fp_certifies_all = false;
            rep.fp_failures.emplace_back(idx, p);
          }
        }
        ++idx;
      },
      cap);
  rep.selections = idx;
  return rep;
}

PreMsReport is_pre_multi_split(const MultiMap& f, unsigned long long cap) {
  return pre_ms(f, 0, f.dom.size(), cap);
}

PreMsReport is_pre_multi_split_at(const MultiMap& f, std::size_t p, unsigned long long cap) {
  return pre_ms(f, p, p + 1, cap);
}

Mask tilde_z_set(const MultiMap& f, std::size_t p) {
  if (!f.all_non_empty()) fail(errc::empty_value, "multifunction has an empty value");
  Mask img = 0;
  for (auto x : bits(f.dom.min_open(p))) img |= f.val[x];
  return f.cod.closure(img);
}

ContinuityEquivalence continuity_equivalence(const PointMap& f) {
  require_hausdorff(f.cod, "the continuity equivalence");
  ContinuityEquivalence r;
  r.continuous = is_continuous(f).value;
  GraphClosure gc = graph_and_closure(f);
  r.msc_and_closed_graph = is_multi_split(f).value && gc.closed.mask == gc.graph.mask;
  return r;
}

ProjectionCheck graph_projection_check(const PointMap& f, std::size_t bound) {
  require_hausdorff(f.cod, "the graph projection check");
  GraphClosure gc = graph_and_closure(f);
  ProjectionCheck r;
  for (std::size_t x = 0; x < f.dom.size(); ++x) {
    std::size_t fiber = 0;
    for (std::size_t y = 0; y < f.cod.size(); ++y)
      if (has(gc.closed.mask, pair_index(f.cod, x, y))) ++fiber;
    r.fiber_sizes.push_back(fiber);
    if (fiber > bound) r.within_bound = false;
  }
  return r;
}

} // namespace msplit
