#include "msplit/pointmap.hpp"

#include <algorithm>

namespace msplit {

PointMap::PointMap(FinSpace d, FinSpace c, std::vector<std::uint8_t> t)
    : dom(std::move(d)), cod(std::move(c)), tbl(std::move(t)) {
  if (tbl.size() != dom.size())
    fail(errc::internal_mismatch, "map table must be total on the domain");
  for (auto v : tbl)
    if (v >= cod.size()) fail(errc::out_of_range, "map value outside the codomain");
}

PointMap PointMap::identity(const FinSpace& s) { return identity_between(s, s); }

PointMap PointMap::identity_between(const FinSpace& s, const FinSpace& t) {
  if (s.size() != t.size())
    fail(errc::space_mismatch, "identity requires equally many points");
  std::vector<std::uint8_t> tbl(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) tbl[i] = static_cast<std::uint8_t>(i);
  return PointMap(s, t, std::move(tbl));
}

PointMap PointMap::constant(const FinSpace& d, const FinSpace& c, std::size_t value) {
  return PointMap(d, c, std::vector<std::uint8_t>(d.size(), static_cast<std::uint8_t>(value)));
}

Mask PointMap::image(Mask a) const {
  Mask r = 0;
  for (auto x : bits(a)) r |= pt(tbl[x]);
  return r;
}

Mask PointMap::preimage(Mask b) const {
  Mask r = 0;
  for (std::size_t x = 0; x < dom.size(); ++x)
    if (has(b, tbl[x])) r |= pt(x);
  return r;
}

bool PointMap::is_injective() const {
  Mask seen = 0;
  for (auto v : tbl) {
    if (has(seen, v)) return false;
    seen |= pt(v);
  }
  return true;
}

bool PointMap::is_surjective() const { return image(dom.full()) == cod.full(); }

PointMap PointMap::inverse() const {
  if (!is_bijection()) fail(errc::hypothesis_violated, "inverse of a non-bijection");
  std::vector<std::uint8_t> inv(cod.size());
  for (std::size_t x = 0; x < dom.size(); ++x) inv[tbl[x]] = static_cast<std::uint8_t>(x);
  return PointMap(cod, dom, std::move(inv));
}

PointMap compose(const PointMap& g, const PointMap& f) {
  require_same_space(f.cod, g.dom, "composition");
  std::vector<std::uint8_t> tbl(f.dom.size());
  for (std::size_t x = 0; x < f.dom.size(); ++x) tbl[x] = g.tbl[f.tbl[x]];
  return PointMap(f.dom, g.cod, std::move(tbl));
}

MultiMap::MultiMap(FinSpace d, FinSpace c, std::vector<Mask> v)
    : dom(std::move(d)), cod(std::move(c)), val(std::move(v)) {
  if (val.size() != dom.size())
    fail(errc::internal_mismatch, "multimap table must be total on the domain");
  for (Mask m : val)
    if (!subset(m, cod.full())) fail(errc::out_of_range, "multimap value outside the codomain");
}

MultiMap MultiMap::lift(const PointMap& f) {
  std::vector<Mask> v(f.dom.size());
  for (std::size_t x = 0; x < f.dom.size(); ++x) v[x] = pt(f.tbl[x]);
  return MultiMap(f.dom, f.cod, std::move(v));
}

bool MultiMap::all_non_empty() const {
  return std::all_of(val.begin(), val.end(), [](Mask m) { return m != 0; });
}

PointSet mm_image(const MultiMap& f, const PointSet& a) {
  require_same_space(f.dom, a.space, "image");
  Mask r = 0;
  for (auto x : bits(a.mask)) r |= f.val[x];
  return PointSet(f.cod, r);
}

InvCore mm_inverse_and_core(const MultiMap& f, const PointSet& b) {
  require_same_space(f.cod, b.space, "inverse/core");
  Mask inv = 0, core = 0;
  for (std::size_t x = 0; x < f.dom.size(); ++x) {
    if (f.val[x] & b.mask) inv |= pt(x);
    if (subset(f.val[x], b.mask)) core |= pt(x);
  }
  return {PointSet(f.dom, inv), PointSet(f.dom, core)};
}

MultiMap mm_combine(const MultiMap& f, const MultiMap& g, CombineMode mode) {
  require_same_space(f.dom, g.dom, "combine (domain)");
  require_same_space(f.cod, g.cod, "combine (codomain)");
  std::vector<Mask> v(f.dom.size());
  for (std::size_t x = 0; x < f.dom.size(); ++x)
    v[x] = mode == CombineMode::set_union ? (f.val[x] | g.val[x]) : (f.val[x] & g.val[x]);
  return MultiMap(f.dom, f.cod, std::move(v));
}

MultiMap mm_compose(const MultiMap& h, const MultiMap& g) {
  require_same_space(g.cod, h.dom, "composition");
  std::vector<Mask> v(g.dom.size());
  for (std::size_t x = 0; x < g.dom.size(); ++x) {
    Mask r = 0;
    for (auto y : bits(g.val[x])) r |= h.val[y];
    v[x] = r;
  }
  return MultiMap(g.dom, h.cod, std::move(v));
}

MultiMap inverse_image_multifunction(const PointMap& f) {
  std::vector<Mask> v(f.cod.size(), 0);
  for (std::size_t x = 0; x < f.dom.size(); ++x) v[f.tbl[x]] |= pt(x);
  return MultiMap(f.cod, f.dom, std::move(v));
}

SelectionStream::SelectionStream(MultiMap f) : f_(std::move(f)) {
  choices_.resize(f_.dom.size());
  for (std::size_t x = 0; x < f_.dom.size(); ++x) {
    if (f_.val[x] == 0)
      fail(errc::empty_value, "no selection through the empty value at '" +
                                  f_.dom.label(x) + "'");
    for (auto y : bits(f_.val[x])) choices_[x].push_back(static_cast<std::uint8_t>(y));
    total_ *= choices_[x].size();
  }
}

unsigned long long SelectionStream::size() const {
  if (total_ > (unsigned __int128)(~0ull >> 1))
    fail(errc::search_space_too_large, "selection count exceeds 2^63");
  return static_cast<unsigned long long>(total_);
}

PointMap SelectionStream::at(unsigned long long index) const {
  std::vector<std::uint8_t> tbl(f_.dom.size());
  for (std::size_t x = f_.dom.size(); x-- > 0;) {
    const auto& c = choices_[x];
    tbl[x] = c[index % c.size()];
    index /= c.size();
  }
  if (index != 0) fail(errc::out_of_range, "selection index past the end");
  return PointMap(f_.dom, f_.cod, std::move(tbl));
}

void SelectionStream::for_each(const std::function<void(const PointMap&)>& fn,
                               unsigned long long cap) const {
  if (total_ > cap)
    fail(errc::search_space_too_large, "selection enumeration over the cap of " +
                                           std::to_string(cap));
  const auto n = static_cast<unsigned long long>(total_);
  for (unsigned long long i = 0; i < n; ++i) fn(at(i));
}

CheckResult is_continuous_at(const PointMap& f, std::size_t p) {
  Mask target = f.cod.min_open(f.tbl[p]);
  if (subset(f.image(f.dom.min_open(p)), target)) return {};
  return {false, Witness{p, target}};
}

CheckResult is_continuous(const PointMap& f) {
  for (std::size_t p = 0; p < f.dom.size(); ++p)
    if (auto r = is_continuous_at(f, p); !r.value) return r;
  return {};
}

bool is_closed_map(const PointMap& f) {
  for (std::size_t x = 0; x < f.dom.size(); ++x)
    if (!f.cod.is_closed(f.image(f.dom.closure(pt(x))))) return false;
  return true;
}

CheckResult is_usc_at(const MultiMap& f, std::size_t p, Strategy s) {
  const Mask img = [&] {
    Mask r = 0;
    for (auto x : bits(f.dom.min_open(p))) r |= f.val[x];
    return r;
  }();
  if (s == Strategy::fast) {
    Mask v = f.cod.hull(f.val[p]);
    if (subset(img, v)) return {};
    return {false, Witness{p, v}};
  }
  // Definitional: for every open V containing F(p), the core of V must
  // contain U_p.
  for (Mask v : f.cod.all_opens()) {
    if (!subset(f.val[p], v)) continue;
    for (auto x : bits(f.dom.min_open(p)))
      if (!subset(f.val[x], v)) return {false, Witness{p, v}};
  }
  return {};
}

CheckResult is_usc(const MultiMap& f, Strategy s) {
  for (std::size_t p = 0; p < f.dom.size(); ++p)
    if (auto r = is_usc_at(f, p, s); !r.value) return r;
  return {};
}

bool is_usco(const MultiMap& f) { return f.all_non_empty() && is_usc(f).value; }

bool is_minimal_usco(const MultiMap& f, unsigned long long cap) {
  if (!is_usco(f)) return false;
  // Odometer over non-empty value subsets; skip the full choice.
  std::vector<std::vector<Mask>> subs(f.dom.size());
  unsigned __int128 total = 1;
  for (std::size_t x = 0; x < f.dom.size(); ++x) {
    Mask v = f.val[x];
    for (Mask s = v;; s = (s - 1) & v) { // all submasks, descending
      if (s != 0) subs[x].push_back(s);
      if (s == 0) break;
    }
    total *= subs[x].size();
  }
  if (total > cap)
    fail(errc::search_space_too_large, "submultifunction search over the cap");
  std::vector<std::size_t> idx(f.dom.size(), 0);
  for (;;) {
    bool proper = false;
    for (std::size_t x = 0; x < f.dom.size(); ++x)
      if (subs[x][idx[x]] != f.val[x]) proper = true;
    if (proper) {
      std::vector<Mask> v(f.dom.size());
      for (std::size_t x = 0; x < f.dom.size(); ++x) v[x] = subs[x][idx[x]];
      if (is_usc(MultiMap(f.dom, f.cod, std::move(v))).value) return false;
    }
    std::size_t x = f.dom.size();
    while (x-- > 0) {
      if (++idx[x] < subs[x].size()) break;
      idx[x] = 0;
      if (x == 0) return true;
    }
  }
}

GraphClosure graph_and_closure(const MultiMap& f) {
  FinSpace prod = product_space(f.dom, f.cod);
  Mask gr = 0;
  for (std::size_t x = 0; x < f.dom.size(); ++x)
    for (auto y : bits(f.val[x])) gr |= pt(pair_index(f.cod, x, y));
  return {prod, PointSet(prod, gr), PointSet(prod, prod.closure(gr))};
}

GraphClosure graph_and_closure(const PointMap& f) { return graph_and_closure(MultiMap::lift(f)); }

} // namespace msplit
