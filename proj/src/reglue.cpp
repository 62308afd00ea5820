#include "msplit/reglue.hpp"

namespace msplit {

ReglueDatum ReglueDatum::make(FinSpace z, PointMap px, PointMap py, PointMap pxinv) {
  require_same_space(px.dom, z, "reglue pX");
  require_same_space(py.dom, z, "reglue pY");
  require_same_space(pxinv.dom, px.cod, "reglue pXinv (domain)");
  require_same_space(pxinv.cod, z, "reglue pXinv (codomain)");
  ReglueDatum d;
  d.Z = std::move(z);
  d.pX = std::move(px);
  d.pY = std::move(py);
  d.pXinv = std::move(pxinv);
  d.f = compose(d.pY, d.pXinv);
  return d;
}

ReglueDatum ReglueDatum::identity(const FinSpace& x) {
  PointMap id = PointMap::identity(x);
  return make(x, id, id, id);
}

ReglueDatum ReglueDatum::reversed() const {
  PointMap pYinv = compose(pXinv, f.inverse());
  return make(Z, pY, pX, std::move(pYinv));
}

SplitHomeoResult is_split_homeo(const PointMap& f) {
  SplitHomeoResult r;
  r.bijective = f.is_bijection();
  r.forward_msc = is_multi_split(f).value;
  r.inverse_msc = r.bijective ? is_multi_split(f.inverse()).value : false;
  r.value = r.bijective && r.forward_msc && r.inverse_msc;
  if (r.value != (r.bijective && r.forward_msc))
    fail(errc::internal_mismatch, "finite-space reduction to bijectivity violated");
  return r;
}

Mask inverse_star(const PointMap& f, std::size_t y0) {
  if (!is_split_homeo(f).value)
    fail(errc::hypothesis_violated, "inverse star needs a split homeomorphism");
  if (!f.dom.is_discrete() || !f.cod.is_discrete())
    fail(errc::hypothesis_violated, "inverse star needs discrete spaces");
  Mask direct = star(f.inverse()).val[y0];
  MultiMap fs = star(f);
  Mask transposed = 0;
  for (std::size_t x = 0; x < f.dom.size(); ++x)
    if (has(fs.val[x], y0)) transposed |= pt(x);
  if (direct != transposed)
    fail(errc::internal_mismatch, "the two inverse-star routes disagree");
  return direct;
}

ReglueDatum reglue_from_splithomeo(const PointMap& f) {
  if (!is_split_homeo(f).value)
    fail(errc::hypothesis_violated, "reglue construction needs a split homeomorphism");
  if (!f.dom.is_discrete() || !f.cod.is_discrete())
    fail(errc::hypothesis_violated, "reglue construction needs discrete spaces");

  GraphClosure gc = graph_and_closure(star(f));
  FinSpace z = subspace(gc.prod, gc.graph.mask);

  // Local index of (x, y) inside Z.
  std::vector<std::size_t> global;
  for (auto i : bits(gc.graph.mask)) global.push_back(i);
  auto local_of = [&](std::size_t x, std::size_t y) {
    std::size_t g = pair_index(f.cod, x, y);
    for (std::size_t k = 0; k < global.size(); ++k)
      if (global[k] == g) return k;
    fail(errc::internal_mismatch, "graph point missing from its own subspace");
  };

  std::vector<std::uint8_t> px(z.size()), py(z.size());
  for (std::size_t k = 0; k < global.size(); ++k) {
    px[k] = static_cast<std::uint8_t>(global[k] / f.cod.size());
    py[k] = static_cast<std::uint8_t>(global[k] % f.cod.size());
  }
  std::vector<std::uint8_t> pxinv(f.dom.size());
  for (std::size_t x = 0; x < f.dom.size(); ++x)
    pxinv[x] = static_cast<std::uint8_t>(local_of(x, f.tbl[x]));

  return ReglueDatum::make(z, PointMap(z, f.dom, std::move(px)),
                           PointMap(z, f.cod, std::move(py)),
                           PointMap(f.dom, z, std::move(pxinv)));
}

PointMap splithomeo_from_reglue(const ReglueDatum& d) {
  ReglueReport rep = validate_reglue(d);
  if (!rep.ok()) fail(errc::validation_failed, "reglue datum fails validation");
  if (!is_split_homeo(d.f).value)
    fail(errc::internal_mismatch, "derived map of a valid datum must be a split homeomorphism");
  // The proof's right inverse of pY must exist and invert on the nose.
  PointMap pYinv = compose(d.pXinv, d.f.inverse());
  if (!(compose(d.pY, pYinv) == PointMap::identity(d.pY.cod)))
    fail(errc::internal_mismatch, "constructed right inverse of pY fails the identity");
  return d.f;
}

bool is_quotient_map(const PointMap& f) {
  if (!f.is_surjective() || !is_continuous(f).value) return false;
  // Quotient minimal open of x: least B containing x whose preimage is open.
  MultiMap fibers = inverse_image_multifunction(f);
  for (std::size_t x = 0; x < f.cod.size(); ++x) {
    Mask b = pt(x);
    for (;;) {
      Mask pre = 0;
      for (auto c : bits(b)) pre |= fibers.val[c];
      Mask grown = b | f.image(f.dom.hull(pre));
      if (grown == b) break;
      b = grown;
    }
    if (b != f.cod.min_open(x)) return false;
  }
  return true;
}

ReglueReport validate_reglue(const ReglueDatum& d) {
  ReglueReport r;
  r.x_discrete = d.pX.cod.is_discrete();
  r.y_discrete = d.pY.cod.is_discrete();
  r.pX_continuous = is_continuous(d.pX).value;
  r.pY_continuous = is_continuous(d.pY).value;
  r.pX_surjective = d.pX.is_surjective();
  r.pY_surjective = d.pY.is_surjective();
  r.fibers_finite = true;
  r.pX_quotient = is_quotient_map(d.pX);
  r.pY_quotient = is_quotient_map(d.pY);
  r.right_inverse = compose(d.pX, d.pXinv) == PointMap::identity(d.pX.cod);
  r.f_bijective = d.f.is_bijection();
  return r;
}

ReglueDatum reglue_transitive(const ReglueDatum& d1, const ReglueDatum& d2) {
  require_same_space(d1.pY.cod, d2.pX.cod, "reglue composition over the middle space");
  if (!validate_reglue(d1).ok() || !validate_reglue(d2).ok())
    fail(errc::validation_failed, "reglue composition needs valid inputs");

  const FinSpace& x = d1.pX.cod;
  const FinSpace& w = d2.pY.cod;
  FinSpace s = disjoint_union(d1.Z, d2.Z);
  const std::size_t nl = d1.Z.size();

  PointMap f1inv = d1.f.inverse();
  PointMap pYinv = compose(d1.pXinv, f1inv); // right inverse of d1.pY
  PointMap g_of_y = d2.f;                    // d2.pY ∘ d2.pXinv

  std::vector<std::uint8_t> px(s.size()), pw(s.size());
  for (std::size_t z = 0; z < nl; ++z) {
    px[z] = d1.pX.tbl[z];
    pw[z] = g_of_y.tbl[d1.pY.tbl[z]]; // qW ∘ qYinv ∘ pY
  }
  for (std::size_t z = 0; z < d2.Z.size(); ++z) {
    px[nl + z] = f1inv.tbl[d2.pX.tbl[z]]; // pX ∘ pYinv ∘ qY
    pw[nl + z] = d2.pY.tbl[z];
  }

  std::vector<std::uint8_t> pxinv(x.size());
  for (std::size_t xi = 0; xi < x.size(); ++xi)
    pxinv[xi] = static_cast<std::uint8_t>(pYinv.tbl[d1.f.tbl[xi]]); // lands in the left block

  return ReglueDatum::make(s, PointMap(s, x, std::move(px)), PointMap(s, w, std::move(pw)),
                           PointMap(x, s, std::move(pxinv)));
}

} // namespace msplit
