#pragma once

// Split homeomorphisms and equivalence with cuts and subsequent re-glues.
//
// A reglue datum for X and Y is a space Z with continuous finite-to-one
// quotient surjections pX : Z -> X and pY : Z -> Y plus a right inverse
// pXinv of pX whose composite f = pY ∘ pXinv is a bijection.  The compact
// regular Hausdorff hypotheses of that theory mean "discrete" on finite
// spaces and are enforced, not ignored.

#include <vector>

#include "msplit/multisplit.hpp"

namespace msplit {

struct ReglueDatum {
  FinSpace Z;
  PointMap pX, pY; // Z -> X, Z -> Y
  PointMap pXinv;  // X -> Z
  PointMap f;      // derived pY ∘ pXinv

  static ReglueDatum make(FinSpace z, PointMap px, PointMap py, PointMap pxinv);
  static ReglueDatum identity(const FinSpace& x);
  // The same equivalence read backwards: right inverse pYinv = pXinv ∘ f⁻¹.
  ReglueDatum reversed() const;
};

struct SplitHomeoResult {
  bool value = false;
  bool bijective = false;
  bool forward_msc = false;
  bool inverse_msc = false;
};
// On finite spaces both directions are always multi-split continuous, so the
// check reduces to bijectivity; the reduction is asserted, not assumed.
SplitHomeoResult is_split_homeo(const PointMap& f);

// (f⁻¹)*(y0) computed twice: via the star of the inverse map and via the
// transpose of gr(f*).  The values must coincide; a difference signals a bug.
Mask inverse_star(const PointMap& f, std::size_t y0);

ReglueDatum reglue_from_splithomeo(const PointMap& f);

PointMap splithomeo_from_reglue(const ReglueDatum& d);

// Is every set with an open preimage itself open?  Decided through the
// quotient topology's minimal opens, no subset enumeration.
bool is_quotient_map(const PointMap& f);

struct ReglueReport {
  bool x_discrete = false, y_discrete = false;
  bool pX_continuous = false, pY_continuous = false;
  bool pX_surjective = false, pY_surjective = false;
  bool fibers_finite = true; // automatic on finite spaces, reported
  bool pX_quotient = false, pY_quotient = false;
  bool right_inverse = false;
  bool f_bijective = false;

  bool ok() const {
    return x_discrete && y_discrete && pX_continuous && pY_continuous && pX_surjective &&
           pY_surjective && fibers_finite && pX_quotient && pY_quotient && right_inverse &&
           f_bijective;
  }
};
ReglueReport validate_reglue(const ReglueDatum& d);

// Composite datum on Z ⊔ Z' witnessing the transitive equivalence; its
// derived map is d2.f ∘ d1.f.
ReglueDatum reglue_transitive(const ReglueDatum& d1, const ReglueDatum& d2);

} // namespace msplit
