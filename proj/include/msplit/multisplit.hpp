#pragma once

// Extended-value sets, the star multifunction, multi-split continuity and
// pre-multi-split multifunctions.
//
// A non-empty Z is a set of extended values of f at p when
//   (a) every z in Z is met by images of arbitrarily small neighborhoods
//       of p, and
//   (b) images of small enough neighborhoods of p enter every neighborhood
//       of Z.
// On finite spaces this reduces to
//   (a)  Z subset cl(f(U_p))
//   (b)  f(U_p) subset hull(Z)
// which is the fast strategy; the definitional strategy quantifies over all
// opens and serves as the oracle the fast one is checked against.

#include <functional>
#include <vector>

#include "msplit/pointmap.hpp"

namespace msplit {

// Test hook: weaken the fast characterization by dropping one conjunct.
// Exists so the suite can demonstrate that it detects a corrupted fast path.
enum class FastEvFault { none, drop_closure, drop_cover };
void set_fast_ev_fault(FastEvFault f);
FastEvFault fast_ev_fault();

bool condition_a(const PointMap& f, std::size_t p, Mask z, Strategy s = Strategy::fast);
bool condition_b(const PointMap& f, std::size_t p, Mask z, Strategy s = Strategy::fast);

// Non-empty z required; both strategies must agree (suite-enforced).
bool is_ev_set(const PointMap& f, std::size_t p, Mask z, Strategy s = Strategy::fast);

constexpr std::size_t kEvFamilyMaxCodomain = 16;

// All extended-value sets of f at a point, plus the inclusion-minimal ones.
// Sets are ordered ascending as masks.
struct EvFamily {
  FinSpace codomain;
  std::size_t at = 0;
  std::vector<Mask> sets;
  std::vector<Mask> minimal;

  bool member(Mask z) const;
  // Continuity at the point is witnessed by the singleton {f(p)}; split
  // continuity by a certificate of at most two values containing f(p).
  bool continuous_at(const PointMap& f) const;
  bool split_at(const PointMap& f) const;
};

EvFamily ev_family(const PointMap& f, std::size_t p);

// X_p = intersection of cl(f(U)) over all neighborhoods U of p; attained at
// the minimal neighborhood, so X_p = cl(f(U_p)).
Mask xp_set(const PointMap& f, std::size_t p);

// The star multifunction p -> Z_p; requires a Hausdorff codomain so that the
// extended-value set is unique.  For small codomains the value is asserted
// against the full family enumeration.
MultiMap star(const PointMap& f);

struct MscResult {
  bool value = true;
  // Canonical certificate f(U_p) per point (single entry in pointwise mode).
  std::vector<Mask> certificates;
};
MscResult is_multi_split(const PointMap& f);
MscResult is_multi_split_at(const PointMap& f, std::size_t p);

// Composition construction: given an extended-value set zf of f at p and a
// chooser assigning each y in zf an extended-value set of g at y, returns
// z_tilde = union of the choices (satisfies condition (b) for g∘f at p) and
// the extended-value subset extracted from it by condition (a).
struct ComposeEv {
  Mask z_tilde = 0;
  Mask ev_subset = 0;
};
ComposeEv compose_ev(const PointMap& f, const PointMap& g, std::size_t p, Mask zf,
                     const std::function<Mask(std::size_t)>& choose_for_g);

// Pre-multi-split: every selection is multi-split continuous.  The report
// also records whether Z = F(p) certifies condition (b) for every selection
// at every point (true whenever F is u.s.c.).
struct PreMsReport {
  bool value = true;
  unsigned long long selections = 0;
  bool fp_certifies_all = true;
  std::vector<std::pair<unsigned long long, std::size_t>> fp_failures; // (selection, point)
};
PreMsReport is_pre_multi_split(const MultiMap& f,
                               unsigned long long cap = SelectionStream::kDefaultSelectionCap);
PreMsReport is_pre_multi_split_at(const MultiMap& f, std::size_t p,
                                  unsigned long long cap = SelectionStream::kDefaultSelectionCap);

// Cluster points of value nets along nets converging to p; on finite spaces
// cl(F(U_p)).
Mask tilde_z_set(const MultiMap& f, std::size_t p);

// Both sides of "continuous iff multi-split continuous with closed graph",
// computed independently.  Requires a Hausdorff codomain.
struct ContinuityEquivalence {
  bool continuous = false;
  bool msc_and_closed_graph = false;
};
ContinuityEquivalence continuity_equivalence(const PointMap& f);

// Fiber sizes of the projection cl(gr f) -> X; must match |f*(p)| pointwise.
struct ProjectionCheck {
  bool within_bound = true;
  std::vector<std::size_t> fiber_sizes;
};
ProjectionCheck graph_projection_check(const PointMap& f, std::size_t bound);

// Subcontinuity is constant-true here: every net in a finite space has a
// cluster point.  Kept as a named operation for interface completeness.
inline bool is_subcontinuous(const MultiMap&) { return true; }

void require_hausdorff(const FinSpace& s, const char* what);

} // namespace msplit
