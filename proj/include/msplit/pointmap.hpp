#pragma once

// Single-valued maps and set-valued maps between finite spaces, with the
// image/inverse/core calculus and the decision procedures for continuity,
// closedness, upper semicontinuity and (minimal) usco.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "msplit/finspace.hpp"

namespace msplit {

struct PointMap {
  FinSpace dom, cod;
  std::vector<std::uint8_t> tbl; // tbl[x] = index of f(x) in cod

  PointMap() = default;
  PointMap(FinSpace d, FinSpace c, std::vector<std::uint8_t> t);

  static PointMap identity(const FinSpace& s);
  // Same underlying point set, possibly different topologies.
  static PointMap identity_between(const FinSpace& s, const FinSpace& t);
  static PointMap constant(const FinSpace& d, const FinSpace& c, std::size_t value);

  std::size_t operator()(std::size_t x) const { return tbl[x]; }
  Mask image(Mask a) const;
  Mask preimage(Mask b) const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijection() const { return is_injective() && is_surjective(); }
  PointMap inverse() const; // requires bijection

  friend bool operator==(const PointMap& a, const PointMap& b) {
    return a.dom == b.dom && a.cod == b.cod && a.tbl == b.tbl;
  }
};

PointMap compose(const PointMap& g, const PointMap& f); // g after f

struct MultiMap {
  FinSpace dom, cod;
  std::vector<Mask> val; // val[x] subset of cod

  MultiMap() = default;
  MultiMap(FinSpace d, FinSpace c, std::vector<Mask> v);

  static MultiMap lift(const PointMap& f); // x -> {f(x)}

  Mask operator()(std::size_t x) const { return val[x]; }
  bool all_non_empty() const;

  friend bool operator==(const MultiMap& a, const MultiMap& b) {
    return a.dom == b.dom && a.cod == b.cod && a.val == b.val;
  }
};

// F(A) = union of F(x), x in A.
PointSet mm_image(const MultiMap& f, const PointSet& a);

// inv = {x : F(x) meets B},  core = {x : F(x) subset B}.
struct InvCore {
  PointSet inv, core;
};
InvCore mm_inverse_and_core(const MultiMap& f, const PointSet& b);

enum class CombineMode { set_union, set_intersection };
MultiMap mm_combine(const MultiMap& f, const MultiMap& g, CombineMode mode);
MultiMap mm_compose(const MultiMap& h, const MultiMap& g); // x -> h(g(x))

// y -> f^{-1}({y}), a multimap from f's codomain to f's domain.
MultiMap inverse_image_multifunction(const PointMap& f);

// All selections of a non-empty multimap in lexicographic order (point 0 is
// the most significant digit, values ascending).  Selections are indexable,
// so the enumeration never needs to be materialized.
class SelectionStream {
public:
  explicit SelectionStream(MultiMap f); // throws empty_value

  unsigned long long size() const;      // throws search_space_too_large past 2^63
  PointMap at(unsigned long long index) const;

  // Calls fn for every selection; throws search_space_too_large if the count
  // exceeds cap.
  void for_each(const std::function<void(const PointMap&)>& fn,
                unsigned long long cap = kDefaultSelectionCap) const;

  static constexpr unsigned long long kDefaultSelectionCap = 1000000;

private:
  MultiMap f_;
  std::vector<std::vector<std::uint8_t>> choices_;
  unsigned __int128 total_ = 1;
};

struct Witness {
  std::size_t point = 0;
  Mask open = 0; // the neighborhood the check fails against
};

struct CheckResult {
  bool value = true;
  std::optional<Witness> witness;
  explicit operator bool() const { return value; }
};

// Pointwise criterion f(U_p) subset U_{f(p)}; global mode checks all points.
CheckResult is_continuous(const PointMap& f);
CheckResult is_continuous_at(const PointMap& f, std::size_t p);

// f closed iff f(cl{x}) is closed for every x (closed sets are finite unions
// of point closures).
bool is_closed_map(const PointMap& f);

enum class Strategy { fast, definitional };

// u.s.c. at p: every neighborhood V of F(p) has a core that is a
// neighborhood of p.  The fast form checks F(U_p) against the smallest open
// superset of F(p); the definitional form quantifies over all opens.
CheckResult is_usc_at(const MultiMap& f, std::size_t p, Strategy s = Strategy::fast);
CheckResult is_usc(const MultiMap& f, Strategy s = Strategy::fast);

// usco: non-empty and u.s.c. (values of a finite space are always compact).
bool is_usco(const MultiMap& f);
// minimal usco: usco with no proper non-empty-valued submultifunction that
// is usco; decided by exhaustive search over value subsets.
bool is_minimal_usco(const MultiMap& f,
                     unsigned long long cap = SelectionStream::kDefaultSelectionCap);

struct GraphClosure {
  FinSpace prod;   // product(dom, cod)
  PointSet graph;  // gr(F)
  PointSet closed; // cl(gr F)
};
GraphClosure graph_and_closure(const MultiMap& f);
GraphClosure graph_and_closure(const PointMap& f);

} // namespace msplit
