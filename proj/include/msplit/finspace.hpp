#pragma once

// Finite topological spaces in minimal-open-neighborhood form.
//
// A finite topology on points {0,...,n-1} is determined by its table
// p -> U_p, where U_p is the intersection of all open sets containing p.
// The table satisfies p in U_p and (q in U_p  =>  U_q subset U_p), and
//
//   U open        <=>  U_p subset U for every p in U
//   p in cl(A)    <=>  U_p meets A
//   V nbhd of p   <=>  U_p subset V
//
// Point sets are bitmasks, so a space holds at most 64 points.

#include <cstdint>
#include <bit>
#include <memory>
#include <string>
#include <vector>

#include "msplit/error.hpp"

namespace msplit {

using Mask = std::uint64_t;

constexpr std::size_t kMaxPoints = 64;

inline Mask pt(std::size_t i) { return Mask{1} << i; }
inline bool has(Mask m, std::size_t i) { return (m >> i) & 1u; }
inline int count(Mask m) { return std::popcount(m); }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Iterate set bits: for (auto i : bits(m)) ...
struct bits {
  struct iter {
    Mask rest;
    std::size_t operator*() const { return std::countr_zero(rest); }
    iter& operator++() { rest &= rest - 1; return *this; }
    bool operator!=(const iter& o) const { return rest != o.rest; }
  };
  Mask m;
  explicit bits(Mask mm) : m(mm) {}
  iter begin() const { return {m}; }
  iter end() const { return {0}; }
};

class FinSpace {
public:
  FinSpace() = default;

  // Validating constructor from an explicit list of opens.  Rejects inputs
  // that are not topologies instead of completing them.
  static FinSpace build(std::string name, std::vector<std::string> labels,
                        const std::vector<Mask>& opens);

  // Trusted constructor for derived spaces; checks Alexandrov consistency.
  static FinSpace from_min_open(std::string name, std::vector<std::string> labels,
                                std::vector<Mask> min_open);

  static FinSpace discrete(std::string name, std::vector<std::string> labels);
  static FinSpace indiscrete(std::string name, std::vector<std::string> labels);

  std::size_t size() const { return data_->min_open.size(); }
  const std::string& name() const { return data_->name; }
  const std::string& label(std::size_t i) const { return data_->labels[i]; }
  const std::vector<std::string>& labels() const { return data_->labels; }

  // Index of a label; throws unknown_label.
  std::size_t index(const std::string& label) const;

  Mask min_open(std::size_t p) const { return data_->min_open[p]; }
  Mask full() const { return size() == kMaxPoints ? ~Mask{0} : (Mask{1} << size()) - 1; }

  bool is_open(Mask a) const;
  bool is_closed(Mask a) const { return is_open(full() & ~a); }
  Mask closure(Mask a) const;
  Mask interior(Mask a) const;
  // Smallest open superset: union of U_y over y in a.
  Mask hull(Mask a) const;

  bool is_discrete() const;

  // All opens, ascending as masks.  Exponential; capped by point count.
  std::vector<Mask> all_opens(std::size_t max_size = 20) const;

  bool same(const FinSpace& o) const;
  friend bool operator==(const FinSpace& a, const FinSpace& b) { return a.same(b); }

private:
  struct Data {
    std::string name;
    std::vector<std::string> labels;
    std::vector<Mask> min_open;
    std::vector<std::pair<std::string, std::size_t>> by_label; // sorted
  };
  std::shared_ptr<const Data> data_;

  static FinSpace wrap(Data d);
};

// A subset of one space's points.
struct PointSet {
  FinSpace space;
  Mask mask = 0;

  PointSet() = default;
  PointSet(FinSpace s, Mask m) : space(std::move(s)), mask(m) {}

  std::vector<std::string> to_labels() const;
};

void require_same_space(const FinSpace& a, const FinSpace& b, const char* what);

struct ClIntBd {
  PointSet cl, in, bd;
};
ClIntBd closure_interior_boundary(const FinSpace& s, const PointSet& a);

struct SeparationFlags {
  bool t0 = false;
  bool hausdorff = false;
  bool regular = false;
};
SeparationFlags separation_flags(const FinSpace& s);

// Derived spaces.  Point layouts are fixed:
//   product:        (x,y) at index x*|T| + y, labels "(x,y)"
//   disjoint union: left block first, labels "L:x" / "R:y"
//   subspace:       members of the mask in increasing index order
FinSpace product_space(const FinSpace& s, const FinSpace& t);
FinSpace disjoint_union(const FinSpace& s, const FinSpace& t);
FinSpace subspace(const FinSpace& s, Mask members);

inline std::size_t pair_index(const FinSpace& t, std::size_t x, std::size_t y) {
  return x * t.size() + y;
}

// Quotient by a partition (list of disjoint, covering classes).  Returns the
// quotient space plus the class index of every point of s.  The quotient
// carries the finest topology making the projection continuous.
struct Quotient {
  FinSpace space;
  std::vector<std::uint8_t> class_of;
};
Quotient quotient_space(const FinSpace& s, const std::vector<Mask>& classes);

} // namespace msplit
