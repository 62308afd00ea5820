#pragma once

// Desk-scale verification of the infinite examples in exact rationals: the
// locally unbounded star of f_weird, three divergence counterexamples, and
// the circle-to-two-circles reglue built on finite discrete circle models.
//
// Finite-depth runs cannot rule out cluster points outright; a passing
// verdict means "consistent with the claim at this depth", never "proved".

#include <utility>
#include <vector>

#include "msplit/rational.hpp"
#include "msplit/reglue.hpp"

namespace msplit {

struct Evidence {
  std::string input, output, check;
};

struct WitnessReport {
  std::string claim;
  unsigned depth = 0;
  bool pass = false;
  std::vector<Evidence> evidence;
};

// The chosen sequences behind f_weird: for n >= 1, 0 <= i <= n, k >= 1,
//
//   x_k^{n,i} = 1/n - 1/((n+1) * m),   m = k*(n+1) + i.
//
// Base-(n+1) encoding makes m, and with it x, injective in (i, k); the
// values for different n live in disjoint intervals below 1/n, and every
// one of them sits inside B(1/(n(n+1)), 1/n).
Rational fweird_point(unsigned n, unsigned i, unsigned long long k);

// (q, i/n^2) if q = x_k^{n,i} for some n <= depth, else (q, 0).
std::pair<Rational, Rational> f_weird_eval(const Rational& q, unsigned depth);

// Witnesses that the star of f_weird at 1/n has exactly n+1 members, by
// checking the k <= depth prefix of each of the n+1 sequences.
WitnessReport f_weird_star_check(unsigned n, unsigned depth);

WitnessReport divergence_witness(const std::string& example, unsigned depth);

struct CircleDemo {
  ReglueDatum datum;
  std::size_t x_points = 0;
  std::size_t y_points = 0;
};
// Two sampled segments glued end-to-end one way into a single circle model
// and the other way into two circle models; n sample points per segment,
// n even and at least 4.
CircleDemo circle_reglue_demo(std::size_t n);

} // namespace msplit
