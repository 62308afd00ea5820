#pragma once

// Exhaustive and randomized instance generation.  Finite topologies
// correspond bijectively to preorders (q in U_p as the relation), so
// enumeration and random generation both work on relations.

#include <cstdint>
#include <random>
#include <vector>

#include "msplit/pointmap.hpp"

namespace msplit {

// Every labeled topology on n points, exactly once; n <= 4.
// Counts: 1, 4, 29, 355.
std::vector<FinSpace> enumerate_topologies(std::size_t n);

// All maps X -> Y (|Y|^|X| of them) in lexicographic table order.
void for_each_map(const FinSpace& x, const FinSpace& y,
                  const std::function<void(const PointMap&)>& fn);

// Seeded deterministic generator.  Draws avoid std::uniform_int_distribution
// on purpose: its output is implementation-defined, and failure records must
// replay identically everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : eng_() % n; }
  bool coin() { return eng_() & 1u; }

  FinSpace space(std::size_t n);
  FinSpace discrete_space(std::size_t n);
  PointMap map(const FinSpace& x, const FinSpace& y);
  MultiMap multimap(const FinSpace& x, const FinSpace& y, bool allow_empty);
  std::vector<Mask> partition(const FinSpace& x);

private:
  std::mt19937_64 eng_;
};

} // namespace msplit
