#include "doctest.h"

#include "msplit/enumerate.hpp"
#include "msplit/finspace.hpp"
#include "oracles.hpp"

using namespace msplit;

namespace {

FinSpace sierpinski() {
  return FinSpace::build("S2", {"a", "b"}, {0b00, 0b01, 0b11});
}

FinSpace d2() { return FinSpace::discrete("D2", {"0", "1"}); }

} // namespace

TEST_CASE("building spaces from explicit opens") {
  FinSpace s = sierpinski();
  CHECK(s.min_open(0) == 0b01);
  CHECK(s.min_open(1) == 0b11);
  CHECK(s.all_opens() == std::vector<Mask>{0b00, 0b01, 0b11});

  FinSpace d = d2();
  CHECK(d.min_open(0) == 0b01);
  CHECK(d.min_open(1) == 0b10);
  CHECK(d.is_discrete());

  CHECK_THROWS_AS(FinSpace::build("bad", {"x", "y"}, {0b00, 0b01}), error); // X missing
  CHECK_THROWS_AS(FinSpace::build("dup", {"x", "x"}, {0b00, 0b11}), error);
  // union of two listed opens absent
  CHECK_THROWS_AS(FinSpace::build("gap", {"x", "y", "z"}, {0b000, 0b001, 0b010, 0b111}), error);
  try {
    FinSpace::build("gap", {"x", "y", "z"}, {0b000, 0b001, 0b010, 0b111});
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_topology);
  }
}

TEST_CASE("closure, interior, boundary") {
  FinSpace s = sierpinski();
  auto r = closure_interior_boundary(s, PointSet(s, 0b01)); // {a}
  CHECK(r.cl.mask == 0b11);
  CHECK(r.in.mask == 0b01);
  CHECK(r.bd.mask == 0b10);

  auto e = closure_interior_boundary(s, PointSet(s, 0));
  CHECK(e.cl.mask == 0);
  CHECK(e.in.mask == 0);
  CHECK(e.bd.mask == 0);

  FinSpace d = d2();
  auto c = closure_interior_boundary(d, PointSet(d, 0b01));
  CHECK(c.cl.mask == 0b01);
  CHECK(c.in.mask == 0b01);
  CHECK(c.bd.mask == 0);

  CHECK_THROWS_AS(closure_interior_boundary(s, PointSet(d, 0b01)), error);
}

TEST_CASE("closure and interior agree with the closed-set oracle everywhere") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_topologies(n))
      for (Mask a = 0; a <= s.full(); ++a) {
        CHECK(s.closure(a) == oracle::closure(s, a));
        CHECK(s.interior(a) == oracle::interior(s, a));
      }
}

TEST_CASE("separation flags") {
  SeparationFlags s2 = separation_flags(sierpinski());
  CHECK(s2.t0);
  CHECK_FALSE(s2.hausdorff);
  CHECK_FALSE(s2.regular);

  SeparationFlags dd = separation_flags(d2());
  CHECK(dd.t0);
  CHECK(dd.hausdorff);
  CHECK(dd.regular);

  SeparationFlags tr = separation_flags(FinSpace::indiscrete("I2", {"x", "y"}));
  CHECK_FALSE(tr.t0);
  CHECK_FALSE(tr.hausdorff);
  CHECK(tr.regular);
}

TEST_CASE("separation flags match brute force on every small space") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_topologies(n)) {
      SeparationFlags f = separation_flags(s);
      CHECK(f.regular == oracle::regular(s));
      CHECK(f.hausdorff == s.is_discrete()); // finite Hausdorff = discrete
    }
}

TEST_CASE("point-set identities on every small space") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_topologies(n)) {
      for (Mask a = 0; a <= s.full(); ++a) {
        Mask cl = s.closure(a), in = s.interior(a);
        CHECK(subset(in, a));
        CHECK(subset(a, cl));
        CHECK(s.closure(cl) == cl);
        CHECK(in == (s.full() & ~s.closure(s.full() & ~a))); // complement duality
        for (Mask b = 0; b <= s.full(); ++b)
          CHECK(s.closure(a | b) == (s.closure(a) | s.closure(b)));
        for (std::size_t p = 0; p < n; ++p)
          CHECK(has(cl, p) == ((s.min_open(p) & a) != 0));
      }
      for (std::size_t p = 0; p < n; ++p)
        for (auto q : bits(s.min_open(p))) CHECK(subset(s.min_open(q), s.min_open(p)));
    }
}

TEST_CASE("quotients") {
  FinSpace d = d2();
  Quotient one = quotient_space(d, {0b11});
  CHECK(one.space.size() == 1);

  FinSpace s = sierpinski();
  Quotient same = quotient_space(s, {0b01, 0b10});
  CHECK(same.space.size() == 2);
  CHECK(same.space.min_open(0) == 0b01);
  CHECK(same.space.min_open(1) == 0b11);

  FinSpace d3 = FinSpace::discrete("D3", {"0", "1", "2"});
  Quotient q = quotient_space(d3, {0b011, 0b100});
  CHECK(q.space.size() == 2);
  CHECK(q.space.is_discrete());

  CHECK_THROWS_AS(quotient_space(d3, {0b011, 0b110}), error); // overlap
  CHECK_THROWS_AS(quotient_space(d3, {0b011}), error);        // not covering
}

TEST_CASE("quotient topology equals the preimage-scan oracle") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    FinSpace s = rng.space(1 + rng.below(5));
    auto classes = rng.partition(s);
    Quotient q = quotient_space(s, classes);
    CHECK(q.space.all_opens() == oracle::quotient_opens(s, classes));
  }
}

TEST_CASE("products and sums") {
  FinSpace s = sierpinski(), d = d2();
  FinSpace p = product_space(s, d);
  CHECK(p.size() == 4);
  // U_(b,0) = {(a,0),(b,0)}
  std::size_t b0 = pair_index(d, 1, 0);
  Mask expect = pt(pair_index(d, 0, 0)) | pt(pair_index(d, 1, 0));
  CHECK(p.min_open(b0) == expect);

  CHECK(disjoint_union(d, d).is_discrete());
  CHECK(disjoint_union(d, d).size() == 4);

  FinSpace one = FinSpace::discrete("pt", {"*"});
  FinSpace ps = product_space(one, s);
  REQUIRE(ps.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(ps.min_open(i) == s.min_open(i));
}

TEST_CASE("subspace minimal opens restrict the ambient ones") {
  FinSpace s = sierpinski();
  FinSpace sub = subspace(s, 0b10); // {b}
  CHECK(sub.size() == 1);
  CHECK(sub.min_open(0) == 0b1);

  for (const auto& sp : enumerate_topologies(3))
    for (Mask m = 1; m <= sp.full(); ++m) {
      FinSpace ss = subspace(sp, m);
      std::vector<std::size_t> global;
      for (auto i : bits(m)) global.push_back(i);
      for (std::size_t k = 0; k < ss.size(); ++k) {
        Mask expect = 0;
        for (std::size_t j = 0; j < global.size(); ++j)
          if (has(sp.min_open(global[k]), global[j])) expect |= pt(j);
        CHECK(ss.min_open(k) == expect);
      }
    }
}

TEST_CASE("spaces refuse more than 64 points") {
  std::vector<std::string> labels;
  for (int i = 0; i < 65; ++i) labels.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(FinSpace::discrete("big", labels), error);
}
