#include "doctest.h"

#include "msplit/enumerate.hpp"
#include "msplit/reglue.hpp"
#include "oracles.hpp"

using namespace msplit;

namespace {

FinSpace d2() { return FinSpace::discrete("D2", {"0", "1"}); }

// The four-point model of two arcs glued two ways: X and Y discrete with two
// points each, pX fibers {z1,z2} / {z3,z4}, pY fibers {z1,z4} / {z2,z3}.
ReglueDatum arc_datum() {
  FinSpace z = FinSpace::discrete("Z4", {"z1", "z2", "z3", "z4"});
  FinSpace x = FinSpace::discrete("X2", {"x1", "x2"});
  FinSpace y = FinSpace::discrete("Y2", {"y1", "y2"});
  PointMap px(z, x, {0, 0, 1, 1});
  PointMap py(z, y, {0, 1, 1, 0});
  PointMap pxinv(x, z, {0, 2}); // z1, z3
  return ReglueDatum::make(z, px, py, pxinv);
}

} // namespace

TEST_CASE("split homeomorphism detection") {
  // the identity between any two topologies on the same points
  auto threes = enumerate_topologies(3);
  for (const auto& t1 : threes)
    for (const auto& t2 : threes)
      CHECK(is_split_homeo(PointMap::identity_between(t1, t2)).value);

  FinSpace d = d2();
  CHECK_FALSE(is_split_homeo(PointMap::constant(d, d, 0)).value);
  CHECK(is_split_homeo(PointMap::identity(d)).value); // a homeomorphism
}

TEST_CASE("split homeomorphic finite spaces are exactly those of equal size") {
  auto pool = enumerate_topologies(2);
  auto threes = enumerate_topologies(3);
  pool.insert(pool.end(), threes.begin(), threes.end());
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (a.size() == b.size()) {
        CHECK(is_split_homeo(PointMap::identity_between(a, b)).value);
      } else {
        // no bijection can exist; any map fails on bijectivity
        for_each_map(a, b, [&](const PointMap& f) { CHECK_FALSE(is_split_homeo(f).value); });
      }
    }
}

TEST_CASE("inverse star via both routes") {
  FinSpace d = d2();
  CHECK(inverse_star(PointMap::identity(d), 0) == 0b01);
  CHECK(inverse_star(PointMap(d, d, {1, 0}), 0) == 0b10);

  FinSpace d3 = FinSpace::discrete("D3", {"0", "1", "2"});
  std::vector<std::uint8_t> perm = {0, 1, 2};
  do {
    PointMap f(d3, d3, perm);
    PointMap finv = f.inverse();
    for (std::size_t y0 = 0; y0 < 3; ++y0) CHECK(inverse_star(f, y0) == pt(finv.tbl[y0]));
  } while (std::next_permutation(perm.begin(), perm.end()));

  CHECK_THROWS_AS(inverse_star(PointMap::constant(d, d, 0), 0), error);
  FinSpace s = FinSpace::build("S2", {"a", "b"}, {0b00, 0b01, 0b11});
  CHECK_THROWS_AS(inverse_star(PointMap::identity_between(s, s), 0), error);
}

TEST_CASE("reglue datum from a split homeomorphism") {
  FinSpace d = d2();
  ReglueDatum idd = reglue_from_splithomeo(PointMap::identity(d));
  CHECK(idd.Z.size() == 2); // the diagonal
  CHECK(idd.pX.is_bijection());
  CHECK(idd.pY.is_bijection());
  CHECK(validate_reglue(idd).ok());

  FinSpace d3 = FinSpace::discrete("D3", {"0", "1", "2"});
  PointMap perm(d3, d3, {1, 2, 0});
  ReglueDatum dp = reglue_from_splithomeo(perm);
  CHECK(dp.Z.size() == 3);
  CHECK(dp.f == perm);
  CHECK(validate_reglue(dp).ok());

  CHECK_THROWS_AS(reglue_from_splithomeo(PointMap::constant(d, d, 0)), error);
}

TEST_CASE("split homeomorphism from a reglue datum") {
  ReglueDatum arc = arc_datum();
  CHECK(validate_reglue(arc).ok());
  PointMap f = splithomeo_from_reglue(arc);
  CHECK(f.is_bijection());
  CHECK(f.tbl == std::vector<std::uint8_t>{0, 1}); // pY(z1)=y1, pY(z3)=y2

  FinSpace d = d2();
  PointMap f_id = splithomeo_from_reglue(ReglueDatum::identity(d));
  CHECK(f_id == PointMap::identity(d));

  // a datum whose pXinv is not a right inverse
  FinSpace z = FinSpace::discrete("Z4", {"z1", "z2", "z3", "z4"});
  FinSpace x = FinSpace::discrete("X2", {"x1", "x2"});
  ReglueDatum bad = arc;
  bad.pXinv = PointMap(x, z, {2, 2});
  bad.f = compose(bad.pY, bad.pXinv);
  ReglueReport rep = validate_reglue(bad);
  CHECK_FALSE(rep.right_inverse);
  CHECK_FALSE(rep.ok());
  CHECK_THROWS_AS(splithomeo_from_reglue(bad), error);
}

TEST_CASE("validation flags pinpoint failures") {
  ReglueDatum arc = arc_datum();
  FinSpace z = arc.Z;
  FinSpace x = arc.pX.cod;

  ReglueDatum nosurj = arc;
  nosurj.pX = PointMap(z, x, {0, 0, 0, 0});
  // keep pXinv consistent in type; the surjectivity flag is what matters
  ReglueReport rep = validate_reglue(nosurj);
  CHECK_FALSE(rep.pX_surjective);
  CHECK_FALSE(rep.ok());

  // non-discrete X is flagged as a hypothesis failure
  FinSpace s = FinSpace::build("S2", {"a", "b"}, {0b00, 0b01, 0b11});
  PointMap pxs(z, s, {0, 0, 1, 1});
  ReglueDatum nh = arc;
  nh.pX = pxs;
  nh.pXinv = PointMap(s, z, {0, 2});
  nh.f = compose(nh.pY, nh.pXinv);
  CHECK_FALSE(validate_reglue(nh).x_discrete);
}

TEST_CASE("quotient-map check agrees with the subset-scan oracle") {
  Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    FinSpace x = rng.space(1 + rng.below(4));
    FinSpace y = rng.space(1 + rng.below(4));
    PointMap f = rng.map(x, y);
    CHECK(is_quotient_map(f) == oracle::quotient_map(f));
  }
}

TEST_CASE("transitive composition") {
  FinSpace d = d2();
  ReglueDatum idd = ReglueDatum::identity(d);
  ReglueDatum comp = reglue_transitive(idd, idd);
  CHECK(comp.Z.size() == 4);
  CHECK(comp.f == PointMap::identity(d));
  CHECK(validate_reglue(comp).ok());

  ReglueDatum arc = arc_datum();
  ReglueDatum back = arc.reversed();
  CHECK(validate_reglue(back).ok());
  CHECK(back.f == arc.f.inverse());
  ReglueDatum there_and_back = reglue_transitive(arc, back);
  CHECK(validate_reglue(there_and_back).ok());
  CHECK(there_and_back.f == PointMap::identity(arc.pX.cod));

  // arc followed by a swap of Y
  FinSpace y = arc.pY.cod;
  ReglueDatum swap = reglue_from_splithomeo(PointMap(y, y, {1, 0}));
  ReglueDatum seq = reglue_transitive(arc, swap);
  CHECK(validate_reglue(seq).ok());
  CHECK(seq.f == compose(swap.f, arc.f));
}

TEST_CASE("a bijection tracking finitely many continuous bijections is a split homeomorphism") {
  // the selection route: the union of the f_i inverse fibers is
  // pre-multi-split, and the inverse of the tracking bijection selects from it
  FinSpace d4 = FinSpace::discrete("D4", {"0", "1", "2", "3"});
  PointMap f1 = PointMap::identity(d4);
  PointMap f2(d4, d4, {1, 0, 3, 2});
  PointMap f(d4, d4, {1, 0, 2, 3}); // proper mixture of f1 and f2
  for (std::size_t p = 0; p < 4; ++p)
    CHECK((f.tbl[p] == f1.tbl[p] || f.tbl[p] == f2.tbl[p]));

  MultiMap inv_union =
      mm_combine(inverse_image_multifunction(f1), inverse_image_multifunction(f2),
                 CombineMode::set_union);
  PreMsReport rep = is_pre_multi_split(inv_union);
  CHECK(rep.value);

  PointMap finv = f.inverse();
  for (std::size_t y = 0; y < 4; ++y) CHECK(has(inv_union.val[y], finv.tbl[y]));
  CHECK(is_split_homeo(f).value);
}

TEST_CASE("round trip recovers every small discrete bijection exactly") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    FinSpace x = FinSpace::discrete("X", labels);
    FinSpace y = FinSpace::discrete("Y", labels);
    std::vector<std::uint8_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint8_t>(i);
    do {
      PointMap f(x, y, perm);
      CHECK(splithomeo_from_reglue(reglue_from_splithomeo(f)) == f);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}
