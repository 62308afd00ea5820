#include "doctest.h"

#include "msplit/enumerate.hpp"
#include "msplit/multisplit.hpp"

using namespace msplit;

namespace {

FinSpace sierpinski() { return FinSpace::build("S2", {"a", "b"}, {0b00, 0b01, 0b11}); }
FinSpace d2() { return FinSpace::discrete("D2", {"0", "1"}); }

PointMap split_example() { return PointMap(sierpinski(), d2(), {0, 1}); } // f(a)=0, f(b)=1
PointMap into_sierpinski() { return PointMap(d2(), sierpinski(), {0, 1}); } // g(0)=a, g(1)=b

} // namespace

TEST_CASE("extended-value sets, both strategies") {
  PointMap f = split_example();
  for (Strategy s : {Strategy::fast, Strategy::definitional}) {
    CHECK(is_ev_set(f, 1, 0b11, s));
    CHECK_FALSE(is_ev_set(f, 1, 0b10, s)); // {1}: images of U_b never stay near it
    CHECK(is_ev_set(f, 0, 0b01, s));
  }

  PointMap g = into_sierpinski();
  for (Strategy s : {Strategy::fast, Strategy::definitional}) {
    CHECK(is_ev_set(g, 0, 0b01, s));
    CHECK(is_ev_set(g, 0, 0b10, s)); // non-Hausdorff non-uniqueness
    CHECK(is_ev_set(g, 0, 0b11, s));
  }

  CHECK_THROWS_AS(is_ev_set(f, 0, 0, Strategy::fast), error);
  CHECK_THROWS_AS(is_ev_set(f, 0, 0b100, Strategy::fast), error); // outside codomain
}

TEST_CASE("extended-value families") {
  PointMap f = split_example();
  EvFamily at_a = ev_family(f, 0);
  CHECK(at_a.sets == std::vector<Mask>{0b01});
  CHECK(at_a.minimal == std::vector<Mask>{0b01});
  CHECK(at_a.continuous_at(f));

  EvFamily at_b = ev_family(f, 1);
  CHECK(at_b.sets == std::vector<Mask>{0b11});
  CHECK_FALSE(at_b.continuous_at(f));
  CHECK(at_b.split_at(f));

  PointMap g = into_sierpinski();
  EvFamily gf = ev_family(g, 0);
  CHECK(gf.sets == std::vector<Mask>{0b01, 0b10, 0b11});
  CHECK(gf.minimal == std::vector<Mask>{0b01, 0b10});

  PointMap id = PointMap::identity(d2());
  CHECK(ev_family(id, 0).sets == std::vector<Mask>{0b01});
}

TEST_CASE("family invariants hold on random instances") {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    FinSpace x = rng.space(1 + rng.below(4));
    FinSpace y = rng.space(1 + rng.below(4));
    PointMap f = rng.map(x, y);
    for (std::size_t p = 0; p < x.size(); ++p) {
      EvFamily fam = ev_family(f, p);
      CHECK(!fam.sets.empty()); // f(U_p) always qualifies
      CHECK(fam.member(f.image(x.min_open(p))));
      for (Mask z : fam.sets) CHECK(z != 0);
      // minimal members form an antichain contained in the family
      for (Mask m : fam.minimal) {
        CHECK(fam.member(m));
        for (Mask m2 : fam.minimal)
          if (m != m2) CHECK_FALSE(subset(m, m2));
      }
      // every member contains a minimal one
      for (Mask z : fam.sets) {
        bool contains_minimal = false;
        for (Mask m : fam.minimal)
          if (subset(m, z)) contains_minimal = true;
        CHECK(contains_minimal);
      }
    }
  }
}

TEST_CASE("xp sets") {
  PointMap f = split_example();
  CHECK(xp_set(f, 1) == 0b11);

  PointMap g = into_sierpinski();
  CHECK(xp_set(g, 0) == 0b11); // cl_S2({a})

  PointMap c = PointMap::constant(d2(), d2(), 1);
  for (std::size_t p = 0; p < 2; ++p) CHECK(xp_set(c, p) == 0b10);
}

TEST_CASE("star multifunction") {
  PointMap f = split_example();
  MultiMap fs = star(f);
  CHECK(fs.val[0] == 0b01);
  CHECK(fs.val[1] == 0b11);

  PointMap id = PointMap::identity(d2());
  CHECK(star(id) == MultiMap::lift(id));

  PointMap from_discrete(d2(), d2(), {1, 0});
  MultiMap ds = star(from_discrete);
  CHECK(ds == MultiMap::lift(from_discrete));

  CHECK_THROWS_AS(star(into_sierpinski()), error); // NotHausdorff
  try {
    star(into_sierpinski());
  } catch (const error& e) {
    CHECK(e.code() == errc::not_hausdorff);
  }
}

TEST_CASE("f(p) always belongs to the star value") {
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    FinSpace x = rng.space(1 + rng.below(5));
    FinSpace y = rng.discrete_space(1 + rng.below(5));
    PointMap f = rng.map(x, y);
    MultiMap fs = star(f);
    for (std::size_t p = 0; p < x.size(); ++p) CHECK(has(fs.val[p], f.tbl[p]));
  }
}

TEST_CASE("multi-split continuity always holds with the canonical certificate") {
  PointMap f = split_example();
  MscResult r = is_multi_split(f);
  CHECK(r.value);
  CHECK(r.certificates == std::vector<Mask>{0b01, 0b11});

  MscResult rb = is_multi_split_at(f, 1);
  CHECK(rb.certificates == std::vector<Mask>{0b11});

  PointMap c = PointMap::constant(sierpinski(), d2(), 0);
  MscResult rc = is_multi_split(c);
  CHECK(rc.certificates == std::vector<Mask>{0b01, 0b01}); // {f(p)} at every point
}

TEST_CASE("composition construction") {
  FinSpace d = d2();
  PointMap id = PointMap::identity(d);
  ComposeEv triv = compose_ev(id, id, 0, 0b01, [](std::size_t y) { return pt(y); });
  CHECK(triv.z_tilde == 0b01);
  CHECK(triv.ev_subset == 0b01);

  PointMap f = split_example();
  ComposeEv ce = compose_ev(f, id, 1, 0b11, [](std::size_t y) { return pt(y); });
  CHECK(ce.z_tilde == 0b11);
  CHECK(is_ev_set(compose(id, f), 1, 0b11, Strategy::definitional));

  PointMap g = into_sierpinski();
  ComposeEv cg = compose_ev(f, g, 1, 0b11, [](std::size_t y) { return pt(y); });
  CHECK(cg.z_tilde == 0b11);
  CHECK(condition_b(compose(g, f), 1, cg.z_tilde, Strategy::definitional));
  CHECK(is_ev_set(compose(g, f), 1, cg.ev_subset, Strategy::fast));

  // {a} is not an extended-value set of g at 1: images of U_1 stay at b
  CHECK_THROWS_AS(compose_ev(f, g, 1, 0b11, [](std::size_t) { return Mask{0b01}; }), error);
  CHECK_THROWS_AS(compose_ev(f, g, 1, 0b10, [](std::size_t y) { return pt(y); }), error);
}

TEST_CASE("pre-multi-split reports") {
  MultiMap f(sierpinski(), d2(), {0b01, 0b11});
  PreMsReport rep = is_pre_multi_split(f);
  CHECK(rep.value);
  CHECK(rep.selections == 2);
  CHECK(rep.fp_certifies_all);

  MultiMap single = MultiMap::lift(PointMap::constant(sierpinski(), d2(), 0));
  PreMsReport rs = is_pre_multi_split(single);
  CHECK(rs.value);
  CHECK(rs.selections == 1);
  CHECK(rs.fp_certifies_all);

  MultiMap has_empty(sierpinski(), d2(), {0b01, 0});
  CHECK_THROWS_AS(is_pre_multi_split(has_empty), error);

  // not u.s.c.: the F(p) certificate fails somewhere even though every
  // selection is still multi-split continuous
  MultiMap bad(sierpinski(), d2(), {0b01, 0b10});
  PreMsReport rb = is_pre_multi_split(bad);
  CHECK(rb.value);
  CHECK_FALSE(rb.fp_certifies_all);
  CHECK(!rb.fp_failures.empty());
}

TEST_CASE("tilde Z sets") {
  MultiMap f(sierpinski(), d2(), {0b01, 0b11});
  CHECK(tilde_z_set(f, 1) == 0b11);

  PointMap g = split_example();
  MultiMap gl = MultiMap::lift(g);
  for (std::size_t p = 0; p < 2; ++p) CHECK(tilde_z_set(gl, p) == xp_set(g, p));

  MultiMap constant(sierpinski(), d2(), {0b11, 0b11});
  CHECK(tilde_z_set(constant, 0) == 0b11);

  MultiMap has_empty(sierpinski(), d2(), {0b01, 0});
  CHECK_THROWS_AS(tilde_z_set(has_empty, 0), error);
}

TEST_CASE("tilde Z dominates the xp set of every selection") {
  Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    FinSpace x = rng.space(1 + rng.below(4));
    FinSpace y = rng.space(1 + rng.below(4));
    MultiMap f = rng.multimap(x, y, false);
    SelectionStream(f).for_each([&](const PointMap& s) {
      for (std::size_t p = 0; p < x.size(); ++p)
        CHECK(subset(xp_set(s, p), tilde_z_set(f, p)));
    });
  }
}

TEST_CASE("continuity equivalence") {
  auto ce = continuity_equivalence(PointMap::identity(d2()));
  CHECK(ce.continuous);
  CHECK(ce.msc_and_closed_graph);

  auto cf = continuity_equivalence(split_example());
  CHECK_FALSE(cf.continuous);
  CHECK_FALSE(cf.msc_and_closed_graph);

  auto cc = continuity_equivalence(PointMap::constant(sierpinski(), d2(), 0));
  CHECK(cc.continuous);
  CHECK(cc.msc_and_closed_graph);

  CHECK_THROWS_AS(continuity_equivalence(into_sierpinski()), error);
}

TEST_CASE("graph projection fibers") {
  PointMap f = split_example();
  ProjectionCheck pc = graph_projection_check(f, 2);
  CHECK(pc.within_bound);
  CHECK(pc.fiber_sizes == std::vector<std::size_t>{1, 2});
  MultiMap fs = star(f);
  for (std::size_t p = 0; p < 2; ++p)
    CHECK(pc.fiber_sizes[p] == static_cast<std::size_t>(count(fs.val[p])));

  ProjectionCheck pid = graph_projection_check(PointMap::identity(d2()), 1);
  CHECK(pid.fiber_sizes == std::vector<std::size_t>{1, 1});

  ProjectionCheck pco = graph_projection_check(PointMap::constant(sierpinski(), d2(), 0), 1);
  CHECK(pco.fiber_sizes == std::vector<std::size_t>{1, 1});
}

TEST_CASE("family enumeration is capped") {
  std::vector<std::string> labels;
  for (int i = 0; i < 17; ++i) labels.push_back("y" + std::to_string(i));
  FinSpace big = FinSpace::discrete("big", labels);
  FinSpace one = FinSpace::discrete("pt", {"*"});
  CHECK_THROWS_AS(ev_family(PointMap::constant(one, big, 0), 0), error);
  // the certificate route has no such cap
  CHECK(is_multi_split(PointMap::constant(one, big, 0)).value);
}

TEST_CASE("the fault hook visibly corrupts the fast strategy") {
  PointMap f = split_example();

  set_fast_ev_fault(FastEvFault::drop_cover);
  bool cover_detected =
      is_ev_set(f, 1, 0b10, Strategy::fast) != is_ev_set(f, 1, 0b10, Strategy::definitional);
  set_fast_ev_fault(FastEvFault::none);
  CHECK(cover_detected);

  FinSpace one = FinSpace::discrete("pt", {"*"});
  PointMap c = PointMap::constant(one, d2(), 0);
  set_fast_ev_fault(FastEvFault::drop_closure);
  bool closure_detected =
      is_ev_set(c, 0, 0b11, Strategy::fast) != is_ev_set(c, 0, 0b11, Strategy::definitional);
  set_fast_ev_fault(FastEvFault::none);
  CHECK(closure_detected);
}
