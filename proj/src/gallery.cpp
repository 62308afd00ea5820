#include "msplit/gallery.hpp"

#include <algorithm>

namespace msplit {

Rational fweird_point(unsigned n, unsigned i, unsigned long long k) {
  if (n < 1 || i > n || k < 1) fail(errc::out_of_range, "bad sequence coordinates");
  Rational m((long long)(k * (n + 1) + i));
  return Rational(1, n) - Rational(1, n + 1) / m;
}

std::pair<Rational, Rational> f_weird_eval(const Rational& q, unsigned depth) {
  if (q < Rational(0) || q > Rational(1)) fail(errc::out_of_range, "argument outside [0,1]");
  for (unsigned n = 1; n <= depth; ++n) {
    Rational r = Rational(1, n) - q;
    if (!(Rational(0) < r)) continue;
    // q = 1/n - 1/((n+1)m)  <=>  m = 1 / ((n+1) r)
    Rational m = Rational(1) / (Rational(n + 1) * r);
    if (!m.is_integer()) continue;
    long long mm = m.num();
    if (mm < 1) continue;
    unsigned i = (unsigned)(mm % (n + 1));
    long long k = mm / (n + 1);
    if (k >= 1) return {q, Rational(i) / Rational((long long)n * n)};
  }
  return {q, Rational(0)};
}

WitnessReport f_weird_star_check(unsigned n, unsigned depth) {
  WitnessReport rep;
  rep.claim = "star of f_weird at 1/" + std::to_string(n) + " has " + std::to_string(n + 1) +
              " members";
  rep.depth = depth;
  rep.pass = true;
  if (n < 1) fail(errc::out_of_range, "n must be positive");

  const Rational limit(1, n);
  const Rational center(1, (long long)n * (n + 1));
  const Rational radius(1, n);

  for (unsigned i = 0; i <= n; ++i) {
    const Rational height = Rational(i) / Rational((long long)n * n);
    Rational prev_dist;
    bool first = true;
    for (unsigned long long k = 1; k <= depth; ++k) {
      Rational x = fweird_point(n, i, k);
      Rational dist = (limit - x).abs();
      bool in_ball = (x - center).abs() < radius;
      bool monotone = first || dist < prev_dist;
      auto value = f_weird_eval(x, n);
      bool on_level = value.second == height && value.first == x;
      if (!(in_ball && monotone && on_level)) rep.pass = false;
      if (k == 1 || k == depth || !(in_ball && monotone && on_level))
        rep.evidence.push_back({x.str(), value.second.str(),
                                std::string(in_ball ? "in-ball" : "OUT-OF-BALL") +
                                    (monotone ? ",closer" : ",NOT-CLOSER") +
                                    (on_level ? ",level-ok" : ",LEVEL-WRONG")});
      prev_dist = dist;
      first = false;
    }
  }
  // The claimed star members are (1/n, i/n^2) for i = 0..n; count them
  // after deduplication rather than trusting the formula.
  std::vector<std::pair<Rational, Rational>> members;
  for (unsigned i = 0; i <= n; ++i)
    members.emplace_back(Rational(1, n), Rational(i) / Rational((long long)n * n));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() != n + 1) rep.pass = false;
  rep.evidence.push_back({"members", std::to_string(members.size()),
                          members.size() == n + 1 ? "count-ok" : "COUNT-WRONG"});
  return rep;
}

static WitnessReport one_over_n_witness(unsigned depth) {
  WitnessReport rep;
  rep.claim = "the values at 1/n leave every tail of (0,1]";
  rep.depth = depth;
  rep.pass = depth >= 1;
  Rational prev;
  for (unsigned n = 1; n <= depth; ++n) {
    Rational v(1, n); // f(1/n) = 1/n
    if (n > 1 && !(v < prev)) rep.pass = false;
    if (n == 1 || n == depth) rep.evidence.push_back({Rational(1, n).str(), v.str(), "decreasing"});
    prev = v;
  }
  // 0, the only candidate limit, lies outside the codomain (0,1].
  rep.evidence.push_back({"limit", "0/1", "outside-(0,1]"});
  return rep;
}

static WitnessReport quotient_line_witness(unsigned depth) {
  WitnessReport rep;
  rep.claim = "the selection values at [1/n] grow past every bound";
  rep.depth = depth;
  rep.pass = depth >= 1;
  long long prev = 0;
  for (unsigned n = 1; n <= depth; ++n) {
    long long v = n; // f([1/n]) = n
    if (v <= prev) rep.pass = false;
    if (n == 1 || n == depth)
      rep.evidence.push_back({Rational(1, n).str(), Rational(v).str(), "increasing"});
    prev = v;
  }
  if (prev < (long long)depth) rep.pass = false;
  rep.evidence.push_back({"bound", std::to_string(depth - 1), "exceeded"});
  return rep;
}

// Comb sequences: x_k^n = 1 / (2^n (2k+1)), strictly decreasing to 0 inside
// (0, 1/n) and injective in (n, k) by unique factorization.
static Rational comb_point(unsigned n, unsigned k) {
  if (n >= 62) fail(errc::arithmetic_overflow, "comb depth exceeds 64-bit range");
  return Rational(1, (long long)(1ull << n)) * Rational(1, 2ll * k + 1);
}

static WitnessReport comb_space_witness(unsigned depth) {
  WitnessReport rep;
  rep.claim = "every tooth tip (0,1/n) is a cluster point of the selection values";
  rep.depth = depth;
  rep.pass = depth >= 1;

  std::vector<Rational> all;
  for (unsigned n = 1; n <= depth; ++n) {
    for (unsigned k = 1; k <= depth; ++k) {
      Rational x = comb_point(n, k);
      if (!(Rational(0) < x && x < Rational(1, n))) rep.pass = false;
      all.push_back(x);
    }
    // Selection value at the column of (x_k^n, 1) is (x_k^n, 1/n); its
    // distance to (0, 1/n) is x_k^n, which must fall below every 1/m.
    for (unsigned m = 1; m <= depth; ++m) {
      bool approached = false;
      for (unsigned k = 1; k <= depth && !approached; ++k)
        if (comb_point(n, k) < Rational(1, m)) approached = true;
      if (!approached) rep.pass = false;
    }
    rep.evidence.push_back(
        {comb_point(n, depth).str(), Rational(1, n).str(), "approaches-(0,1/" + std::to_string(n) + ")"});
  }
  std::sort(all.begin(), all.end());
  bool distinct = std::adjacent_find(all.begin(), all.end()) == all.end();
  if (!distinct) rep.pass = false;
  rep.evidence.push_back({"samples", std::to_string(all.size()), distinct ? "pairwise-distinct" : "COLLISION"});
  return rep;
}

WitnessReport divergence_witness(const std::string& example, unsigned depth) {
  if (example == "one_over_n") return one_over_n_witness(depth);
  if (example == "quotient_line") return quotient_line_witness(depth);
  if (example == "comb_space") return comb_space_witness(depth);
  fail(errc::unknown_example, "no example named '" + example + "'");
}

CircleDemo circle_reglue_demo(std::size_t n) {
  if (n < 4 || n % 2 != 0) fail(errc::bad_size, "need an even sample count of at least 4");
  if (2 * n > kMaxPoints) fail(errc::bad_size, "sample count too large for 64 points");

  // Two discrete chains of n points: t1..tn on the top segment, b1..bn on
  // the bottom segment.
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("t" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("b" + std::to_string(i));
  FinSpace z = FinSpace::discrete("segments", labels);

  auto t = [&](std::size_t i) { return i - 1; };        // t_i index
  auto b = [&](std::size_t i) { return n + i - 1; };    // b_i index

  // One circle: glue left end to left end and right end to right end.
  std::vector<Mask> to_one;
  to_one.push_back(pt(t(1)) | pt(b(1)));
  to_one.push_back(pt(t(n)) | pt(b(n)));
  for (std::size_t i = 2; i < n; ++i) to_one.push_back(pt(t(i)));
  for (std::size_t i = 2; i < n; ++i) to_one.push_back(pt(b(i)));
  Quotient qx = quotient_space(z, to_one);

  // Two circles: close each chain onto itself.
  std::vector<Mask> to_two;
  to_two.push_back(pt(t(1)) | pt(t(n)));
  to_two.push_back(pt(b(1)) | pt(b(n)));
  for (std::size_t i = 2; i < n; ++i) to_two.push_back(pt(t(i)));
  for (std::size_t i = 2; i < n; ++i) to_two.push_back(pt(b(i)));
  Quotient qy = quotient_space(z, to_two);

  auto proj = [&](const Quotient& q, const FinSpace& cod) {
    std::vector<std::uint8_t> tbl(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) tbl[i] = q.class_of[i];
    return PointMap(z, cod, std::move(tbl));
  };
  PointMap px = proj(qx, qx.space);
  PointMap py = proj(qy, qy.space);

  // Cut the single circle back open: pick the top corner at the left glue
  // point and the bottom corner at the right one, so the two arcs close
  // into different circles.
  std::vector<std::uint8_t> pxinv(qx.space.size());
  for (std::size_t c = 0; c < qx.space.size(); ++c) {
    Mask cls = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (qx.class_of[i] == c) cls |= pt(i);
    std::size_t rep_pt;
    if (cls == (pt(t(1)) | pt(b(1)))) rep_pt = t(1);
    else if (cls == (pt(t(n)) | pt(b(n)))) rep_pt = b(n);
    else rep_pt = *bits(cls).begin();
    pxinv[c] = static_cast<std::uint8_t>(rep_pt);
  }

  CircleDemo demo;
  demo.datum = ReglueDatum::make(z, px, py, PointMap(qx.space, z, std::move(pxinv)));
  demo.x_points = qx.space.size();
  demo.y_points = qy.space.size();
  return demo;
}

} // namespace msplit
