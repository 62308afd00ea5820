#include "msplit/enumerate.hpp"

namespace msplit {

static std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back("p" + std::to_string(i));
  return l;
}

std::vector<FinSpace> enumerate_topologies(std::size_t n) {
  if (n == 0 || n > 4) fail(errc::too_large, "enumeration supports 1 to 4 points");
  std::vector<FinSpace> out;
  auto labels = default_labels(n);
  const std::size_t off_diag = n * (n - 1);

  // Off-diagonal relation bits in row-major order, diagonal forced.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (p != q) slots.emplace_back(p, q);

  for (std::uint32_t combo = 0; combo < (1u << off_diag); ++combo) {
    std::vector<Mask> mo(n);
    for (std::size_t p = 0; p < n; ++p) mo[p] = pt(p);
    for (std::size_t s = 0; s < off_diag; ++s)
      if ((combo >> s) & 1u) mo[slots[s].first] |= pt(slots[s].second);
    bool transitive = true;
    for (std::size_t p = 0; p < n && transitive; ++p)
      for (auto q : bits(mo[p]))
        if (!subset(mo[q], mo[p])) {
          transitive = false;
          break;
        }
    if (!transitive) continue;
    out.push_back(FinSpace::from_min_open("T" + std::to_string(n) + "_" + std::to_string(out.size()),
                                          labels, mo));
  }
  return out;
}

void for_each_map(const FinSpace& x, const FinSpace& y,
                  const std::function<void(const PointMap&)>& fn) {
  std::vector<std::uint8_t> tbl(x.size(), 0);
  for (;;) {
    fn(PointMap(x, y, tbl));
    std::size_t i = x.size();
    while (i-- > 0) {
      if (++tbl[i] < y.size()) break;
      tbl[i] = 0;
      if (i == 0) return;
    }
  }
}

FinSpace Rng::space(std::size_t n) {
  // Random relation, then reflexive-transitive closure; every closure is a
  // preorder, hence a topology.
  std::vector<Mask> mo(n);
  for (std::size_t p = 0; p < n; ++p) {
    mo[p] = pt(p);
    for (std::size_t q = 0; q < n; ++q)
      if (p != q && below(4) == 0) mo[p] |= pt(q);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p < n; ++p) {
      Mask grown = mo[p];
      for (auto q : bits(mo[p])) grown |= mo[q];
      if (grown != mo[p]) {
        mo[p] = grown;
        changed = true;
      }
    }
  }
  return FinSpace::from_min_open("R" + std::to_string(n), default_labels(n), std::move(mo));
}

FinSpace Rng::discrete_space(std::size_t n) {
  return FinSpace::discrete("D" + std::to_string(n), default_labels(n));
}

PointMap Rng::map(const FinSpace& x, const FinSpace& y) {
  std::vector<std::uint8_t> tbl(x.size());
  for (auto& v : tbl) v = static_cast<std::uint8_t>(below(y.size()));
  return PointMap(x, y, std::move(tbl));
}

MultiMap Rng::multimap(const FinSpace& x, const FinSpace& y, bool allow_empty) {
  std::vector<Mask> val(x.size());
  for (auto& v : val) {
    v = below(y.full() + 1);
    if (!allow_empty && v == 0) v = pt(below(y.size()));
  }
  return MultiMap(x, y, std::move(val));
}

std::vector<Mask> Rng::partition(const FinSpace& x) {
  std::size_t k = 1 + below(x.size());
  std::vector<Mask> classes(k, 0);
  for (std::size_t p = 0; p < x.size(); ++p) classes[below(k)] |= pt(p);
  std::vector<Mask> out;
  for (Mask c : classes)
    if (c != 0) out.push_back(c);
  return out;
}

} // namespace msplit
