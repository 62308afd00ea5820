#include "msplit/finspace.hpp"

#include <algorithm>

namespace msplit {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_topology: return "NotATopology";
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::unknown_label: return "UnknownLabel";
    case errc::space_mismatch: return "SpaceMismatch";
    case errc::not_a_partition: return "NotAPartition";
    case errc::empty_value: return "EmptyValue";
    case errc::empty_candidate: return "EmptyCandidate";
    case errc::search_space_too_large: return "SearchSpaceTooLarge";
    case errc::not_hausdorff: return "NotHausdorff";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::internal_mismatch: return "InternalMismatch";
    case errc::invalid_choice: return "InvalidChoice";
    case errc::validation_failed: return "ValidationFailed";
    case errc::out_of_range: return "OutOfRange";
    case errc::unknown_example: return "UnknownExample";
    case errc::bad_size: return "BadSize";
    case errc::too_large: return "TooLarge";
    case errc::unknown_property: return "UnknownProperty";
    case errc::parse_error: return "ParseError";
    case errc::dangling_reference: return "DanglingReference";
    case errc::arithmetic_overflow: return "ArithmeticOverflow";
  }
  return "Error";
}

FinSpace FinSpace::wrap(Data d) {
  d.by_label.clear();
  d.by_label.reserve(d.labels.size());
  for (std::size_t i = 0; i < d.labels.size(); ++i) d.by_label.emplace_back(d.labels[i], i);
  std::sort(d.by_label.begin(), d.by_label.end());
  FinSpace s;
  s.data_ = std::make_shared<const Data>(std::move(d));
  return s;
}

static void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) fail(errc::bad_size, "a space needs at least one point");
  if (labels.size() > kMaxPoints)
    fail(errc::too_large, "at most 64 points supported, got " + std::to_string(labels.size()));
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) fail(errc::duplicate_label, "label '" + *dup + "' repeated");
}

FinSpace FinSpace::build(std::string name, std::vector<std::string> labels,
                         const std::vector<Mask>& opens_in) {
  check_labels(labels);
  const std::size_t n = labels.size();
  const Mask full = n == kMaxPoints ? ~Mask{0} : (Mask{1} << n) - 1;

  std::vector<Mask> opens = opens_in;
  for (Mask m : opens)
    if (!subset(m, full)) fail(errc::unknown_label, "open set mentions a point outside the space");
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  if (opens.size() > 4096)
    fail(errc::search_space_too_large,
         "validating " + std::to_string(opens.size()) + " opens pairwise is off the table");

  if (!std::binary_search(opens.begin(), opens.end(), Mask{0}))
    fail(errc::not_a_topology, "the empty set is missing");
  if (!std::binary_search(opens.begin(), opens.end(), full))
    fail(errc::not_a_topology, "the full point set is missing");
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!std::binary_search(opens.begin(), opens.end(), opens[i] | opens[j]))
        fail(errc::not_a_topology, "union of listed opens #" + std::to_string(i) + " and #" +
                                       std::to_string(j) + " is absent");
      if (!std::binary_search(opens.begin(), opens.end(), opens[i] & opens[j]))
        fail(errc::not_a_topology, "intersection of listed opens #" + std::to_string(i) + " and #" +
                                       std::to_string(j) + " is absent");
    }

  std::vector<Mask> min_open(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    Mask u = full;
    for (Mask m : opens)
      if (has(m, p)) u &= m;
    min_open[p] = u;
  }
  return from_min_open(std::move(name), std::move(labels), std::move(min_open));
}

FinSpace FinSpace::from_min_open(std::string name, std::vector<std::string> labels,
                                 std::vector<Mask> min_open) {
  check_labels(labels);
  if (labels.size() != min_open.size())
    fail(errc::internal_mismatch, "label/table size disagreement");
  const std::size_t n = labels.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (!has(min_open[p], p))
      fail(errc::not_a_topology, "minimal open of '" + labels[p] + "' misses the point");
    for (auto q : bits(min_open[p]))
      if (!subset(min_open[q], min_open[p]))
        fail(errc::not_a_topology, "minimal-open table is not Alexandrov consistent at '" +
                                       labels[p] + "'");
  }
  Data d;
  d.name = std::move(name);
  d.labels = std::move(labels);
  d.min_open = std::move(min_open);
  return wrap(std::move(d));
}

FinSpace FinSpace::discrete(std::string name, std::vector<std::string> labels) {
  std::vector<Mask> mo(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) mo[i] = pt(i);
  return from_min_open(std::move(name), std::move(labels), std::move(mo));
}

FinSpace FinSpace::indiscrete(std::string name, std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  if (n > kMaxPoints) fail(errc::too_large, "too many points");
  const Mask full = n == kMaxPoints ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> mo(n, full);
  return from_min_open(std::move(name), std::move(labels), std::move(mo));
}

std::size_t FinSpace::index(const std::string& label) const {
  const auto& v = data_->by_label;
  auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(label, std::size_t{0}));
  if (it == v.end() || it->first != label)
    fail(errc::unknown_label, "no point '" + label + "' in space '" + name() + "'");
  return it->second;
}

bool FinSpace::is_open(Mask a) const {
  for (auto p : bits(a))
    if (!subset(min_open(p), a)) return false;
  return true;
}

Mask FinSpace::closure(Mask a) const {
  Mask c = 0;
  for (std::size_t p = 0; p < size(); ++p)
    if (min_open(p) & a) c |= pt(p);
  return c;
}

Mask FinSpace::interior(Mask a) const {
  Mask r = 0;
  for (auto p : bits(a))
    if (subset(min_open(p), a)) r |= pt(p);
  return r;
}

Mask FinSpace::hull(Mask a) const {
  Mask r = 0;
  for (auto p : bits(a)) r |= min_open(p);
  return r;
}

bool FinSpace::is_discrete() const {
  for (std::size_t p = 0; p < size(); ++p)
    if (min_open(p) != pt(p)) return false;
  return true;
}

std::vector<Mask> FinSpace::all_opens(std::size_t max_size) const {
  if (size() > max_size)
    fail(errc::search_space_too_large,
         "enumerating opens of a " + std::to_string(size()) + "-point space");
  std::vector<Mask> r;
  const Mask full = this->full();
  for (Mask m = 0;; ++m) {
    if (is_open(m)) r.push_back(m);
    if (m == full) break;
  }
  return r;
}

bool FinSpace::same(const FinSpace& o) const {
  if (data_ == o.data_) return true;
  if (!data_ || !o.data_) return false;
  return data_->labels == o.data_->labels && data_->min_open == o.data_->min_open;
}

void require_same_space(const FinSpace& a, const FinSpace& b, const char* what) {
  if (!a.same(b))
    fail(errc::space_mismatch,
         std::string(what) + ": '" + a.name() + "' vs '" + b.name() + "'");
}

std::vector<std::string> PointSet::to_labels() const {
  std::vector<std::string> r;
  for (auto i : bits(mask)) r.push_back(space.label(i));
  return r;
}

ClIntBd closure_interior_boundary(const FinSpace& s, const PointSet& a) {
  require_same_space(s, a.space, "closure/interior/boundary");
  Mask cl = s.closure(a.mask);
  Mask in = s.interior(a.mask);
  return {PointSet(s, cl), PointSet(s, in), PointSet(s, cl & ~in)};
}

SeparationFlags separation_flags(const FinSpace& s) {
  SeparationFlags f;
  const std::size_t n = s.size();
  f.t0 = true;
  f.hausdorff = true;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      if (s.min_open(p) == s.min_open(q)) f.t0 = false;
      if (s.min_open(p) & s.min_open(q)) f.hausdorff = false;
    }
  // Point p separates from a disjoint closed set C iff U_p misses the hull
  // of C.  The largest closed set avoiding p is the complement of U_p, and
  // hulls are monotone, so that single case decides regularity.
  f.regular = true;
  for (std::size_t p = 0; p < n; ++p) {
    Mask worst = s.full() & ~s.min_open(p);
    if (s.min_open(p) & s.hull(worst)) f.regular = false;
  }
  return f;
}

FinSpace product_space(const FinSpace& s, const FinSpace& t) {
  const std::size_t n = s.size() * t.size();
  if (n > kMaxPoints)
    fail(errc::too_large, "product would have " + std::to_string(n) + " points");
  std::vector<std::string> labels;
  std::vector<Mask> mo(n, 0);
  labels.reserve(n);
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) {
      labels.push_back("(" + s.label(x) + "," + t.label(y) + ")");
      Mask u = 0;
      for (auto xx : bits(s.min_open(x)))
        for (auto yy : bits(t.min_open(y))) u |= pt(pair_index(t, xx, yy));
      mo[pair_index(t, x, y)] = u;
    }
  return FinSpace::from_min_open(s.name() + "*" + t.name(), std::move(labels), std::move(mo));
}

FinSpace disjoint_union(const FinSpace& s, const FinSpace& t) {
  const std::size_t n = s.size() + t.size();
  if (n > kMaxPoints)
    fail(errc::too_large, "sum would have " + std::to_string(n) + " points");
  std::vector<std::string> labels;
  std::vector<Mask> mo;
  labels.reserve(n);
  mo.reserve(n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    labels.push_back("L:" + s.label(i));
    mo.push_back(s.min_open(i));
  }
  for (std::size_t j = 0; j < t.size(); ++j) {
    labels.push_back("R:" + t.label(j));
    mo.push_back(t.min_open(j) << s.size());
  }
  return FinSpace::from_min_open(s.name() + "+" + t.name(), std::move(labels), std::move(mo));
}

FinSpace subspace(const FinSpace& s, Mask members) {
  std::vector<std::size_t> global;
  for (auto i : bits(members)) global.push_back(i);
  std::vector<std::string> labels;
  std::vector<Mask> mo(global.size(), 0);
  for (std::size_t k = 0; k < global.size(); ++k) {
    labels.push_back(s.label(global[k]));
    Mask u = s.min_open(global[k]) & members;
    Mask local = 0;
    for (std::size_t j = 0; j < global.size(); ++j)
      if (has(u, global[j])) local |= pt(j);
    mo[k] = local;
  }
  return FinSpace::from_min_open(s.name() + "|sub", std::move(labels), std::move(mo));
}

Quotient quotient_space(const FinSpace& s, const std::vector<Mask>& classes) {
  const std::size_t n = s.size();
  if (classes.size() > kMaxPoints) fail(errc::too_large, "too many classes");
  Mask seen = 0;
  for (Mask c : classes) {
    if (c == 0) fail(errc::not_a_partition, "empty class");
    if (c & seen) fail(errc::not_a_partition, "classes overlap");
    seen |= c;
  }
  if (seen != s.full()) fail(errc::not_a_partition, "classes do not cover the space");

  std::vector<std::uint8_t> class_of(n, 0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto p : bits(classes[c])) class_of[p] = static_cast<std::uint8_t>(c);

  // Minimal open of class c in the quotient topology: least B containing c
  // whose preimage is open, i.e. the least fixpoint of
  //   B |-> {c} union classes( U_z : z in preimage(B) ).
  auto classes_touched = [&](Mask points) {
    Mask r = 0;
    for (auto p : bits(points)) r |= pt(class_of[p]);
    return r;
  };
  std::vector<Mask> mo(classes.size(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Mask b = pt(c);
    for (;;) {
      Mask pre = 0;
      for (auto cc : bits(b)) pre |= classes[cc];
      Mask grown = b | classes_touched(s.hull(pre));
      if (grown == b) break;
      b = grown;
    }
    mo[c] = b;
  }

  std::vector<std::string> labels;
  for (Mask c : classes) {
    std::string l;
    for (auto p : bits(c)) {
      if (!l.empty()) l += "|";
      l += s.label(p);
    }
    labels.push_back(std::move(l));
  }
  Quotient q;
  q.space = FinSpace::from_min_open(s.name() + "/~", std::move(labels), std::move(mo));
  q.class_of = std::move(class_of);
  return q;
}

} // namespace msplit
