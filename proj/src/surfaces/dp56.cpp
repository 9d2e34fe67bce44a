#include "cfl/surfaces/dp56.hpp"

#include <algorithm>

namespace cfl {

namespace {

int class_index(int degree, const PicVec& v) {
  static thread_local int cached_degree = -1;
  static thread_local std::vector<PicVec> classes;
  if (cached_degree != degree) {
    classes = exceptional_classes(degree);
    cached_degree = degree;
  }
  auto it = std::find(classes.begin(), classes.end(), v);
  if (it == classes.end()) throw Error(ErrorCode::invalid_argument, "not an exceptional class: " + class_to_string(v));
  return static_cast<int>(it - classes.begin());
}

bool proportional(const CycVector& a, const CycVector& b) { return (a[0] * b[1] - a[1] * b[0]).is_zero(); }

// Matrix sending (1:0), (0:1), (1:1) to p, q, r.
std::optional<CycMatrix> frame(const CycVector& p, const CycVector& q, const CycVector& r) {
  CycMatrix m(2, 2);
  m(0, 0) = p[0];
  m(1, 0) = p[1];
  m(0, 1) = q[0];
  m(1, 1) = q[1];
  auto ab = m.solve(r);
  if (!ab || (*ab)[0].is_zero() || (*ab)[1].is_zero()) return std::nullopt;
  for (int i = 0; i < 2; ++i) {
    m(i, 0) = m(i, 0) * (*ab)[0];
    m(i, 1) = m(i, 1) * (*ab)[1];
  }
  return m;
}

}  // namespace

std::vector<int> dp6_hexagon() {
  return {class_index(6, {0, 1, 0, 0}), class_index(6, {1, -1, -1, 0}), class_index(6, {0, 0, 1, 0}),
          class_index(6, {1, 0, -1, -1}), class_index(6, {0, 0, 0, 1}), class_index(6, {1, -1, 0, -1})};
}

Perm dp6_symmetry(int k, bool reflect) {
  auto hex = dp6_hexagon();
  Perm p(6, -1);
  for (int i = 0; i < 6; ++i) p[hex[i]] = hex[(((reflect ? k - i : i + k) % 6) + 6) % 6];
  return p;
}

LatticeIsometry dp6_named(const std::string& name) {
  if (name == "rho") return isometry_from_line_permutation(dp6_symmetry(1, false), 6);
  if (name == "s1") return isometry_from_line_permutation(dp6_symmetry(3, false), 6);
  if (name == "c3") return isometry_from_line_permutation(dp6_symmetry(2, false), 6);
  if (name == "vertex") return isometry_from_line_permutation(dp6_symmetry(1, true), 6);
  if (name == "swap12") return isometry_from_line_permutation(dp6_symmetry(2, true), 6);
  throw Error(ErrorCode::invalid_argument, "unknown degree-6 symmetry " + name);
}

FiniteGroup dp6_symmetry_group() {
  return closure({GroupElement::isometry(dp6_named("rho")), GroupElement::isometry(dp6_named("vertex"))}, 100);
}

bool dp6_minimality(const std::vector<LatticeIsometry>& group) { return invariant_rank(group) == 0; }

bool dp6_fixes_side(const std::vector<LatticeIsometry>& group, int side) {
  const auto classes = exceptional_classes(6);
  const PicVec& v = classes[dp6_hexagon().at(side)];
  return std::all_of(group.begin(), group.end(), [&](const LatticeIsometry& g) { return g.apply(v) == v; });
}

bool dp6_fixes_opposite_pair(const std::vector<LatticeIsometry>& group, int side) {
  const auto classes = exceptional_classes(6);
  auto hex = dp6_hexagon();
  const PicVec& a = classes[hex.at(side)];
  const PicVec& b = classes[hex.at((side + 3) % 6)];
  return std::all_of(group.begin(), group.end(), [&](const LatticeIsometry& g) {
    PicVec x = g.apply(a);
    return x == a || x == b;
  });
}

std::vector<std::pair<int, int>> dp5_pair_labels() {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : exceptional_classes(5)) {
    std::vector<int> idx;
    for (int i = 1; i <= 4; ++i)
      if (c[i] != 0) idx.push_back(i);
    if (c[0] == 0) {
      out.emplace_back(idx[0], 5);
    } else {
      std::vector<int> rest;
      for (int i = 1; i <= 4; ++i)
        if (i != idx[0] && i != idx[1]) rest.push_back(i);
      out.emplace_back(rest[0], rest[1]);
    }
  }
  return out;
}

int dp5_class_index(int i, int j) {
  static const auto labels = dp5_pair_labels();
  std::pair<int, int> key{std::min(i, j), std::max(i, j)};
  auto it = std::find(labels.begin(), labels.end(), key);
  if (it == labels.end()) throw Error(ErrorCode::invalid_argument, "bad pair label");
  return static_cast<int>(it - labels.begin());
}

Perm dp5_class_perm(const Perm& s) {
  if (s.size() != 5) throw Error(ErrorCode::dimension_mismatch, "permutation of five letters expected");
  auto labels = dp5_pair_labels();
  Perm p(10);
  for (int c = 0; c < 10; ++c) p[c] = dp5_class_index(s[labels[c].first - 1] + 1, s[labels[c].second - 1] + 1);
  return p;
}

LatticeIsometry dp5_isometry(const std::string& cycles) {
  return isometry_from_line_permutation(dp5_class_perm(parse_cycles(cycles, 5)), 5);
}

std::vector<LatticeIsometry> dp5_group_isometries(const std::vector<std::string>& gens) {
  std::vector<GroupElement> g;
  for (const auto& c : gens) g.push_back(GroupElement::permutation(parse_cycles(c, 5)));
  FiniteGroup grp = closure(g, 120);
  std::vector<LatticeIsometry> out;
  for (const auto& e : grp.elements()) out.push_back(isometry_from_line_permutation(dp5_class_perm(e.perm()), 5));
  return out;
}

FivePointConfig FivePointConfig::from_values(const std::vector<Cyclotomic>& values) {
  FivePointConfig c;
  for (const auto& v : values) c.pts.push_back({v, Cyclotomic(1)});
  return c;
}

FivePointConfig permute(const FivePointConfig& p, const Perm& s) {
  FivePointConfig q;
  q.pts.resize(p.pts.size());
  for (std::size_t i = 0; i < p.pts.size(); ++i) q.pts.at(s.at(i)) = p.pts[i];
  return q;
}

std::optional<CycMatrix> five_point_equivalent(const FivePointConfig& p, const FivePointConfig& q) {
  if (p.pts.size() != 5 || q.pts.size() != 5) throw Error(ErrorCode::invalid_argument, "five points expected");
  for (const auto* c : {&p, &q})
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (proportional(c->pts[i], c->pts[j])) throw Error(ErrorCode::invalid_argument, "points must be distinct");
  auto fp = frame(p.pts[0], p.pts[1], p.pts[2]);
  auto fq = frame(q.pts[0], q.pts[1], q.pts[2]);
  if (!fp || !fq) return std::nullopt;
  auto inv = fp->inverse();
  if (!inv) return std::nullopt;
  CycMatrix m = *fq * *inv;
  for (int i = 0; i < 5; ++i)
    if (!proportional(m.apply(p.pts[i]), q.pts[i])) return std::nullopt;
  return m;
}

FivePointConfig dp5_p0() {
  std::vector<Cyclotomic> v;
  for (int k : {0, 1, 2, 3, 4}) v.push_back(Cyclotomic::root_of_unity(5, k));
  return FivePointConfig::from_values(v);
}

FivePointConfig dp5_p1() {
  std::vector<Cyclotomic> v;
  for (int k : {0, 3, 1, 4, 2}) v.push_back(Cyclotomic::root_of_unity(5, k));
  return FivePointConfig::from_values(v);
}

}  // namespace cfl
