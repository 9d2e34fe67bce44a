#include "cfl/surfaces/projective.hpp"

#include <numeric>

namespace cfl {

namespace {

// Order of c as a root of unity, or 0.
long root_order(const Cyclotomic& c) {
  long m = std::lcm(2L, static_cast<long>(c.conductor()));
  long e = c.root_of_unity_exponent(static_cast<int>(m));
  if (e < 0) return 0;
  return m / std::gcd(m, e);
}

bool is_scalar(const CycMatrix& m, Cyclotomic* c) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  for (std::size_t i = 1; i < m.rows(); ++i)
    if (m(i, i) != m(0, 0)) return false;
  *c = m(0, 0);
  return true;
}

}  // namespace

std::vector<Eigenspace> eigenspaces(const CycMatrix& g) {
  if (!g.square()) throw Error(ErrorCode::dimension_mismatch, "eigenspaces of a non-square matrix");
  const std::size_t n = g.rows();
  CycMatrix p = g;
  Cyclotomic c;
  long k = 1;
  while (!is_scalar(p, &c)) {
    if (++k > 2000) throw Error(ErrorCode::unsupported, "matrix has no scalar power of order <= 2000");
    p = p * g;
  }
  long r = root_order(c);
  if (r == 0) throw Error(ErrorCode::unsupported, "scalar power is not a root of unity: " + c.to_string());
  const long l = k * r;
  std::vector<Eigenspace> out;
  std::size_t total = 0;
  for (long j = 0; j < l && total < n; ++j) {
    Cyclotomic lambda = Cyclotomic::root_of_unity(static_cast<int>(l), j);
    if (lambda.pow(k) != c) continue;
    CycMatrix shifted = g - CycMatrix::identity(n).scaled(lambda);
    auto ns = shifted.nullspace();
    if (ns.empty()) continue;
    total += ns.size();
    out.push_back({lambda, std::move(ns)});
  }
  if (total != n) throw Error(ErrorCode::inconsistent, "eigenspaces do not span (matrix not diagonalizable?)");
  return out;
}

std::vector<CommonEigenspace> common_eigenspaces(const std::vector<CycMatrix>& gens) {
  if (gens.empty()) throw Error(ErrorCode::invalid_argument, "common_eigenspaces needs generators");
  const std::size_t n = gens.front().rows();
  std::vector<CommonEigenspace> cur(1);
  for (std::size_t i = 0; i < n; ++i) {
    CycVector e(n, Cyclotomic(0));
    e[i] = Cyclotomic(1);
    cur[0].basis.push_back(std::move(e));
  }
  for (const auto& g : gens) {
    auto eig = eigenspaces(g);
    std::vector<CommonEigenspace> next;
    for (const auto& s : cur)
      for (const auto& e : eig) {
        auto inter = intersect_subspaces(s.basis, e.basis, n);
        if (inter.empty()) continue;
        CommonEigenspace c{std::move(inter), s.characters};
        c.characters.push_back(e.value);
        next.push_back(std::move(c));
      }
    cur = std::move(next);
  }
  return cur;
}

const char* p2_fixed_kind_name(P2FixedKind k) noexcept {
  switch (k) {
    case P2FixedKind::none: return "none";
    case P2FixedKind::one_point: return "one_point";
    case P2FixedKind::three_points: return "three_points";
    case P2FixedKind::line_plus_point: return "line_plus_point";
    case P2FixedKind::all_points: return "all_points";
  }
  return "?";
}

bool fixes_point(const CycMatrix& g, const CycVector& p) {
  CycVector gp = g.apply(p);
  return normalized_projective(gp) == normalized_projective(p);
}

P2FixedStructure p2_fixed_structure(const FiniteGroup& g) {
  std::vector<CycMatrix> gens;
  for (const auto& e : g.generators()) {
    if (e.mat().rows() != 3) throw Error(ErrorCode::dimension_mismatch, "p2_fixed_structure needs 3x3 matrices");
    gens.push_back(e.mat());
  }
  auto spaces = common_eigenspaces(gens);
  P2FixedStructure out;
  std::vector<std::size_t> dims;
  for (const auto& s : spaces) {
    dims.push_back(s.dim());
    if (s.dim() == 1) out.points.push_back(normalized_projective(s.basis[0]));
    if (s.dim() == 2) out.lines.push_back(s.basis);
  }
  std::sort(dims.begin(), dims.end());
  if (dims.empty())
    out.kind = P2FixedKind::none;
  else if (dims == std::vector<std::size_t>{3})
    out.kind = P2FixedKind::all_points;
  else if (dims == std::vector<std::size_t>{1, 2})
    out.kind = P2FixedKind::line_plus_point;
  else if (dims == std::vector<std::size_t>{1, 1, 1})
    out.kind = P2FixedKind::three_points;
  else if (dims == std::vector<std::size_t>{1})
    out.kind = P2FixedKind::one_point;
  else
    throw Error(ErrorCode::inconsistent, "impossible common eigenspace pattern for a finite group on P^2");
  for (const auto& e : g.elements()) {
    for (const auto& p : out.points)
      if (!fixes_point(e.mat(), p)) throw Error(ErrorCode::inconsistent, "fixed-point witness not fixed by the group");
    for (const auto& l : out.lines)
      for (const auto& p : l)
        if (!fixes_point(e.mat(), p)) throw Error(ErrorCode::inconsistent, "fixed-line witness not fixed pointwise");
  }
  return out;
}

FiniteGroup gl2_to_aut_p2(const FiniteGroup& g) {
  std::vector<GroupElement> gens;
  for (const auto& e : g.generators()) {
    const auto& a = e.mat();
    if (a.rows() != 2) throw Error(ErrorCode::dimension_mismatch, "gl2_to_aut_p2 needs 2x2 matrices");
    CycMatrix b = CycMatrix::identity(3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) b(i, j) = a(i, j);
    gens.push_back(GroupElement::projective(b));
  }
  return closure(gens, g.order() + 1);
}

Subset stabilizer_subset(const FiniteGroup& g, const CycVector& p) {
  Subset s;
  for (int i = 0; i < g.order(); ++i)
    if (fixes_point(g.element(i).mat(), p)) s.push_back(i);
  return s;
}

FiniteGroup stabilizer(const FiniteGroup& g, const CycVector& p) { return g.subgroup(stabilizer_subset(g, p)); }

namespace {

Cyclotomic bracket(const CycVector& a, const CycVector& b) { return a.at(0) * b.at(1) - a.at(1) * b.at(0); }

}  // namespace

Cyclotomic cross_ratio(const std::vector<CycVector>& pts) {
  if (pts.size() != 4) throw Error(ErrorCode::invalid_argument, "cross ratio needs four points");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (bracket(pts[i], pts[j]).is_zero()) throw Error(ErrorCode::invalid_argument, "coincident points");
  return bracket(pts[0], pts[2]) * bracket(pts[1], pts[3]) / (bracket(pts[0], pts[3]) * bracket(pts[1], pts[2]));
}

Cyclotomic j_from_four_points(const std::vector<CycVector>& pts) {
  Cyclotomic l = cross_ratio(pts);
  Cyclotomic num = (l * l - l + Cyclotomic(1)).pow(3) * Cyclotomic(256);
  Cyclotomic den = l * l * (l - Cyclotomic(1)) * (l - Cyclotomic(1));
  return num / den;
}

Cyclotomic j_from_four_values(const std::vector<Cyclotomic>& values) {
  std::vector<CycVector> pts;
  for (const auto& v : values) pts.push_back({v, Cyclotomic(1)});
  return j_from_four_points(pts);
}

BinaryForm restrict_to_line(const ParamPoly& f, const std::vector<std::size_t>& coords, const CycVector& p,
                            const CycVector& q) {
  if (p.size() != coords.size() || q.size() != coords.size())
    throw Error(ErrorCode::dimension_mismatch, "restrict_to_line: point size");
  auto uv = std::make_shared<VarUniverse>(std::vector<std::string>{"u", "v"});
  ParamPoly u = ParamPoly::variable(uv, 0), v = ParamPoly::variable(uv, 1);
  std::vector<ParamPoly> images(f.vars()->size(), ParamPoly(uv));
  std::vector<bool> is_coord(f.vars()->size(), false);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    images[coords[i]] = u.scaled(p[i]) + v.scaled(q[i]);
    is_coord[coords[i]] = true;
  }
  for (const auto& [e, c] : f.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] && !is_coord[i]) throw Error(ErrorCode::unsupported, "restrict_to_line: polynomial has free parameters");
  ParamPoly r = f.compose(images);
  int n = f.degree_in(coords);
  BinaryForm bf;
  bf.n = n;
  bf.coeffs.assign(n + 1, Cyclotomic(0));
  for (const auto& [e, c] : r.terms()) {
    if (e[0] + e[1] != n) throw Error(ErrorCode::invalid_argument, "restrict_to_line: polynomial is not homogeneous");
    bf.coeffs[e[0]] = c;
  }
  return bf;
}

Cyclotomic evaluate_at(const ParamPoly& f, const std::vector<std::size_t>& coords, const CycVector& v) {
  std::vector<Cyclotomic> pt(f.vars()->size(), Cyclotomic(0));
  for (std::size_t i = 0; i < coords.size(); ++i) pt[coords[i]] = v.at(i);
  return f.evaluate(pt);
}

std::string point_to_string(const CycVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ":" : "") + v[i].to_string();
  return s + ")";
}

std::string point_key(const CycVector& v) {
  std::string s;
  for (const auto& x : normalized_projective(v)) x.minimized().append_key(s);
  return s;
}

}  // namespace cfl
