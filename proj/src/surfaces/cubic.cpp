#include "cfl/surfaces/cubic.hpp"

#include <map>

#include "cfl/surfaces/projective.hpp"

namespace cfl {

namespace {

std::shared_ptr<const VarUniverse> cubic_universe() {
  static const auto u = std::make_shared<const VarUniverse>(std::vector<std::string>{"t0", "t1", "t2", "t3", "a", "b"});
  return u;
}

const std::vector<std::size_t> kCoords{0, 1, 2, 3};

CycMatrix columns(const std::vector<CycVector>& cols) {
  CycMatrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return m;
}

CycVector neg(CycVector v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

CubicModel cubic_family() {
  auto u = cubic_universe();
  return {ParamPoly::parse("t0^3 + t1^3 + t2^3 + t3^3 + t0*t1*(a*t2 + b*t3)", u), kCoords, {}};
}

CubicModel cubic_specialization(const Cyclotomic& a, const Cyclotomic& b) {
  CubicModel m = cubic_family();
  m.F = m.F.specialize("a", a).specialize("b", b);
  if (a.is_zero() && b.is_zero()) m.lines = fermat_lines();
  return m;
}

CubicModel fermat_cubic() { return cubic_specialization(Cyclotomic(0), Cyclotomic(0)); }

std::vector<Line> fermat_lines() {
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  auto f = ParamPoly::parse("t0^3 + t1^3 + t2^3 + t3^3", cubic_universe());
  std::vector<Line> out;
  for (const auto& pr : pairings)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        Line l{CycVector(4, Cyclotomic(0)), CycVector(4, Cyclotomic(0))};
        l.p[pr[0]] = -Cyclotomic::root_of_unity(3, a);
        l.p[pr[1]] = Cyclotomic(1);
        l.q[pr[2]] = -Cyclotomic::root_of_unity(3, b);
        l.q[pr[3]] = Cyclotomic(1);
        if (!line_lies_on(f, kCoords, l)) throw Error(ErrorCode::inconsistent, "constructed line not on the Fermat cubic");
        out.push_back(std::move(l));
      }
  return out;
}

bool line_lies_on(const ParamPoly& f, const std::vector<std::size_t>& coords, const Line& l) {
  auto bf = restrict_to_line(f, coords, l.p, l.q);
  for (const auto& c : bf.coeffs)
    if (!c.is_zero()) return false;
  return true;
}

bool lines_meet(const Line& a, const Line& b) { return columns({a.p, a.q, b.p, b.q}).determinant().is_zero(); }

bool point_on_line(const CycVector& x, const Line& l) { return columns({l.p, l.q, x}).rank() == 2; }

std::optional<CycVector> line_intersection(const Line& a, const Line& b) {
  auto ns = columns({a.p, a.q, neg(b.p), neg(b.q)}).nullspace();
  if (ns.size() != 1) return std::nullopt;
  CycVector x(a.p.size(), Cyclotomic(0));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = ns[0][0] * a.p[i] + ns[0][1] * a.q[i];
  return normalized_projective(x);
}

std::vector<std::vector<int>> line_incidence(const std::vector<Line>& lines) {
  const std::size_t n = lines.size();
  std::vector<std::vector<int>> inc(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) inc[i][j] = inc[j][i] = lines_meet(lines[i], lines[j]) ? 1 : 0;
  return inc;
}

std::vector<CycVector> eckardt_points(const std::vector<Line>& lines) {
  std::map<std::string, CycVector> candidates;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (!lines_meet(lines[i], lines[j])) continue;
      auto x = line_intersection(lines[i], lines[j]);
      if (x) candidates.emplace(point_key(*x), *x);
    }
  std::vector<CycVector> out;
  for (const auto& [key, x] : candidates) {
    int through = 0;
    for (const auto& l : lines) through += point_on_line(x, l) ? 1 : 0;
    if (through > 3) throw Error(ErrorCode::inconsistent, "point on more than three lines: " + point_to_string(x));
    if (through == 3) out.push_back(x);
  }
  return out;
}

bool preserves_surface(const ParamPoly& f, const std::vector<std::size_t>& coords, const CycMatrix& m) {
  Cyclotomic c;
  return f.substitute(coords, m).proportional_to(f, &c);
}

Perm action_on_lines(const CycMatrix& m, const CubicModel& model) {
  if (!preserves_surface(model.F, model.coords, m))
    throw Error(ErrorCode::invalid_argument, "transformation does not preserve the surface");
  Perm perm(model.lines.size(), -1);
  for (std::size_t i = 0; i < model.lines.size(); ++i) {
    CycVector p = m.apply(model.lines[i].p), q = m.apply(model.lines[i].q);
    for (std::size_t j = 0; j < model.lines.size(); ++j)
      if (point_on_line(p, model.lines[j]) && point_on_line(q, model.lines[j])) {
        perm[i] = static_cast<int>(j);
        break;
      }
    if (perm[i] < 0) throw Error(ErrorCode::invalid_argument, "image of a line is not in the line set");
  }
  if (perm_compose(perm_inverse(perm), perm) != perm_identity(static_cast<int>(perm.size())))
    throw Error(ErrorCode::inconsistent, "line action is not a permutation");
  return perm;
}

std::vector<Perm> line_actions(const FiniteGroup& g, const CubicModel& model) {
  std::vector<GroupElement> images;
  for (const auto& e : g.generators()) images.push_back(GroupElement::permutation(action_on_lines(e.mat(), model)));
  FiniteGroup target = closure(images, g.order());
  auto idx = homomorphism_images(g, images, target);
  std::vector<Perm> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(target.element(i).perm());
  return out;
}

std::vector<GroupElement> fermat_automorphism_generators() {
  CycMatrix d = CycMatrix::identity(4);
  d(0, 0) = Cyclotomic::root_of_unity(3, 1);
  CycMatrix s(4, 4), c(4, 4);
  s(0, 1) = s(1, 0) = s(2, 2) = s(3, 3) = Cyclotomic(1);
  for (int i = 0; i < 4; ++i) c((i + 1) % 4, i) = Cyclotomic(1);
  return {GroupElement::projective(d), GroupElement::projective(s), GroupElement::projective(c)};
}

FiniteGroup fermat_automorphism_group() { return closure(fermat_automorphism_generators(), 1000); }

LineMarking mark_lines(const std::vector<Line>& lines) {
  if (lines.size() != 27) throw Error(ErrorCode::invalid_argument, "marking needs 27 lines");
  auto inc = line_incidence(lines);
  LineMarking mk;
  std::vector<int> cur;
  auto search = [&](auto&& self, int start) -> bool {
    if (cur.size() == 6) return true;
    for (int i = start; i < 27; ++i) {
      bool ok = true;
      for (int j : cur) ok = ok && inc[i][j] == 0;
      if (!ok) continue;
      cur.push_back(i);
      if (self(self, i + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (!search(search, 0)) throw Error(ErrorCode::inconsistent, "no six disjoint lines");
  mk.sixer = cur;

  PicLattice lat(3);
  const auto classes = exceptional_classes(3);
  mk.class_of_line.assign(27, -1);
  for (int i = 0; i < 27; ++i) {
    std::vector<int> sig;
    for (int a : mk.sixer) sig.push_back(a == i ? -1 : inc[i][a]);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      bool ok = true;
      for (int k = 0; k < 6 && ok; ++k) ok = lat.dot(classes[c], lat.e(k + 1)) == sig[k];
      if (!ok) continue;
      if (mk.class_of_line[i] >= 0) throw Error(ErrorCode::inconsistent, "ambiguous marking");
      mk.class_of_line[i] = static_cast<int>(c);
    }
    if (mk.class_of_line[i] < 0) throw Error(ErrorCode::inconsistent, "line with no matching class");
  }
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j) {
      int want = i == j ? -1 : inc[i][j];
      if (lat.dot(classes[mk.class_of_line[i]], classes[mk.class_of_line[j]]) != want)
        throw Error(ErrorCode::inconsistent, "marking does not preserve intersections");
    }
  return mk;
}

LatticeIsometry cubic_isometry(const Perm& line_perm, const LineMarking& marking) {
  std::vector<int> cp(27, -1);
  for (int i = 0; i < 27; ++i) cp[marking.class_of_line[i]] = marking.class_of_line[line_perm[i]];
  return isometry_from_line_permutation(cp, 3);
}

std::vector<Cyclotomic> eigenvalue_list(const CycMatrix& m) {
  std::vector<Cyclotomic> ev;
  for (const auto& e : eigenspaces(m))
    for (std::size_t k = 0; k < e.basis.size(); ++k) ev.push_back(e.value);
  return ev;
}

bool eigenvalues_match(const CycMatrix& m, const std::vector<int>& row_z6) {
  return eigenvalues_match(eigenvalue_list(m), row_z6);
}

bool eigenvalues_match(const std::vector<Cyclotomic>& ev, const std::vector<int>& row_z6) {
  if (ev.size() != row_z6.size()) return false;
  for (int sign : {1, -1}) {
    std::vector<Cyclotomic> row;
    for (int e : row_z6) row.push_back(Cyclotomic::root_of_unity(6, ((sign * e) % 6 + 6) % 6));
    for (const auto& r : row) {
      Cyclotomic c = r / ev[0];
      std::vector<bool> used(row.size(), false);
      bool all = true;
      for (const auto& l : ev) {
        Cyclotomic x = c * l;
        bool found = false;
        for (std::size_t k = 0; k < row.size() && !found; ++k)
          if (!used[k] && row[k] == x) used[k] = found = true;
        if (!found) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
  }
  return false;
}

const std::vector<CubicTraceRow>& cubic_trace_table() {
  // z6 exponents: 1 -> 0, -1 -> 3, e -> 2, e^2 -> 4, -e -> 5.
  static const std::vector<CubicTraceRow> rows{
      {{0, 0, 0, 0}, 6}, {{0, 0, 0, 3}, -2}, {{0, 0, 3, 3}, 2}, {{0, 0, 0, 2}, -3}, {{0, 0, 2, 2}, 3},
      {{0, 0, 2, 4}, 0}, {{0, 0, 2, 5}, 1},  {{0, 3, 2, 2}, 1}, {{0, 3, 2, 5}, -1}, {{0, 3, 2, 4}, -2},
  };
  return rows;
}

std::string eigen_row_to_string(const std::vector<int>& row_z6) {
  static const char* names[6] = {"1", "-e^2", "e", "-1", "e^2", "-e"};
  std::string s = "(";
  for (std::size_t i = 0; i < row_z6.size(); ++i) s += (i ? "," : "") + std::string(names[((row_z6[i] % 6) + 6) % 6]);
  return s + ")";
}

}  // namespace cfl
