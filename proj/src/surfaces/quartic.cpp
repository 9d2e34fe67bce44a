#include "cfl/surfaces/quartic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cfl/error.hpp"
#include "cfl/exact/upoly.hpp"
#include "cfl/groups/catalog.hpp"
#include "cfl/surfaces/projective.hpp"

namespace cfl {

namespace {

constexpr int kRank = 7;  // rank of the complement of K in degree 2

CycMatrix m2(Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d) { return CycMatrix{{a, b}, {c, d}}; }
Cyclotomic zi() { return Cyclotomic::root_of_unity(4, 1); }

FiniteGroup matrix_group(const std::vector<CycMatrix>& gens) {
  std::vector<GroupElement> e;
  for (const auto& g : gens) e.push_back(GroupElement::matrix(g));
  return closure(e, 1000);
}

// Principal square root of a root of unity zeta_m^e (m minimal): zeta_2m^e.
Cyclotomic principal_sqrt(const Cyclotomic& x) {
  for (int m = 1; m <= 720; ++m) {
    long e = x.root_of_unity_exponent(m);
    if (e >= 0) return Cyclotomic::root_of_unity(2 * m, e);
  }
  throw Error(ErrorCode::unsupported, "multiplier is not a root of unity");
}

void require_concrete(const QuarticModel& m) {
  if (quartic_has_parameters(m)) throw Error(ErrorCode::unsupported, "quartic has symbolic parameters");
}

BinaryForm binary(const ParamPoly& f) {
  return restrict_to_line(f, quartic_coords(), CycVector{1, 0, 0}, CycVector{0, 1, 0});
}

BinaryForm on_line(const QuarticModel& m, const std::vector<CycVector>& basis) {
  return restrict_to_line(m.F, quartic_coords(), basis.at(0), basis.at(1));
}

bool preserves_forms(const ParamPoly& f2, const ParamPoly& f4, const CycMatrix& a) {
  static const std::vector<std::size_t> c2{0, 1};
  return f2.substitute(c2, a) == f2 && f4.substitute(c2, a) == f4;
}

Group product_cyclic_times_two(int n) {
  Perm cyc(n + 2), tr(n + 2);
  for (int i = 0; i < n + 2; ++i) cyc[i] = tr[i] = i;
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::swap(tr[n], tr[n + 1]);
  return closure({GroupElement::permutation(cyc), GroupElement::permutation(tr)}, 1000).table();
}

}  // namespace

std::shared_ptr<const VarUniverse> quartic_universe() {
  static const auto u =
      std::make_shared<const VarUniverse>(std::vector<std::string>{"t0", "t1", "t2", "a", "b", "c", "d"});
  return u;
}

const std::vector<std::size_t>& quartic_coords() {
  static const std::vector<std::size_t> c{0, 1, 2};
  return c;
}

QuarticModel quartic_from_forms(const std::string& f2, const std::string& f4) {
  auto u = quartic_universe();
  QuarticModel m{ParamPoly(u), ParamPoly::parse(f2, u), ParamPoly::parse(f4, u)};
  if (m.f2.degree_in({2}) > 0 || m.f4.degree_in({2}) > 0)
    throw Error(ErrorCode::invalid_argument, "f2 and f4 must not involve t2");
  ParamPoly t2 = ParamPoly::variable(u, 2);
  m.F = t2.pow(4) + (m.f2 * t2.pow(2)).scaled(2) + m.f4;
  return m;
}

QuarticModel quartic_family() {
  return quartic_from_forms("a*t0^2 + b*t0*t1 + c*t1^2", "t0^4 + d*t0^2*t1^2 + t1^4");
}

QuarticModel quartic_specialize(const QuarticModel& m, const std::vector<std::pair<std::string, std::string>>& subs) {
  auto u = quartic_universe();
  QuarticModel r = m;
  for (const auto& [name, value] : subs) {
    int idx = u->find(name);
    if (idx < 3) throw Error(ErrorCode::invalid_argument, "not a quartic parameter: " + name);
    std::vector<ParamPoly> images;
    for (std::size_t i = 0; i < u->size(); ++i)
      images.push_back(static_cast<int>(i) == idx ? ParamPoly::parse(value, u) : ParamPoly::variable(u, i));
    r.F = r.F.compose(images);
    r.f2 = r.f2.compose(images);
    r.f4 = r.f4.compose(images);
  }
  return r;
}

bool quartic_has_parameters(const QuarticModel& m) {
  for (const auto& [e, c] : m.F.terms())
    for (std::size_t i = 3; i < e.size(); ++i)
      if (e[i]) return true;
  return false;
}

ParamPoly bitangent_pencil(const QuarticModel& m) { return m.f4 - m.f2 * m.f2; }

bool quartic_is_smooth(const QuarticModel& m) {
  require_concrete(m);
  BinaryForm f4 = binary(m.f4), h = binary(bitangent_pencil(m));
  return !f4.is_zero() && !h.is_zero() && f4.distinct_zero_count() == 4 && h.distinct_zero_count() == 4;
}

std::optional<Cyclotomic> quartic_multiplier(const QuarticModel& m, const CycMatrix& g) {
  Cyclotomic c;
  if (!m.F.substitute(quartic_coords(), g).proportional_to(m.F, &c)) return std::nullopt;
  return c;
}

CycMatrix gl2_block(const CycMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorCode::dimension_mismatch, "gl2_block: 2x2 matrix expected");
  CycMatrix r(3, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = a(i, j);
  r(2, 2) = Cyclotomic(1);
  return r;
}

FixedLocus quartic_fixed_locus(const CycMatrix& g, int lift_sign, const QuarticModel& m) {
  require_concrete(m);
  if (lift_sign != 1 && lift_sign != -1) throw Error(ErrorCode::invalid_argument, "lift sign must be +1 or -1");
  auto lambda = quartic_multiplier(m, g);
  if (!lambda) throw Error(ErrorCode::not_invariant, "transformation does not preserve B");
  Cyclotomic k = principal_sqrt(*lambda);
  if (lift_sign < 0) k = -k;
  FixedLocus fl;
  for (const auto& es : eigenspaces(g)) {
    // Points over the eigenspace: (t, t3) ~ (s t, s^2 t3) is fixed when t3 = 0 or k = s^2.
    bool pointwise = k == es.value * es.value;
    if (es.basis.size() == 3) {
      if (pointwise) throw Error(ErrorCode::invalid_argument, "lift is the identity");
      fl.curve_genera.push_back(3);
      continue;
    }
    if (es.basis.size() == 2) {
      BinaryForm r = on_line(m, es.basis);
      if (r.is_zero() || r.distinct_zero_count() != 4)
        throw Error(ErrorCode::unsupported, "fixed line is not transversal to B");
      if (pointwise)
        fl.curve_genera.push_back(1);
      else
        fl.s += 4;
      continue;
    }
    if (evaluate_at(m.F, quartic_coords(), es.basis[0]).is_zero())
      fl.s += 1;
    else if (pointwise)
      fl.s += 2;
  }
  return fl;
}

int branch_fixed_point_count(const CycMatrix& g, const QuarticModel& m) {
  require_concrete(m);
  int n = 0;
  for (const auto& es : eigenspaces(g)) {
    if (es.basis.size() == 3) throw Error(ErrorCode::invalid_argument, "transformation is scalar");
    if (es.basis.size() == 2) {
      BinaryForm r = on_line(m, es.basis);
      if (r.is_zero()) throw Error(ErrorCode::inconsistent, "line contained in B");
      n += r.distinct_zero_count();
    } else if (evaluate_at(m.F, quartic_coords(), es.basis[0]).is_zero()) {
      ++n;
    }
  }
  return n;
}

std::vector<Table2Row> table2_rows() {
  const Cyclotomic i = zi(), o(0), l(1);
  CycMatrix minus = m2(-1, o, o, -1), refl = m2(l, o, o, -1), swap = m2(o, l, l, o);
  CycMatrix scal = m2(i, o, o, i), di = m2(i, o, o, l), id = m2(l, o, o, i);
  // Order-3 symmetry of the tetrahedral quartic, scaled to preserve it exactly.
  CycMatrix u = parse_matrix_literal("[z4(-1/2 -1/2), z4(-1/2 -1/2); z4(1/2 -1/2), z4(-1/2 1/2)]")
                    .scaled(Cyclotomic::root_of_unity(3, 2));
  return {
      {"any d", "a-c, a, c != 0, b = 0", "2^2", {{"b", "0"}}, {refl, minus}},
      {"any d", "a = c != 0, b = 0", "D8", {{"c", "a"}, {"b", "0"}}, {swap, refl}},
      {"d = 0", "a = b = 0, c != 0", "4x2", {{"d", "0"}, {"a", "0"}, {"b", "0"}}, {di, minus}},
      {"d != 0, d^2 != -12", "0", "4.2^2", {{"a", "0"}, {"b", "0"}, {"c", "0"}}, {scal, refl, swap}},
      {"d^2 = -12", "0", "4.A4",
       {{"a", "0"}, {"b", "0"}, {"c", "0"}, {"d", "2 + 4*z3"}},
       {scal, m2(i, o, o, -i), m2(o, l, -1, o), u}},
      {"d = 0", "0", "4.D8", {{"a", "0"}, {"b", "0"}, {"c", "0"}, {"d", "0"}}, {di, id, swap}},
  };
}

Table2Check table2_check(const Table2Row& row, const std::vector<Table2Row>& pool) {
  Table2Check out;
  QuarticModel m = quartic_specialize(quartic_family(), row.constraints);
  out.invariant = std::all_of(row.generators.begin(), row.generators.end(),
                              [&](const CycMatrix& a) { return preserves_forms(m.f2, m.f4, a); });
  FiniteGroup g = matrix_group(row.generators);
  auto label = is_cyclic(g.table()) ? std::nullopt : Catalog::builtin().try_identify(g.table());
  out.computed_label = label ? *label : group_label(g.table());
  out.identified = label && *label == row.label;
  out.maximal = true;
  std::set<std::string> seen;
  for (const auto& other : pool) {
    FiniteGroup h = matrix_group(other.generators);
    for (const auto& e : h.elements()) {
      if (g.find(e) >= 0 || !seen.insert(e.key(e.conductor())).second) continue;
      if (preserves_forms(m.f2, m.f4, e.mat())) {
        out.maximal = false;
        out.violations.push_back(e.to_string());
      }
    }
  }
  return out;
}

bool table2_verify(const Table2Row& row) { return table2_check(row, table2_rows()).ok(); }

std::vector<DP2BCase> dp2b_cases() {
  auto rows = table2_rows();
  return {
      {"2B.1", {{"a", "2"}, {"b", "0"}, {"c", "2"}, {"d", "1"}}, rows[1].generators, {"D8"}},
      {"2B.2", {{"a", "0"}, {"b", "0"}, {"c", "2"}, {"d", "0"}}, rows[2].generators, {"4x2"}},
      {"2B.3", {{"a", "0"}, {"b", "0"}, {"c", "0"}, {"d", "1"}}, rows[3].generators, {"4.2^2", "Q8"}},
      {"2B.4", rows[4].constraints, rows[4].generators, {"4.A4", "2.A4"}},
      {"2B.5", rows[5].constraints, rows[5].generators, {"4.D8", "4^2"}},
  };
}

DP2BResult dp2b_classify(const DP2BCase& c) {
  DP2BResult r{quartic_specialize(quartic_family(), c.constraints), matrix_group(c.generators), {}, {}};
  if (!quartic_is_smooth(r.model)) throw Error(ErrorCode::invalid_argument, c.name + ": sample quartic is singular");
  for (const auto& e : r.group.elements()) {
    if (e.is_identity()) {
      r.traces.push_back(kRank);
      continue;
    }
    r.traces.push_back(trace_from_fixed_locus(quartic_fixed_locus(gl2_block(e.mat()), 1, r.model)));
  }
  r.verdicts = classify_by_traces(r.group.table(), r.traces, kRank);
  return r;
}

std::vector<DP2ACurve> dp2a_curves() {
  const Cyclotomic i = zi(), o(0), l(1);
  std::vector<CycMatrix> fermat{
      CycMatrix{{i, o, o}, {o, l, o}, {o, o, l}},
      CycMatrix{{l, o, o}, {o, i, o}, {o, o, l}},
      CycMatrix{{o, l, o}, {l, o, o}, {o, o, l}},
      CycMatrix{{o, l, o}, {o, o, l}, {l, o, o}},
  };
  auto rows = table2_rows();
  std::vector<CycMatrix> tetra;
  for (const auto& a : rows[4].generators) tetra.push_back(gl2_block(a));
  return {
      {"fermat", quartic_from_forms("0", "t0^4 + t1^4"), fermat, 96},
      {"tetrahedral", quartic_from_forms("0", "t0^4 + (2 + 4*z3)*t0^2*t1^2 + t1^4"), tetra, 48},
  };
}

DP2AResult dp2a_classify(const DP2ACurve& c) {
  if (!quartic_is_smooth(c.model)) throw Error(ErrorCode::invalid_argument, c.name + ": quartic is singular");
  std::vector<GroupElement> gens, lin_gens;
  for (const auto& g : c.generators) {
    if (!quartic_multiplier(c.model, g)) throw Error(ErrorCode::not_invariant, c.name + ": generator moves B");
    gens.push_back(GroupElement::projective(g));
    lin_gens.push_back(GroupElement::matrix(g));
  }
  DP2AResult r{closure(gens, 1000), {}, {}};
  // Finite-order linear representatives (projective normalization can lose that).
  FiniteGroup lin = closure(lin_gens, 20000);
  std::vector<CycMatrix> rep(r.aut.order());
  for (const auto& e : lin.elements()) {
    int k = r.aut.find(GroupElement::projective(e.mat()));
    if (rep[k].rows() == 0) rep[k] = e.mat();
  }
  if (r.aut.order() != c.expected_order)
    throw Error(ErrorCode::inconsistent, c.name + ": automorphism group has order " + std::to_string(r.aut.order()));
  const Group& t = r.aut.table();

  // Cyclic subgroups with their fixed points on B; a point's stabilizer is
  // cyclic, so N(C) = sum of E(D) over cyclic D containing C.
  std::map<Subset, int> gen_of;
  for (int x = 1; x < t.order(); ++x) {
    Subset s{0};
    for (int y = x; y != 0; y = t.mul(y, x)) s.push_back(y);
    std::sort(s.begin(), s.end());
    gen_of.emplace(s, x);
  }
  std::vector<Subset> cyc;
  for (const auto& [s, x] : gen_of) cyc.push_back(s);
  std::sort(cyc.begin(), cyc.end(), [](const Subset& a, const Subset& b) { return a.size() > b.size(); });
  std::map<Subset, int> exact;
  for (const auto& s : cyc) {
    int n = branch_fixed_point_count(rep[gen_of[s]], c.model);
    for (const auto& [d, e] : exact)
      if (d.size() > s.size() && std::includes(d.begin(), d.end(), s.begin(), s.end())) n -= e;
    if (n < 0) throw Error(ErrorCode::inconsistent, "negative fixed point count");
    exact[s] = n;
  }

  std::map<int, BranchStabilizer> by_order;
  std::map<int, RamifiedGroup> groups;
  for (const auto& [s, e] : exact) {
    if (e == 0) continue;
    int n = static_cast<int>(s.size());
    auto& b = by_order[n];
    b.order = n;
    b.points += e;
    for (int m = 2; m <= n; m += 2) {
      if (n % m || groups.count(m)) continue;
      RamifiedGroup g{m, Catalog::builtin().identify(product_cyclic_times_two(m)), 0};
      int x = t.power(gen_of.at(s), n / m);
      for (int k = 0, y = 0; k < m; ++k, y = t.mul(y, x))
        for (int sign : {1, -1})
          g.trace_sum += y == 0 ? (sign > 0 ? kRank : trace_from_fixed_locus(quartic_fixed_locus(rep[0], -1, c.model)))
                                : trace_from_fixed_locus(quartic_fixed_locus(rep[y], sign, c.model));
      groups[m] = g;
    }
  }
  for (auto& [n, b] : by_order) r.stabilizers.push_back(b);
  for (auto& [n, g] : groups) r.groups.push_back(g);
  return r;
}

}  // namespace cfl
