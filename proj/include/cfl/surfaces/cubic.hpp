#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfl/exact/matrix.hpp"
#include "cfl/exact/param_poly.hpp"
#include "cfl/groups/element.hpp"
#include "cfl/lattice/lattice.hpp"

namespace cfl {

/// A line in P^3 spanned by two points.
struct Line {
  CycVector p, q;
};

struct CubicModel {
  ParamPoly F;
  std::vector<std::size_t> coords;  // indices of t0..t3 in F's universe
  std::vector<Line> lines;          // filled for parameter-free models only
};

/// t0^3 + t1^3 + t2^3 + t3^3 + t0 t1 (a t2 + b t3) over the universe
/// {t0, t1, t2, t3, a, b}.
CubicModel cubic_family();
/// The family specialized at a, b (parameter variables remain, unused).
CubicModel cubic_specialization(const Cyclotomic& a, const Cyclotomic& b);
/// a = b = 0 with its 27 lines.
CubicModel fermat_cubic();

/// The 27 lines t_i + w t_j = t_k + w' t_l = 0 (w^3 = w'^3 = 1); each is
/// checked to lie on the surface.
std::vector<Line> fermat_lines();

bool line_lies_on(const ParamPoly& f, const std::vector<std::size_t>& coords, const Line& l);
bool lines_meet(const Line& a, const Line& b);
bool point_on_line(const CycVector& x, const Line& l);
/// Intersection of two distinct coplanar lines, normalized.
std::optional<CycVector> line_intersection(const Line& a, const Line& b);
/// 27x27 incidence: 1 when distinct lines meet.
std::vector<std::vector<int>> line_incidence(const std::vector<Line>& lines);

/// Points lying on at least three lines; throws inconsistent if one lies on more than three.
std::vector<CycVector> eckardt_points(const std::vector<Line>& lines);

/// F(M t) proportional to F(t).
bool preserves_surface(const ParamPoly& f, const std::vector<std::size_t>& coords, const CycMatrix& m);

/// Permutation of `lines` induced by M (lines[perm[i]] = M lines[i]).
/// Throws invalid_argument if M does not preserve the surface or the line set.
Perm action_on_lines(const CycMatrix& m, const CubicModel& model);

/// Line permutation of every element of g (indexed like g.elements()),
/// computed on generators and extended through the homomorphism check.
std::vector<Perm> line_actions(const FiniteGroup& g, const CubicModel& model);

/// diag(z3,1,1,1), the transposition t0<->t1 and the 4-cycle of coordinates.
std::vector<GroupElement> fermat_automorphism_generators();
/// Closure of the generators above (order 648).
FiniteGroup fermat_automorphism_group();

/// Identification of the 27 lines with the exceptional classes of the degree-3
/// lattice: the sixer goes to e1..e6 and every other line is fixed by its
/// intersections with the sixer.
struct LineMarking {
  std::vector<int> sixer;
  std::vector<int> class_of_line;  // index into exceptional_classes(3)
};
LineMarking mark_lines(const std::vector<Line>& lines);

/// Lattice action of a line permutation.
LatticeIsometry cubic_isometry(const Perm& line_perm, const LineMarking& marking);

/// Is the 4x4 lift of `m` (up to a scalar and z3 -> z3^2) diagonalizable with
/// eigenvalues z6^e for the exponents `row`?
bool eigenvalues_match(const CycMatrix& m, const std::vector<int>& row_z6);
/// Same test on a precomputed eigenvalue list (with multiplicity).
bool eigenvalues_match(const std::vector<Cyclotomic>& ev, const std::vector<int>& row_z6);
std::vector<Cyclotomic> eigenvalue_list(const CycMatrix& m);

/// A row of the eigenvalue/trace table.
struct CubicTraceRow {
  std::vector<int> eigen_z6;  // eigenvalues of a lift as exponents of z6
  int expected;
};
const std::vector<CubicTraceRow>& cubic_trace_table();
std::string eigen_row_to_string(const std::vector<int>& row_z6);

}  // namespace cfl
