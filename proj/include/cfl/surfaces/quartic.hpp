#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfl/exact/matrix.hpp"
#include "cfl/exact/param_poly.hpp"
#include "cfl/groups/element.hpp"
#include "cfl/lefschetz/lefschetz.hpp"

namespace cfl {

/// Branch quartic B: t2^4 + 2 f2 t2^2 + f4 = 0 with f2, f4 binary forms in
/// (t0, t1). The double plane is t3^2 + F = 0, and the Geiser involution is
/// t3 -> -t3.
struct QuarticModel {
  ParamPoly F, f2, f4;
};

/// Variables t0, t1, t2, a, b, c, d.
std::shared_ptr<const VarUniverse> quartic_universe();
const std::vector<std::size_t>& quartic_coords();

/// f2 = a t0^2 + b t0 t1 + c t1^2, f4 = t0^4 + d t0^2 t1^2 + t1^4, all symbolic.
QuarticModel quartic_family();
QuarticModel quartic_from_forms(const std::string& f2, const std::string& f4);
/// Substitute parameters by expressions such as {"c", "a"} or {"d", "2 + 4*z3"}.
QuarticModel quartic_specialize(const QuarticModel& m, const std::vector<std::pair<std::string, std::string>>& subs);
bool quartic_has_parameters(const QuarticModel& m);

/// f4 - f2^2. Its zeros (a:b) are the directions of the bitangents b t0 - a t1 = 0 through (0:0:1).
ParamPoly bitangent_pencil(const QuarticModel& m);
/// B is smooth iff f4 and f4 - f2^2 both have four distinct zeros. Needs concrete parameters.
bool quartic_is_smooth(const QuarticModel& m);

/// lambda with F(g t) = lambda F(t), if g preserves B.
std::optional<Cyclotomic> quartic_multiplier(const QuarticModel& m, const CycMatrix& g);

/// [[A, 0], [0, 1]].
CycMatrix gl2_block(const CycMatrix& a);

/// Fixed locus on the double plane of the lift (t, t3) -> (g t, k t3) with
/// k = lift_sign * r, r the principal square root of the multiplier (r = 1
/// when the multiplier is 1). Throws unsupported for symbolic parameters or
/// fixed lines meeting B non-transversally, invalid_argument when g does not
/// preserve B or the lift is the identity.
FixedLocus quartic_fixed_locus(const CycMatrix& g, int lift_sign, const QuarticModel& m);

/// Number of points of B fixed by g (g not scalar).
int branch_fixed_point_count(const CycMatrix& g, const QuarticModel& m);

/// One row of the table of maximal non-cyclic subgroups of GL(2) preserving f2 and f4.
struct Table2Row {
  std::string f4_condition, f2_condition, label;
  std::vector<std::pair<std::string, std::string>> constraints;  // substitutions
  std::vector<CycMatrix> generators;                             // 2x2, acting on (t0, t1)
};
std::vector<Table2Row> table2_rows();

struct Table2Check {
  bool invariant = false;
  std::string computed_label;
  bool identified = false;
  bool maximal = false;
  std::vector<std::string> violations;
  bool ok() const { return invariant && identified && maximal; }
};
/// Invariance of f2 and f4 under the generators with the row's substitutions,
/// identification of the generated group, and maximality: no element of any
/// row group outside it preserves both forms.
Table2Check table2_check(const Table2Row& row, const std::vector<Table2Row>& pool);
bool table2_verify(const Table2Row& row);

/// Case with a fixed point off the ramification curve: an invariant GL(2)
/// group acting on (t0, t1), on a sample smooth member of the family.
struct DP2BCase {
  std::string name;
  std::vector<std::pair<std::string, std::string>> constraints;  // sample values
  std::vector<CycMatrix> generators;
  std::vector<std::string> listed;  // groups new to this case
};
std::vector<DP2BCase> dp2b_cases();

struct DP2BResult {
  QuarticModel model;
  FiniteGroup group;        // 2x2 matrices
  std::vector<int> traces;  // per element, lift fixing the points over (0:0:1)
  std::vector<SubgroupVerdict> verdicts;
};
DP2BResult dp2b_classify(const DP2BCase& c);

/// Fixed point on the ramification curve: the stabilizers of points of B in Aut(B).
struct DP2ACurve {
  std::string name;
  QuarticModel model;
  std::vector<CycMatrix> generators;  // 3x3, generate Aut(B)
  int expected_order = 0;
};
std::vector<DP2ACurve> dp2a_curves();

struct BranchStabilizer {
  int order = 0;   // cyclic stabilizer of a point of B
  int points = 0;  // points of B with exactly this stabilizer, over all such subgroups
};
/// C x <gamma> for a cyclic C of even order inside some point stabilizer.
struct RamifiedGroup {
  int order = 0;  // |C|
  std::string label;
  long trace_sum = 0;  // over both lifts of every element of C
};
struct DP2AResult {
  FiniteGroup aut;
  std::vector<BranchStabilizer> stabilizers;  // one per order
  std::vector<RamifiedGroup> groups;          // one per order
};
DP2AResult dp2a_classify(const DP2ACurve& c);

}  // namespace cfl
