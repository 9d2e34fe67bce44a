#pragma once

#include <string>
#include <vector>

#include "cfl/exact/matrix.hpp"
#include "cfl/exact/param_poly.hpp"
#include "cfl/exact/upoly.hpp"
#include "cfl/groups/element.hpp"

namespace cfl {

/// One eigenvalue of a finite-order matrix together with a basis of its eigenspace.
struct Eigenspace {
  Cyclotomic value;
  std::vector<CycVector> basis;
};

/// Eigenspaces of a matrix some power of which is a root-of-unity scalar
/// (true for every finite-order matrix and for canonical lifts of the
/// monomial projective groups used here). Eigenvalues are found by testing
/// the roots of unity of the only possible orders; throws unsupported
/// otherwise, and inconsistent if the eigenspaces do not span.
std::vector<Eigenspace> eigenspaces(const CycMatrix& g);

/// Subspace on which every generator acts by a scalar; `characters[i]` is
/// the scalar of generator i.
struct CommonEigenspace {
  std::vector<CycVector> basis;
  std::vector<Cyclotomic> characters;
  std::size_t dim() const { return basis.size(); }
};

/// The decomposition of the ambient space into common eigenspaces of the
/// generators that are nonzero. Their projectivizations are exactly the
/// points fixed by the group.
std::vector<CommonEigenspace> common_eigenspaces(const std::vector<CycMatrix>& gens);

enum class P2FixedKind { none, one_point, three_points, line_plus_point, all_points };
const char* p2_fixed_kind_name(P2FixedKind k) noexcept;

struct P2FixedStructure {
  P2FixedKind kind = P2FixedKind::none;
  std::vector<CycVector> points;               // isolated fixed points
  std::vector<std::vector<CycVector>> lines;   // each line as two spanning vectors
};

/// Fixed-point structure of a group of 3x3 projective transformations,
/// computed from generator eigenspaces. Witnesses are checked against every
/// group element.
P2FixedStructure p2_fixed_structure(const FiniteGroup& g);

/// Block embedding A -> [[A, 0], [0, 1]] as projective transformations.
FiniteGroup gl2_to_aut_p2(const FiniteGroup& g);

/// g.p proportional to p.
bool fixes_point(const CycMatrix& g, const CycVector& p);
FiniteGroup stabilizer(const FiniteGroup& g, const CycVector& p);
Subset stabilizer_subset(const FiniteGroup& g, const CycVector& p);

/// Cross-ratio [13][24] / ([14][23]) of four points of P^1 given as (a:b).
Cyclotomic cross_ratio(const std::vector<CycVector>& pts);
/// 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2); throws on coincident points.
Cyclotomic j_from_four_points(const std::vector<CycVector>& pts);
/// Affine version with values on the line; each v becomes (v:1).
Cyclotomic j_from_four_values(const std::vector<Cyclotomic>& values);

/// Restriction of a homogeneous polynomial in the coordinates `coords` to
/// the line through p and q, as a binary form in (u:v) -> u p + v q.
BinaryForm restrict_to_line(const ParamPoly& f, const std::vector<std::size_t>& coords, const CycVector& p,
                            const CycVector& q);

/// Evaluate with coordinates `coords` set to v and every other variable zero.
Cyclotomic evaluate_at(const ParamPoly& f, const std::vector<std::size_t>& coords, const CycVector& v);

std::string point_to_string(const CycVector& v);
/// Canonical text key of the projective point (normalized, minimized entries).
std::string point_key(const CycVector& v);

}  // namespace cfl
