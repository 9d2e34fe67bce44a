#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfl/exact/upoly.hpp"
#include "cfl/groups/element.hpp"
#include "cfl/groups/group.hpp"

namespace cfl {

/// A fixed point of G on the bundle, with its position relative to the fibres.
struct ConicFixedPoint {
  std::string description;
  bool singular_point_of_singular_fibre = false;
};

/// 1 -> G_K -> G -> G_B -> 1 for a G-conic bundle. G_K acts trivially on the
/// base, G_0 (inside G_K) trivially on Pic.
struct ConicBundleGroupData {
  Group G;
  Subset GK;
  Subset G0{0};
  std::optional<int> singular_fibers;
  std::vector<ConicFixedPoint> fixed_points;
};

/// G_B = G / G_K; throws inconsistent when G_K is not normal or G_0 is not a
/// normal subgroup of G contained in G_K.
Group conic_base_group(const ConicBundleGroupData& d);

/// Data with G_K = the subgroup generated by `gk`.
ConicBundleGroupData conic_data(Group g, const std::vector<int>& gk);

enum class NeCase { case_i, case_ii, case_iii, none };
const char* ne_case_name(NeCase c) noexcept;

struct NeResult {
  NeCase kind = NeCase::none;
  int n = 0;  // |G| = 4n
  int m = 0;  // 2-part of n
  int q = 0;  // odd part of n
  std::string gk;     // isomorphism type of G_K, "2" or "2^2" when it is elementary abelian
  std::string note;
};

/// Case analysis for G_0 trivial. Throws invalid_argument when G_0 is
/// nontrivial and inconsistent when G_K is not normal or G_B is not cyclic.
/// Cyclic G gives none.
NeResult classify_ne(const ConicBundleGroupData& d);

/// Reference groups: C_a x C_b, 2 x 2n and (2m:2) x q with x g x^-1 = g^(m+1).
/// For m = 1 the action is trivial and (2:2) x q = 2 x 2q.
Group cyclic_group(int n);
Group direct_product(const Group& a, const Group& b);
Group reference_2x2n(int n);
Group reference_2m2(int m);
Group reference_2m2_q(int m, int q);
Group dihedral_group(int order);
Group quaternion_group();

bool isomorphic(const Group& a, const Group& b);
/// Dihedral of order >= 4 (2^2 included).
bool is_dihedral(const Group& g);

/// Whether G has a faithful 2-dimensional representation whose image contains
/// -I. Monomial images are searched exhaustively; when none exists and G/Z(G)
/// is A4, S4 or A5 the answer is unknown (nullopt).
std::optional<bool> embeds_in_gl2_with_minus_id(const Group& g);

struct ExResult {
  bool accepted = false;
  std::vector<std::string> reasons;  // why rejected
  int dihedral_order = 0;            // 2m of a witness D_2m x n, if accepted
  int cyclic_order = 0;              // n
};

/// Structural test for G_0 nontrivial. Throws invalid_argument when G_0 is
/// trivial, inconsistent for bad designated subgroups or a recorded fixed
/// point that is not a singular point of a singular fibre.
ExResult classify_ex(const ConicBundleGroupData& d);

/// Subgroup h with induced data: G_K n h, G_0 n h.
ConicBundleGroupData restrict_data(const ConicBundleGroupData& d, const Subset& h);

/// `fiber_images[i]` is the action on one fibre of the i-th element of G_K.
/// True iff the assignment is a homomorphism and injective.
bool faithful_fiber_check(const ConicBundleGroupData& d, const std::vector<GroupElement>& fiber_images);

/// H(t0, t1) + t2 t3 = 0 in weighted projective space with weights (1, 1, g+1, g+1).
struct ExceptionalModelParams {
  int g = 1;
  BinaryForm H;  // degree 2g+2
};
/// Validates degree and squarefreeness, then returns 2g + 2, the number of
/// singular fibres of the projection to (t0 : t1).
int exceptional_singular_fibers(const ExceptionalModelParams& p);

/// Blow-up of a degree 4 surface at a point fixed by 2^2 and lying on no line.
struct BlowupExample {
  int fixed_on_surface = 0;      // points of X fixed by G
  bool point_on_line = true;
  int tangent_fixed_directions = 0;
  bool base_action_trivial = false;
  int singular_fibers = 0;       // of | -K - E | on the blow-up, from the lattice
  int fixed_points = 0;          // on the blow-up
  bool faithful = false;
  bool fixed_points_on_singular_fibres = false;
  ConicBundleGroupData data;
};
BlowupExample conic_blowup_example();

}  // namespace cfl
