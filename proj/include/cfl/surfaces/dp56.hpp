#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfl/exact/matrix.hpp"
#include "cfl/groups/element.hpp"
#include "cfl/lattice/lattice.hpp"

namespace cfl {

// ---- degree 6 ----

/// Indices into exceptional_classes(6) of the hexagon e1, l12, e2, l23, e3, l13
/// in cyclic order (consecutive sides meet).
std::vector<int> dp6_hexagon();
/// Class permutation of the hexagon symmetry i -> (reflect ? k - i : i + k) mod 6.
Perm dp6_symmetry(int k, bool reflect);
/// D12 acting on the lattice: generated by the rotation and a vertex reflection.
FiniteGroup dp6_symmetry_group();
/// The rotation by one step, the opposite-side swap s1 (rotation by three),
/// the 3-cycle of the points (rotation by two), a vertex reflection and the
/// transposition of x1, x2 (a side reflection).
LatticeIsometry dp6_named(const std::string& name);

/// invariant_rank of the lattice action is 0.
bool dp6_minimality(const std::vector<LatticeIsometry>& group);
/// True if every element maps hexagon side `side` (0..5) to itself.
bool dp6_fixes_side(const std::vector<LatticeIsometry>& group, int side);
/// True if every element maps the pair {side, side + 3} to itself.
bool dp6_fixes_opposite_pair(const std::vector<LatticeIsometry>& group, int side);

// ---- degree 5 ----

/// Pair label {i, j} (1 <= i < j <= 5) of each class in exceptional_classes(5):
/// e_i -> {i, 5}, e0 - e_i - e_j -> the complement of {i, j} in {1..4}.
std::vector<std::pair<int, int>> dp5_pair_labels();
int dp5_class_index(int i, int j);
/// Class permutation of a permutation of {1..5} (0-based images).
Perm dp5_class_perm(const Perm& s);
/// Lattice isometry of a permutation given in 1-based cycle notation on 5 letters.
LatticeIsometry dp5_isometry(const std::string& cycles);
/// Lattice action of the group generated by the given permutations of {1..5}.
std::vector<LatticeIsometry> dp5_group_isometries(const std::vector<std::string>& gens);

/// Five pairwise distinct points of P^1.
struct FivePointConfig {
  std::vector<CycVector> pts;  // each (a:b)
  static FivePointConfig from_values(const std::vector<Cyclotomic>& values);
};
/// Ordered configuration (P_{s^-1(0)}, ..., P_{s^-1(4)}): where point i went under s.
FivePointConfig permute(const FivePointConfig& p, const Perm& s);
/// A 2x2 matrix carrying P_i to Q_i for every i, if one exists.
std::optional<CycMatrix> five_point_equivalent(const FivePointConfig& p, const FivePointConfig& q);

/// (1, e, e^2, e^3, e^4) and (1, e^3, e, e^4, e^2), e = z5.
FivePointConfig dp5_p0();
FivePointConfig dp5_p1();

}  // namespace cfl
