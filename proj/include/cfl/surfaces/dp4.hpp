#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfl/exact/matrix.hpp"
#include "cfl/groups/element.hpp"
#include "cfl/lattice/lattice.hpp"
#include "cfl/lefschetz/lefschetz.hpp"

namespace cfl {

/// Intersection of two quadrics t^T A t = t^T B t = 0 in P^4.
struct DP4Model {
  CycMatrix A, B;  // symmetric 5x5
};

/// t1^2 + e t2^2 + e^2 t3^2 + t4^2 = t1^2 + e^2 t2^2 + e t3^2 + t5^2 = 0, e = z3.
DP4Model dp4_model();
/// sum t_i^2 = sum a_i t_i^2 = 0.
DP4Model dp4_diagonal_model(const std::vector<Cyclotomic>& a);

/// g maps the surface to itself: g^T A g and g^T B g lie in the pencil.
bool preserves_pencil(const DP4Model& x, const CycMatrix& g);
bool on_surface(const DP4Model& x, const CycVector& p);

/// Pencil values m with A + m B singular (infinity as nullopt), one per
/// coordinate; the model must be diagonal.
std::vector<std::optional<Cyclotomic>> degenerate_members(const DP4Model& x);
/// j-invariant of the genus 1 curve E_k = X n {t_k = 0}: the double cover of the
/// pencil branched at the four other degenerate members.
Cyclotomic dp4_curve_j(const DP4Model& x, int k);

/// X n span(basis): isolated points and curve genera. Throws unsupported for
/// slices of dimension >= 3 on which the restricted quadrics are not diagonal.
struct Slice {
  int points = 0;
  std::vector<int> curve_genera;
  bool infinite() const { return !curve_genera.empty(); }
};
Slice slice_surface(const DP4Model& x, const std::vector<CycVector>& basis);

/// Fixed locus of one automorphism (non-identity), assembled from eigenspace slices.
FixedLocus dp4_fixed_locus(const DP4Model& x, const CycMatrix& g);
/// Number of points of X fixed by all generators; -1 when infinite.
int dp4_fixed_point_count(const DP4Model& x, const std::vector<CycMatrix>& gens);

/// Labels aligned with exceptional_classes(4): "R0", "R1".."R5", "R12".."R45".
std::vector<std::string> dp4_labels();
int dp4_class_index(const std::string& label);
/// Class permutation of the involution iota_A (A a subset of 1..5).
Perm dp4_iota_perm(const std::vector<int>& A);
/// Class permutation induced by a permutation pi of the indices 0..4.
Perm dp4_index_perm(const Perm& pi);

struct DP4Generator {
  std::string name;
  GroupElement element;  // projective 5x5
  Perm class_perm;
};
/// iota_1..iota_5, g1, g2 with their coordinate and lattice actions.
std::vector<DP4Generator> dp4_generators();

struct DP4Data {
  DP4Model model;
  FiniteGroup group;                   // order 96
  std::vector<LatticeIsometry> iso;    // per element
  std::map<std::string, int> named;    // generator name -> element index
};
/// Builds the group and the lattice action (checked to be a homomorphism).
DP4Data dp4_data();

/// Isometries of the named generators and of every iota_A with |A| = 2.
std::map<std::string, LatticeIsometry> dp4_isometries();

}  // namespace cfl
