#pragma once

#include <optional>
#include <unordered_map>
#include <string>
#include <variant>
#include <vector>

#include "cfl/exact/matrix.hpp"
#include "cfl/groups/group.hpp"
#include "cfl/lattice/lattice.hpp"

namespace cfl {

enum class ElementKind { matrix, projective_matrix, permutation, isometry };

const char* element_kind_name(ElementKind k) noexcept;

/// Permutation of 0..n-1; p[i] is the image of i. Composition (p*q)(i) = p[q[i]].
using Perm = std::vector<int>;

Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
Perm perm_identity(int n);
/// 1-based cycle notation such as "(1,2,3)(4,5)"; `n` is the degree.
Perm parse_cycles(const std::string& text, int n);
std::string perm_to_string(const Perm& p);

/// A group element in one of the supported representations. Projective
/// matrices are stored in canonical form (first nonzero entry, row-major,
/// equal to 1).
class GroupElement {
 public:
  static GroupElement matrix(CycMatrix m);
  static GroupElement projective(CycMatrix m);
  static GroupElement permutation(Perm p);
  static GroupElement isometry(LatticeIsometry m);

  ElementKind kind() const noexcept { return kind_; }
  const CycMatrix& mat() const;
  const Perm& perm() const;
  const LatticeIsometry& iso() const;

  /// a * b; throws mixed_kinds when representations differ.
  GroupElement operator*(const GroupElement& o) const;
  GroupElement identity_like() const;
  bool is_identity() const;

  /// Canonical byte key for elements whose cyclotomic entries are embedded
  /// at conductor `n` (ignored for permutations and isometries).
  std::string key(int n) const;
  int conductor() const;
  std::string to_string() const;

 private:
  ElementKind kind_ = ElementKind::permutation;
  CycMatrix m_;
  Perm p_;
  std::optional<LatticeIsometry> iso_;
};

/// A closed set of elements with its Cayley table. elements()[0] is the
/// identity and every element i > 0 is parent(i) * generator(gen_of(i)).
class FiniteGroup {
 public:
  const Group& table() const noexcept { return table_; }
  int order() const noexcept { return table_.order(); }
  ElementKind kind() const noexcept { return kind_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const GroupElement& element(int i) const { return elements_.at(i); }
  const std::vector<GroupElement>& generators() const noexcept { return gens_; }
  /// Index of the element equal to `g`, or -1.
  int find(const GroupElement& g) const;
  /// Index of each generator.
  const std::vector<int>& generator_indices() const noexcept { return gen_index_; }

  /// Elements with the given indices as a standalone group (new generators
  /// are the subgroup's small generating set).
  FiniteGroup subgroup(const Subset& s) const;

 private:
  friend FiniteGroup closure(const std::vector<GroupElement>&, int);
  Group table_;
  ElementKind kind_ = ElementKind::permutation;
  int conductor_ = 1;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> gens_;
  std::vector<int> gen_index_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, int> index_;
};

/// Group generated by `gens`; budget_exceeded if more than max_order elements.
FiniteGroup closure(const std::vector<GroupElement>& gens, int max_order);

/// Closure of pairs (g, phi(g)) for a map defined on generators; returns the
/// images of every element of `source` in `target`, or throws inconsistent
/// when the assignment is not a homomorphism.
std::vector<int> homomorphism_images(const FiniteGroup& source, const std::vector<GroupElement>& gen_images,
                                     const FiniteGroup& target);

}  // namespace cfl
