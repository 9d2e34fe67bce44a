#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfl/error.hpp"

namespace cfl {

/// Sorted element indices of a subgroup of some Group.
using Subset = std::vector<int>;

/// A finite group given by its Cayley table. Element 0 is the identity.
class Group {
 public:
  Group() = default;
  /// table[a * n + b] = a*b. Validates identity, inverses, associativity.
  static Group from_table(int n, std::vector<int> table);
  /// Build from a multiplication on 0..n-1 with identity 0.
  static Group from_function(int n, const std::function<int(int, int)>& mul);

  int order() const noexcept { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int a, int x) const { return mul(mul(inv(x), a), x); }  // x^-1 a x
  int power(int a, long k) const;
  int element_order(int a) const { return orders_[a]; }
  const std::vector<int>& element_orders() const noexcept { return orders_; }

  /// Subgroup generated by `gens`.
  Subset generate(const std::vector<int>& gens) const;
  Subset all() const;
  bool is_subgroup(const Subset& s) const;
  bool is_normal(const Subset& h) const;
  bool is_abelian() const;
  Subset center() const;
  Subset derived_subgroup() const;
  Subset conjugate(const Subset& h, int x) const;
  Subset normalizer(const Subset& h) const;
  std::vector<Subset> conjugacy_classes() const;

  /// The subgroup as a standalone group; elems[i] becomes index i after the
  /// identity is moved to the front. `index_map` receives the new order.
  Group induced(const Subset& elems, std::vector<int>* index_map = nullptr) const;
  /// G/N; coset_of[g] is the image of g.
  Group quotient(const Subset& normal, std::vector<int>* coset_of = nullptr) const;

  /// Greedy generating set: repeatedly add an element of largest order not in
  /// the span.
  std::vector<int> small_generating_set() const;

 private:
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> orders_;
};

/// Isomorphism-invariant bundle.
struct Fingerprint {
  int order = 0;
  std::map<int, int> order_histogram;
  bool abelian = false;
  int center_order = 0;
  std::vector<long> abelianization;  // invariant factors, each divides the next
  int exponent = 0;
  int derived_order = 0;

  auto operator<=>(const Fingerprint&) const = default;
  std::string to_string() const;
};

/// Fingerprint refined by the multiset of fingerprints of the index-2
/// subgroups and the fingerprint of G/Z(G).
struct RefinedFingerprint {
  Fingerprint base;
  std::vector<Fingerprint> index_two;  // sorted
  Fingerprint central_quotient;

  auto operator<=>(const RefinedFingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const Group& g);
RefinedFingerprint refined_fingerprint(const Group& g);

/// Invariant factors of an abelian group.
std::vector<long> abelian_invariants(const Group& g);
/// Index-2 subgroups.
std::vector<Subset> index_two_subgroups(const Group& g);

bool is_cyclic(const Group& g);

/// One representative per conjugacy class of subgroups (errors above
/// max_order). Representatives are sorted by (order, elements).
std::vector<Subset> subgroups_up_to_conjugacy(const Group& g, int max_order = 1000);
/// Same classes with the size of each class.
struct SubgroupClass {
  Subset rep;
  int class_size = 0;
};
std::vector<SubgroupClass> subgroup_classes(const Group& g, int max_order = 1000);

/// An isomorphism a -> b as a map on indices, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b);
/// All of a's element images under homomorphisms determined by generator
/// images; returns nullopt when gens -> images does not extend.
std::optional<std::vector<int>> extend_homomorphism(const Group& a, const std::vector<int>& gens, const Group& b,
                                                    const std::vector<int>& images);

}  // namespace cfl
