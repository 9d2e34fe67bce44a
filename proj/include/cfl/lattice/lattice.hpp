#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfl/error.hpp"

namespace cfl {

/// Coordinates in the basis e0, e1, ..., e_{9-d}.
using PicVec = std::vector<int>;

/// The Picard lattice of a degree-d del Pezzo surface: rank 10-d, form
/// diag(1,-1,...,-1), canonical class K = (-3, 1, ..., 1).
class PicLattice {
 public:
  explicit PicLattice(int degree);

  int degree() const noexcept { return degree_; }
  int rank() const noexcept { return 10 - degree_; }
  const PicVec& canonical() const noexcept { return k_; }

  int dot(const PicVec& a, const PicVec& b) const;
  int self(const PicVec& a) const { return dot(a, a); }

  PicVec e(int i) const;  // e0 ... e_{9-d}
  PicVec zero() const { return PicVec(rank(), 0); }

 private:
  int degree_;
  PicVec k_;
};

PicVec operator+(const PicVec& a, const PicVec& b);
PicVec operator-(const PicVec& a, const PicVec& b);
std::string class_to_string(const PicVec& v);

/// All v with v.v = square and v.K = kdot, sorted lexicographically.
/// Exhaustive: x0 is bounded by Cauchy-Schwarz applied to (x1..xn) against
/// the all-ones vector, and each partial assignment is pruned by the same
/// inequality on the remaining coordinates.
std::vector<PicVec> enumerate_classes(int degree, int square, int kdot);

/// (-1)-classes, 1 <= d <= 7.
std::vector<PicVec> exceptional_classes(int degree);
/// (-2)-classes orthogonal to K, 1 <= d <= 6.
std::vector<PicVec> roots(int degree);
/// e0 - e1 - e2 - e3 (when rank allows) followed by e_i - e_{i+1}.
std::vector<PicVec> simple_roots(int degree);

/// Square integer matrix acting on column vectors; asserted to preserve the
/// form and fix K on construction.
class LatticeIsometry {
 public:
  LatticeIsometry(int degree, std::vector<int> entries);
  static LatticeIsometry identity(int degree);
  static LatticeIsometry reflection(int degree, const PicVec& root);

  int degree() const noexcept { return degree_; }
  int size() const noexcept { return 10 - degree_; }
  int at(int r, int c) const { return m_[r * size() + c]; }
  const std::vector<int>& entries() const noexcept { return m_; }

  PicVec apply(const PicVec& v) const;
  LatticeIsometry operator*(const LatticeIsometry& o) const;
  friend bool operator==(const LatticeIsometry& a, const LatticeIsometry& b) {
    return a.degree_ == b.degree_ && a.m_ == b.m_;
  }
  friend bool operator<(const LatticeIsometry& a, const LatticeIsometry& b) { return a.m_ < b.m_; }

  int trace_pic() const;
  /// Trace on the orthogonal complement of K.
  int trace_r() const { return trace_pic() - 1; }
  int determinant() const;
  /// Determinant restricted to the orthogonal complement of K (equal to the
  /// full determinant since K is fixed).
  int determinant_r() const { return determinant(); }

 private:
  int degree_;
  std::vector<int> m_;
};

/// The unique isometry with classes[i] -> images[i]. Throws not_spanning when
/// the classes do not span the lattice over Q and not_isometry when the
/// pairing is not preserved or the solution is not integral.
LatticeIsometry isometry_from_class_map(int degree, const std::vector<PicVec>& classes,
                                        const std::vector<PicVec>& images);
/// perm[i] = index of the image of exceptional_classes(d)[i].
LatticeIsometry isometry_from_line_permutation(const std::vector<int>& perm, int degree);

/// Rank of the fixed sublattice of the orthogonal complement of K, via the
/// averaging operator.
int invariant_rank(const std::vector<LatticeIsometry>& group);
/// Sum of traces on the orthogonal complement of K.
long trace_sum(const std::vector<LatticeIsometry>& group);

/// Unordered pairs {A, B} of exceptional classes with A + B = f, A.B = 1.
int singular_fiber_count(const PicVec& f, int degree);

}  // namespace cfl
