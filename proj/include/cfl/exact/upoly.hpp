#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfl/exact/cyclotomic.hpp"

namespace cfl {

/// Univariate polynomial over cyclotomic numbers, coefficients low degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Cyclotomic> coeffs);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Cyclotomic>& coeffs() const noexcept { return c_; }
  const Cyclotomic& lead() const { return c_.back(); }

  Cyclotomic eval(const Cyclotomic& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on zero divisor.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  /// Monic gcd (zero if both are zero).
  static UPoly gcd(UPoly a, UPoly b);

  /// Number of distinct complex roots.
  int distinct_root_count() const;
  bool squarefree() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Cyclotomic> c_;
};

/// A binary form of degree n, stored as coefficients of u^i v^(n-i).
struct BinaryForm {
  int n = 0;
  std::vector<Cyclotomic> coeffs;  // size n+1, index i = power of u

  bool is_zero() const;
  /// Distinct points of P^1 where the form vanishes; throws if the form is zero.
  int distinct_zero_count() const;
};

/// Distinct common zeros on P^1; -1 when both forms are zero.
int common_zero_count(const BinaryForm& a, const BinaryForm& b);

}  // namespace cfl
