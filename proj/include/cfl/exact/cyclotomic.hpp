#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfl/exact/rational.hpp"

namespace cfl {

/// An element of Q(zeta_n), stored in the power basis 1, z, ..., z^(phi(n)-1)
/// reduced modulo the n-th cyclotomic polynomial.
///
/// Binary operations embed both operands into the lcm conductor. Equality
/// is field equality (it embeds as well), so two values of different stored
/// conductor compare equal when they describe the same complex number.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_n^k, stored at the smallest conductor n / gcd(n, k).
  static Cyclotomic root_of_unity(int n, long k);

  int conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Same value with conductor `n`; `n` must be a multiple of conductor().
  Cyclotomic embed(int n) const;
  /// Same value stored at the smallest conductor whose field contains it.
  Cyclotomic minimized() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Valid only when is_rational().
  Rational rational_value() const;

  Cyclotomic inverse() const;
  /// Image under the automorphism zeta_n -> zeta_n^k (gcd(k, n) = 1).
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const { return galois(-1); }
  Cyclotomic pow(long e) const;

  /// Exponent e in [0, m) with *this == zeta_m^e if this is a root of unity of
  /// order dividing m; -1 otherwise.
  long root_of_unity_exponent(int m) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Exact text form, e.g. "1/2 + 3*z12^2 - z12^3".
  std::string to_string() const;
  /// Append a canonical byte key; only comparable between values stored at
  /// the same conductor.
  void append_key(std::string& out) const;
  std::size_t hash() const;

 private:
  Cyclotomic(int conductor, std::vector<Rational> coeffs);
  void trim_to_rational_if_possible();

  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

int euler_phi(int n);
long lcm_conductor(long a, long b);

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
const std::vector<Integer>& cyclotomic_polynomial(int n);

}  // namespace cfl
