#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cfl/exact/cyclotomic.hpp"
#include "cfl/exact/matrix.hpp"

namespace cfl {

/// Ordered list of variable names shared by a family of polynomials.
class VarUniverse {
 public:
  explicit VarUniverse(std::vector<std::string> names);
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Index of `name`, or -1.
  int find(std::string_view name) const;
  friend bool operator==(const VarUniverse& a, const VarUniverse& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial with cyclotomic coefficients. Zero coefficients
/// are never stored and terms are kept in grlex order, so equality is
/// structural.
class ParamPoly {
 public:
  using Terms = std::map<Exponents, Cyclotomic, GrlexLess>;

  explicit ParamPoly(std::shared_ptr<const VarUniverse> vars);
  ParamPoly(std::shared_ptr<const VarUniverse> vars, const Cyclotomic& constant);

  static ParamPoly variable(std::shared_ptr<const VarUniverse> vars, std::size_t index);
  static ParamPoly variable(std::shared_ptr<const VarUniverse> vars, std::string_view name);
  static ParamPoly monomial(std::shared_ptr<const VarUniverse> vars, Exponents e, const Cyclotomic& c);

  /// Parse text such as "t0^3 + z3*t1^2*a - 1/2*(t2 + t3)^2". `zN` denotes a
  /// primitive N-th root of unity; `zN^k` its powers.
  static ParamPoly parse(std::string_view text, std::shared_ptr<const VarUniverse> vars);

  const std::shared_ptr<const VarUniverse>& vars() const noexcept { return vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const;
  /// Degree in the variables in `idx` only (max over terms).
  int degree_in(const std::vector<std::size_t>& idx) const;
  bool is_constant() const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly operator-() const;
  ParamPoly scaled(const Cyclotomic& c) const;
  ParamPoly pow(unsigned e) const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b);
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  /// Replace variables by polynomials; `images[i]` is the image of variable i
  /// and must live in the target universe (all images share it).
  ParamPoly compose(const std::vector<ParamPoly>& images) const;

  /// Linear change of the coordinate variables `coords`: t_i -> sum_j M_ij t_j.
  /// Other variables pass through.
  ParamPoly substitute(const std::vector<std::size_t>& coords, const CycMatrix& m) const;

  /// Set variable `index` to a value (the variable remains in the universe).
  ParamPoly specialize(std::size_t index, const Cyclotomic& value) const;
  ParamPoly specialize(std::string_view name, const Cyclotomic& value) const;

  /// Evaluate with every variable given; throws if sizes differ.
  Cyclotomic evaluate(const std::vector<Cyclotomic>& point) const;

  ParamPoly derivative(std::size_t index) const;

  /// Coefficient polynomial of the given exponent pattern in variables `idx`.
  ParamPoly coefficient_of(const std::vector<std::size_t>& idx, const std::vector<int>& exps) const;

  /// Exists c with *this == c * other (c a nonzero constant)? Writes c.
  bool proportional_to(const ParamPoly& other, Cyclotomic* factor) const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Cyclotomic& c);
  void check_universe(const ParamPoly& o) const;

  std::shared_ptr<const VarUniverse> vars_;
  Terms terms_;
};

}  // namespace cfl
