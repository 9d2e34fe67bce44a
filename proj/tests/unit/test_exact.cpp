#include <doctest.h>

#include <random>

#include "cfl/exact/cyclotomic.hpp"
#include "cfl/exact/matrix.hpp"
#include "cfl/exact/param_poly.hpp"
#include "cfl/exact/upoly.hpp"

using namespace cfl;

namespace {

Cyclotomic random_cyc(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Cyclotomic x(0);
  for (int k = 0; k < 4; ++k) x += Cyclotomic(make_rational(coef(rng), den(rng))) * Cyclotomic::root_of_unity(n, coef(rng) + 7 * k);
  return x;
}

std::shared_ptr<const VarUniverse> coords_and_params() {
  return std::make_shared<VarUniverse>(std::vector<std::string>{"t0", "t1", "t2", "t3", "a", "b", "c", "d"});
}

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(Cyclotomic::root_of_unity(1, 0).is_one());
  CHECK(Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(8, 2) == Cyclotomic::root_of_unity(4, 1));
  CHECK(Cyclotomic::root_of_unity(8, 2).conductor() == 4);
  CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(4, 2).conductor() == 1);
}

TEST_CASE("zeta_n^k raised to n is one for n <= 120") {
  for (int n = 1; n <= 120; ++n)
    for (int k = 0; k < n; k += std::max(1, n / 7)) {
      Cyclotomic z = Cyclotomic::root_of_unity(n, k);
      CHECK(z.pow(n).is_one());
      CHECK(z.root_of_unity_exponent(n) == k);
    }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(1234);
  const int conductors[] = {3, 4, 5, 8, 12, 15, 24, 40, 120};
  for (int n : conductors)
    for (int trial = 0; trial < 6; ++trial) {
      Cyclotomic a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, 24);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK((a - a).is_zero());
    }
}

TEST_CASE("mixed conductors compare after embedding") {
  Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic z12 = Cyclotomic::root_of_unity(12, 1);
  // zeta_12 = zeta_4^(-2) ... check via zeta_12^3 = i and zeta_12^4 = w
  CHECK(z12.pow(3) == i);
  CHECK(z12.pow(4) == w);
  CHECK((i * w).minimized() == i * w);
  CHECK(Cyclotomic::root_of_unity(12, 6).minimized().conductor() == 1);
  CHECK(i.conj() == -i);
}

TEST_CASE("matrix inverse and nullspace") {
  Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
  CycMatrix m{{1, w, 0}, {0, 1, w}, {w, 0, 1}};
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(m * *inv == CycMatrix::identity(3));
  CycMatrix s{{1, 1}, {1, 1}};
  CHECK(s.rank() == 1);
  CHECK(s.nullspace().size() == 1);
  CHECK(!s.inverse().has_value());
}

TEST_CASE("polynomial parse and equality") {
  auto v = coords_and_params();
  auto p = ParamPoly::parse("t0^4 + t1^4", v);
  CHECK(p == p);
  CHECK(p != ParamPoly::parse("t0^4 - t1^4", v));
  // (t2^2 + f2)^2 + (f4 - f2^2) = t2^4 + 2 f2 t2^2 + f4
  std::string f2 = "(a*t0^2 + b*t0*t1 + c*t1^2)";
  std::string f4 = "(t0^4 + d*t0^2*t1^2 + t1^4)";
  auto lhs = ParamPoly::parse("(t2^2 + " + f2 + ")^2 + (" + f4 + " - " + f2 + "^2)", v);
  auto rhs = ParamPoly::parse("t2^4 + 2*" + f2 + "*t2^2 + " + f4, v);
  CHECK(lhs == rhs);
  CHECK(ParamPoly::parse("1/2*t0 - z3", v).to_string() == "1/2*t0 + (-z3)");
  CHECK_THROWS_AS(ParamPoly::parse("t0 + q", v), Error);
  CHECK_THROWS_AS(ParamPoly::parse("t0 / t1", v), Error);
}

TEST_CASE("substitution examples") {
  auto v = coords_and_params();
  auto fermat = ParamPoly::parse("t0^3 + t1^3 + t2^3 + t3^3", v);
  CycMatrix swap01{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK(fermat.substitute({0, 1, 2, 3}, swap01) == fermat);
  auto family = ParamPoly::parse("t0^3 + t1^3 + t2^3 + t3^3 + a*t0*t1*(t2 + t3) + b*t2*t3*(t0 + t1)", v);
  CHECK(family.substitute({0, 1, 2, 3}, swap01) == family);
  auto quartic = ParamPoly::parse(
      "t2^4 + 2*(a*t0^2 + b*t0*t1 + c*t1^2)*t2^2 + t0^4 + d*t0^2*t1^2 + t1^4", v);
  CycMatrix neg2{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
  CHECK(quartic.substitute({0, 1, 2}, neg2) == quartic);
  CHECK_THROWS_AS(quartic.substitute({0, 1}, neg2), Error);
}

TEST_CASE("substitute by M then by M inverse is the identity") {
  auto v = coords_and_params();
  std::mt19937 rng(99);
  auto p = ParamPoly::parse("t0^3 + a*t0*t1*t2 + z5*t1^2*t3 - b*t3^3 + 3", v);
  for (int trial = 0; trial < 5; ++trial) {
    CycMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        m(i, j) = Cyclotomic(static_cast<long>(rng() % 4) - 1) * Cyclotomic::root_of_unity(15, static_cast<long>(rng() % 15));
    auto inv = m.inverse();
    if (!inv) continue;
    CHECK(p.substitute({0, 1, 2, 3}, m).substitute({0, 1, 2, 3}, *inv) == p);
  }
}

TEST_CASE("univariate gcd and binary forms") {
  UPoly p({Cyclotomic(-1), Cyclotomic(0), Cyclotomic(1)});  // x^2 - 1
  CHECK(p.distinct_root_count() == 2);
  UPoly sq = p * p;
  CHECK(sq.distinct_root_count() == 2);
  CHECK(!sq.squarefree());
  BinaryForm f{4, {Cyclotomic(0), Cyclotomic(1), Cyclotomic(0), Cyclotomic(0), Cyclotomic(0)}};  // u v^3
  CHECK(f.distinct_zero_count() == 2);
}
