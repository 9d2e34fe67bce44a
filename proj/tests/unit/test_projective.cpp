#include <doctest.h>

#include <algorithm>

#include "cfl/groups/catalog.hpp"
#include "cfl/surfaces/projective.hpp"

using namespace cfl;

namespace {

Cyclotomic z(int n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

CycMatrix diag3(Cyclotomic a, Cyclotomic b, Cyclotomic c) {
  CycMatrix m(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

FiniteGroup proj(std::vector<CycMatrix> ms) {
  std::vector<GroupElement> g;
  for (auto& m : ms) g.push_back(GroupElement::projective(std::move(m)));
  return closure(g, 5000);
}

}  // namespace

TEST_CASE("eigenspaces of finite-order matrices") {
  auto e = eigenspaces(diag3(z(3), z(3), Cyclotomic(1)));
  REQUIRE(e.size() == 2);
  std::size_t total = 0;
  for (const auto& s : e) total += s.basis.size();
  CHECK(total == 3);

  CycMatrix rot(2, 2);
  rot(0, 1) = Cyclotomic(-1);
  rot(1, 0) = Cyclotomic(1);
  auto r = eigenspaces(rot);
  REQUIRE(r.size() == 2);
  for (const auto& s : r) {
    CHECK(s.value * s.value == Cyclotomic(-1));
    CHECK(rot.apply(s.basis[0]) == [&] {
      CycVector v = s.basis[0];
      for (auto& x : v) x = x * s.value;
      return v;
    }());
  }

  CycMatrix unip = CycMatrix::identity(2);
  unip(0, 1) = Cyclotomic(1);
  CHECK_THROWS_AS(eigenspaces(unip), Error);
}

TEST_CASE("fixed structure on the plane") {
  // Distinct characters: three isolated points.
  auto g1 = proj({diag3(Cyclotomic(1), z(3), z(3, 2)), diag3(Cyclotomic(1), Cyclotomic(-1), Cyclotomic(1))});
  auto s1 = p2_fixed_structure(g1);
  CHECK(s1.kind == P2FixedKind::three_points);
  CHECK(s1.points.size() == 3);

  auto g2 = proj({diag3(Cyclotomic(1), Cyclotomic(1), z(5))});
  auto s2 = p2_fixed_structure(g2);
  CHECK(s2.kind == P2FixedKind::line_plus_point);
  CHECK(s2.lines.size() == 1);

  // D8 acting on the first two coordinates: only (0:0:1).
  CycMatrix a(2, 2), b(2, 2);
  a(0, 1) = Cyclotomic(-1);
  a(1, 0) = Cyclotomic(1);
  b(0, 1) = Cyclotomic(1);
  b(1, 0) = Cyclotomic(1);
  auto d8 = closure({GroupElement::matrix(a), GroupElement::matrix(b)}, 100);
  auto g3 = gl2_to_aut_p2(d8);
  CHECK(g3.order() == 8);
  CHECK(Catalog::builtin().identify(g3.table()) == "D8");
  auto s3 = p2_fixed_structure(g3);
  CHECK(s3.kind == P2FixedKind::one_point);
  REQUIRE(s3.points.size() == 1);
  CHECK(s3.points[0] == CycVector{Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)});

  // The cyclic permutation of coordinates together with a diagonal order-3 map: no fixed point.
  CycMatrix c(3, 3);
  c(0, 2) = c(1, 0) = c(2, 1) = Cyclotomic(1);
  auto g4 = proj({c, diag3(Cyclotomic(1), z(3), z(3, 2))});
  CHECK(p2_fixed_structure(g4).kind == P2FixedKind::none);
}

TEST_CASE("stabilizer of a point") {
  CycMatrix c(3, 3);
  c(0, 2) = c(1, 0) = c(2, 1) = Cyclotomic(1);
  auto g = proj({c, diag3(Cyclotomic(1), z(3), z(3, 2))});
  CHECK(g.order() == 9);
  CycVector p{Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)};
  auto st = stabilizer(g, p);
  CHECK(st.order() == 3);
  for (const auto& e : st.elements()) CHECK(fixes_point(e.mat(), p));
}

TEST_CASE("j-invariant is independent of the ordering") {
  auto check_all = [](std::vector<Cyclotomic> v, const Cyclotomic& expected) {
    std::sort(v.begin(), v.end(), [](const Cyclotomic& a, const Cyclotomic& b) { return a.to_string() < b.to_string(); });
    int count = 0;
    do {
      CHECK(j_from_four_values(v) == expected);
      ++count;
    } while (std::next_permutation(v.begin(), v.end(), [](const Cyclotomic& a, const Cyclotomic& b) {
      return a.to_string() < b.to_string();
    }));
    CHECK(count == 24);
  };
  check_all({Cyclotomic(1), Cyclotomic(-1), z(4), z(4, 3)}, Cyclotomic(1728));
  check_all({Cyclotomic(0), Cyclotomic(1), z(3), z(3, 2)}, Cyclotomic(0));
  // Point at infinity given projectively.
  std::vector<CycVector> pts{{Cyclotomic(0), Cyclotomic(1)}, {Cyclotomic(1), Cyclotomic(1)},
                             {Cyclotomic(-1), Cyclotomic(1)}, {Cyclotomic(1), Cyclotomic(0)}};
  CHECK(j_from_four_points(pts) == Cyclotomic(1728));
  pts[3] = pts[0];
  CHECK_THROWS_AS(j_from_four_points(pts), Error);
}

TEST_CASE("restriction to a line") {
  auto f = ParamPoly::parse("t0^3 + t1^3 + t2^3", std::make_shared<VarUniverse>(std::vector<std::string>{"t0", "t1", "t2"}));
  std::vector<std::size_t> coords{0, 1, 2};
  // Line t2 = 0 through (1:0:0), (0:1:0): u^3 + v^3, three distinct zeros.
  auto bf = restrict_to_line(f, coords, {Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)},
                             {Cyclotomic(0), Cyclotomic(1), Cyclotomic(0)});
  CHECK(bf.n == 3);
  CHECK(bf.distinct_zero_count() == 3);
  // A line inside the Fermat cubic: t0 = -t1.
  auto bf2 = restrict_to_line(f, coords, {Cyclotomic(1), Cyclotomic(-1), Cyclotomic(0)},
                              {Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)});
  CHECK(bf2.coeffs[0] == Cyclotomic(1));
  CHECK(evaluate_at(f, coords, {Cyclotomic(1), Cyclotomic(-1), Cyclotomic(0)}).is_zero());
}
