#include <doctest.h>

#include <set>

#include "cfl/groups/catalog.hpp"
#include "cfl/surfaces/cubic.hpp"
#include "cfl/surfaces/projective.hpp"

using namespace cfl;

namespace {

Cyclotomic z(int n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

CycMatrix perm_matrix(std::vector<int> img) {
  CycMatrix m(4, 4);
  for (int i = 0; i < 4; ++i) m(img[i], i) = Cyclotomic(1);
  return m;
}

}  // namespace

TEST_CASE("Fermat cubic lines and Eckardt points") {
  auto lines = fermat_lines();
  REQUIRE(lines.size() == 27);
  auto inc = line_incidence(lines);
  for (const auto& row : inc) {
    int deg = 0;
    for (int x : row) deg += x;
    CHECK(deg == 10);
  }
  // Oracle: two lines meet iff their Pluecker coordinates pair to zero.
  auto pl = [](const Line& l) {
    std::vector<Cyclotomic> v;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) v.push_back(l.p[i] * l.q[j] - l.p[j] * l.q[i]);
    return v;  // p01 p02 p03 p12 p13 p23
  };
  for (std::size_t i = 0; i < 27; ++i)
    for (std::size_t j = i + 1; j < 27; ++j) {
      auto a = pl(lines[i]), b = pl(lines[j]);
      Cyclotomic w = a[0] * b[5] - a[1] * b[4] + a[2] * b[3] + a[3] * b[2] - a[4] * b[1] + a[5] * b[0];
      CHECK(w.is_zero() == static_cast<bool>(inc[i][j]));
    }
  auto ek = eckardt_points(lines);
  CHECK(ek.size() == 18);
  CycVector p{Cyclotomic(0), Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1)};
  bool found = false;
  for (const auto& x : ek) found = found || point_key(x) == point_key(p);
  CHECK(found);
}

TEST_CASE("line actions") {
  auto model = fermat_cubic();
  CHECK(action_on_lines(CycMatrix::identity(4), model) == perm_identity(27));
  // Swap t2, t3: no fixed line in the family t0 + w t2 = t1 + w' t3 = 0,
  // which it exchanges with the t0, t3 family; fixes w' = 1 in the t0, t1 family.
  auto sw = action_on_lines(perm_matrix({0, 1, 3, 2}), model);
  for (int i = 9; i < 18; ++i) CHECK(sw[i] >= 18);
  int fixed = 0;
  for (int i = 0; i < 9; ++i) fixed += sw[i] == i ? 1 : 0;
  CHECK(fixed == 3);
  CycMatrix d = CycMatrix::identity(4);
  d(0, 0) = z(3);
  auto dp = action_on_lines(d, model);
  CHECK(dp != perm_identity(27));
  CHECK(perm_compose(dp, perm_compose(dp, dp)) == perm_identity(27));
  CycMatrix bad = CycMatrix::identity(4);
  bad(0, 1) = Cyclotomic(1);
  CHECK_THROWS_AS(action_on_lines(bad, model), Error);
}

TEST_CASE("Fermat automorphism group and the stabilizer of p") {
  auto aut = fermat_automorphism_group();
  CHECK(aut.order() == 648);
  CHECK(Catalog::builtin().identify(aut.table()) == "3^3:S4");
  auto model = fermat_cubic();
  for (const auto& g : aut.generators()) CHECK(preserves_surface(model.F, model.coords, g.mat()));

  // Vertex-transitive on the 27 lines.
  auto acts = line_actions(aut, model);
  std::set<int> orbit;
  for (const auto& pm : acts) orbit.insert(pm[0]);
  CHECK(orbit.size() == 27);

  CycVector p{Cyclotomic(0), Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1)};
  auto st = stabilizer(aut, p);
  CHECK(st.order() == 36);
  CHECK(Catalog::builtin().identify(st.table()) == "S3x6");
  // Generic point: trivial.
  CHECK(stabilizer(aut, {Cyclotomic(1), Cyclotomic(2), Cyclotomic(5), Cyclotomic(-7)}).order() == 1);
}

TEST_CASE("marking and lattice traces") {
  auto model = fermat_cubic();
  auto mk = mark_lines(model.lines);
  CHECK(std::set<int>(mk.class_of_line.begin(), mk.class_of_line.end()).size() == 27);
  auto id = cubic_isometry(perm_identity(27), mk);
  CHECK(id.trace_r() == 6);
  auto sw = cubic_isometry(action_on_lines(perm_matrix({0, 1, 3, 2}), model), mk);
  CHECK(sw.trace_r() == -2);
}

TEST_CASE("eigenvalue matching") {
  CycMatrix d = CycMatrix::identity(4);
  d(3, 3) = z(3, 2);
  CHECK(eigenvalues_match(d, {0, 0, 0, 2}));  // conjugate of e
  CHECK(!eigenvalues_match(d, {0, 0, 2, 2}));
  CycMatrix s = d.scaled(z(6));
  CHECK(eigenvalues_match(s, {0, 0, 0, 2}));
  CHECK(eigen_row_to_string({0, 3, 2, 5}) == "(1,-1,e,-e)");
}

TEST_CASE("cubic family") {
  auto fam = cubic_family();
  CycVector p{Cyclotomic(0), Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1)};
  CHECK(evaluate_at(fam.F.specialize("a", Cyclotomic(3)).specialize("b", Cyclotomic(-2)), fam.coords, p).is_zero());
  CHECK(preserves_surface(fam.F, fam.coords, perm_matrix({1, 0, 2, 3})));
  CycMatrix g = CycMatrix::identity(4);
  g(0, 0) = z(3);
  g(1, 1) = z(3, 2);
  CHECK(preserves_surface(fam.F, fam.coords, g));
  CHECK(!preserves_surface(fam.F, fam.coords, perm_matrix({0, 1, 3, 2})));
  auto eq = cubic_specialization(Cyclotomic(2), Cyclotomic(2));
  CHECK(preserves_surface(eq.F, eq.coords, perm_matrix({0, 1, 3, 2})));
}
