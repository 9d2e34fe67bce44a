#include <doctest.h>

#include "cfl/error.hpp"
#include "cfl/surfaces/cubic.hpp"
#include "cfl/surfaces/dp4.hpp"
#include "cfl/surfaces/quartic.hpp"
#include "cfl/surfaces/scene.hpp"

using namespace cfl;

namespace {

// f from another universe, rewritten in the scene's coordinates (other variables -> 0).
ParamPoly transplant(const ParamPoly& f, const std::vector<std::size_t>& from, const Scene& s) {
  std::vector<ParamPoly> images(f.vars()->size(), ParamPoly(s.vars));
  for (std::size_t k = 0; k < from.size(); ++k) images[from[k]] = ParamPoly::variable(s.vars, s.coords[k]);
  return f.compose(images);
}

ParamPoly quadric(const CycMatrix& a, const Scene& s) {
  ParamPoly q(s.vars);
  for (std::size_t i = 0; i < 5; ++i) {
    auto v = ParamPoly::variable(s.vars, s.coords[i]);
    q += (v * v).scaled(a(i, i));
  }
  return q;
}

}  // namespace

TEST_CASE("scene numbers") {
  CHECK(parse_scene_number("-1/2") == Cyclotomic(Rational(-1, 2)));
  CHECK(parse_scene_number("z4") == Cyclotomic::root_of_unity(4, 1));
  CHECK(parse_scene_number("z3^2") == Cyclotomic::root_of_unity(3, 2));
  CHECK(parse_scene_number("z4(0 1)") == Cyclotomic::root_of_unity(4, 1));
  CHECK_THROWS_AS(parse_scene_number("t0"), Error);
}

TEST_CASE("shipped scenes load and validate") {
  auto files = shipped_scenes();
  CHECK(files.size() >= 11);
  for (const auto& f : files) {
    INFO(f.filename().string());
    Scene s = load_scene(f);
    CHECK(s.group_order.has_value());
    CHECK(f.stem().string() == s.name);
  }
}

TEST_CASE("scenes match the models built in code") {
  Scene fc = load_shipped_scene("fermat-cubic");
  auto fermat = fermat_cubic();
  CHECK(transplant(fermat.F, fermat.coords, fc) == fc.equations[0]);
  CHECK(fc.group().order() == fermat_automorphism_group().order());

  Scene fam = load_shipped_scene("cubic-family");
  CHECK(fam.has_parameters());
  CHECK(fam.equations[0].to_string() == cubic_family().F.to_string());

  Scene d4 = load_shipped_scene("dp4");
  auto m = dp4_model();
  REQUIRE(d4.equations.size() == 2);
  CHECK(d4.equations[0] == quadric(m.A, d4));
  CHECK(d4.equations[1] == quadric(m.B, d4));

  Scene bl = load_shipped_scene("dp4-blowup");
  auto x = dp4_diagonal_model({Cyclotomic(1), Cyclotomic(2), Cyclotomic(0), Cyclotomic(-25), Cyclotomic(-16)});
  CHECK(bl.equations[0] == quadric(x.A, bl));
  CHECK(bl.equations[1] == quadric(x.B, bl));
  CHECK(bl.fixed_points.size() == 1);

  for (const auto& c : dp2a_curves()) {
    Scene s = load_shipped_scene("quartic-" + c.name);
    CHECK(transplant(c.model.F, quartic_coords(), s) == s.equations[0]);
    CHECK(s.group().order() == c.expected_order);
  }
  auto cases = dp2b_cases();
  for (std::size_t k = 0; k < cases.size(); ++k) {
    Scene s = load_shipped_scene("dp2b-" + std::to_string(k + 1));
    auto model = quartic_specialize(quartic_family(), cases[k].constraints);
    INFO(cases[k].name);
    CHECK(transplant(model.F, quartic_coords(), s) == s.equations[0]);
    CHECK(s.generators.size() == cases[k].generators.size());
    for (std::size_t j = 0; j < s.generators.size(); ++j) CHECK(s.generators[j] == gl2_block(cases[k].generators[j]));
  }
}

TEST_CASE("scene validation rejects bad input") {
  const std::string head = "name = t\nvariables = x y z\ncoords = x y z\nequation = x^2 + y^2 + z^2\n";
  CHECK_NOTHROW(parse_scene(head + "generator = [0, 1, 0; 1, 0, 0; 0, 0, 1]\ngroup_order = 2\n"));
  CHECK_THROWS_AS(parse_scene(head + "generator = [2, 0, 0; 0, 1, 0; 0, 0, 1]\n"), Error);
  CHECK_THROWS_AS(parse_scene(head + "point = (1, 0, 0)\n"), Error);
  CHECK_THROWS_AS(parse_scene(head + "generator = [0, 1, 0; 1, 0, 0; 0, 0, 1]\ngroup_order = 3\n"), Error);
  CHECK_THROWS_AS(parse_scene(head + "generator = [0, 1; 1, 0]\n"), Error);
  CHECK_THROWS_AS(parse_scene("variables = x\ncoords = x\nequation = x\n"), Error);
  CHECK_THROWS_AS(parse_scene(head + "fixed_point = (1, z4, 0)\ngenerator = [0, 1, 0; 1, 0, 0; 0, 0, 1]\n"), Error);
  try {
    parse_scene(head + "generator = [2, 0, 0; 0, 1, 0; 0, 0, 1]\n");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_invariant);
  }
}
