#include <doctest.h>

#include <thread>

#include "cfl/conic/conic.hpp"
#include "cfl/error.hpp"
#include "extension_oracle.hpp"

using namespace cfl;

namespace {

ConicBundleGroupData with_kernel(const Group& g, const Subset& gk) {
  ConicBundleGroupData d;
  d.G = g;
  d.GK = gk;
  return d;
}

// The subgroup generated by all involutions of a given group that are central.
Subset central_involutions(const Group& g) {
  std::vector<int> inv;
  for (int x : g.center())
    if (g.element_order(x) == 2) inv.push_back(x);
  return g.generate(inv);
}

NeCase ne(const Group& g, const std::vector<int>& gk) { return classify_ne(conic_data(g, gk)).kind; }

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

TEST_CASE("reference groups") {
  CHECK(is_cyclic(cyclic_group(6)));
  CHECK(isomorphic(reference_2m2(2), dihedral_group(8)));
  CHECK(isomorphic(reference_2m2(1), reference_2x2n(1)));
  CHECK(fingerprint(reference_2m2(4)).exponent == 8);
  CHECK_FALSE(reference_2m2(4).is_abelian());
  CHECK_FALSE(isomorphic(quaternion_group(), dihedral_group(8)));
  CHECK(is_dihedral(dihedral_group(10)));
  CHECK(is_dihedral(reference_2x2n(1)));
  CHECK_FALSE(is_dihedral(quaternion_group()));
  CHECK_FALSE(is_dihedral(cyclic_group(4)));
}

TEST_CASE("classify_ne examples") {
  // 2 x 2n with the first factor as G_K.
  for (int n = 1; n <= 8; ++n) {
    Group g = reference_2x2n(n);
    CHECK(ne(g, {2 * n}) == NeCase::case_i);  // index of (1, 0)
  }
  // D8 with G_K the Klein four-group containing the center.
  Group d8 = dihedral_group(8);
  // rotation r = 1, reflections 4..7; <r^2, s> is a Klein four-group.
  auto r = classify_ne(conic_data(d8, {2, 4}));
  CHECK(r.gk == "2^2");
  CHECK(r.kind == NeCase::case_iii);
  CHECK(r.m == 2);
  CHECK(r.q == 1);
  // Q8 has one involution, so no kernel 2^2 and G is not 2 x 4; Q8 / <-1> = 2^2 is not a base group.
  Group q8 = quaternion_group();
  CHECK_THROWS_AS(ne(q8, {2}), Error);
  for (const auto& c : subgroup_classes(q8))
    if (c.class_size == 1 && is_cyclic(q8.quotient(c.rep)))
      CHECK(classify_ne(with_kernel(q8, c.rep)).kind == NeCase::none);
  // Cyclic G is never a case.
  CHECK(ne(cyclic_group(8), {4}) == NeCase::none);
  CHECK_THROWS_AS(classify_ne(conic_data(d8, {4})), Error);  // <s> is not normal
  auto bad = conic_data(reference_2x2n(2), {});
  CHECK_THROWS_AS(classify_ne(bad), Error);  // G/1 = 2x4 is not cyclic
  auto g0 = conic_data(d8, {2, 4});
  g0.G0 = {0, 2};
  CHECK_THROWS_AS(classify_ne(g0), Error);
}

TEST_CASE("odd abelian groups are never a case") {
  for (int n = 3; n <= 63; n += 2)
    for (int a = 3; a * a <= n; a += 2) {
      if (n % (a * a)) continue;
      Group g = direct_product(cyclic_group(a), cyclic_group(n / a));
      if (is_cyclic(g)) continue;
      for (const auto& c : subgroup_classes(g)) {
        if (!is_cyclic(g.quotient(c.rep))) continue;
        INFO("n=" << n << " a=" << a);
        CHECK(classify_ne(with_kernel(g, c.rep)).kind == NeCase::none);
      }
    }
}

TEST_CASE("reference presentations are accepted in their own case only") {
  for (int m = 1; m <= 16; m *= 2)
    for (int q = 1; q <= 15; q += 2) {
      if (4 * m * q > 64) continue;
      const int n = m * q;
      Group a = reference_2x2n(n);
      Group b = reference_2m2_q(m, q);
      INFO("m=" << m << " q=" << q);
      CHECK(ne(a, {2 * n}) == NeCase::case_i);
      // G_K = 2^2 generated by (1, 0) and (0, n).
      CHECK(ne(a, {2 * n, n}) == NeCase::case_ii);
      if (m == 1) {
        // (2:2) x q = 2 x 2q: the third family collapses into the second.
        CHECK(isomorphic(a, b));
        continue;
      }
      // In (2m:2) x q, G_K = <g^m, x> with g = 1, x = 2m (times the identity of q).
      auto r = classify_ne(conic_data(b, {m * q, 2 * m * q}));
      CHECK(r.kind == NeCase::case_iii);
      CHECK(r.m == m);
      CHECK(r.q == q);
      // The central involutions do not give a cyclic base.
      CHECK_THROWS_AS(ne(b, central_involutions(b)), Error);
      CHECK_THROWS_AS(ne(b, {2 * m * q}), Error);  // <x> is not normal
    }
}

TEST_CASE("classifier agrees with the extension oracle") {
  int disagreements = 0, admissible = 0, total = 0;
  for (int a = 1; a <= 2; ++a) {
    auto exts = oracle::extensions(a, 64);
    auto adm = oracle::admissible_all(exts, jobs());
    for (std::size_t i = 0; i < exts.size(); ++i) {
      const auto& e = exts[i];
      if (e.group.order() < 4) continue;
      ++total;
      bool classified = classify_ne(with_kernel(e.group, e.kernel)).kind != NeCase::none;
      if (adm[i]) ++admissible;
      if (classified != static_cast<bool>(adm[i])) {
        ++disagreements;
        MESSAGE("disagreement: " << e.describe());
      }
    }
  }
  CHECK(total > 100);
  CHECK(admissible > 20);
  CHECK(disagreements == 0);
}

TEST_CASE("embeds_in_gl2_with_minus_id") {
  CHECK(embeds_in_gl2_with_minus_id(reference_2x2n(1)) == std::optional<bool>(true));
  CHECK(embeds_in_gl2_with_minus_id(dihedral_group(10)) == std::optional<bool>(false));
  CHECK(embeds_in_gl2_with_minus_id(reference_2m2(4)) == std::optional<bool>(true));
  CHECK(embeds_in_gl2_with_minus_id(quaternion_group()) == std::optional<bool>(true));
  CHECK(embeds_in_gl2_with_minus_id(cyclic_group(3)) == std::optional<bool>(false));
  // 2^3 has no faithful 2-dimensional representation.
  CHECK(embeds_in_gl2_with_minus_id(direct_product(reference_2x2n(1), cyclic_group(2))) ==
        std::optional<bool>(false));
}

TEST_CASE("classify_ex") {
  // D8 x 3 with G_K = D8 and G_0 the center of D8.
  Group d8 = dihedral_group(8);
  Group g = direct_product(d8, cyclic_group(3));
  auto d = conic_data(g, {3, 12});  // (r, 0), (s, 0)
  d.G0 = g.generate({6});           // (r^2, 0)
  REQUIRE(d.GK.size() == 8);
  auto r = classify_ex(d);
  CHECK(r.accepted);
  CHECK(r.cyclic_order % 3 == 0);

  // G_K = Q8 is neither dihedral nor cyclic.
  auto q = conic_data(quaternion_group(), {1, 4});
  q.G0 = {0, 2};
  CHECK_FALSE(classify_ex(q).accepted);

  // 2 x 2^2 with G_K = 2 gives G_B = 2^2.
  Group e = reference_2x2n(2);
  Group e8 = direct_product(reference_2x2n(1), cyclic_group(2));
  auto b = conic_data(e8, {1});
  b.G0 = b.GK;
  CHECK_FALSE(classify_ex(b).accepted);
  auto ok = conic_data(e, {4});
  ok.G0 = ok.GK;
  CHECK(classify_ex(ok).accepted);

  auto triv = conic_data(d8, {2, 4});
  CHECK_THROWS_AS(classify_ex(triv), Error);
  auto flagged = d;
  flagged.fixed_points = {{"p", false}};
  CHECK_THROWS_AS(classify_ex(flagged), Error);
}

TEST_CASE("classify_ex is monotone on subgroups meeting G_0") {
  Group d8 = dihedral_group(8);
  std::vector<ConicBundleGroupData> accepted;
  {
    auto d = conic_data(direct_product(d8, cyclic_group(3)), {3, 12});
    d.G0 = d.G.generate({6});
    accepted.push_back(d);
  }
  {
    auto d = conic_data(direct_product(dihedral_group(12), cyclic_group(4)), {4, 24});
    d.G0 = d.G.generate({12});  // (r^3, 0)
    accepted.push_back(d);
  }
  for (const auto& d : accepted) {
    REQUIRE(classify_ex(d).accepted);
    int checked = 0;
    for (const auto& c : subgroup_classes(d.G)) {
      auto h = restrict_data(d, c.rep);
      if (h.G0.size() <= 1 || h.GK.size() % 2) continue;
      ++checked;
      CHECK(classify_ex(h).accepted);
    }
    CHECK(checked > 3);
  }
}

TEST_CASE("faithful fibre action") {
  Group k = reference_2x2n(1);
  // Klein four-group in PGL(2): (i, j) -> s^i a^j.
  CycMatrix a{{1, 0}, {0, -1}}, s{{0, 1}, {1, 0}};
  auto P = [](const CycMatrix& m) { return GroupElement::projective(m); };
  std::vector<GroupElement> imgs;
  for (int x = 0; x < 4; ++x) {
    CycMatrix m = CycMatrix::identity(2);
    if (x >> 1) m = m * s;
    if (x & 1) m = m * a;
    imgs.push_back(P(m));
  }
  auto klein = conic_data(k, {1, 2});
  CHECK(faithful_fiber_check(klein, imgs));
  // (0, 1) acting trivially.
  auto bad = imgs;
  bad[1] = P(CycMatrix::identity(2));
  bad[3] = bad[2];
  CHECK_FALSE(faithful_fiber_check(klein, bad));
  CHECK(faithful_fiber_check(conic_data(k, {}), {P(CycMatrix::identity(2))}));
}

TEST_CASE("exceptional model") {
  ExceptionalModelParams p;
  p.g = 1;
  p.H.n = 4;
  p.H.coeffs = {Cyclotomic(1), Cyclotomic(0), Cyclotomic(0), Cyclotomic(0), Cyclotomic(-1)};  // v^4 - u^4
  CHECK(exceptional_singular_fibers(p) == 4);
  p.H.coeffs = {Cyclotomic(0), Cyclotomic(0), Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)};
  CHECK_THROWS_AS(exceptional_singular_fibers(p), Error);
  p.g = 2;
  CHECK_THROWS_AS(exceptional_singular_fibers(p), Error);
}

TEST_CASE("blow-up of a fixed point on a degree 4 surface") {
  auto ex = conic_blowup_example();
  CHECK(ex.fixed_on_surface == 4);
  CHECK_FALSE(ex.point_on_line);
  CHECK(ex.tangent_fixed_directions == 2);
  CHECK(ex.base_action_trivial);
  CHECK(ex.singular_fibers == 5);
  CHECK(ex.fixed_points == 5);
  CHECK(ex.faithful);
  CHECK(ex.fixed_points_on_singular_fibres);
  auto r = classify_ne(ex.data);
  CHECK(r.gk == "2^2");
  CHECK(r.kind == NeCase::case_ii);
}
