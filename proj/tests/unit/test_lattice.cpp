#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "cfl/lattice/lattice.hpp"
#include "cfl/lattice/weyl.hpp"

using namespace cfl;

namespace {

// Independent oracle: plain nested-loop search over a fixed box.
int brute_count(int d, int square, int kdot) {
  PicLattice lat(d);
  int n = lat.rank();
  int count = 0;
  PicVec v(n, -4);
  v[0] = -2;
  for (;;) {
    if (lat.self(v) == square && lat.dot(v, lat.canonical()) == kdot) ++count;
    int i = n - 1;
    while (i >= 0) {
      int hi = i == 0 ? 8 : 4;
      int lo = i == 0 ? -2 : -4;
      if (++v[i] <= hi) break;
      v[i] = lo;
      --i;
    }
    if (i < 0) break;
  }
  return count;
}

}  // namespace

TEST_CASE("exceptional class and root counts") {
  const int ex[] = {240, 56, 27, 16, 10, 6, 3};
  for (int d = 1; d <= 7; ++d) CHECK(exceptional_classes(d).size() == static_cast<std::size_t>(ex[d - 1]));
  const int rt[] = {240, 126, 72, 40, 20, 8};
  for (int d = 1; d <= 6; ++d) CHECK(roots(d).size() == static_cast<std::size_t>(rt[d - 1]));
  CHECK_THROWS_AS(exceptional_classes(8), Error);
  CHECK_THROWS_AS(roots(7), Error);
}

TEST_CASE("bounded enumeration agrees with a box search") {
  for (int d = 3; d <= 6; ++d) {
    CHECK(brute_count(d, -1, -1) == static_cast<int>(exceptional_classes(d).size()));
    CHECK(brute_count(d, -2, 0) == static_cast<int>(roots(d).size()));
  }
}

TEST_CASE("degree 5 intersection graph is the Kneser graph") {
  auto ex = exceptional_classes(5);
  PicLattice lat(5);
  std::set<int> degrees;
  for (const auto& a : ex) {
    int deg = 0;
    for (const auto& b : ex)
      if (lat.dot(a, b) == 1) ++deg;
    degrees.insert(deg);
  }
  CHECK(degrees == std::set<int>{3});
}

TEST_CASE("isometries from class maps") {
  auto ex = exceptional_classes(4);
  std::vector<int> id(ex.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  auto m = isometry_from_line_permutation(id, 4);
  CHECK(m == LatticeIsometry::identity(4));
  CHECK(m.trace_r() == 5);
  std::vector<int> bad = id;
  std::swap(bad[0], bad[1]);
  CHECK_THROWS_AS(isometry_from_line_permutation(bad, 4), Error);
  PicLattice lat(4);
  CHECK_THROWS_AS(isometry_from_class_map(4, {lat.e(1)}, {lat.e(2)}), Error);
}

TEST_CASE("reflections and invariant rank") {
  auto r = LatticeIsometry::reflection(3, simple_roots(3)[1]);
  CHECK((r * r) == LatticeIsometry::identity(3));
  CHECK(r.trace_r() == 4);
  CHECK(r.determinant() == -1);
  std::vector<LatticeIsometry> g{LatticeIsometry::identity(3)};
  CHECK(invariant_rank(g) == 6);
  g.push_back(r);
  CHECK(invariant_rank(g) == 5);
  CHECK(trace_sum(g) == 2 * invariant_rank(g));
}

TEST_CASE("singular fibers of conic classes") {
  PicLattice l3(3);
  // -K minus a line: 3e0 - 2e1 - e2 - ... - e6
  PicVec f{3, -2, -1, -1, -1, -1, -1};
  CHECK(singular_fiber_count(f, 3) == 5);
  PicVec ruling{1, -1};
  CHECK(singular_fiber_count(ruling, 8) == 0);
  PicVec f4{1, -1, 0, 0, 0, 0};
  CHECK(singular_fiber_count(f4, 4) == 4);
  CHECK_THROWS_AS(singular_fiber_count(PicVec{1, 0, 0, 0, 0, 0}, 4), Error);
}

TEST_CASE("Weyl closure orders and cache round trip") {
  CHECK(weyl_closure(6).order() == 12);
  CHECK(weyl_closure(5).order() == 120);
  CHECK(weyl_closure(4).order() == 1920);
  CHECK(weyl_order_only(4).order() == 1920);
  CHECK(weyl_order_only(3).order() == 51840);
  auto dir = std::filesystem::temp_directory_path() / "cfl_weyl_test";
  std::filesystem::remove_all(dir);
  auto w = weyl_closure_cached(4, dir);
  auto again = weyl_closure_cached(4, dir);
  CHECK(again.order() == 1920);
  CHECK(again.raw() == w.raw());
  auto file = weyl_cache_file(dir, 4);
  std::filesystem::resize_file(file, std::filesystem::file_size(file) - 7);
  try {
    read_weyl_cache(file);
    FAIL("truncated cache accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cache_corrupt);
  }
  try {
    read_weyl_cache(dir / "absent.wcls");
    FAIL("missing cache accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cache_missing);
  }
  std::filesystem::remove_all(dir);
}
