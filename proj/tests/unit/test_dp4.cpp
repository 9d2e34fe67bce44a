#include <doctest.h>

#include <set>

#include "cfl/groups/catalog.hpp"
#include "cfl/lefschetz/lefschetz.hpp"
#include "cfl/surfaces/dp4.hpp"
#include "cfl/surfaces/projective.hpp"

using namespace cfl;

namespace {

const DP4Data& data() {
  static const DP4Data d = dp4_data();
  return d;
}

int el(const std::string& name) { return data().named.at(name); }

int mul(int a, int b) { return data().group.table().mul(a, b); }

Subset gen(std::initializer_list<int> xs) { return data().group.table().generate(std::vector<int>(xs)); }

std::vector<CycMatrix> matrices(const Subset& s) {
  std::vector<CycMatrix> out;
  for (int i : s) out.push_back(data().group.element(i).mat());
  return out;
}

const CycVector kP{Cyclotomic(1), Cyclotomic(1), Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)};

}  // namespace

TEST_CASE("degree 4 labels and involutions") {
  auto labels = dp4_labels();
  CHECK(labels.size() == 16);
  CHECK(std::set<std::string>(labels.begin(), labels.end()).size() == 16);
  PicLattice lat(4);
  auto cls = exceptional_classes(4);
  for (int k = 1; k <= 5; ++k) {
    Perm p = dp4_iota_perm({k});
    CHECK(perm_compose(p, p) == perm_identity(16));
    CHECK(p[dp4_class_index("R" + std::to_string(k))] == dp4_class_index("R0"));
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) CHECK(lat.dot(cls[i], cls[j]) == lat.dot(cls[p[i]], cls[p[j]]));
  }
  // Even involutions commute.
  for (int k = 1; k <= 5; ++k)
    for (int l = k + 1; l <= 5; ++l) {
      Perm a = dp4_iota_perm({k, l});
      for (int m = 1; m <= 5; ++m)
        for (int n = m + 1; n <= 5; ++n) {
          Perm b = dp4_iota_perm({m, n});
          CHECK(perm_compose(a, b) == perm_compose(b, a));
        }
    }
  auto iso = dp4_isometries();
  CHECK(iso.at("iota1").trace_r() == -3);
  CHECK(iso.at("iota12").trace_r() == 1);
  auto g1 = iso.at("g1");
  CHECK(!(g1 == LatticeIsometry::identity(4)));
  CHECK(g1 * g1 * g1 == LatticeIsometry::identity(4));
}

TEST_CASE("degree 4 automorphism group") {
  const auto& d = data();
  CHECK(d.group.order() == 96);
  CHECK(Catalog::builtin().identify(d.group.table()) == "2^4:S3");
  Subset two4 = gen({el("iota1"), el("iota2"), el("iota3"), el("iota4"), el("iota5")});
  CHECK(two4.size() == 16);
  CHECK(Catalog::builtin().identify(d.group.table().induced(two4)) == "2^4");
  CHECK(d.group.table().element_order(el("g1")) == 3);
  CHECK(character_orthogonality(d.iso));
  CHECK(invariant_rank(d.iso) == 0);
}

TEST_CASE("degree 4 Lefschetz agreement") {
  const auto& d = data();
  CHECK(dp4_fixed_locus(d.model, d.group.element(el("iota4")).mat()).curve_genera == std::vector<int>{1});
  auto fl = dp4_fixed_locus(d.model, d.group.element(mul(el("iota4"), el("iota5"))).mat());
  CHECK(fl.s == 4);
  CHECK(fl.curve_genera.empty());
  int checked = 0;
  for (int i = 1; i < d.group.order(); ++i) {
    FixedLocus f;
    try {
      f = dp4_fixed_locus(d.model, d.group.element(i).mat());
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::unsupported);
      continue;
    }
    CAPTURE(i);
    CHECK(trace_from_fixed_locus(f) == d.iso[i].trace_r());
    ++checked;
  }
  CHECK(checked >= 15);
  MESSAGE("fixed-locus traces checked on " << checked << " of 95 elements");
}

TEST_CASE("degree 4 groups fixing (1:1:1:0:0)") {
  const auto& d = data();
  Subset st = stabilizer_subset(d.group, kP);
  CHECK(st.size() == 24);
  Group stg = d.group.table().induced(st);
  CHECK(Catalog::builtin().identify(stg) == "2^2:S3");

  int g1 = el("g1"), g2 = el("g2"), i4 = el("iota4"), i5 = el("iota5");
  Subset a = gen({g2, g1, i4});
  Subset b = gen({mul(g2, i4), g1});
  Subset c = gen({g2, g1, mul(i4, i5)});
  CHECK(Catalog::builtin().identify(d.group.table().induced(a)) == "2^2:S3");
  CHECK(Catalog::builtin().identify(d.group.table().induced(b)) == "3:4");
  CHECK(Catalog::builtin().identify(d.group.table().induced(c)) == "S3x2");
  auto iso_of = [&](const Subset& s) {
    std::vector<LatticeIsometry> v;
    for (int i : s) v.push_back(d.iso[i]);
    return v;
  };
  CHECK(invariant_rank(iso_of(a)) == 0);
  CHECK(invariant_rank(iso_of(b)) == 0);
  CHECK(invariant_rank(iso_of(c)) >= 1);
  CHECK(dp4_fixed_point_count(d.model, matrices(a)) == 1);
  CHECK(dp4_fixed_point_count(d.model, matrices(b)) == 1);

  // Four subgroups of order 3, all conjugate.
  std::set<Subset> order3;
  for (int x = 0; x < d.group.order(); ++x)
    if (d.group.table().element_order(x) == 3) order3.insert(gen({x}));
  CHECK(order3.size() == 4);
  std::set<Subset> conj;
  for (int x = 0; x < d.group.order(); ++x) conj.insert(d.group.table().conjugate(gen({g1}), x));
  CHECK(conj == order3);
  CHECK(order3.count(gen({mul(g1, mul(el("iota1"), el("iota2")))})) == 1);

  // Minimal, non-abelian, unique fixed point.
  std::vector<LatticeIsometry> iso;
  for (int i : st) iso.push_back(d.iso[i]);
  ClassifyOptions opt;
  opt.fixed_point = [&](const Subset& s) {
    std::vector<CycMatrix> m;
    for (int i : s) m.push_back(d.group.element(st[i]).mat());
    return dp4_fixed_point_count(d.model, m) == 1;
  };
  std::multiset<std::string> case4;
  for (const auto& v : classify_minimal_fixed(stg, iso, opt)) {
    if (v.verdict == Verdict::minimal_fixed && !stg.induced(v.elements).is_abelian()) case4.insert(v.label);
    if (v.label == "S3x2") CHECK(!v.minimal());
  }
  CHECK(case4 == std::multiset<std::string>{"2^2:S3", "3:4"});
}

TEST_CASE("equianharmonic curves through p") {
  auto x = dp4_model();
  CHECK(on_surface(x, kP));
  std::vector<int> through;
  for (int k = 0; k < 5; ++k)
    if (kP[k].is_zero()) through.push_back(k);
  CHECK(through == std::vector<int>{3, 4});
  for (int k : through) CHECK(dp4_curve_j(x, k) == Cyclotomic(0));
  CHECK(!(dp4_curve_j(x, 0) == Cyclotomic(0)));
  // Diagonal form: every involution of the first kind fixes a genus 1 curve.
  auto y = dp4_diagonal_model({Cyclotomic(0), Cyclotomic(1), Cyclotomic(2), Cyclotomic(3), Cyclotomic(5)});
  CycMatrix i1 = CycMatrix::identity(5);
  i1(0, 0) = Cyclotomic(-1);
  CHECK(preserves_pencil(y, i1));
  CHECK(trace_from_fixed_locus(dp4_fixed_locus(y, i1)) == -3);
  CHECK_THROWS_AS(dp4_diagonal_model({Cyclotomic(0), Cyclotomic(0), Cyclotomic(2), Cyclotomic(3), Cyclotomic(5)}), Error);
}
