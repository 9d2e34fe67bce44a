#include "cfl/conic/conic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "cfl/error.hpp"
#include "cfl/groups/catalog.hpp"
#include "cfl/lattice/lattice.hpp"
#include "cfl/surfaces/dp4.hpp"
#include "cfl/surfaces/projective.hpp"

namespace cfl {

namespace {

bool contains(const Subset& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

int two_part(int n) {
  int m = 1;
  while (n % 2 == 0) {
    n /= 2;
    m *= 2;
  }
  return m;
}

bool elementary_two(const Group& g) {
  for (int x = 1; x < g.order(); ++x)
    if (g.element_order(x) != 2) return false;
  return true;
}

std::string type_label(const Group& g) {
  if (g.order() == 1) return "1";
  if (is_cyclic(g)) return std::to_string(g.order());
  if (elementary_two(g)) return g.order() == 4 ? "2^2" : "2^" + std::to_string(__builtin_ctz(g.order()));
  if (auto l = Catalog::builtin().try_identify(g)) return *l;
  return "order " + std::to_string(g.order());
}

std::vector<Subset> normal_subgroups(const Group& g) {
  std::vector<Subset> out;
  for (const auto& c : subgroup_classes(g))
    if (c.class_size == 1) out.push_back(c.rep);
  return out;
}

Subset intersect(const Subset& a, const Subset& b) {
  Subset r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

// Monomial 2x2 matrices with N-th root of unity entries: s = 0 is
// diag(z^a0, z^a1), s = 1 is [[0, z^a0], [z^a1, 0]].
struct Mono {
  int s = 0, a0 = 0, a1 = 0;
  auto operator<=>(const Mono&) const = default;
};

Mono mono_mul(const Mono& x, const Mono& y, int n) {
  if (x.s == 0) return {y.s, (x.a0 + y.a0) % n, (x.a1 + y.a1) % n};
  return {1 - y.s, (x.a0 + y.a1) % n, (x.a1 + y.a0) % n};
}

int mono_order(const Mono& x, int n) {
  Mono p = x;
  for (int k = 1;; ++k) {
    if (p.s == 0 && p.a0 == 0 && p.a1 == 0) return k;
    p = mono_mul(p, x, n);
  }
}

int mono_code(const Mono& x, int n) { return (x.s * n + x.a0) * n + x.a1; }

// Extends the images of gens[0..k) to the subgroup they generate; false on a
// conflict or a non-injective assignment.
bool extend_mono(const Group& g, const std::vector<int>& gens, const std::vector<Mono>& imgs, int n,
                 std::vector<int>& code_of) {
  code_of.assign(g.order(), -1);
  std::vector<Mono> img(g.order());
  std::set<int> used;
  code_of[0] = mono_code({}, n);
  used.insert(code_of[0]);
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (std::size_t j = 0; j < imgs.size(); ++j) {
      int y = g.mul(x, gens[j]);
      Mono m = mono_mul(img[x], imgs[j], n);
      int c = mono_code(m, n);
      if (code_of[y] >= 0) {
        if (code_of[y] != c) return false;
        continue;
      }
      if (!used.insert(c).second) return false;
      code_of[y] = c;
      img[y] = m;
      queue.push_back(y);
    }
  }
  return true;
}

int exponent_of(const Group& g) {
  int e = 1;
  for (int o : g.element_orders()) e = std::lcm(e, o);
  return e;
}

bool monomial_with_minus_id(const Group& g) {
  const int n = exponent_of(g);
  if (n % 2 != 0) return false;
  const std::vector<int> gens = g.small_generating_set();
  std::map<int, std::vector<Mono>> by_order;
  for (int s = 0; s < 2; ++s)
    for (int a0 = 0; a0 < n; ++a0)
      for (int a1 = 0; a1 < n; ++a1) {
        Mono m{s, a0, a1};
        by_order[mono_order(m, n)].push_back(m);
      }
  const int minus_id = mono_code({0, n / 2, n / 2}, n);
  std::vector<Mono> imgs;
  std::vector<int> code_of;
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      if (!extend_mono(g, gens, imgs, n, code_of)) return false;
      return std::find(code_of.begin(), code_of.end(), minus_id) != code_of.end();
    }
    for (const Mono& m : by_order[g.element_order(gens[k])]) {
      // Conjugating by the swap or by a diagonal matrix normalizes the first image.
      if (k == 0 && ((m.s == 0 && m.a0 > m.a1) || (m.s == 1 && m.a0 != 0))) continue;
      imgs.push_back(m);
      std::vector<int> sub(gens.begin(), gens.begin() + static_cast<long>(k) + 1);
      bool ok = extend_mono(g, sub, imgs, n, code_of) && rec(k + 1);
      imgs.pop_back();
      if (ok) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

const char* ne_case_name(NeCase c) noexcept {
  switch (c) {
    case NeCase::case_i: return "case_i";
    case NeCase::case_ii: return "case_ii";
    case NeCase::case_iii: return "case_iii";
    case NeCase::none: return "none";
  }
  return "?";
}

Group conic_base_group(const ConicBundleGroupData& d) {
  const Group& g = d.G;
  if (!g.is_subgroup(d.GK) || !g.is_normal(d.GK)) throw Error(ErrorCode::inconsistent, "G_K is not a normal subgroup");
  if (!g.is_subgroup(d.G0) || !g.is_normal(d.G0)) throw Error(ErrorCode::inconsistent, "G_0 is not a normal subgroup");
  for (int x : d.G0)
    if (!contains(d.GK, x)) throw Error(ErrorCode::inconsistent, "G_0 is not contained in G_K");
  return g.quotient(d.GK);
}

ConicBundleGroupData conic_data(Group g, const std::vector<int>& gk) {
  ConicBundleGroupData d;
  d.GK = g.generate(gk);
  d.G = std::move(g);
  return d;
}

Group cyclic_group(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "cyclic_group: n < 1");
  return Group::from_function(n, [n](int a, int b) { return (a + b) % n; });
}

Group direct_product(const Group& a, const Group& b) {
  const int nb = b.order();
  return Group::from_function(a.order() * nb, [&](int x, int y) {
    return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  });
}

Group reference_2x2n(int n) { return direct_product(cyclic_group(2), cyclic_group(2 * n)); }

Group reference_2m2(int m) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "reference_2m2: m < 1");
  const int k = 2 * m;
  const int r = m == 1 ? 1 : (m + 1) % k;
  // g^i x^e has index i + k e; x g x^-1 = g^r and x^2 = 1.
  return Group::from_function(2 * k, [=](int a, int b) {
    int i1 = a % k, e1 = a / k, i2 = b % k, e2 = b / k;
    int i = (i1 + (e1 ? i2 * r : i2)) % k;
    return i + k * (e1 ^ e2);
  });
}

Group reference_2m2_q(int m, int q) { return direct_product(reference_2m2(m), cyclic_group(q)); }

Group dihedral_group(int order) {
  if (order < 4 || order % 2) throw Error(ErrorCode::invalid_argument, "dihedral_group: order must be even and >= 4");
  const int k = order / 2;
  return Group::from_function(order, [=](int a, int b) {
    int i1 = a % k, e1 = a / k, i2 = b % k, e2 = b / k;
    int i = (i1 + (e1 ? k - i2 : i2)) % k;
    return i + k * (e1 ^ e2);
  });
}

Group quaternion_group() {
  // a^i b^e, a^4 = 1, b^2 = a^2, b a b^-1 = a^-1.
  return Group::from_function(8, [](int a, int b) {
    int i1 = a % 4, e1 = a / 4, i2 = b % 4, e2 = b / 4;
    int i = i1 + (e1 ? 4 - i2 : i2) + (e1 && e2 ? 2 : 0);
    return i % 4 + 4 * (e1 ^ e2);
  });
}

bool isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  if (fingerprint(a) != fingerprint(b)) return false;
  if (a.is_abelian()) return abelian_invariants(a) == abelian_invariants(b);
  return find_isomorphism(a, b).has_value();
}

bool is_dihedral(const Group& g) {
  const int n = g.order();
  if (n < 4 || n % 2) return false;
  const int k = n / 2;
  for (int r = 0; r < n; ++r) {
    if (g.element_order(r) != k) continue;
    Subset rot = g.generate({r});
    for (int s = 0; s < n; ++s)
      if (!contains(rot, s) && g.element_order(s) == 2 && g.conj(r, s) == g.inv(r)) return true;
    return false;  // every other rotation generator gives the same answer
  }
  return false;
}

std::optional<bool> embeds_in_gl2_with_minus_id(const Group& g) {
  if (g.order() > 1000) throw Error(ErrorCode::budget_exceeded, "embeds_in_gl2_with_minus_id: |G| > 1000");
  if (monomial_with_minus_id(g)) return true;
  // Finite subgroups of GL(2) are monomial unless their image in PGL(2) is
  // A4, S4 or A5, and that image is then a quotient of G/Z(G).
  Group c = g.quotient(g.center());
  auto l = Catalog::builtin().try_identify(c);
  if (l && (*l == "A4" || *l == "S4" || *l == "A5")) return std::nullopt;
  return false;
}

NeResult classify_ne(const ConicBundleGroupData& d) {
  if (d.G0.size() != 1) throw Error(ErrorCode::invalid_argument, "classify_ne: G_0 must be trivial");
  Group base = conic_base_group(d);
  if (!is_cyclic(base)) throw Error(ErrorCode::inconsistent, "classify_ne: G/G_K is not cyclic");
  NeResult r;
  Group gk = d.G.induced(d.GK);
  r.gk = type_label(gk);
  if (is_cyclic(d.G)) {
    r.note = "G is cyclic";
    return r;
  }
  if (d.G.order() % 4) {
    r.note = "|G| is not divisible by 4";
    return r;
  }
  r.n = d.G.order() / 4;
  r.m = two_part(r.n);
  r.q = r.n / r.m;
  if (r.gk == "2") {
    if (isomorphic(d.G, reference_2x2n(r.n))) r.kind = NeCase::case_i;
    else r.note = "G_K = 2 but G is not 2x2n";
  } else if (r.gk == "2^2") {
    if (isomorphic(d.G, reference_2x2n(r.n))) {
      r.kind = NeCase::case_ii;
    } else if (r.m >= 2 && isomorphic(d.G, reference_2m2_q(r.m, r.q))) {
      r.kind = NeCase::case_iii;
      if (r.m == 2 && r.q == 1) r.note = "G = D8 = (2*2):2";
    } else {
      r.note = "G_K = 2^2 but G is neither 2x2n nor (2m:2)xq";
    }
  } else {
    r.note = "G_K is not 2 or 2^2";
  }
  return r;
}

ExResult classify_ex(const ConicBundleGroupData& d) {
  if (d.G0.size() <= 1) throw Error(ErrorCode::invalid_argument, "classify_ex: G_0 must be nontrivial");
  Group base = conic_base_group(d);
  for (const auto& p : d.fixed_points)
    if (!p.singular_point_of_singular_fibre)
      throw Error(ErrorCode::inconsistent, "fixed point off the singular points of singular fibres: " + p.description);
  ExResult r;
  Group gk = d.G.induced(d.GK);
  if (!(is_dihedral(gk) || (is_cyclic(gk) && gk.order() % 2 == 0)))
    r.reasons.push_back("G_K = " + type_label(gk) + " is neither dihedral nor cyclic of even order");
  if (!is_cyclic(base)) r.reasons.push_back("G_B = " + type_label(base) + " is not cyclic");
  if (r.reasons.empty()) {
    // G embeds in D_2m x n iff G/N1 is cyclic and G/N2 cyclic or dihedral for
    // normal subgroups with N1 n N2 = 1.
    std::vector<Subset> normals = normal_subgroups(d.G);
    std::vector<std::pair<Subset, int>> cyc, dih;
    for (const auto& n : normals) {
      Group q = d.G.quotient(n);
      if (is_cyclic(q)) {
        cyc.push_back({n, q.order()});
        dih.push_back({n, q.order() == 1 ? 2 : 2 * q.order()});
      } else if (is_dihedral(q)) {
        dih.push_back({n, q.order()});
      }
    }
    for (const auto& [n1, c] : cyc) {
      for (const auto& [n2, m2] : dih)
        if (intersect(n1, n2).size() == 1) {
          r.accepted = true;
          r.cyclic_order = c;
          r.dihedral_order = m2;
          break;
        }
      if (r.accepted) break;
    }
    if (!r.accepted) r.reasons.push_back("G does not embed in any D_2m x n");
  }
  return r;
}

ConicBundleGroupData restrict_data(const ConicBundleGroupData& d, const Subset& h) {
  std::vector<int> order;
  ConicBundleGroupData out;
  out.G = d.G.induced(h, &order);
  std::vector<int> pos(d.G.order(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  auto map = [&](const Subset& s) {
    Subset r;
    for (int x : intersect(s, h)) r.push_back(pos[x]);
    std::sort(r.begin(), r.end());
    return r;
  };
  out.GK = map(d.GK);
  out.G0 = map(d.G0);
  out.singular_fibers = d.singular_fibers;
  return out;
}

bool faithful_fiber_check(const ConicBundleGroupData& d, const std::vector<GroupElement>& fiber_images) {
  if (fiber_images.size() != d.GK.size())
    throw Error(ErrorCode::dimension_mismatch, "faithful_fiber_check: one image per element of G_K expected");
  if (d.GK.size() == 1) return true;
  const int cond = [&] {
    int c = 1;
    for (const auto& e : fiber_images) c = std::lcm(c, e.conductor());
    return c;
  }();
  std::map<int, std::string> key;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < d.GK.size(); ++i) {
    key[d.GK[i]] = fiber_images[i].key(cond);
    if (!seen.insert(key[d.GK[i]]).second) return false;
  }
  for (std::size_t i = 0; i < d.GK.size(); ++i)
    for (std::size_t j = 0; j < d.GK.size(); ++j) {
      int p = d.G.mul(d.GK[i], d.GK[j]);
      if ((fiber_images[i] * fiber_images[j]).key(cond) != key.at(p)) return false;
    }
  return true;
}

int exceptional_singular_fibers(const ExceptionalModelParams& p) {
  if (p.g < 1) throw Error(ErrorCode::invalid_argument, "exceptional model: g must be positive");
  if (p.H.n != 2 * p.g + 2 || p.H.coeffs.size() != static_cast<std::size_t>(p.H.n + 1))
    throw Error(ErrorCode::invalid_argument, "exceptional model: H must have degree 2g+2");
  if (p.H.is_zero() || p.H.distinct_zero_count() != p.H.n)
    throw Error(ErrorCode::invalid_argument, "exceptional model: H is not squarefree");
  // Over a zero of H the fibre t2 t3 = 0 is a pair of lines; elsewhere a smooth conic.
  return p.H.n;
}

BlowupExample conic_blowup_example() {
  using Z = Cyclotomic;
  BlowupExample ex;
  DP4Model x = dp4_diagonal_model({Z(1), Z(2), Z(0), Z(-25), Z(-16)});
  const Z i = Z::root_of_unity(4, 1);
  CycVector p{Z(0), Z(0), Z(3), Z(4), Z(5) * i};
  if (!on_surface(x, p)) throw Error(ErrorCode::inconsistent, "blow-up example: point not on X");
  auto iota = [](int k) {
    CycMatrix m = CycMatrix::identity(5);
    m(k, k) = Z(-1);
    return m;
  };
  std::vector<CycMatrix> gens{iota(0), iota(1)};
  for (const auto& g : gens)
    if (!fixes_point(g, p)) throw Error(ErrorCode::inconsistent, "blow-up example: p not fixed");
  ex.fixed_on_surface = dp4_fixed_point_count(x, gens);

  CycVector ap = x.A.apply(p), bp = x.B.apply(p);
  CycMatrix forms(2, 5);
  for (int c = 0; c < 5; ++c) {
    forms(0, c) = ap[c];
    forms(1, c) = bp[c];
  }
  // T_p (affine, containing p) and a complement of p inside it.
  std::vector<CycVector> tangent = forms.nullspace();
  std::vector<CycVector> comp;
  for (const auto& v : tangent) {
    CycMatrix span(5, comp.size() + 2);
    for (int r = 0; r < 5; ++r) {
      span(r, 0) = p[r];
      for (std::size_t j = 0; j < comp.size(); ++j) span(r, j + 1) = comp[j][r];
      span(r, comp.size() + 1) = v[r];
    }
    if (span.rank() == comp.size() + 2) comp.push_back(v);
  }
  if (comp.size() != 2) throw Error(ErrorCode::inconsistent, "blow-up example: tangent plane is not 2-dimensional");

  // Lines through p have directions v in T_p with q_A(v) = q_B(v) = 0.
  auto bil = [](const CycMatrix& m, const CycVector& u, const CycVector& v) {
    CycVector mv = m.apply(v);
    Z s(0);
    for (std::size_t k = 0; k < u.size(); ++k) s = s + u[k] * mv[k];
    return s;
  };
  auto restricted = [&](const CycMatrix& m) {
    BinaryForm f;
    f.n = 2;
    f.coeffs = {bil(m, comp[1], comp[1]), Z(2) * bil(m, comp[0], comp[1]), bil(m, comp[0], comp[0])};
    return f;
  };
  ex.point_on_line = common_zero_count(restricted(x.A), restricted(x.B)) != 0;

  // Action on T_p / p in the basis comp.
  CycMatrix basis(5, 3);
  for (int r = 0; r < 5; ++r) {
    basis(r, 0) = p[r];
    basis(r, 1) = comp[0][r];
    basis(r, 2) = comp[1][r];
  }
  std::vector<CycMatrix> tangent_action;
  for (const auto& g : gens) {
    CycMatrix t(2, 2);
    for (int j = 0; j < 2; ++j) {
      auto sol = basis.solve(g.apply(comp[j]));
      if (!sol) throw Error(ErrorCode::inconsistent, "blow-up example: T_p not invariant");
      t(0, j) = (*sol)[1];
      t(1, j) = (*sol)[2];
    }
    tangent_action.push_back(t);
  }
  ex.tangent_fixed_directions = 0;
  for (const auto& e : common_eigenspaces(tangent_action)) {
    if (e.dim() > 1) throw Error(ErrorCode::unsupported, "blow-up example: G acts by scalars on a tangent plane");
    ++ex.tangent_fixed_directions;
  }
  ex.fixed_points = ex.fixed_on_surface - 1 + ex.tangent_fixed_directions;

  // Fibres are the residual curves of the hyperplanes (A p + l B p) . t = 0,
  // which contain the tangent plane at p.
  // G acts on the pencil through the dual action on span(A p, B p); it is
  // trivial iff that action is scalar.
  ex.base_action_trivial = true;
  CycVector sum = ap;
  for (int c = 0; c < 5; ++c) sum[c] = ap[c] + bp[c];
  for (const auto& g : gens) {
    CycMatrix gt = g.transpose();
    if (!fixes_point(gt, ap) || !fixes_point(gt, bp) || !fixes_point(gt, sum)) ex.base_action_trivial = false;
  }

  PicLattice lat(3);
  PicVec f = lat.zero() - lat.canonical() - lat.e(6);
  ex.singular_fibers = singular_fiber_count(f, 3);

  // Restrict to the hyperplane of a sample fibre; the fibre spans it, so an
  // element is trivial on the fibre iff it is scalar on the hyperplane.
  CycVector form = ap;
  for (int c = 0; c < 5; ++c) form[c] = ap[c] + Z(3) * bp[c];
  CycMatrix row(1, 5);
  for (int c = 0; c < 5; ++c) row(0, c) = form[c];
  std::vector<CycVector> hyp = row.nullspace();
  CycMatrix hb(5, hyp.size());
  for (int r = 0; r < 5; ++r)
    for (std::size_t j = 0; j < hyp.size(); ++j) hb(r, j) = hyp[j][r];
  std::vector<GroupElement> elems{GroupElement::projective(CycMatrix::identity(5))};
  for (const auto& g : gens) elems.push_back(GroupElement::projective(g));
  elems.push_back(elems[1] * elems[2]);
  FiniteGroup grp = closure(elems, 8);

  ex.data.G = grp.table();
  ex.data.GK = ex.data.G.all();
  ex.data.singular_fibers = ex.singular_fibers;
  std::vector<GroupElement> images;
  for (int e : ex.data.GK) {
    const CycMatrix& m = grp.element(e).mat();
    CycMatrix r(hyp.size(), hyp.size());
    for (std::size_t j = 0; j < hyp.size(); ++j) {
      auto sol = hb.solve(m.apply(hyp[j]));
      if (!sol) throw Error(ErrorCode::inconsistent, "blow-up example: hyperplane not invariant");
      for (std::size_t k = 0; k < hyp.size(); ++k) r(k, j) = (*sol)[k];
    }
    images.push_back(GroupElement::projective(r));
  }
  ex.faithful = faithful_fiber_check(ex.data, images);

  // A faithful 2^2 on a smooth rational fibre has no fixed point, and the node
  // of each invariant singular fibre is fixed; with as many fixed points as
  // singular fibres, every fixed point is such a node.
  ex.fixed_points_on_singular_fibres = ex.faithful && ex.base_action_trivial && ex.fixed_points == ex.singular_fibers;
  for (int k = 0; k < ex.fixed_points; ++k)
    ex.data.fixed_points.push_back({"fixed point " + std::to_string(k + 1), ex.fixed_points_on_singular_fibres});
  return ex;
}

}  // namespace cfl
