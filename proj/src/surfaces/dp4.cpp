#include "cfl/surfaces/dp4.hpp"

#include <algorithm>
#include <functional>

#include "cfl/exact/upoly.hpp"
#include "cfl/surfaces/projective.hpp"

namespace cfl {

namespace {

Cyclotomic eps() { return Cyclotomic::root_of_unity(3, 1); }

CycMatrix diag(const std::vector<Cyclotomic>& d) {
  CycMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool is_diagonal(const CycMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

Cyclotomic quad(const CycMatrix& a, const CycVector& p) {
  CycVector ap = a.apply(p);
  Cyclotomic s(0);
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * ap[i];
  return s;
}

struct Label {
  int kind;  // 0: R0, 1: R_i, 2: R_ij
  int i, j;  // 1-based
};

Label parse_label(const std::string& s) {
  if (s == "R0") return {0, 0, 0};
  if (s.size() == 2) return {1, s[1] - '0', 0};
  return {2, s[1] - '0', s[2] - '0'};
}

std::string label_name(Label l) {
  if (l.kind == 0) return "R0";
  if (l.kind == 1) return "R" + std::to_string(l.i);
  int a = std::min(l.i, l.j), b = std::max(l.i, l.j);
  return "R" + std::to_string(a) + std::to_string(b);
}

std::string iota_image(const std::string& s, int k) {
  Label l = parse_label(s);
  if (l.kind == 0) return label_name({1, k, 0});
  if (l.kind == 1) return l.i == k ? "R0" : label_name({2, l.i, k});
  if (l.i == k) return label_name({1, l.j, 0});
  if (l.j == k) return label_name({1, l.i, 0});
  std::vector<int> rest;
  for (int x = 1; x <= 5; ++x)
    if (x != k && x != l.i && x != l.j) rest.push_back(x);
  return label_name({2, rest[0], rest[1]});
}

Perm perm_from_labels(const std::function<std::string(const std::string&)>& f) {
  auto labels = dp4_labels();
  Perm p(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) p[i] = dp4_class_index(f(labels[i]));
  return p;
}

CycMatrix basis_matrix(const std::vector<CycVector>& basis) {
  CycMatrix m(basis.front().size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < basis[j].size(); ++i) m(i, j) = basis[j][i];
  return m;
}

}  // namespace

DP4Model dp4_model() {
  Cyclotomic e = eps(), e2 = eps() * eps();
  return {diag({Cyclotomic(1), e, e2, Cyclotomic(1), Cyclotomic(0)}),
          diag({Cyclotomic(1), e2, e, Cyclotomic(0), Cyclotomic(1)})};
}

DP4Model dp4_diagonal_model(const std::vector<Cyclotomic>& a) {
  if (a.size() != 5) throw Error(ErrorCode::dimension_mismatch, "five coefficients expected");
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (a[i] == a[j]) throw Error(ErrorCode::invalid_argument, "coefficients must be pairwise distinct");
  return {CycMatrix::identity(5), diag(a)};
}

bool preserves_pencil(const DP4Model& x, const CycMatrix& g) {
  for (const CycMatrix* q : {&x.A, &x.B}) {
    CycMatrix n = g.transpose() * (*q) * g;
    CycMatrix rows(3, 25);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        rows(0, 5 * i + j) = x.A(i, j);
        rows(1, 5 * i + j) = x.B(i, j);
        rows(2, 5 * i + j) = n(i, j);
      }
    if (rows.rank() != 2) return false;
  }
  return true;
}

bool on_surface(const DP4Model& x, const CycVector& p) { return quad(x.A, p).is_zero() && quad(x.B, p).is_zero(); }

std::vector<std::optional<Cyclotomic>> degenerate_members(const DP4Model& x) {
  if (!is_diagonal(x.A) || !is_diagonal(x.B)) throw Error(ErrorCode::unsupported, "pencil is not diagonal");
  std::vector<std::optional<Cyclotomic>> out;
  for (std::size_t i = 0; i < x.A.rows(); ++i) {
    if (!x.B(i, i).is_zero())
      out.emplace_back(-x.A(i, i) / x.B(i, i));
    else if (!x.A(i, i).is_zero())
      out.emplace_back(std::nullopt);
    else
      throw Error(ErrorCode::invalid_argument, "coordinate absent from both quadrics");
  }
  return out;
}

Cyclotomic dp4_curve_j(const DP4Model& x, int k) {
  auto m = degenerate_members(x);
  std::vector<CycVector> pts;
  for (int i = 0; i < static_cast<int>(m.size()); ++i) {
    if (i == k) continue;
    pts.push_back(m[i] ? CycVector{*m[i], Cyclotomic(1)} : CycVector{Cyclotomic(1), Cyclotomic(0)});
  }
  return j_from_four_points(pts);
}

Slice slice_surface(const DP4Model& x, const std::vector<CycVector>& basis) {
  Slice s;
  const std::size_t m = basis.size();
  if (m == 0) return s;
  CycMatrix b = basis_matrix(basis);
  CycMatrix ra = b.transpose() * x.A * b, rb = b.transpose() * x.B * b;
  if (m == 1) {
    s.points = ra(0, 0).is_zero() && rb(0, 0).is_zero() ? 1 : 0;
    return s;
  }
  if (m == 2) {
    BinaryForm fa{2, {ra(1, 1), ra(0, 1) + ra(1, 0), ra(0, 0)}};
    BinaryForm fb{2, {rb(1, 1), rb(0, 1) + rb(1, 0), rb(0, 0)}};
    int c = common_zero_count(fa, fb);
    if (c < 0)
      s.curve_genera.push_back(0);
    else
      s.points = c;
    return s;
  }
  if (!is_diagonal(ra) || !is_diagonal(rb)) throw Error(ErrorCode::unsupported, "non-diagonal slice of dimension >= 3");
  // y_i^2 = x_i with x in the kernel of the coefficient rows.
  CycMatrix coef(2, m);
  for (std::size_t i = 0; i < m; ++i) {
    coef(0, i) = ra(i, i);
    coef(1, i) = rb(i, i);
  }
  auto v = coef.nullspace();
  if (v.size() == 1) {
    int support = 0;
    for (const auto& c : v[0]) support += c.is_zero() ? 0 : 1;
    s.points = 1 << (support - 1);
    return s;
  }
  if (v.size() == 2 && m == 4 && coef.rank() == 2) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if ((coef(0, i) * coef(1, j) - coef(0, j) * coef(1, i)).is_zero())
          throw Error(ErrorCode::unsupported, "singular intersection of two quadrics");
    s.curve_genera.push_back(1);
    return s;
  }
  if (v.size() == 2 && m == 3 && coef.rank() == 1) {
    std::size_t r = coef(0, 0).is_zero() && coef(0, 1).is_zero() && coef(0, 2).is_zero() ? 1 : 0;
    for (std::size_t i = 0; i < 3; ++i)
      if (coef(r, i).is_zero()) throw Error(ErrorCode::unsupported, "singular conic slice");
    s.curve_genera.push_back(0);
    return s;
  }
  if (v.empty()) return s;
  throw Error(ErrorCode::unsupported, "slice of unsupported shape");
}

FixedLocus dp4_fixed_locus(const DP4Model& x, const CycMatrix& g) {
  FixedLocus fl;
  for (const auto& e : eigenspaces(g)) {
    if (e.basis.size() == 5) throw Error(ErrorCode::invalid_argument, "identity has no isolated fixed locus");
    Slice s = slice_surface(x, e.basis);
    fl.s += s.points;
    for (int gg : s.curve_genera) fl.curve_genera.push_back(gg);
  }
  std::sort(fl.curve_genera.begin(), fl.curve_genera.end());
  return fl;
}

int dp4_fixed_point_count(const DP4Model& x, const std::vector<CycMatrix>& gens) {
  int n = 0;
  for (const auto& c : common_eigenspaces(gens)) {
    Slice s = slice_surface(x, c.basis);
    if (s.infinite()) return -1;
    n += s.points;
  }
  return n;
}

std::vector<std::string> dp4_labels() {
  std::vector<std::string> out;
  for (const auto& c : exceptional_classes(4)) {
    if (c[0] == 2) {
      out.push_back("R0");
    } else if (c[0] == 0) {
      for (int i = 1; i <= 5; ++i)
        if (c[i] == 1) out.push_back("R" + std::to_string(i));
    } else {
      std::string s = "R";
      for (int i = 1; i <= 5; ++i)
        if (c[i] == -1) s += std::to_string(i);
      out.push_back(s);
    }
  }
  return out;
}

int dp4_class_index(const std::string& label) {
  static const auto labels = dp4_labels();
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorCode::invalid_argument, "unknown degree-4 class label " + label);
  return static_cast<int>(it - labels.begin());
}

Perm dp4_iota_perm(const std::vector<int>& A) {
  Perm p = perm_identity(16);
  for (int k : A) {
    if (k < 1 || k > 5) throw Error(ErrorCode::invalid_argument, "iota index out of range");
    p = perm_compose(perm_from_labels([k](const std::string& s) { return iota_image(s, k); }), p);
  }
  return p;
}

Perm dp4_index_perm(const Perm& pi) {
  return perm_from_labels([&](const std::string& s) {
    Label l = parse_label(s);
    if (l.kind == 0) return s;
    if (l.kind == 1) return label_name({1, pi.at(l.i - 1) + 1, 0});
    return label_name({2, pi.at(l.i - 1) + 1, pi.at(l.j - 1) + 1});
  });
}

std::vector<DP4Generator> dp4_generators() {
  std::vector<DP4Generator> out;
  for (int k = 1; k <= 5; ++k) {
    CycMatrix d = CycMatrix::identity(5);
    d(k - 1, k - 1) = Cyclotomic(-1);
    out.push_back({"iota" + std::to_string(k), GroupElement::projective(d), dp4_iota_perm({k})});
  }
  Cyclotomic e = eps();
  CycMatrix g1(5, 5), g2(5, 5);
  g1(0, 1) = g1(1, 2) = g1(2, 0) = Cyclotomic(1);
  g1(3, 3) = e;
  g1(4, 4) = e * e;
  g2(0, 0) = g2(1, 2) = g2(2, 1) = g2(3, 4) = g2(4, 3) = Cyclotomic(1);
  for (auto [name, m] : {std::pair<const char*, CycMatrix*>{"g1", &g1}, {"g2", &g2}}) {
    // Conjugation by a monomial map sends iota_k to iota_pi(k); the lattice
    // action permutes the point labels the same way.
    Perm pi(5, -1);
    for (int j = 0; j < 5; ++j)
      for (int i = 0; i < 5; ++i)
        if (!(*m)(i, j).is_zero()) pi[j] = i;
    out.push_back({name, GroupElement::projective(*m), dp4_index_perm(pi)});
  }
  return out;
}

DP4Data dp4_data() {
  DP4Data d{dp4_model(), {}, {}, {}};
  auto gens = dp4_generators();
  std::vector<GroupElement> elems, images;
  for (const auto& g : gens) {
    if (!preserves_pencil(d.model, g.element.mat()))
      throw Error(ErrorCode::inconsistent, g.name + " does not preserve the surface");
    elems.push_back(g.element);
    images.push_back(GroupElement::isometry(isometry_from_line_permutation(g.class_perm, 4)));
  }
  d.group = closure(elems, 1000);
  FiniteGroup lat = closure(images, 2000);
  auto phi = homomorphism_images(d.group, images, lat);
  for (int i : phi) d.iso.push_back(lat.element(i).iso());
  for (std::size_t i = 0; i < gens.size(); ++i) d.named[gens[i].name] = d.group.generator_indices()[i];
  return d;
}

std::map<std::string, LatticeIsometry> dp4_isometries() {
  std::map<std::string, LatticeIsometry> out;
  for (const auto& g : dp4_generators()) out.emplace(g.name, isometry_from_line_permutation(g.class_perm, 4));
  for (int k = 1; k <= 5; ++k)
    for (int l = k + 1; l <= 5; ++l)
      out.emplace("iota" + std::to_string(k) + std::to_string(l), isometry_from_line_permutation(dp4_iota_perm({k, l}), 4));
  return out;
}

}  // namespace cfl
