#include "cfl/lattice/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "cfl/exact/matrix.hpp"
#include "cfl/exact/rational.hpp"

namespace cfl {

namespace {

void check_degree(int d, int lo, int hi, const char* what) {
  if (d < lo || d > hi)
    throw Error(ErrorCode::out_of_range, std::string(what) + ": degree " + std::to_string(d) + " outside [" +
                                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

int isqrt(long v) {
  if (v < 0) return -1;
  long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return static_cast<int>(r);
}

// Assign coordinates pos..n of v so that they sum to `sum` with squares
// summing to `sq`.
void fill(PicVec& v, int pos, int n, long sum, long sq, std::vector<PicVec>& out) {
  int remaining = n - pos + 1;
  if (remaining == 0) {
    if (sum == 0 && sq == 0) out.push_back(v);
    return;
  }
  if (sq < 0 || sum * sum > static_cast<long>(remaining) * sq) return;
  if (((sum - sq) % 2) != 0) return;
  int b = isqrt(sq);
  for (int x = -b; x <= b; ++x) {
    v[pos] = x;
    fill(v, pos + 1, n, sum - x, sq - static_cast<long>(x) * x, out);
  }
  v[pos] = 0;
}

}  // namespace

PicLattice::PicLattice(int degree) : degree_(degree) {
  check_degree(degree, 1, 9, "PicLattice");
  k_.assign(rank(), 1);
  k_[0] = -3;
}

int PicLattice::dot(const PicVec& a, const PicVec& b) const {
  if (static_cast<int>(a.size()) != rank() || static_cast<int>(b.size()) != rank())
    throw Error(ErrorCode::dimension_mismatch, "class has wrong rank for degree " + std::to_string(degree_));
  int s = a[0] * b[0];
  for (int i = 1; i < rank(); ++i) s -= a[i] * b[i];
  return s;
}

PicVec PicLattice::e(int i) const {
  if (i < 0 || i >= rank()) throw Error(ErrorCode::out_of_range, "basis index");
  PicVec v = zero();
  v[i] = 1;
  return v;
}

PicVec operator+(const PicVec& a, const PicVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, "class sum");
  PicVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

PicVec operator-(const PicVec& a, const PicVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, "class difference");
  PicVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

std::string class_to_string(const PicVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += i == 1 ? "; " : ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::vector<PicVec> enumerate_classes(int degree, int square, int kdot) {
  PicLattice lat(degree);
  const int n = lat.rank() - 1;
  // With S = sum x_i = -kdot - 3 x0 and Q = sum x_i^2 = x0^2 - square,
  // S^2 <= n Q becomes d x0^2 + 6 kdot x0 + kdot^2 + n square <= 0.
  auto admissible = [&](long x0) {
    return degree * x0 * x0 + 6L * kdot * x0 + static_cast<long>(kdot) * kdot + static_cast<long>(n) * square <= 0;
  };
  const long reach = 64;
  if (admissible(reach) || admissible(-reach))
    throw Error(ErrorCode::inconsistent, "class enumeration bound not attained");
  std::vector<PicVec> out;
  PicVec v = lat.zero();
  for (long x0 = -reach; x0 <= reach; ++x0) {
    if (!admissible(x0)) continue;
    v[0] = static_cast<int>(x0);
    fill(v, 1, n, -kdot - 3 * x0, x0 * x0 - square, out);
  }
  std::sort(out.begin(), out.end());
  for (const auto& c : out)
    if (lat.self(c) != square || lat.dot(c, lat.canonical()) != kdot)
      throw Error(ErrorCode::inconsistent, "enumerated class violates its defining equations");
  return out;
}

std::vector<PicVec> exceptional_classes(int degree) {
  check_degree(degree, 1, 7, "exceptional_classes");
  return enumerate_classes(degree, -1, -1);
}

std::vector<PicVec> roots(int degree) {
  check_degree(degree, 1, 6, "roots");
  return enumerate_classes(degree, -2, 0);
}

std::vector<PicVec> simple_roots(int degree) {
  PicLattice lat(degree);
  const int n = lat.rank() - 1;
  std::vector<PicVec> out;
  if (n >= 3) {
    PicVec a = lat.e(0);
    a[1] = a[2] = a[3] = -1;
    out.push_back(a);
  }
  for (int i = 1; i < n; ++i) out.push_back(lat.e(i) - lat.e(i + 1));
  return out;
}

LatticeIsometry::LatticeIsometry(int degree, std::vector<int> entries) : degree_(degree), m_(std::move(entries)) {
  PicLattice lat(degree);
  const int n = size();
  if (static_cast<int>(m_.size()) != n * n) throw Error(ErrorCode::dimension_mismatch, "isometry entry count");
  std::vector<PicVec> cols(n, PicVec(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cols[c][r] = at(r, c);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (lat.dot(cols[i], cols[j]) != lat.dot(lat.e(i), lat.e(j)))
        throw Error(ErrorCode::not_isometry, "matrix does not preserve the intersection form");
  if (apply(lat.canonical()) != lat.canonical()) throw Error(ErrorCode::not_isometry, "matrix does not fix K");
}

LatticeIsometry LatticeIsometry::identity(int degree) {
  int n = 10 - degree;
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return LatticeIsometry(degree, std::move(m));
}

LatticeIsometry LatticeIsometry::reflection(int degree, const PicVec& root) {
  PicLattice lat(degree);
  if (lat.self(root) != -2 || lat.dot(root, lat.canonical()) != 0)
    throw Error(ErrorCode::invalid_argument, "reflection needs a root");
  int n = lat.rank();
  std::vector<int> m(n * n, 0);
  for (int c = 0; c < n; ++c) {
    PicVec ec = lat.e(c);
    int w = lat.dot(ec, root);
    for (int r = 0; r < n; ++r) m[r * n + c] = ec[r] + w * root[r];
  }
  return LatticeIsometry(degree, std::move(m));
}

PicVec LatticeIsometry::apply(const PicVec& v) const {
  const int n = size();
  if (static_cast<int>(v.size()) != n) throw Error(ErrorCode::dimension_mismatch, "isometry applied to wrong rank");
  PicVec out(n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[r] += at(r, c) * v[c];
  return out;
}

LatticeIsometry LatticeIsometry::operator*(const LatticeIsometry& o) const {
  if (degree_ != o.degree_) throw Error(ErrorCode::dimension_mismatch, "isometries of different degrees");
  const int n = size();
  std::vector<int> m(n * n, 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      int x = at(r, k);
      if (!x) continue;
      for (int c = 0; c < n; ++c) m[r * n + c] += x * o.at(k, c);
    }
  LatticeIsometry out = *this;
  out.m_ = std::move(m);
  return out;
}

int LatticeIsometry::trace_pic() const {
  int t = 0;
  for (int i = 0; i < size(); ++i) t += at(i, i);
  return t;
}

int LatticeIsometry::determinant() const {
  const int n = size();
  QMatrix q(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) q(r, c) = at(r, c);
  Rational d = q.determinant();
  return static_cast<int>(d.get_num().get_si());
}

LatticeIsometry isometry_from_class_map(int degree, const std::vector<PicVec>& classes,
                                        const std::vector<PicVec>& images) {
  PicLattice lat(degree);
  const int n = lat.rank();
  if (classes.size() != images.size()) throw Error(ErrorCode::dimension_mismatch, "class map sizes differ");
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i; j < classes.size(); ++j)
      if (lat.dot(classes[i], classes[j]) != lat.dot(images[i], images[j]))
        throw Error(ErrorCode::not_isometry, "class map does not preserve the pairing");
  QMatrix c(n, classes.size());
  for (std::size_t j = 0; j < classes.size(); ++j)
    for (int i = 0; i < n; ++i) c(i, j) = classes[j][i];
  QMatrix red = c;
  auto pivots = red.rref();
  if (static_cast<int>(pivots.size()) < n) throw Error(ErrorCode::not_spanning, "classes do not span the lattice");
  QMatrix b(n, n), d(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      b(i, j) = classes[pivots[j]][i];
      d(i, j) = images[pivots[j]][i];
    }
  QMatrix m = d * *b.inverse();
  std::vector<int> entries(n * n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const Rational& x = m(r, k);
      if (x.get_den() != 1) throw Error(ErrorCode::not_isometry, "class map does not extend integrally");
      entries[r * n + k] = static_cast<int>(x.get_num().get_si());
    }
  LatticeIsometry iso(degree, std::move(entries));
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (iso.apply(classes[i]) != images[i]) throw Error(ErrorCode::not_isometry, "class map is not linear");
  return iso;
}

LatticeIsometry isometry_from_line_permutation(const std::vector<int>& perm, int degree) {
  auto classes = exceptional_classes(degree);
  if (perm.size() != classes.size()) throw Error(ErrorCode::dimension_mismatch, "permutation length");
  std::vector<PicVec> images;
  images.reserve(perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= static_cast<int>(classes.size()) || seen[p])
      throw Error(ErrorCode::invalid_argument, "not a permutation of the exceptional classes");
    seen[p] = true;
    images.push_back(classes[p]);
  }
  return isometry_from_class_map(degree, classes, images);
}

int invariant_rank(const std::vector<LatticeIsometry>& group) {
  if (group.empty()) throw Error(ErrorCode::invalid_argument, "invariant_rank of an empty group");
  const int d = group.front().degree();
  const int n = 10 - d;
  QMatrix sum(n, n);
  for (const auto& g : group) {
    if (g.degree() != d) throw Error(ErrorCode::dimension_mismatch, "isometries of different degrees");
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) sum(r, c) += g.at(r, c);
  }
  return static_cast<int>(sum.rank()) - 1;
}

long trace_sum(const std::vector<LatticeIsometry>& group) {
  long s = 0;
  for (const auto& g : group) s += g.trace_r();
  return s;
}

int singular_fiber_count(const PicVec& f, int degree) {
  PicLattice lat(degree);
  if (lat.self(f) != 0 || lat.dot(f, lat.canonical()) != -2)
    throw Error(ErrorCode::invalid_argument, "singular_fiber_count needs a conic class (f.f = 0, f.K = -2)");
  auto ex = enumerate_classes(degree, -1, -1);
  int count = 0;
  for (std::size_t i = 0; i < ex.size(); ++i)
    for (std::size_t j = i + 1; j < ex.size(); ++j)
      if (ex[i] + ex[j] == f && lat.dot(ex[i], ex[j]) == 1) ++count;
  return count;
}

}  // namespace cfl
