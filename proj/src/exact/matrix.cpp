#include "cfl/exact/matrix.hpp"

#include <algorithm>

namespace cfl {

CycVector normalized_projective(const CycVector& v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Cyclotomic& x) { return !x.is_zero(); });
  if (it == v.end()) throw Error(ErrorCode::invalid_argument, "zero vector is not a projective point");
  Cyclotomic inv = it->inverse();
  CycVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * inv);
  return out;
}

namespace {

std::vector<CycVector> row_basis(const std::vector<CycVector>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  CycMatrix m(vs.size(), dim);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vs[i].at(j);
  std::size_t r = m.rref().size();
  std::vector<CycVector> out;
  for (std::size_t i = 0; i < r; ++i) {
    CycVector row(dim);
    for (std::size_t j = 0; j < dim; ++j) row[j] = m(i, j);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::vector<CycVector> intersect_subspaces(const std::vector<CycVector>& a, const std::vector<CycVector>& b,
                                           std::size_t dim) {
  auto ba = row_basis(a, dim);
  auto bb = row_basis(b, dim);
  if (ba.empty() || bb.empty()) return {};
  CycMatrix m(dim, ba.size() + bb.size());
  for (std::size_t j = 0; j < ba.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = ba[j][i];
  for (std::size_t j = 0; j < bb.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m(i, ba.size() + j) = -bb[j][i];
  std::vector<CycVector> vs;
  for (const auto& x : m.nullspace()) {
    CycVector v(dim, Cyclotomic(0));
    for (std::size_t j = 0; j < ba.size(); ++j)
      if (!x[j].is_zero())
        for (std::size_t i = 0; i < dim; ++i) v[i] += x[j] * ba[j][i];
    vs.push_back(std::move(v));
  }
  return row_basis(vs, dim);
}

CycMatrix embed_matrix(const CycMatrix& m, int n) {
  CycMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).embed(n);
  return r;
}

int matrix_conductor(const CycMatrix& m) {
  long n = 1;
  for (const auto& x : m.data()) n = lcm_conductor(n, x.conductor());
  return static_cast<int>(n);
}

std::string matrix_to_string(const CycMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).to_string();
    }
  }
  return out + "]";
}

}  // namespace cfl
