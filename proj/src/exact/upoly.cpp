#include "cfl/exact/upoly.hpp"

#include <algorithm>

#include "cfl/error.hpp"

namespace cfl {

UPoly::UPoly(std::vector<Cyclotomic> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Cyclotomic UPoly::eval(const Cyclotomic& x) const {
  Cyclotomic acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Cyclotomic> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Cyclotomic(static_cast<long>(i)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  Cyclotomic inv = c_.back().inverse();
  std::vector<Cyclotomic> m = c_;
  for (auto& x : m) x = x * inv;
  return UPoly(std::move(m));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Cyclotomic> r(std::max(a.c_.size(), b.c_.size()), Cyclotomic(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Cyclotomic> r(std::max(a.c_.size(), b.c_.size()), Cyclotomic(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return UPoly();
  std::vector<Cyclotomic> r(a.c_.size() + b.c_.size() - 1, Cyclotomic(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error(ErrorCode::invalid_argument, "polynomial division by zero");
  std::vector<Cyclotomic> rem = a.c_;
  int db = b.degree();
  std::vector<Cyclotomic> quo(std::max(0, a.degree() - db + 1), Cyclotomic(0));
  Cyclotomic inv = b.lead().inverse();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    Cyclotomic f = rem[i] * inv;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

int UPoly::distinct_root_count() const {
  if (is_zero()) throw Error(ErrorCode::invalid_argument, "root count of zero polynomial");
  if (degree() <= 0) return 0;
  UPoly g = gcd(*this, derivative());
  return degree() - g.degree();
}

bool UPoly::squarefree() const { return distinct_root_count() == degree(); }

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].to_string() + ")";
    if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

int BinaryForm::distinct_zero_count() const {
  if (is_zero()) throw Error(ErrorCode::invalid_argument, "zero binary form vanishes everywhere");
  UPoly dehom(coeffs);  // v = 1
  int count = dehom.distinct_root_count();
  if (dehom.degree() < n) ++count;  // the point u:v = 1:0
  return count;
}

int common_zero_count(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero() && b.is_zero()) return -1;
  if (a.is_zero()) return b.distinct_zero_count();
  if (b.is_zero()) return a.distinct_zero_count();
  UPoly da(a.coeffs), db(b.coeffs);
  int count = UPoly::gcd(da, db).distinct_root_count();
  if (da.degree() < a.n && db.degree() < b.n) ++count;
  return count;
}

}  // namespace cfl
