#include "cfl/exact/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "cfl/error.hpp"

namespace cfl {

namespace {

struct FieldData {
  int n = 1;
  int phi = 1;
  std::vector<Integer> phipoly;  // monic, low degree first, size phi + 1
  // powers[k] = x^k mod Phi_n for 0 <= k < n.
  std::vector<std::vector<Rational>> powers;
};

std::vector<Integer> poly_exact_div(std::vector<Integer> num, const std::vector<Integer>& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw Error(ErrorCode::invalid_argument, "cyclotomic division not exact");
  return quot;
}

class FieldRegistry {
 public:
  const FieldData& get(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    return get_locked(n);
  }

 private:
  const FieldData& get_locked(int n) {
    auto it = fields_.find(n);
    if (it != fields_.end()) return *it->second;
    auto data = std::make_unique<FieldData>();
    data->n = n;
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      p = poly_exact_div(p, get_locked(d).phipoly);
    }
    data->phipoly = p;
    data->phi = static_cast<int>(p.size()) - 1;
    const auto phi = static_cast<std::size_t>(data->phi);
    data->powers.assign(static_cast<std::size_t>(n), std::vector<Rational>(phi, 0));
    data->powers[0][0] = 1;
    for (int k = 1; k < n; ++k) {
      const auto& prev = data->powers[static_cast<std::size_t>(k - 1)];
      auto& cur = data->powers[static_cast<std::size_t>(k)];
      Rational top = prev[phi - 1];
      for (std::size_t j = phi - 1; j > 0; --j) cur[j] = prev[j - 1];
      cur[0] = 0;
      if (top != 0)
        for (std::size_t j = 0; j < phi; ++j) cur[j] -= top * Rational(data->phipoly[j]);
    }
    auto& ref = *data;
    fields_.emplace(n, std::move(data));
    return ref;
  }

  std::mutex mutex_;
  std::map<int, std::unique_ptr<FieldData>> fields_;
};

const FieldData& field(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "conductor must be positive");
  static FieldRegistry registry;
  return registry.get(n);
}

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (q, r) with a = q*b + r.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  qtrim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  const Rational lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i] == 0) {
      if (i == 0) break;
      continue;
    }
    Rational c = a[i] / lead;
    q[i - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
    if (i == 0) break;
  }
  qtrim(a);
  qtrim(q);
  return {q, a};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qtrim(r);
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qtrim(a);
  return a;
}

// Solve A x = b over Q for a full column rank A (rows >= cols); returns false
// when inconsistent.
bool solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                    std::vector<Rational>& x) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return false;
  x.assign(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return pivots.size() == cols;
}

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

int euler_phi(int n) { return field(n).phi; }

long lcm_conductor(long a, long b) { return std::lcm(a, b); }

const std::vector<Integer>& cyclotomic_polynomial(int n) { return field(n).phipoly; }

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1, 0) {}

Cyclotomic::Cyclotomic(long value) : conductor_(1), coeffs_(1, Rational(value)) {}

Cyclotomic::Cyclotomic(const Rational& value) : conductor_(1), coeffs_(1, value) {}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  trim_to_rational_if_possible();
}

void Cyclotomic::trim_to_rational_if_possible() {
  if (conductor_ == 1) return;
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return;
  Rational v = coeffs_.empty() ? Rational(0) : coeffs_[0];
  conductor_ = 1;
  coeffs_.assign(1, v);
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "root_of_unity: n must be >= 1");
  long e = floor_mod(k, n);
  long g = std::gcd(static_cast<long>(n), e);
  if (e == 0) return Cyclotomic(1);
  int m = static_cast<int>(n / g);
  e /= g;
  const auto& f = field(m);
  return Cyclotomic(m, f.powers[static_cast<std::size_t>(e)]);
}

Cyclotomic Cyclotomic::embed(int n) const {
  if (n % conductor_ != 0) throw Error(ErrorCode::invalid_argument, "embed: conductor must divide target");
  if (n == conductor_) return *this;
  const auto& f = field(n);
  const int step = n / conductor_;
  std::vector<Rational> out(static_cast<std::size_t>(f.phi), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& pw = f.powers[static_cast<std::size_t>((static_cast<long>(j) * step) % n)];
    for (std::size_t i = 0; i < out.size(); ++i)
      if (pw[i] != 0) out[i] += coeffs_[j] * pw[i];
  }
  Cyclotomic r;
  r.conductor_ = n;
  r.coeffs_ = std::move(out);
  return r;  // deliberately untrimmed: caller asked for conductor n
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::invalid_argument, "value is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (conductor_ != o.conductor_) {
    int n = static_cast<int>(std::lcm(conductor_, o.conductor_));
    *this = embed(n);
    Cyclotomic b = o.embed(n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  }
  trim_to_rational_if_possible();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == 1) {
    Cyclotomic r = b;
    for (auto& c : r.coeffs_) c *= a.coeffs_[0];
    r.trim_to_rational_if_possible();
    return r;
  }
  if (b.conductor_ == 1) return b * a;
  if (a.conductor_ != b.conductor_) {
    int n = static_cast<int>(std::lcm(a.conductor_, b.conductor_));
    return a.embed(n) * b.embed(n);
  }
  const auto& f = field(a.conductor_);
  const std::size_t phi = static_cast<std::size_t>(f.phi);
  std::vector<Rational> prod(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<long>(phi));
  for (std::size_t k = phi; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& pw = f.powers[k % static_cast<std::size_t>(f.n)];
    for (std::size_t i = 0; i < phi; ++i)
      if (pw[i] != 0) out[i] += prod[k] * pw[i];
  }
  return Cyclotomic(a.conductor_, std::move(out));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
  *this = *this * o.inverse();
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  int n = static_cast<int>(std::lcm(a.conductor_, b.conductor_));
  return a.embed(n).coeffs_ == b.embed(n).coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero");
  if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  const auto& f = field(conductor_);
  QPoly m;
  for (const auto& c : f.phipoly) m.emplace_back(c);
  QPoly a = coeffs_;
  qtrim(a);
  // Extended Euclid: track s with s*a = r (mod m).
  QPoly r0 = m, r1 = a, s0 = {}, s1 = {Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = qdivmod(r0, r1);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw Error(ErrorCode::invalid_argument, "inverse: not invertible");
  }
  Rational inv = 1 / r1[0];
  std::vector<Rational> out(static_cast<std::size_t>(f.phi), 0);
  auto [q, rem] = qdivmod(s1, m);
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i] * inv;
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (conductor_ == 1) return *this;
  const long n = conductor_;
  if (std::gcd(floor_mod(k, n), n) != 1) throw Error(ErrorCode::invalid_argument, "galois: k not a unit");
  const auto& f = field(conductor_);
  std::vector<Rational> out(coeffs_.size(), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& pw = f.powers[static_cast<std::size_t>(floor_mod(static_cast<long>(j) * k, n))];
    for (std::size_t i = 0; i < out.size(); ++i)
      if (pw[i] != 0) out[i] += coeffs_[j] * pw[i];
  }
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

long Cyclotomic::root_of_unity_exponent(int m) const {
  for (long e = 0; e < m; ++e)
    if (*this == root_of_unity(m, e)) return e;
  return -1;
}

Cyclotomic Cyclotomic::minimized() const {
  if (conductor_ == 1 || is_rational()) return Cyclotomic(rational_value());
  const long n = conductor_;
  for (long m = 2; m < n; ++m) {
    if (n % m != 0) continue;
    bool fixed = true;
    for (long k = 1; k < n && fixed; ++k) {
      if (std::gcd(k, n) != 1 || k % m != 1 % m) continue;
      if (!(galois(k) == *this)) fixed = false;
    }
    if (!fixed) continue;
    const auto& fm = field(static_cast<int>(m));
    const std::size_t phim = static_cast<std::size_t>(fm.phi);
    const std::size_t phin = coeffs_.size();
    std::vector<std::vector<Rational>> a(phin, std::vector<Rational>(phim, 0));
    for (std::size_t j = 0; j < phim; ++j) {
      Cyclotomic basis = Cyclotomic(static_cast<int>(m), fm.powers[j]).embed(conductor_);
      for (std::size_t i = 0; i < phin; ++i) a[i][j] = basis.coeffs_[i];
    }
    std::vector<Rational> x;
    if (solve_rational(a, coeffs_, x)) return Cyclotomic(static_cast<int>(m), std::move(x));
  }
  return *this;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return cfl::to_string(rational_value());
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << cfl::to_string(mag);
      continue;
    }
    if (mag != 1) os << cfl::to_string(mag) << "*";
    os << "z" << conductor_;
    if (j > 1) os << "^" << j;
  }
  return os.str();
}

void Cyclotomic::append_key(std::string& out) const {
  out += std::to_string(conductor_);
  out += ':';
  for (const auto& c : coeffs_) {
    out += c.get_str(32);
    out += ',';
  }
  out += ';';
}

std::size_t Cyclotomic::hash() const {
  std::string k;
  append_key(k);
  return std::hash<std::string>{}(k);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) throw Error(ErrorCode::parse_error, "bad rational: " + std::string(text));
  q.canonicalize();
  return q;
}

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::mixed_kinds: return "mixed_kinds";
    case ErrorCode::not_isometry: return "not_isometry";
    case ErrorCode::not_spanning: return "not_spanning";
    case ErrorCode::unknown_group: return "unknown_group";
    case ErrorCode::cache_missing: return "cache_missing";
    case ErrorCode::cache_corrupt: return "cache_corrupt";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::not_invariant: return "not_invariant";
    case ErrorCode::inconsistent: return "inconsistent";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::verdict_disagreement: return "verdict_disagreement";
  }
  return "unknown";
}

}  // namespace cfl
