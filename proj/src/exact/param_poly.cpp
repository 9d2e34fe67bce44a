#include "cfl/exact/param_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cfl/error.hpp"

namespace cfl {

VarUniverse::VarUniverse(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error(ErrorCode::invalid_argument, "duplicate variable " + names_[i]);
}

int VarUniverse::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

ParamPoly::ParamPoly(std::shared_ptr<const VarUniverse> vars) : vars_(std::move(vars)) {
  if (!vars_) throw Error(ErrorCode::invalid_argument, "null variable universe");
}

ParamPoly::ParamPoly(std::shared_ptr<const VarUniverse> vars, const Cyclotomic& constant)
    : ParamPoly(std::move(vars)) {
  add_term(Exponents(vars_->size(), 0), constant);
}

ParamPoly ParamPoly::variable(std::shared_ptr<const VarUniverse> vars, std::size_t index) {
  if (index >= vars->size()) throw Error(ErrorCode::out_of_range, "variable index");
  Exponents e(vars->size(), 0);
  e[index] = 1;
  return monomial(std::move(vars), std::move(e), Cyclotomic(1));
}

ParamPoly ParamPoly::variable(std::shared_ptr<const VarUniverse> vars, std::string_view name) {
  int i = vars->find(name);
  if (i < 0) throw Error(ErrorCode::invalid_argument, "unknown variable " + std::string(name));
  return variable(std::move(vars), static_cast<std::size_t>(i));
}

ParamPoly ParamPoly::monomial(std::shared_ptr<const VarUniverse> vars, Exponents e, const Cyclotomic& c) {
  ParamPoly p(std::move(vars));
  if (e.size() != p.vars_->size()) throw Error(ErrorCode::dimension_mismatch, "exponent vector length");
  p.add_term(e, c);
  return p;
}

void ParamPoly::add_term(const Exponents& e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void ParamPoly::check_universe(const ParamPoly& o) const {
  if (vars_ != o.vars_ && !(*vars_ == *o.vars_))
    throw Error(ErrorCode::invalid_argument, "polynomials over different variable universes");
}

int ParamPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int ParamPoly::degree_in(const std::vector<std::size_t>& idx) const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto i : idx) d += e.at(i);
    best = std::max(best, d);
  }
  return best;
}

bool ParamPoly::is_constant() const { return total_degree() <= 0; }

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  check_universe(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  check_universe(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  a.check_universe(b);
  ParamPoly r(a.vars_);
  Exponents e(a.vars_->size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

ParamPoly ParamPoly::operator-() const { return scaled(Cyclotomic(-1)); }

ParamPoly ParamPoly::scaled(const Cyclotomic& c) const {
  ParamPoly r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result(vars_, Cyclotomic(1));
  ParamPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (!(*a.vars_ == *b.vars_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

ParamPoly ParamPoly::compose(const std::vector<ParamPoly>& images) const {
  if (images.size() != vars_->size()) throw Error(ErrorCode::dimension_mismatch, "compose: one image per variable");
  auto target = images.empty() ? vars_ : images.front().vars_;
  for (const auto& img : images)
    if (!(*img.vars_ == *target)) throw Error(ErrorCode::invalid_argument, "compose: images in different universes");
  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<ParamPoly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const ParamPoly& {
    auto& row = powers[i];
    if (row.empty()) row.emplace_back(target, Cyclotomic(1));
    while (static_cast<int>(row.size()) <= k) row.push_back(row.back() * images[i]);
    return row[k];
  };
  ParamPoly result(target);
  for (const auto& [e, c] : terms_) {
    ParamPoly term(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    result += term;
  }
  return result;
}

ParamPoly ParamPoly::substitute(const std::vector<std::size_t>& coords, const CycMatrix& m) const {
  if (!m.square() || m.rows() != coords.size())
    throw Error(ErrorCode::dimension_mismatch, "substitute: matrix size does not match coordinate block");
  std::vector<ParamPoly> images;
  images.reserve(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) images.push_back(variable(vars_, i));
  for (std::size_t r = 0; r < coords.size(); ++r) {
    if (coords[r] >= vars_->size()) throw Error(ErrorCode::out_of_range, "substitute: coordinate index");
    ParamPoly img(vars_);
    for (std::size_t c = 0; c < coords.size(); ++c)
      if (!m(r, c).is_zero()) img += variable(vars_, coords[c]).scaled(m(r, c));
    images[coords[r]] = std::move(img);
  }
  return compose(images);
}

ParamPoly ParamPoly::specialize(std::size_t index, const Cyclotomic& value) const {
  if (index >= vars_->size()) throw Error(ErrorCode::out_of_range, "specialize: variable index");
  ParamPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[index] = 0;
    r.add_term(f, c * value.pow(e[index]));
  }
  return r;
}

ParamPoly ParamPoly::specialize(std::string_view name, const Cyclotomic& value) const {
  int i = vars_->find(name);
  if (i < 0) throw Error(ErrorCode::invalid_argument, "unknown variable " + std::string(name));
  return specialize(static_cast<std::size_t>(i), value);
}

Cyclotomic ParamPoly::evaluate(const std::vector<Cyclotomic>& point) const {
  if (point.size() != vars_->size()) throw Error(ErrorCode::dimension_mismatch, "evaluate: point size");
  Cyclotomic acc(0);
  for (const auto& [e, c] : terms_) {
    Cyclotomic t = c;
    for (std::size_t i = 0; i < e.size() && !t.is_zero(); ++i)
      if (e[i]) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

ParamPoly ParamPoly::derivative(std::size_t index) const {
  if (index >= vars_->size()) throw Error(ErrorCode::out_of_range, "derivative: variable index");
  ParamPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents f = e;
    f[index] -= 1;
    r.add_term(f, c * Cyclotomic(static_cast<long>(e[index])));
  }
  return r;
}

ParamPoly ParamPoly::coefficient_of(const std::vector<std::size_t>& idx, const std::vector<int>& exps) const {
  if (idx.size() != exps.size()) throw Error(ErrorCode::dimension_mismatch, "coefficient_of: sizes");
  ParamPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    bool match = true;
    for (std::size_t k = 0; k < idx.size() && match; ++k) match = e.at(idx[k]) == exps[k];
    if (!match) continue;
    Exponents f = e;
    for (auto i : idx) f[i] = 0;
    r.add_term(f, c);
  }
  return r;
}

bool ParamPoly::proportional_to(const ParamPoly& other, Cyclotomic* factor) const {
  if (other.is_zero() || is_zero()) return false;
  if (terms_.size() != other.terms_.size()) return false;
  Cyclotomic c = terms_.begin()->second / other.terms_.begin()->second;
  if (!(other.scaled(c) == *this)) return false;
  if (factor) *factor = c;
  return true;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_->name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef;
    bool negated = false;
    if (c.is_rational()) {
      Rational q = c.rational_value();
      if (q < 0) {
        negated = true;
        q = -q;
      }
      if (mono.empty() || q != 1) coef = cfl::to_string(q);
    } else {
      coef = "(" + c.to_string() + ")";
    }
    std::string term = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
    if (out.empty())
      out = negated ? "-" + term : term;
    else
      out += (negated ? " - " : " + ") + term;
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::shared_ptr<const VarUniverse> vars) : s_(text), vars_(std::move(vars)) {}

  ParamPoly run() {
    ParamPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::parse_error, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamPoly expr() {
    ParamPoly acc(vars_);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (accept('+')) {
      } else if (accept('-')) {
        neg = true;
      } else if (!first) {
        break;
      }
      ParamPoly t = term();
      acc += neg ? -t : t;
      first = false;
    }
    return acc;
  }

  ParamPoly term() {
    ParamPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        ParamPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(d.terms().begin()->second.inverse());
      } else {
        break;
      }
    }
    return acc;
  }

  ParamPoly factor() {
    if (accept('-')) return -factor();
    ParamPoly b = base();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return b;
  }

  ParamPoly base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ParamPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ParamPoly(vars_, Cyclotomic(Rational(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      int idx = vars_->find(id);
      if (idx >= 0) return ParamPoly::variable(vars_, static_cast<std::size_t>(idx));
      if (id.size() > 1 && id[0] == 'z' &&
          std::all_of(id.begin() + 1, id.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        int n = std::stoi(std::string(id.substr(1)));
        if (n < 1) fail("root of unity order must be positive");
        return ParamPoly(vars_, Cyclotomic::root_of_unity(n, 1));
      }
      fail("unknown identifier '" + std::string(id) + "'");
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::shared_ptr<const VarUniverse> vars_;
};

}  // namespace

ParamPoly ParamPoly::parse(std::string_view text, std::shared_ptr<const VarUniverse> vars) {
  return Parser(text, std::move(vars)).run();
}

}  // namespace cfl
