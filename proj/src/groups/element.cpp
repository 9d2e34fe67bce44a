#include "cfl/groups/element.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>

namespace cfl {

const char* element_kind_name(ElementKind k) noexcept {
  switch (k) {
    case ElementKind::matrix: return "matrix";
    case ElementKind::projective_matrix: return "projective";
    case ElementKind::permutation: return "permutation";
    case ElementKind::isometry: return "isometry";
  }
  return "?";
}

Perm perm_compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::dimension_mismatch, "permutations of different degrees");
  Perm r(p.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm parse_cycles(const std::string& text, int n) {
  Perm p = perm_identity(n);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "()" || i == text.size()) return p;
  std::vector<char> used(n, 0);
  while (i < text.size()) {
    skip();
    if (i == text.size()) break;
    if (text[i] != '(') throw Error(ErrorCode::parse_error, "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw Error(ErrorCode::parse_error, "expected point in cycle notation: " + text);
      int v = std::stoi(text.substr(start, i - start)) - 1;
      if (v < 0 || v >= n || used[v]) throw Error(ErrorCode::parse_error, "bad or repeated point in " + text);
      used[v] = 1;
      cyc.push_back(v);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw Error(ErrorCode::parse_error, "unterminated cycle in " + text);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return p;
}

std::string perm_to_string(const Perm& p) {
  std::string s;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (j != i) s += ",";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

namespace {

CycMatrix canonical_projective(CycMatrix m) {
  const auto& d = m.data();
  auto it = std::find_if(d.begin(), d.end(), [](const Cyclotomic& x) { return !x.is_zero(); });
  if (it == d.end()) throw Error(ErrorCode::invalid_argument, "zero matrix is not projective");
  if (it->is_one()) return m;
  return m.scaled(it->inverse());
}

}  // namespace

GroupElement GroupElement::matrix(CycMatrix m) {
  if (!m.square()) throw Error(ErrorCode::dimension_mismatch, "group element matrix must be square");
  GroupElement g;
  g.kind_ = ElementKind::matrix;
  g.m_ = std::move(m);
  return g;
}

GroupElement GroupElement::projective(CycMatrix m) {
  if (!m.square()) throw Error(ErrorCode::dimension_mismatch, "group element matrix must be square");
  GroupElement g;
  g.kind_ = ElementKind::projective_matrix;
  g.m_ = canonical_projective(std::move(m));
  return g;
}

GroupElement GroupElement::permutation(Perm p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) throw Error(ErrorCode::invalid_argument, "not a permutation");
    seen[x] = 1;
  }
  GroupElement g;
  g.kind_ = ElementKind::permutation;
  g.p_ = std::move(p);
  return g;
}

GroupElement GroupElement::isometry(LatticeIsometry m) {
  GroupElement g;
  g.kind_ = ElementKind::isometry;
  g.iso_ = std::move(m);
  return g;
}

const CycMatrix& GroupElement::mat() const {
  if (kind_ != ElementKind::matrix && kind_ != ElementKind::projective_matrix)
    throw Error(ErrorCode::mixed_kinds, "element is not a matrix");
  return m_;
}

const Perm& GroupElement::perm() const {
  if (kind_ != ElementKind::permutation) throw Error(ErrorCode::mixed_kinds, "element is not a permutation");
  return p_;
}

const LatticeIsometry& GroupElement::iso() const {
  if (kind_ != ElementKind::isometry) throw Error(ErrorCode::mixed_kinds, "element is not an isometry");
  return *iso_;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (kind_ != o.kind_)
    throw Error(ErrorCode::mixed_kinds, std::string("cannot compose ") + element_kind_name(kind_) + " with " +
                                            element_kind_name(o.kind_));
  switch (kind_) {
    case ElementKind::matrix: return matrix(m_ * o.m_);
    case ElementKind::projective_matrix: return projective(m_ * o.m_);
    case ElementKind::permutation: return permutation(perm_compose(p_, o.p_));
    case ElementKind::isometry: return isometry(*iso_ * *o.iso_);
  }
  throw Error(ErrorCode::invalid_argument, "unknown element kind");
}

GroupElement GroupElement::identity_like() const {
  switch (kind_) {
    case ElementKind::matrix: return matrix(CycMatrix::identity(m_.rows()));
    case ElementKind::projective_matrix: return projective(CycMatrix::identity(m_.rows()));
    case ElementKind::permutation: return permutation(perm_identity(static_cast<int>(p_.size())));
    case ElementKind::isometry: return isometry(LatticeIsometry::identity(iso_->degree()));
  }
  throw Error(ErrorCode::invalid_argument, "unknown element kind");
}

bool GroupElement::is_identity() const {
  switch (kind_) {
    case ElementKind::matrix:
    case ElementKind::projective_matrix: return m_ == CycMatrix::identity(m_.rows());
    case ElementKind::permutation: return p_ == perm_identity(static_cast<int>(p_.size()));
    case ElementKind::isometry: return *iso_ == LatticeIsometry::identity(iso_->degree());
  }
  return false;
}

int GroupElement::conductor() const {
  if (kind_ == ElementKind::matrix || kind_ == ElementKind::projective_matrix) return matrix_conductor(m_);
  return 1;
}

std::string GroupElement::key(int n) const {
  std::string k;
  switch (kind_) {
    case ElementKind::matrix:
    case ElementKind::projective_matrix:
      k.reserve(m_.data().size() * 8);
      for (const auto& x : m_.data()) x.embed(n).append_key(k);
      return k;
    case ElementKind::permutation:
      k.resize(p_.size() * sizeof(int));
      std::memcpy(k.data(), p_.data(), k.size());
      return k;
    case ElementKind::isometry:
      k.resize(iso_->entries().size() * sizeof(int));
      std::memcpy(k.data(), iso_->entries().data(), k.size());
      return k;
  }
  return k;
}

std::string GroupElement::to_string() const {
  switch (kind_) {
    case ElementKind::matrix:
    case ElementKind::projective_matrix: return matrix_to_string(m_);
    case ElementKind::permutation: return perm_to_string(p_);
    case ElementKind::isometry: {
      std::ostringstream os;
      os << "[";
      for (int r = 0; r < iso_->size(); ++r) {
        if (r) os << "; ";
        for (int c = 0; c < iso_->size(); ++c) os << (c ? " " : "") << iso_->at(r, c);
      }
      os << "]";
      return os.str();
    }
  }
  return "?";
}

int FiniteGroup::find(const GroupElement& g) const {
  if (g.kind() != kind_) return -1;
  if (g.conductor() > 0 && conductor_ % g.conductor() != 0) return -1;
  auto it = index_.find(g.key(conductor_));
  return it == index_.end() ? -1 : it->second;
}

FiniteGroup FiniteGroup::subgroup(const Subset& s) const {
  std::vector<int> map;
  Group h = table_.induced(s, &map);
  std::vector<GroupElement> gens;
  for (int i : h.small_generating_set()) gens.push_back(elements_[map[i]]);
  if (gens.empty()) gens.push_back(elements_[0]);
  return closure(gens, order());
}

FiniteGroup closure(const std::vector<GroupElement>& gens, int max_order) {
  if (gens.empty()) throw Error(ErrorCode::invalid_argument, "closure needs at least one generator");
  if (max_order < 1) throw Error(ErrorCode::invalid_argument, "max_order must be positive");
  FiniteGroup g;
  g.kind_ = gens.front().kind();
  long n = 1;
  for (const auto& x : gens) {
    if (x.kind() != g.kind_) throw Error(ErrorCode::mixed_kinds, "generators of different representation kinds");
    n = lcm_conductor(n, x.conductor());
  }
  g.conductor_ = static_cast<int>(n);
  g.gens_ = gens;
  const std::size_t k = gens.size();
  std::vector<int> parent{-1}, via{-1};
  std::vector<int> rmul;  // rmul[i*k + j] = index of elements[i] * gens[j]
  auto insert = [&](GroupElement e, int par, int gen) -> int {
    std::string key = e.key(g.conductor_);
    auto [it, fresh] = g.index_.emplace(std::move(key), static_cast<int>(g.elements_.size()));
    if (!fresh) return it->second;
    if (static_cast<int>(g.elements_.size()) >= max_order)
      throw Error(ErrorCode::budget_exceeded, "closure exceeds max order " + std::to_string(max_order));
    g.elements_.push_back(std::move(e));
    g.keys_.push_back(it->first);
    if (par >= 0) {
      parent.push_back(par);
      via.push_back(gen);
    }
    return it->second;
  };
  insert(gens.front().identity_like(), -1, -1);
  for (std::size_t i = 0; i < g.elements_.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) {
      GroupElement prod = g.elements_[i] * gens[j];
      rmul.push_back(insert(std::move(prod), static_cast<int>(i), static_cast<int>(j)));
    }
  const int m = static_cast<int>(g.elements_.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    table[static_cast<std::size_t>(a) * m] = a;
    for (int b = 1; b < m; ++b) {
      int left = table[static_cast<std::size_t>(a) * m + parent[b]];
      table[static_cast<std::size_t>(a) * m + b] = rmul[static_cast<std::size_t>(left) * k + via[b]];
    }
  }
  g.table_ = Group::from_table(m, std::move(table));
  for (const auto& x : gens) g.gen_index_.push_back(g.find(x));
  return g;
}

std::vector<int> homomorphism_images(const FiniteGroup& source, const std::vector<GroupElement>& gen_images,
                                     const FiniteGroup& target) {
  if (gen_images.size() != source.generators().size())
    throw Error(ErrorCode::dimension_mismatch, "one image per generator required");
  std::vector<int> img;
  for (const auto& x : gen_images) {
    int i = target.find(x);
    if (i < 0) throw Error(ErrorCode::inconsistent, "generator image not in target group");
    img.push_back(i);
  }
  auto phi = extend_homomorphism(source.table(), source.generator_indices(), target.table(), img);
  if (!phi) throw Error(ErrorCode::inconsistent, "generator assignment does not extend to a homomorphism");
  return *phi;
}

}  // namespace cfl
