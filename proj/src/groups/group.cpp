#include "cfl/groups/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace cfl {

namespace {

std::vector<int> primes_dividing(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::string subset_key(const Subset& s, int n) {
  std::string key((n + 7) / 8, '\0');
  for (int x : s) key[x >> 3] = static_cast<char>(key[x >> 3] | (1 << (x & 7)));
  return key;
}

}  // namespace

Group Group::from_table(int n, std::vector<int> table) {
  if (n < 1 || table.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorCode::dimension_mismatch, "Cayley table size");
  Group g;
  g.n_ = n;
  g.table_ = std::move(table);
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) throw Error(ErrorCode::invalid_argument, "element 0 is not the identity");
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      int x = g.mul(a, b), y = g.mul(b, a);
      if (x < 0 || x >= n || y < 0 || y >= n || row[x] || col[y])
        throw Error(ErrorCode::invalid_argument, "Cayley table is not a Latin square");
      row[x] = col[y] = 1;
    }
  }
  // Full associativity is O(n^3); tables built by closure are associative by
  // construction, so only small hand-made tables are checked exhaustively.
  if (n <= 64)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw Error(ErrorCode::invalid_argument, "Cayley table is not associative");
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) {
        g.inv_[a] = b;
        break;
      }
  g.orders_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int k = 1;
    for (int x = a; x != 0; x = g.mul(x, a)) ++k;
    g.orders_[a] = a == 0 ? 1 : k;
  }
  return g;
}

Group Group::from_function(int n, const std::function<int(int, int)>& mul) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = mul(a, b);
  return from_table(n, std::move(t));
}

int Group::power(int a, long k) const {
  long o = orders_[a];
  k %= o;
  if (k < 0) k += o;
  int r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Subset Group::generate(const std::vector<int>& gens) const {
  std::vector<char> in(n_, 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int g : gens) {
      int y = mul(elems[i], g);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subset Group::all() const {
  Subset s(n_);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

bool Group::is_subgroup(const Subset& s) const {
  if (s.empty() || s.front() != 0) return false;
  std::vector<char> in(n_, 0);
  for (int x : s) in[x] = 1;
  for (int a : s)
    for (int b : s)
      if (!in[mul(a, b)]) return false;
  return true;
}

bool Group::is_normal(const Subset& h) const {
  std::vector<char> in(n_, 0);
  for (int x : h) in[x] = 1;
  for (int x : small_generating_set())
    for (int a : h)
      if (!in[conj(a, x)]) return false;
  return true;
}

bool Group::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subset Group::center() const {
  auto gens = small_generating_set();
  Subset z;
  for (int a = 0; a < n_; ++a)
    if (std::all_of(gens.begin(), gens.end(), [&](int g) { return mul(a, g) == mul(g, a); })) z.push_back(a);
  return z;
}

Subset Group::derived_subgroup() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> comms;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      int c = mul(mul(inv(a), inv(b)), mul(a, b));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return generate(comms);
}

Subset Group::conjugate(const Subset& h, int x) const {
  Subset r;
  r.reserve(h.size());
  for (int a : h) r.push_back(conj(a, x));
  std::sort(r.begin(), r.end());
  return r;
}

Subset Group::normalizer(const Subset& h) const {
  Subset nz;
  for (int x = 0; x < n_; ++x)
    if (conjugate(h, x) == h) nz.push_back(x);
  return nz;
}

std::vector<Subset> Group::conjugacy_classes() const {
  std::vector<char> done(n_, 0);
  std::vector<Subset> classes;
  for (int a = 0; a < n_; ++a) {
    if (done[a]) continue;
    Subset cls;
    for (int x = 0; x < n_; ++x) {
      int c = conj(a, x);
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Group Group::induced(const Subset& elems, std::vector<int>* index_map) const {
  std::vector<int> order;
  order.reserve(elems.size());
  order.push_back(0);
  for (int x : elems)
    if (x != 0) order.push_back(x);
  if (order.size() != elems.size()) throw Error(ErrorCode::invalid_argument, "induced: subset lacks the identity");
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  const int m = static_cast<int>(order.size());
  std::vector<int> t(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = pos[mul(order[i], order[j])];
      if (p < 0) throw Error(ErrorCode::invalid_argument, "induced: subset is not closed");
      t[static_cast<std::size_t>(i) * m + j] = p;
    }
  if (index_map) *index_map = order;
  return from_table(m, std::move(t));
}

Group Group::quotient(const Subset& normal, std::vector<int>* coset_of) const {
  std::vector<int> coset(n_, -1);
  std::vector<int> reps;
  for (int g = 0; g < n_; ++g) {
    if (coset[g] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : normal) coset[mul(g, h)] = id;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<int> t(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[static_cast<std::size_t>(i) * m + j] = coset[mul(reps[i], reps[j])];
  if (coset_of) *coset_of = coset;
  return from_table(m, std::move(t));
}

std::vector<int> Group::small_generating_set() const {
  std::vector<int> gens;
  std::vector<char> in(n_, 0);
  in[0] = 1;
  int covered = 1;
  while (covered < n_) {
    int best = -1;
    for (int a = 0; a < n_; ++a)
      if (!in[a] && (best < 0 || orders_[a] > orders_[best])) best = a;
    gens.push_back(best);
    Subset s = generate(gens);
    std::fill(in.begin(), in.end(), 0);
    for (int x : s) in[x] = 1;
    covered = static_cast<int>(s.size());
  }
  return gens;
}

std::vector<long> abelian_invariants(const Group& g) {
  const int n = g.order();
  std::map<int, std::vector<int>> ranks;  // p -> list of exponents of cyclic p-factors
  for (int p : primes_dividing(n)) {
    std::vector<int> counts{1};  // counts[j] = #{x : x^(p^j) = 1}
    long pj = 1;
    while (counts.back() < n) {
      pj *= p;
      int c = 0;
      for (int x = 0; x < n; ++x)
        if (pj % g.element_order(x) == 0) ++c;
      if (c == counts.back()) break;
      counts.push_back(c);
    }
    // factors of order >= p^j number log_p(counts[j] / counts[j-1])
    std::vector<int> at_least;
    for (std::size_t j = 1; j < counts.size(); ++j) {
      int ratio = counts[j] / counts[j - 1], k = 0;
      while (ratio > 1) {
        ratio /= p;
        ++k;
      }
      at_least.push_back(k);
    }
    std::vector<int> exps;
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      int next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (int c = 0; c < at_least[j] - next; ++c) exps.push_back(static_cast<int>(j + 1));
    }
    std::sort(exps.rbegin(), exps.rend());
    ranks[p] = exps;
  }
  std::size_t len = 0;
  for (auto& [p, e] : ranks) len = std::max(len, e.size());
  std::vector<long> factors(len, 1);
  for (auto& [p, e] : ranks)
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) factors[i] *= p;
  std::reverse(factors.begin(), factors.end());
  return factors;
}

Fingerprint fingerprint(const Group& g) {
  Fingerprint f;
  f.order = g.order();
  long exp = 1;
  for (int o : g.element_orders()) {
    ++f.order_histogram[o];
    exp = std::lcm(exp, static_cast<long>(o));
  }
  f.exponent = static_cast<int>(exp);
  f.abelian = g.is_abelian();
  f.center_order = static_cast<int>(g.center().size());
  Subset d = g.derived_subgroup();
  f.derived_order = static_cast<int>(d.size());
  f.abelianization = abelian_invariants(g.quotient(d));
  return f;
}

std::vector<Subset> index_two_subgroups(const Group& g) {
  std::vector<int> squares;
  std::vector<char> seen(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    int s = g.mul(x, x);
    if (!seen[s]) {
      seen[s] = 1;
      squares.push_back(s);
    }
  }
  Subset sq = g.generate(squares);
  if (static_cast<int>(sq.size()) == g.order()) return {};
  std::vector<int> coset;
  Group v = g.quotient(sq, &coset);
  std::vector<int> coord(v.order(), -1);
  coord[0] = 0;
  int r = 0;
  for (int b = 1; b < v.order(); ++b) {
    if (coord[b] >= 0) continue;
    std::vector<std::pair<int, int>> add;
    for (int x = 0; x < v.order(); ++x)
      if (coord[x] >= 0) add.emplace_back(v.mul(x, b), coord[x] | (1 << r));
    for (auto [y, c] : add) coord[y] = c;
    ++r;
  }
  std::vector<Subset> out;
  for (int phi = 1; phi < (1 << r); ++phi) {
    Subset h;
    for (int x = 0; x < g.order(); ++x)
      if (__builtin_popcount(static_cast<unsigned>(phi & coord[coset[x]])) % 2 == 0) h.push_back(x);
    out.push_back(std::move(h));
  }
  return out;
}

RefinedFingerprint refined_fingerprint(const Group& g) {
  RefinedFingerprint rf;
  rf.base = fingerprint(g);
  for (const auto& h : index_two_subgroups(g)) rf.index_two.push_back(fingerprint(g.induced(h)));
  std::sort(rf.index_two.begin(), rf.index_two.end());
  rf.central_quotient = fingerprint(g.quotient(g.center()));
  return rf;
}

std::string Fingerprint::to_string() const {
  std::string s = "order=" + std::to_string(order) + " orders={";
  bool first = true;
  for (auto [o, c] : order_histogram) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(o) + ":" + std::to_string(c);
  }
  s += "} abelian=" + std::string(abelian ? "1" : "0") + " center=" + std::to_string(center_order) + " ab=[";
  for (std::size_t i = 0; i < abelianization.size(); ++i) s += (i ? "," : "") + std::to_string(abelianization[i]);
  s += "] exponent=" + std::to_string(exponent) + " derived=" + std::to_string(derived_order);
  return s;
}

std::string RefinedFingerprint::to_string() const {
  std::string s = base.to_string() + " index2=" + std::to_string(index_two.size()) + " G/Z[" +
                  central_quotient.to_string() + "]";
  return s;
}

bool is_cyclic(const Group& g) {
  for (int o : g.element_orders())
    if (o == g.order()) return true;
  return false;
}

std::vector<SubgroupClass> subgroup_classes(const Group& g, int max_order) {
  const int n = g.order();
  if (n > max_order)
    throw Error(ErrorCode::budget_exceeded, "subgroup enumeration limited to order " + std::to_string(max_order));
  // one generator per distinct cyclic subgroup
  std::vector<int> cyclic_gens;
  {
    std::unordered_set<std::string> seen;
    for (int x = 0; x < n; ++x)
      if (seen.insert(subset_key(g.generate({x}), n)).second) cyclic_gens.push_back(x);
  }
  struct Rep {
    Subset elems;
    std::vector<int> gens;
    int class_size;
  };
  std::vector<Rep> reps;
  std::unordered_set<std::string> seen;
  auto add = [&](Subset h, std::vector<int> gens) {
    if (seen.count(subset_key(h, n))) return;
    int size = 0;
    for (int x = 0; x < n; ++x)
      if (seen.insert(subset_key(g.conjugate(h, x), n)).second) ++size;
    reps.push_back({std::move(h), std::move(gens), size});
  };
  add(Subset{0}, {});
  for (std::size_t i = 0; i < reps.size(); ++i) {
    std::vector<char> in(n, 0);
    for (int x : reps[i].elems) in[x] = 1;
    for (int c : cyclic_gens) {
      if (in[c]) continue;
      std::vector<int> gens = reps[i].gens;
      gens.push_back(c);
      Subset j = g.generate(gens);
      if (!seen.count(subset_key(j, n))) add(std::move(j), std::move(gens));
    }
  }
  std::vector<SubgroupClass> out;
  for (auto& r : reps) out.push_back({std::move(r.elems), r.class_size});
  std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.rep.size() != b.rep.size()) return a.rep.size() < b.rep.size();
    return a.rep < b.rep;
  });
  return out;
}

std::vector<Subset> subgroups_up_to_conjugacy(const Group& g, int max_order) {
  std::vector<Subset> out;
  for (auto& c : subgroup_classes(g, max_order)) out.push_back(std::move(c.rep));
  return out;
}

std::optional<std::vector<int>> extend_homomorphism(const Group& a, const std::vector<int>& gens, const Group& b,
                                                    const std::vector<int>& images) {
  if (gens.size() != images.size()) throw Error(ErrorCode::dimension_mismatch, "generator/image counts differ");
  std::vector<int> phi(a.order(), -1);
  phi[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = a.mul(x, gens[k]);
      int img = b.mul(phi[x], images[k]);
      if (phi[y] < 0) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != a.order())
    throw Error(ErrorCode::invalid_argument, "extend_homomorphism: generators do not generate");
  return phi;
}

std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (fingerprint(a) != fingerprint(b)) return std::nullopt;
  auto gens = a.small_generating_set();
  auto class_size = [](const Group& g) {
    std::vector<int> sz(g.order());
    for (const auto& c : g.conjugacy_classes())
      for (int x : c) sz[x] = static_cast<int>(c.size());
    return sz;
  };
  auto ca = class_size(a), cb = class_size(b);
  std::vector<std::vector<int>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < b.order(); ++y)
      if (b.element_order(y) == a.element_order(gens[i]) && cb[y] == ca[gens[i]]) cand[i].push_back(y);
  std::vector<int> img(gens.size());
  std::optional<std::vector<int>> found;
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (found) return;
    if (i == gens.size()) {
      auto phi = extend_homomorphism(a, gens, b, img);
      if (!phi) return;
      std::vector<char> hit(b.order(), 0);
      for (int y : *phi) {
        if (hit[y]) return;
        hit[y] = 1;
      }
      found = std::move(phi);
      return;
    }
    for (int y : cand[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = a.element_order(a.mul(gens[j], gens[i])) == b.element_order(b.mul(img[j], y)) &&
             a.element_order(a.mul(gens[j], a.inv(gens[i]))) == b.element_order(b.mul(img[j], b.inv(y)));
      if (!ok) continue;
      img[i] = y;
      dfs(i + 1);
      if (found) return;
    }
  };
  dfs(0);
  return found;
}

}  // namespace cfl
