#pragma once
// Brute-force enumeration of extensions 1 -> (Z/2)^a -> G -> C_n -> 1 and of
// their faithful 2-dimensional monomial representations sending some element
// of the kernel to -I. Independent of the conic classifier.

#include <algorithm>
#include <atomic>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cfl/groups/group.hpp"

namespace oracle {

struct Extension {
  int a = 1, n = 1;
  std::vector<int> phi;  // images of the basis vectors of (Z/2)^a, as bit masks
  int a0 = 0;            // t^n
  cfl::Group group;      // x t^k has index k 2^a + x
  cfl::Subset kernel;    // {0, ..., 2^a - 1}
  std::string describe() const {
    std::string s = "a=" + std::to_string(a) + " n=" + std::to_string(n) + " phi=";
    for (int v : phi) s += std::to_string(v) + ",";
    return s + " a0=" + std::to_string(a0);
  }
};

inline int apply_lin(const std::vector<int>& phi, int x) {
  int r = 0;
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (x >> i & 1) r ^= phi[i];
  return r;
}

inline int apply_pow(const std::vector<int>& phi, int k, int x) {
  for (int i = 0; i < k; ++i) x = apply_lin(phi, x);
  return x;
}

inline std::vector<std::vector<int>> automorphisms(int a) {
  std::vector<std::vector<int>> out;
  const int q = 1 << a;
  if (a == 1) return {{1}};
  for (int u = 1; u < q; ++u)
    for (int v = 1; v < q; ++v)
      if (u != v) out.push_back({u, v});
  return out;
}

inline cfl::Group build(int a, int n, const std::vector<int>& phi, int a0) {
  const int q = 1 << a;
  return cfl::Group::from_function(q * n, [&](int u, int v) {
    int x = u % q, k = u / q, y = v % q, l = v / q;
    int z = x ^ apply_pow(phi, k, y);
    if (k + l >= n) z ^= a0;
    return ((k + l) % n) * q + z;
  });
}

/// Every (phi, a0) with phi^n = id and phi(a0) = a0, for 4 <= 2^a n <= max_order.
inline std::vector<Extension> extensions(int a, int max_order) {
  std::vector<Extension> out;
  const int q = 1 << a;
  for (int n = 1; q * n <= max_order; ++n)
    for (const auto& phi : automorphisms(a)) {
      bool ok = true;
      for (int x = 0; x < q; ++x) ok = ok && apply_pow(phi, n, x) == x;
      if (!ok) continue;
      for (int a0 = 0; a0 < q; ++a0) {
        if (apply_lin(phi, a0) != a0) continue;
        Extension e;
        e.a = a;
        e.n = n;
        e.phi = phi;
        e.a0 = a0;
        e.group = build(a, n, phi, a0);
        for (int x = 0; x < q; ++x) e.kernel.push_back(x);
        out.push_back(std::move(e));
      }
    }
  return out;
}

// Monomial matrix over Z/N exponents: s = 0 diagonal, s = 1 antidiagonal
// [[0, z^e0], [z^e1, 0]].
struct M {
  int s, e0, e1;
  bool operator==(const M&) const = default;
};

inline M mul(const M& x, const M& y, int N) {
  if (x.s == 0) return {y.s, (x.e0 + y.e0) % N, (x.e1 + y.e1) % N};
  return {x.s ^ y.s, (x.e0 + y.e1) % N, (x.e1 + y.e0) % N};
}

inline M power(M x, int k, int N) {
  M r{0, 0, 0};
  for (int i = 0; i < k; ++i) r = mul(r, x, N);
  return r;
}

/// Non-cyclic and some faithful rho into GL(2) with rho(z) = -I for a kernel
/// element z. After conjugation, rho(kernel) is {I, -I} or {+-I, +-diag(1,-1)},
/// rho(t) normalizes it and so is monomial, and a diagonal conjugation puts
/// its entries in the 2n-th roots of unity.
inline bool admissible(const Extension& e) {
  if (cfl::is_cyclic(e.group)) return false;
  const int q = 1 << e.a, n = e.n, N = 2 * n, h = n;  // z^h = -1
  std::vector<std::vector<M>> kernel_maps;
  for (int zi = 1; zi < q; ++zi) {
    if (e.a == 1) {
      kernel_maps.push_back({{0, 0, 0}, {0, h, h}});
      continue;
    }
    for (int xi = 1; xi < q; ++xi) {
      if (xi == zi) continue;
      std::vector<M> img(q);
      img[0] = {0, 0, 0};
      img[zi] = {0, h, h};
      img[xi] = {0, 0, h};
      img[zi ^ xi] = {0, h, 0};
      kernel_maps.push_back(img);
    }
  }
  for (const auto& rk : kernel_maps) {
    for (int s = 0; s < 2; ++s)
      for (int e0 = 0; e0 < N; ++e0)
        for (int e1 = 0; e1 < N; ++e1) {
          M t{s, e0, e1};
          if (power(t, n, N) != rk[e.a0]) continue;
          // t y t^-1 = phi(y): t y = phi(y) t.
          bool ok = true;
          for (int y = 1; y < q && ok; ++y) ok = mul(t, rk[y], N) == mul(rk[apply_lin(e.phi, y)], t, N);
          if (!ok) continue;
          std::vector<M> rho(q * n);
          M tk{0, 0, 0};
          for (int k = 0; k < n; ++k) {
            for (int x = 0; x < q; ++x) rho[k * q + x] = mul(rk[x], tk, N);
            tk = mul(tk, t, N);
          }
          std::set<std::tuple<int, int, int>> seen;
          for (const auto& m : rho) seen.insert({m.s, m.e0, m.e1});
          if (static_cast<int>(seen.size()) != q * n) continue;
          for (int u = 0; u < q * n && ok; ++u)
            for (int v = 0; v < q * n && ok; ++v) ok = mul(rho[u], rho[v], N) == rho[e.group.mul(u, v)];
          if (ok) return true;
        }
  }
  return false;
}

/// Parallel map of admissible() over a list of extensions.
inline std::vector<char> admissible_all(const std::vector<Extension>& exts, int jobs) {
  std::vector<char> out(exts.size(), 0);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int j = 0; j < std::max(1, jobs); ++j)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < exts.size();) out[i] = admissible(exts[i]);
    });
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace oracle
