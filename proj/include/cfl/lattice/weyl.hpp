#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cfl/lattice/lattice.hpp"

namespace cfl {

/// The closure of the simple reflections in degree d. Elements are stored as
/// consecutive row-major int8 matrices of size (10-d)^2, identity first.
class WeylGroup {
 public:
  int degree() const noexcept { return degree_; }
  int dim() const noexcept { return 10 - degree_; }
  std::uint64_t order() const noexcept { return order_; }
  /// False for order-only results, which carry no element list.
  bool has_elements() const noexcept { return !data_.empty(); }
  const std::vector<std::int8_t>& raw() const noexcept { return data_; }
  LatticeIsometry element(std::uint64_t i) const;

 private:
  friend WeylGroup weyl_closure(int, unsigned);
  friend WeylGroup weyl_order_only(int);
  friend WeylGroup read_weyl_cache(const std::filesystem::path&);
  int degree_ = 0;
  std::uint64_t order_ = 0;
  std::vector<std::int8_t> data_;
};

/// Breadth-first closure under left multiplication by simple reflections,
/// 2 <= d <= 7. Expansion of each BFS layer is split over `jobs` threads.
WeylGroup weyl_closure(int degree, unsigned jobs = 1);

/// Order via the orbit of a regular vector (stabilizer is trivial); keeps
/// only vectors in memory.
WeylGroup weyl_order_only(int degree);

/// Cache file: "WCLS1", degree byte, little-endian u64 order, row-major int8
/// matrices, then CRC-32 (zlib polynomial) of all preceding bytes, little-endian.
void write_weyl_cache(const WeylGroup& w, const std::filesystem::path& file);
/// Throws cache_missing if absent and cache_corrupt on any format or checksum failure.
WeylGroup read_weyl_cache(const std::filesystem::path& file);
std::filesystem::path weyl_cache_file(const std::filesystem::path& dir, int degree);

/// Load from `dir` when a valid cache exists, otherwise build and write it.
/// A corrupt cache is an error, never silently rebuilt.
WeylGroup weyl_closure_cached(int degree, const std::optional<std::filesystem::path>& dir, unsigned jobs = 1);

}  // namespace cfl
