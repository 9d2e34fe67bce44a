#include "cfl/lattice/weyl.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <thread>

namespace cfl {

namespace {

// Deduplicating store of fixed-width byte records.
class FlatStore {
 public:
  explicit FlatStore(std::size_t width) : width_(width), table_(1u << 10, 0) {}

  std::size_t size() const { return data_.size() / width_; }
  const std::uint8_t* record(std::size_t i) const { return data_.data() + i * width_; }
  std::vector<std::uint8_t>& data() { return data_; }

  bool insert(const std::uint8_t* rec, std::uint64_t h) {
    if ((size() + 1) * 2 > table_.size()) grow();
    std::size_t mask = table_.size() - 1;
    for (std::size_t slot = h & mask;; slot = (slot + 1) & mask) {
      std::uint32_t v = table_[slot];
      if (v == 0) {
        data_.insert(data_.end(), rec, rec + width_);
        table_[slot] = static_cast<std::uint32_t>(size());
        return true;
      }
      if (std::memcmp(record(v - 1), rec, width_) == 0) return false;
    }
  }

  static std::uint64_t hash(const std::uint8_t* rec, std::size_t width) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < width; ++i) {
      h ^= rec[i];
      h *= 1099511628211ULL;
    }
    return h ^ (h >> 29);
  }

 private:
  void grow() {
    std::vector<std::uint32_t> t(table_.size() * 2, 0);
    std::size_t mask = t.size() - 1;
    for (std::size_t i = 0; i < size(); ++i) {
      std::size_t slot = hash(record(i), width_) & mask;
      while (t[slot]) slot = (slot + 1) & mask;
      t[slot] = static_cast<std::uint32_t>(i + 1);
    }
    table_.swap(t);
  }

  std::size_t width_;
  std::vector<std::uint8_t> data_;
  std::vector<std::uint32_t> table_;
};

void check_closure_degree(int d) {
  if (d < 2 || d > 7) throw Error(ErrorCode::out_of_range, "weyl closure supports degrees 2..7");
}

// Left multiplication by the reflection in r: M + r w^T, w_j = r . col_j.
void reflect_left(const std::int8_t* m, const PicVec& r, int n, std::int8_t* out) {
  int w[10];
  for (int c = 0; c < n; ++c) {
    int s = r[0] * m[c];
    for (int i = 1; i < n; ++i) s -= r[i] * m[i * n + c];
    w[c] = s;
  }
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c) {
      int v = m[i * n + c] + r[i] * w[c];
      if (v < -128 || v > 127) throw Error(ErrorCode::inconsistent, "Weyl element entry exceeds int8 range");
      out[i * n + c] = static_cast<std::int8_t>(v);
    }
}

}  // namespace

LatticeIsometry WeylGroup::element(std::uint64_t i) const {
  if (i >= order_ || data_.empty()) throw Error(ErrorCode::out_of_range, "Weyl element index");
  const int n = dim();
  std::vector<int> m(n * n);
  for (int k = 0; k < n * n; ++k) m[k] = data_[i * n * n + k];
  return LatticeIsometry(degree_, std::move(m));
}

WeylGroup weyl_closure(int degree, unsigned jobs) {
  check_closure_degree(degree);
  const int n = 10 - degree;
  const std::size_t width = static_cast<std::size_t>(n) * n;
  const auto gens = simple_roots(degree);
  FlatStore store(width);
  std::vector<std::int8_t> id(width, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  auto as_bytes = [](const std::int8_t* p) { return reinterpret_cast<const std::uint8_t*>(p); };
  store.insert(as_bytes(id.data()), FlatStore::hash(as_bytes(id.data()), width));
  jobs = std::max(1u, jobs);

  std::size_t lo = 0;
  while (lo < store.size()) {
    const std::size_t hi = store.size();
    const std::size_t count = (hi - lo) * gens.size();
    std::vector<std::int8_t> cand(count * width);
    std::vector<std::uint64_t> hashes(count);
    auto work = [&](std::size_t from, std::size_t to) {
      for (std::size_t k = from; k < to; ++k) {
        std::size_t elem = lo + k / gens.size();
        const auto* src = reinterpret_cast<const std::int8_t*>(store.record(elem));
        std::int8_t* dst = cand.data() + k * width;
        reflect_left(src, gens[k % gens.size()], n, dst);
        hashes[k] = FlatStore::hash(as_bytes(dst), width);
      }
    };
    if (jobs == 1 || count < 4096) {
      work(0, count);
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (count + jobs - 1) / jobs;
      for (unsigned t = 0; t < jobs; ++t) {
        std::size_t a = t * chunk, b = std::min(count, a + chunk);
        if (a < b) pool.emplace_back(work, a, b);
      }
      for (auto& th : pool) th.join();
    }
    for (std::size_t k = 0; k < count; ++k) store.insert(as_bytes(cand.data() + k * width), hashes[k]);
    lo = hi;
  }

  WeylGroup w;
  w.degree_ = degree;
  w.order_ = store.size();
  auto& bytes = store.data();
  w.data_.resize(bytes.size());
  std::memcpy(w.data_.data(), bytes.data(), bytes.size());
  return w;
}

WeylGroup weyl_order_only(int degree) {
  check_closure_degree(degree);
  PicLattice lat(degree);
  const int n = lat.rank();
  const auto gens = simple_roots(degree);
  const auto all_roots = enumerate_classes(degree, -2, 0);
  PicVec v(n);
  v[0] = 1 + 4 * (1 << n);
  for (int i = 1; i < n; ++i) v[i] = 1 << (i - 1);
  for (const auto& r : all_roots)
    if (lat.dot(v, r) == 0) throw Error(ErrorCode::inconsistent, "orbit seed is not regular");

  const std::size_t width = sizeof(std::int32_t) * n;
  FlatStore store(width);
  std::vector<std::int32_t> buf(n);
  auto push = [&](const PicVec& x) {
    for (int i = 0; i < n; ++i) buf[i] = x[i];
    auto* p = reinterpret_cast<const std::uint8_t*>(buf.data());
    store.insert(p, FlatStore::hash(p, width));
  };
  push(v);
  PicVec x(n);
  for (std::size_t i = 0; i < store.size(); ++i) {
    std::memcpy(buf.data(), store.record(i), width);
    for (int k = 0; k < n; ++k) x[k] = buf[k];
    for (const auto& r : gens) {
      int c = lat.dot(x, r);
      PicVec y = x;
      for (int k = 0; k < n; ++k) y[k] += c * r[k];
      push(y);
    }
  }
  WeylGroup w;
  w.degree_ = degree;
  w.order_ = store.size();
  return w;
}

namespace {

constexpr char kMagic[5] = {'W', 'C', 'L', 'S', '1'};
constexpr std::size_t kHeader = 5 + 1 + 8;

}  // namespace

void write_weyl_cache(const WeylGroup& w, const std::filesystem::path& file) {
  if (!w.has_elements()) throw Error(ErrorCode::invalid_argument, "cannot cache an order-only Weyl result");
  std::vector<std::uint8_t> head(kHeader);
  std::memcpy(head.data(), kMagic, 5);
  head[5] = static_cast<std::uint8_t>(w.degree());
  for (int i = 0; i < 8; ++i) head[6 + i] = static_cast<std::uint8_t>((w.order() >> (8 * i)) & 0xFF);
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, head.data(), static_cast<uInt>(head.size()));
  crc = crc32_z(crc, reinterpret_cast<const Bytef*>(w.raw().data()), w.raw().size());
  std::uint8_t tail[4];
  for (int i = 0; i < 4; ++i) tail[i] = static_cast<std::uint8_t>((crc >> (8 * i)) & 0xFF);

  std::filesystem::create_directories(file.parent_path().empty() ? "." : file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io_error, "cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(head.data()), static_cast<std::streamsize>(head.size()));
    out.write(reinterpret_cast<const char*>(w.raw().data()), static_cast<std::streamsize>(w.raw().size()));
    out.write(reinterpret_cast<const char*>(tail), 4);
    if (!out) throw Error(ErrorCode::io_error, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

WeylGroup read_weyl_cache(const std::filesystem::path& file) {
  std::error_code ec;
  if (!std::filesystem::exists(file, ec)) throw Error(ErrorCode::cache_missing, "no cache at " + file.string());
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + file.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto corrupt = [&](const std::string& why) { return Error(ErrorCode::cache_corrupt, file.string() + ": " + why); };
  if (bytes.size() < kHeader + 4) throw corrupt("truncated header");
  std::size_t body = bytes.size() - 4;
  uLong crc = crc32_z(crc32(0L, Z_NULL, 0), bytes.data(), body);
  std::uint32_t stored = 0;
  for (int i = 0; i < 4; ++i) stored |= static_cast<std::uint32_t>(bytes[body + i]) << (8 * i);
  if (stored != static_cast<std::uint32_t>(crc)) throw corrupt("checksum mismatch");
  if (std::memcmp(bytes.data(), kMagic, 5) != 0) throw corrupt("bad magic");
  int degree = bytes[5];
  if (degree < 2 || degree > 7) throw corrupt("bad degree");
  std::uint64_t order = 0;
  for (int i = 0; i < 8; ++i) order |= static_cast<std::uint64_t>(bytes[6 + i]) << (8 * i);
  std::size_t width = static_cast<std::size_t>(10 - degree) * (10 - degree);
  if (body - kHeader != order * width) throw corrupt("length does not match order");
  WeylGroup w;
  w.degree_ = degree;
  w.order_ = order;
  w.data_.resize(body - kHeader);
  std::memcpy(w.data_.data(), bytes.data() + kHeader, w.data_.size());
  return w;
}

std::filesystem::path weyl_cache_file(const std::filesystem::path& dir, int degree) {
  return dir / ("weyl_d" + std::to_string(degree) + ".wcls");
}

WeylGroup weyl_closure_cached(int degree, const std::optional<std::filesystem::path>& dir, unsigned jobs) {
  if (!dir) return weyl_closure(degree, jobs);
  auto file = weyl_cache_file(*dir, degree);
  try {
    WeylGroup w = read_weyl_cache(file);
    if (w.degree() != degree) throw Error(ErrorCode::cache_corrupt, file.string() + ": degree mismatch");
    return w;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::cache_missing) throw;
  }
  WeylGroup w = weyl_closure(degree, jobs);
  write_weyl_cache(w, file);
  return w;
}

}  // namespace cfl
