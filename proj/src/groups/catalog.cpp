#include "cfl/groups/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

namespace cfl {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
  throw Error(ErrorCode::parse_error, where + ": " + msg);
}

std::string join_longs(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s.empty() ? "1" : s;
}

std::string histogram_text(const std::map<int, int>& h) {
  std::string s;
  for (auto [o, c] : h) s += (s.empty() ? "" : ",") + std::to_string(o) + ":" + std::to_string(c);
  return s;
}

}  // namespace

Cyclotomic parse_cyclotomic_literal(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw Error(ErrorCode::parse_error, "empty number");
  if (t[0] == 'z') {
    std::size_t open = t.find('(');
    if (open == std::string::npos || t.back() != ')') throw Error(ErrorCode::parse_error, "bad cyclotomic literal " + t);
    int n = std::stoi(t.substr(1, open - 1));
    std::istringstream is(t.substr(open + 1, t.size() - open - 2));
    std::string tok;
    Cyclotomic acc(0);
    long k = 0;
    while (is >> tok) acc += Cyclotomic(parse_rational(tok)) * Cyclotomic::root_of_unity(n, k++);
    if (k != euler_phi(n)) throw Error(ErrorCode::parse_error, "cyclotomic literal needs phi(n) coefficients: " + t);
    return acc;
  }
  return Cyclotomic(parse_rational(t));
}

std::string cyclotomic_literal(const Cyclotomic& c) {
  if (c.is_rational()) return to_string(c.rational_value());
  std::string s = "z" + std::to_string(c.conductor()) + "(";
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) s += (i ? " " : "") + to_string(c.coeffs()[i]);
  return s + ")";
}

CycMatrix parse_matrix_literal(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw Error(ErrorCode::parse_error, "matrix must be [..]: " + t);
  auto rows = split(t.substr(1, t.size() - 2), ';');
  std::vector<std::vector<Cyclotomic>> vals;
  for (const auto& r : rows) {
    std::vector<Cyclotomic> row;
    for (const auto& e : split(r, ',')) row.push_back(parse_cyclotomic_literal(e));
    vals.push_back(std::move(row));
  }
  CycMatrix m(vals.size(), vals.front().size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i].size() != m.cols()) throw Error(ErrorCode::parse_error, "ragged matrix: " + t);
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vals[i][j];
  }
  return m;
}

std::string matrix_literal(const CycMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + cyclotomic_literal(m(i, j));
  }
  return s + "]";
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("CFL_DATA_DIR"); env && *env) return env;
#ifdef CFL_DATA_DIR
  return CFL_DATA_DIR;
#else
  return "data";
#endif
}

Catalog Catalog::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::io_error, "cannot open catalog " + file.string());
  Catalog cat;
  struct Pending {
    std::string label;
    std::map<std::string, std::string> fields;
    std::vector<std::string> gen_lines;
    int line = 0;
  };
  std::vector<Pending> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      records.push_back({t.substr(1, t.size() - 2), {}, {}, lineno});
      continue;
    }
    std::string where = file.string() + ":" + std::to_string(lineno);
    if (records.empty()) bad(where, "field outside a record");
    auto eq = t.find('=');
    if (eq == std::string::npos) bad(where, "expected key = value");
    std::string key = trim(t.substr(0, eq));
    if (key.rfind("perm", 0) == 0 || key == "matrix" || key == "projective")
      records.back().gen_lines.push_back(t);
    else
      records.back().fields[key] = trim(t.substr(eq + 1));
  }
  for (auto& r : records) {
    std::string where = file.string() + ":" + std::to_string(r.line) + " [" + r.label + "]";
    CatalogEntry e;
    e.label = r.label;
    for (const auto& g : r.gen_lines) {
      auto eq = g.find('=');
      std::string key = trim(g.substr(0, eq)), val = trim(g.substr(eq + 1));
      if (key.rfind("perm", 0) == 0) {
        int deg = std::stoi(trim(key.substr(4)));
        e.generators.push_back(GroupElement::permutation(parse_cycles(val, deg)));
      } else if (key == "matrix") {
        e.generators.push_back(GroupElement::matrix(parse_matrix_literal(val)));
      } else {
        e.generators.push_back(GroupElement::projective(parse_matrix_literal(val)));
      }
    }
    if (e.generators.empty()) bad(where, "no generators");
    FiniteGroup fg = closure(e.generators, 100000);
    e.group = fg.table();
    e.refined = refined_fingerprint(e.group);
    e.stored = e.refined.base;
    if (!r.fields.empty()) {
      const auto& f = e.refined.base;
      auto need = [&](const char* k, const std::string& expect) {
        auto it = r.fields.find(k);
        if (it == r.fields.end()) bad(where, std::string("missing field ") + k);
        if (it->second != expect)
          throw Error(ErrorCode::inconsistent, where + ": stored " + k + " = " + it->second + " but generators give " + expect);
      };
      need("order", std::to_string(f.order));
      need("orders", histogram_text(f.order_histogram));
      need("abelian", f.abelian ? "1" : "0");
      need("center", std::to_string(f.center_order));
      need("abelianization", join_longs(f.abelianization));
      need("exponent", std::to_string(f.exponent));
      need("derived", std::to_string(f.derived_order));
    }
    for (const auto& other : cat.entries_)
      if (other.refined == e.refined)
        throw Error(ErrorCode::inconsistent, where + ": fingerprint collides with [" + other.label + "]");
    cat.entries_.push_back(std::move(e));
    cat.raw_generators_.push_back(r.gen_lines);
  }
  return cat;
}

const Catalog& Catalog::builtin() {
  static std::once_flag once;
  static Catalog cat;
  std::call_once(once, [] { cat = load(data_dir() / "catalog.txt"); });
  return cat;
}

const CatalogEntry* Catalog::find(const std::string& label) const {
  for (const auto& e : entries_)
    if (e.label == label) return &e;
  return nullptr;
}

std::optional<std::string> Catalog::try_identify(const Group& g) const {
  RefinedFingerprint rf = refined_fingerprint(g);
  const CatalogEntry* hit = nullptr;
  for (const auto& e : entries_)
    if (e.refined == rf) {
      if (hit) return std::nullopt;
      hit = &e;
    }
  if (!hit) return std::nullopt;
  return hit->label;
}

std::string Catalog::identify(const Group& g) const {
  if (auto l = try_identify(g)) return *l;
  throw Error(ErrorCode::unknown_group, "group not in catalog: " + refined_fingerprint(g).to_string());
}

std::string Catalog::serialize() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    const auto& f = e.refined.base;
    out += "[" + e.label + "]\n";
    out += "order = " + std::to_string(f.order) + "\n";
    out += "orders = " + histogram_text(f.order_histogram) + "\n";
    out += "abelian = " + std::string(f.abelian ? "1" : "0") + "\n";
    out += "center = " + std::to_string(f.center_order) + "\n";
    out += "abelianization = " + join_longs(f.abelianization) + "\n";
    out += "exponent = " + std::to_string(f.exponent) + "\n";
    out += "derived = " + std::to_string(f.derived_order) + "\n";
    for (const auto& g : raw_generators_[i]) out += g + "\n";
    out += "\n";
  }
  return out;
}

}  // namespace cfl
