#include "cfl/surfaces/scene.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cfl/error.hpp"
#include "cfl/groups/catalog.hpp"
#include "cfl/surfaces/projective.hpp"

namespace cfl {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

CycVector parse_point(const std::string& text, const std::string& where) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw Error(ErrorCode::parse_error, where + ": point must be (..)");
  CycVector v;
  for (const auto& e : split(t.substr(1, t.size() - 2), ',')) v.push_back(parse_scene_number(e));
  return v;
}

CycMatrix parse_matrix(const std::string& text, const std::string& where) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw Error(ErrorCode::parse_error, where + ": matrix must be [..]");
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& r : split(t.substr(1, t.size() - 2), ';')) {
    std::vector<Cyclotomic> row;
    for (const auto& e : split(r, ',')) row.push_back(parse_scene_number(e));
    rows.push_back(std::move(row));
  }
  CycMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error(ErrorCode::parse_error, where + ": ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// Coefficient rows of parameter-free polynomials over their joint monomials.
std::size_t span_rank(const std::vector<ParamPoly>& polys) {
  std::set<Exponents, GrlexLess> monos;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms()) monos.insert(e);
  std::vector<Exponents> cols(monos.begin(), monos.end());
  CycMatrix m(polys.size(), cols.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto it = polys[i].terms().find(cols[j]);
      if (it != polys[i].terms().end()) m(i, j) = it->second;
    }
  return m.rank();
}

ParamPoly at_point(const ParamPoly& f, const std::vector<std::size_t>& coords, const CycVector& p) {
  std::vector<ParamPoly> images;
  for (std::size_t i = 0; i < f.vars()->size(); ++i) images.push_back(ParamPoly::variable(f.vars(), i));
  for (std::size_t k = 0; k < coords.size(); ++k) images[coords[k]] = ParamPoly(f.vars(), p[k]);
  return f.compose(images);
}

}  // namespace

Cyclotomic parse_scene_number(const std::string& text) {
  std::string t = trim(text);
  if (t.size() > 1 && t[0] == 'z' && t.find('(') != std::string::npos) return parse_cyclotomic_literal(t);
  static const auto empty = std::make_shared<const VarUniverse>(std::vector<std::string>{});
  ParamPoly p = ParamPoly::parse(t, empty);
  if (p.is_zero()) return Cyclotomic(0);
  if (!p.is_constant()) throw Error(ErrorCode::parse_error, "not a constant: " + t);
  return p.evaluate({});
}

bool Scene::has_parameters() const { return vars && vars->size() > coords.size(); }

FiniteGroup Scene::group(int max_order) const {
  std::vector<GroupElement> gens;
  for (const auto& g : generators) gens.push_back(GroupElement::projective(g));
  return closure(gens, max_order);
}

Scene parse_scene(const std::string& text, const std::string& origin) {
  Scene s;
  std::vector<std::pair<int, std::string>> equations, generators, points, fixed;
  std::vector<std::string> coord_names;
  std::istringstream is(text);
  std::string line;
  for (int no = 1; std::getline(is, line); ++no) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::parse_error, origin + ":" + std::to_string(no) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "name") s.name = val;
    else if (key == "variables") s.vars = std::make_shared<const VarUniverse>(words(val));
    else if (key == "coords") coord_names = words(val);
    else if (key == "equation") equations.push_back({no, val});
    else if (key == "generator") generators.push_back({no, val});
    else if (key == "point") points.push_back({no, val});
    else if (key == "fixed_point") fixed.push_back({no, val});
    else if (key == "group_order") s.group_order = std::stoi(val);
    else s.fields[key] = val;
  }
  auto where = [&](int no) { return origin + ":" + std::to_string(no); };
  if (s.name.empty()) throw Error(ErrorCode::parse_error, origin + ": missing name");
  if (!s.vars) throw Error(ErrorCode::parse_error, origin + ": missing variables");
  if (coord_names.empty()) throw Error(ErrorCode::parse_error, origin + ": missing coords");
  for (const auto& c : coord_names) {
    int i = s.vars->find(c);
    if (i < 0) throw Error(ErrorCode::parse_error, origin + ": unknown coordinate " + c);
    s.coords.push_back(static_cast<std::size_t>(i));
  }
  const std::size_t n = s.coords.size();
  for (const auto& [no, v] : equations) s.equations.push_back(ParamPoly::parse(v, s.vars));
  if (s.equations.empty()) throw Error(ErrorCode::parse_error, origin + ": no equation");
  for (const auto& [no, v] : generators) {
    CycMatrix m = parse_matrix(v, where(no));
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::dimension_mismatch, where(no) + ": generator size");
    s.generators.push_back(std::move(m));
  }
  auto read_points = [&](const auto& src, std::vector<CycVector>& dst) {
    for (const auto& [no, v] : src) {
      CycVector p = parse_point(v, where(no));
      if (p.size() != n) throw Error(ErrorCode::dimension_mismatch, where(no) + ": point size");
      for (const auto& f : s.equations)
        if (!at_point(f, s.coords, p).is_zero()) throw Error(ErrorCode::inconsistent, where(no) + ": point not on the variety");
      dst.push_back(std::move(p));
    }
  };
  read_points(points, s.points);
  read_points(fixed, s.fixed_points);

  for (std::size_t k = 0; k < s.generators.size(); ++k) {
    const CycMatrix& g = s.generators[k];
    const std::string w = where(generators[k].first);
    if (s.equations.size() == 1) {
      Cyclotomic c;
      if (!s.equations[0].substitute(s.coords, g).proportional_to(s.equations[0], &c))
        throw Error(ErrorCode::not_invariant, w + ": generator does not preserve the equation");
    } else {
      if (s.has_parameters()) throw Error(ErrorCode::unsupported, origin + ": several equations with parameters");
      std::vector<ParamPoly> all = s.equations;
      const std::size_t r = span_rank(all);
      for (const auto& f : s.equations) all.push_back(f.substitute(s.coords, g));
      if (span_rank(all) != r) throw Error(ErrorCode::not_invariant, w + ": generator does not preserve the equations");
    }
    for (const auto& p : s.fixed_points)
      if (!fixes_point(g, p)) throw Error(ErrorCode::inconsistent, w + ": generator moves a fixed point");
  }
  if (s.group_order) {
    int got = s.generators.empty() ? 1 : s.group(std::max(*s.group_order * 2, 16)).order();
    if (got != *s.group_order)
      throw Error(ErrorCode::inconsistent,
                  origin + ": group order " + std::to_string(got) + ", recorded " + std::to_string(*s.group_order));
  }
  return s;
}

Scene load_scene(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::io_error, "cannot read " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str(), file.filename().string());
}

std::vector<std::filesystem::path> shipped_scenes() {
  std::vector<std::filesystem::path> out;
  const auto dir = data_dir() / "scenes";
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::io_error, "no scene directory " + dir.string());
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".scene") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

Scene load_shipped_scene(const std::string& name) {
  return load_scene(data_dir() / "scenes" / (name + ".scene"));
}

}  // namespace cfl
