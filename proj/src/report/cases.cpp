#include "cfl/report/cases.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>

#include "cfl/error.hpp"
#include "cfl/exact/param_poly.hpp"

namespace cfl {

namespace {

using Subs = std::vector<std::pair<std::string, std::string>>;

std::vector<CaseNode> build_nodes() {
  const std::string order2 = "Aut(B) has an involution fixing p";
  const std::string order4 = "Aut(B) has an element of order 4 fixing p";
  const std::string order6 = "Aut(B) has an element of order 6 fixing p";
  const std::string order8 = "Aut(B) has an element of order 8 fixing p";
  const std::string order12 = "Aut(B) has an element of order 12 fixing p";
  auto cond = [](std::initializer_list<std::string> c) {
    Subs s;
    for (const auto& x : c) s.push_back({x, ""});
    return s;
  };
  return {
      {"L", "", {}, {}, {}, "the projective plane"},
      {"6", "", {}, {"S3", "S3x2"}, {}, "the degree 6 del Pezzo surface"},
      {"4", "", {}, {"3:4", "2^2:S3"}, {}, "degree 4, p on two of the curves E_i, both with j = 0"},
      {"3.1", "cubic", {}, {"S3"}, {"3.2"}, "cubic t0^3 + t1^3 + t2^3 + t3^3 + t0 t1 (a t2 + b t3) with three Eckardt points in the tangent plane at p = (0:0:1:-1)"},
      {"3.2", "cubic", {{"a", "b"}}, {"S3x2"}, {"3.3"}, "the cubic family with a = b"},
      {"3.3", "cubic", {{"a", "0"}, {"b", "0"}}, {"3^2", "6x3", "S3x3", "S3x3", "S3x6"}, {}, "the Fermat cubic"},
      {"2A.1", "conditions", cond({order2}), {"2^2"}, {"2A.2", "2A.3"}, "degree 2, p on the ramification curve"},
      {"2A.2", "conditions", cond({order2, order6}), {"6x2"}, {"2A.4"}, ""},
      {"2A.3", "conditions", cond({order2, order4}), {"4x2"}, {"2A.5"}, ""},
      {"2A.4", "conditions", cond({order2, order6, order12}), {"12x2"}, {}, ""},
      {"2A.5", "conditions", cond({order2, order4, order8}), {"8x2"}, {}, ""},
      {"2B.1", "quartic", {{"b", "0"}, {"c", "a"}}, {"D8"}, {"2B.3"}, "degree 2, p on four exceptional curves"},
      {"2B.2", "quartic", {{"a", "0"}, {"b", "0"}, {"d", "0"}}, {"4x2"}, {"2B.5"}, ""},
      {"2B.3", "quartic", {{"a", "0"}, {"b", "0"}, {"c", "0"}}, {"Q8", "4.2^2"}, {"2B.4", "2B.5"}, ""},
      {"2B.4", "quartic", {{"a", "0"}, {"b", "0"}, {"c", "0"}, {"d", "2 + 4*z3"}}, {"2.A4", "4.A4"}, {}, ""},
      {"2B.5", "quartic", {{"a", "0"}, {"b", "0"}, {"c", "0"}, {"d", "0"}}, {"4^2", "4.D8"}, {}, ""},
      {"1", "", {}, {}, {}, "degree 1, p the base point of |-K|"},
      {"C", "", {}, {}, {}, "minimal conic bundle"},
  };
}

std::shared_ptr<const VarUniverse> family_universe(const std::string& family) {
  static const auto cubic = std::make_shared<const VarUniverse>(std::vector<std::string>{"a", "b"});
  static const auto quartic = std::make_shared<const VarUniverse>(std::vector<std::string>{"a", "b", "c", "d"});
  if (family == "cubic") return cubic;
  if (family == "quartic") return quartic;
  throw Error(ErrorCode::invalid_argument, "no parameter universe for family " + family);
}

// Whether the substitutions in `by` force every equation of `eqs`.
bool implies(const Subs& by, const Subs& eqs, const std::shared_ptr<const VarUniverse>& u) {
  std::vector<ParamPoly> images;
  for (std::size_t i = 0; i < u->size(); ++i) images.push_back(ParamPoly::variable(u, i));
  for (const auto& [v, e] : by) {
    int i = u->find(v);
    if (i < 0) throw Error(ErrorCode::invalid_argument, "unknown parameter " + v);
    images[static_cast<std::size_t>(i)] = ParamPoly::parse(e, u);
  }
  auto reduce = [&](ParamPoly p) {
    for (std::size_t k = 0; k <= u->size(); ++k) p = p.compose(images);
    return p;
  };
  for (const auto& [v, e] : eqs)
    if (!reduce(ParamPoly::variable(u, v) - ParamPoly::parse(e, u)).is_zero()) return false;
  return true;
}

}  // namespace

const std::vector<CaseNode>& case_nodes() {
  static const std::vector<CaseNode> nodes = build_nodes();
  return nodes;
}

const CaseNode& case_node(const std::string& label) {
  for (const auto& n : case_nodes())
    if (n.label == label) return n;
  throw Error(ErrorCode::out_of_range, "unknown case " + label);
}

std::vector<std::string> case_ancestors(const std::string& label) {
  std::set<std::string> out;
  std::function<void(const std::string&)> up = [&](const std::string& l) {
    for (const auto& n : case_nodes())
      if (std::find(n.children.begin(), n.children.end(), l) != n.children.end() && out.insert(n.label).second)
        up(n.label);
  };
  case_node(label);
  up(label);
  return {out.begin(), out.end()};
}

bool strictly_specializes(const CaseNode& parent, const CaseNode& child) {
  if (parent.family != child.family || parent.family.empty()) return false;
  if (parent.family == "conditions") {
    std::set<std::string> p, c;
    for (const auto& x : parent.constraints) p.insert(x.first);
    for (const auto& x : child.constraints) c.insert(x.first);
    return c.size() > p.size() && std::includes(c.begin(), c.end(), p.begin(), p.end());
  }
  auto u = family_universe(parent.family);
  return implies(child.constraints, parent.constraints, u) && !implies(parent.constraints, child.constraints, u);
}

DagCheck check_specializations() {
  DagCheck r;
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  bool cycle = false;
  std::function<void(const CaseNode&)> dfs = [&](const CaseNode& n) {
    state[n.label] = 1;
    for (const auto& c : n.children) {
      const CaseNode* child = nullptr;
      for (const auto& m : case_nodes())
        if (m.label == c) child = &m;
      if (!child) {
        r.violations.push_back(n.label + " -> " + c + ": unknown case");
        continue;
      }
      if (!strictly_specializes(n, *child)) r.violations.push_back(n.label + " -> " + c + ": constraints do not nest");
      if (state[c] == 1) cycle = true;
      else if (state[c] == 0) dfs(*child);
    }
    state[n.label] = 2;
  };
  for (const auto& n : case_nodes())
    if (state[n.label] == 0) dfs(n);
  r.acyclic = !cycle;
  return r;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows{
      {"2^2", 4, {"2A.1"}},
      {"S3", 6, {"6"}},
      {"S3", 6, {"3.1"}},
      {"4x2", 8, {"2B.2", "2A.3"}},
      {"D8", 8, {"2B.1"}},
      {"Q8", 8, {"2B.3"}},
      {"3^2", 9, {"3.3"}},
      {"6x2", 12, {"2A.2"}},
      {"S3x2", 12, {"6"}},
      {"S3x2", 12, {"3.2"}},
      {"3:4", 12, {"4"}},
      {"4^2", 16, {"2B.5"}},
      {"8x2", 16, {"2A.5"}},
      {"4.2^2", 16, {"2B.3"}},
      {"6x3", 18, {"3.3"}},
      {"S3x3", 18, {"3.3"}, 2},
      {"12x2", 24, {"2A.4"}},
      {"2^2:S3", 24, {"4"}},
      {"2.A4", 24, {"2B.4"}},
      {"4.D8", 32, {"2B.5"}},
      {"S3x6", 36, {"3.3"}},
      {"4.A4", 48, {"2B.4"}},
  };
  return rows;
}

}  // namespace cfl
