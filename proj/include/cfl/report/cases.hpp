#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cfl {

/// One case of the fixed-point classification. Equational constraints are
/// substitutions var = expr in the family's parameters ("cubic": a, b;
/// "quartic": a, b, c, d); "conditions" families use plain statements, compared as sets.
struct CaseNode {
  std::string label;
  std::string family;  // "cubic", "quartic", "conditions" or "" (no parameters)
  std::vector<std::pair<std::string, std::string>> constraints;
  std::vector<std::string> groups;    // groups first realized in this case; repeats = distinct classes
  std::vector<std::string> children;  // specializations
  std::string description;
};

const std::vector<CaseNode>& case_nodes();
/// Throws out_of_range for unknown labels.
const CaseNode& case_node(const std::string& label);
/// Labels of all proper generizations (ancestors), sorted.
std::vector<std::string> case_ancestors(const std::string& label);

/// The child's constraints imply the parent's, and not conversely.
bool strictly_specializes(const CaseNode& parent, const CaseNode& child);

struct DagCheck {
  bool acyclic = false;
  std::vector<std::string> violations;  // edges whose constraints do not nest, unknown labels
  bool ok() const { return acyclic && violations.empty(); }
};
DagCheck check_specializations();

struct Table1Row {
  std::string group;
  int order = 0;
  std::vector<std::string> cases;
  int multiplicity = 1;  // conjugacy classes realized in the case (S3 x 3 in 3.3: 2)
};
/// Groups with a fixed point realized on minimal del Pezzo surfaces of degree 2 to 6.
const std::vector<Table1Row>& table1_rows();

}  // namespace cfl
