#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cfl/exact/matrix.hpp"
#include "cfl/exact/param_poly.hpp"
#include "cfl/groups/element.hpp"

namespace cfl {

/// A model read from a scene file:
///
///   # comment
///   name = fermat-cubic
///   variables = t0 t1 t2 t3
///   coords = t0 t1 t2 t3
///   equation = t0^3 + t1^3 + t2^3 + t3^3
///   generator = [z3, 0, 0, 0; 0, 1, 0, 0; 0, 0, 1, 0; 0, 0, 0, 1]
///   point = (0, 0, 1, -1)
///   fixed_point = (...)
///   group_order = 648
///
/// Matrix and point entries are constant expressions in the polynomial
/// grammar (z4, -1/2*z8^3, ...) or catalog literals z8(c0 c1 c2 c3).
/// Unknown keys are kept in `fields`.
struct Scene {
  std::string name;
  std::shared_ptr<const VarUniverse> vars;
  std::vector<std::size_t> coords;
  std::vector<ParamPoly> equations;
  std::vector<CycMatrix> generators;  // projective
  std::vector<CycVector> points;
  std::vector<CycVector> fixed_points;
  std::optional<int> group_order;
  std::map<std::string, std::string> fields;

  bool has_parameters() const;
  FiniteGroup group(int max_order = 100000) const;
};

/// Parse and validate: every generator preserves the variety (one equation:
/// up to a constant; several: their span, parameter-free only), points lie on
/// it, fixed points are fixed by every generator, and the group has the
/// recorded order. parse_error / inconsistent / not_invariant on failure.
Scene parse_scene(const std::string& text, const std::string& origin = "<scene>");
Scene load_scene(const std::filesystem::path& file);

/// data_dir()/scenes, sorted by file name.
std::vector<std::filesystem::path> shipped_scenes();
Scene load_shipped_scene(const std::string& name);

/// Entry literal as used in scene files.
Cyclotomic parse_scene_number(const std::string& text);

}  // namespace cfl
