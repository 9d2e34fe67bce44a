#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cfl/groups/element.hpp"
#include "cfl/groups/group.hpp"

namespace cfl {

struct CatalogEntry {
  std::string label;
  std::vector<GroupElement> generators;
  Fingerprint stored;          // as written in the file
  RefinedFingerprint refined;  // computed from the generators at load time
  Group group;
};

/// Named reference groups. File format (one record per group):
///
///   [label]
///   order = 8
///   orders = 1:1,2:5,4:2
///   abelian = 0
///   center = 2
///   abelianization = 2,2
///   exponent = 4
///   derived = 2
///   perm 4 = (1,2,3,4)
///   perm 4 = (1,3)
///
/// Matrix generators are written `matrix = [a, b; c, d]` (or `projective =`)
/// with entries as rationals "p/q" or cyclotomics "zN(c0 c1 ...)" giving the
/// power-basis coefficients at conductor N. Lines starting with '#' are comments.
class Catalog {
 public:
  static Catalog load(const std::filesystem::path& file);
  /// The shipped catalog (data directory from CFL_DATA_DIR or the build default).
  static const Catalog& builtin();

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  const CatalogEntry* find(const std::string& label) const;

  /// Unique label matching the refined fingerprint; throws unknown_group
  /// (with the fingerprint in the message) otherwise.
  std::string identify(const Group& g) const;
  std::optional<std::string> try_identify(const Group& g) const;

  /// Rewrite the record fields from the computed fingerprints.
  std::string serialize() const;

 private:
  std::vector<CatalogEntry> entries_;
  std::vector<std::vector<std::string>> raw_generators_;  // per entry, original generator lines
};

std::filesystem::path data_dir();

/// "zN(c0 c1 ...)" or a rational.
Cyclotomic parse_cyclotomic_literal(const std::string& text);
std::string cyclotomic_literal(const Cyclotomic& c);
CycMatrix parse_matrix_literal(const std::string& text);
std::string matrix_literal(const CycMatrix& m);

}  // namespace cfl
