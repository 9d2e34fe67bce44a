#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cfl/groups/group.hpp"
#include "cfl/lattice/lattice.hpp"

namespace cfl {

/// Fixed locus of a nontrivial automorphism: isolated points and curve genera.
struct FixedLocus {
  int s = 0;
  std::vector<int> curve_genera;
};

/// s - 3 + sum(2 - 2g).
int trace_from_fixed_locus(const FixedLocus& fl);
std::string fixed_locus_to_string(const FixedLocus& fl);

/// Traces of all elements of a group of order `group_order`; true iff they sum to 0.
/// Throws invalid_argument when the sizes differ.
bool is_minimal(const std::vector<int>& traces, int group_order);

/// Sum of traces on the orthogonal complement of K equals |G| * invariant rank.
bool character_orthogonality(const std::vector<LatticeIsometry>& group);

enum class TraceSource { lattice, fixed_locus, table };
const char* trace_source_name(TraceSource s) noexcept;

struct TraceRecord {
  TraceSource source;
  int value;
};

/// Per-element traces with every source that was computed for it.
struct TraceReport {
  std::string label;
  std::vector<std::vector<TraceRecord>> sources;
  std::vector<int> traces;
  long sum = 0;
  bool minimal = false;
};

/// Builds the report; throws verdict_disagreement when two sources for one
/// element differ or an element has no source.
TraceReport make_trace_report(std::string label, std::vector<std::vector<TraceRecord>> sources);

enum class Verdict { minimal_fixed, minimal_no_fixed, non_minimal };
const char* verdict_name(Verdict v) noexcept;

struct SubgroupVerdict {
  Subset elements;  // indices into the ambient group
  int class_size = 1;
  std::string label;
  bool cyclic = false;
  long trace_sum = 0;
  int invariant_rank = 0;
  bool has_fixed_point = true;
  std::vector<int> traces;  // sorted multiset
  Verdict verdict = Verdict::non_minimal;
  bool minimal() const { return verdict != Verdict::non_minimal; }
};

struct ClassifyOptions {
  bool include_cyclic = false;
  int max_order = 1000;
  /// Fixed-point test on a subgroup (ambient indices); default: every subgroup has one.
  std::function<bool(const Subset&)> fixed_point;
};

/// Every subgroup class of `ambient` (non-cyclic unless requested) with both
/// minimality tests. `iso[i]` is the lattice action of ambient element i.
/// Throws verdict_disagreement if the trace-sum and invariant-rank tests differ,
/// and inconsistent if the identity trace is not 9 - d (the rank of the complement of K).
std::vector<SubgroupVerdict> classify_minimal_fixed(const Group& ambient, const std::vector<LatticeIsometry>& iso,
                                                    const ClassifyOptions& opt = {});

/// Same, for surfaces where only per-element traces are known (no lattice
/// action). The invariant rank is the character average, which must be an
/// integer; `traces[0]` must equal `rank` (the identity).
std::vector<SubgroupVerdict> classify_by_traces(const Group& ambient, const std::vector<int>& traces, int rank,
                                                const ClassifyOptions& opt = {});

/// Label for a subgroup: catalog label, or "C<n>" when cyclic.
std::string group_label(const Group& g);

}  // namespace cfl
