#include "cfl/lefschetz/lefschetz.hpp"

#include <algorithm>
#include <numeric>

#include "cfl/error.hpp"
#include "cfl/groups/catalog.hpp"

namespace cfl {

int trace_from_fixed_locus(const FixedLocus& fl) {
  if (fl.s < 0) throw Error(ErrorCode::invalid_argument, "negative fixed point count");
  int t = fl.s - 3;
  for (int g : fl.curve_genera) {
    if (g < 0) throw Error(ErrorCode::invalid_argument, "negative genus");
    t += 2 - 2 * g;
  }
  return t;
}

std::string fixed_locus_to_string(const FixedLocus& fl) {
  std::string s = "s=" + std::to_string(fl.s) + " genera=[";
  for (std::size_t i = 0; i < fl.curve_genera.size(); ++i) s += (i ? "," : "") + std::to_string(fl.curve_genera[i]);
  return s + "]";
}

bool is_minimal(const std::vector<int>& traces, int group_order) {
  if (static_cast<int>(traces.size()) != group_order)
    throw Error(ErrorCode::invalid_argument, "trace multiset size differs from the group order");
  return std::accumulate(traces.begin(), traces.end(), 0L) == 0;
}

bool character_orthogonality(const std::vector<LatticeIsometry>& group) {
  return trace_sum(group) == static_cast<long>(group.size()) * invariant_rank(group);
}

const char* trace_source_name(TraceSource s) noexcept {
  switch (s) {
    case TraceSource::lattice: return "lattice";
    case TraceSource::fixed_locus: return "fixed_locus";
    case TraceSource::table: return "table";
  }
  return "?";
}

TraceReport make_trace_report(std::string label, std::vector<std::vector<TraceRecord>> sources) {
  TraceReport r;
  r.label = std::move(label);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (sources[i].empty()) throw Error(ErrorCode::verdict_disagreement, "element " + std::to_string(i) + " has no trace");
    for (const auto& rec : sources[i])
      if (rec.value != sources[i].front().value)
        throw Error(ErrorCode::verdict_disagreement,
                    r.label + ": element " + std::to_string(i) + " " + trace_source_name(sources[i].front().source) +
                        "=" + std::to_string(sources[i].front().value) + " vs " + trace_source_name(rec.source) + "=" +
                        std::to_string(rec.value));
    r.traces.push_back(sources[i].front().value);
  }
  r.sum = std::accumulate(r.traces.begin(), r.traces.end(), 0L);
  r.minimal = r.sum == 0;
  r.sources = std::move(sources);
  return r;
}

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::minimal_fixed: return "minimal+fixed-point";
    case Verdict::minimal_no_fixed: return "minimal-without-fixed-point";
    case Verdict::non_minimal: return "non-minimal";
  }
  return "?";
}

std::string group_label(const Group& g) {
  if (is_cyclic(g)) return "C" + std::to_string(g.order());
  return Catalog::builtin().identify(g);
}

std::vector<SubgroupVerdict> classify_minimal_fixed(const Group& ambient, const std::vector<LatticeIsometry>& iso,
                                                    const ClassifyOptions& opt) {
  if (static_cast<int>(iso.size()) != ambient.order())
    throw Error(ErrorCode::invalid_argument, "one isometry per group element required");
  const int degree = iso.front().degree();
  if (iso.front().trace_r() != 9 - degree)
    throw Error(ErrorCode::inconsistent, "identity trace is not the rank of the orthogonal complement of K");
  std::vector<SubgroupVerdict> out;
  for (const auto& cls : subgroup_classes(ambient, opt.max_order)) {
    Group sub = ambient.induced(cls.rep);
    bool cyc = is_cyclic(sub);
    if (cyc && !opt.include_cyclic) continue;
    SubgroupVerdict v;
    v.elements = cls.rep;
    v.class_size = cls.class_size;
    v.cyclic = cyc;
    v.label = group_label(sub);
    std::vector<LatticeIsometry> members;
    for (int i : cls.rep) {
      members.push_back(iso[i]);
      v.traces.push_back(iso[i].trace_r());
    }
    std::sort(v.traces.begin(), v.traces.end());
    v.trace_sum = std::accumulate(v.traces.begin(), v.traces.end(), 0L);
    v.invariant_rank = invariant_rank(members);
    bool by_trace = is_minimal(v.traces, sub.order());
    bool by_rank = v.invariant_rank == 0;
    if (by_trace != by_rank)
      throw Error(ErrorCode::verdict_disagreement, v.label + ": trace sum " + std::to_string(v.trace_sum) +
                                                       " but invariant rank " + std::to_string(v.invariant_rank));
    v.has_fixed_point = opt.fixed_point ? opt.fixed_point(cls.rep) : true;
    v.verdict = !by_trace ? Verdict::non_minimal : v.has_fixed_point ? Verdict::minimal_fixed : Verdict::minimal_no_fixed;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<SubgroupVerdict> classify_by_traces(const Group& ambient, const std::vector<int>& traces, int rank,
                                                const ClassifyOptions& opt) {
  if (static_cast<int>(traces.size()) != ambient.order())
    throw Error(ErrorCode::invalid_argument, "one trace per group element required");
  if (traces.front() != rank) throw Error(ErrorCode::inconsistent, "identity trace differs from the rank");
  std::vector<SubgroupVerdict> out;
  for (const auto& cls : subgroup_classes(ambient, opt.max_order)) {
    Group sub = ambient.induced(cls.rep);
    bool cyc = is_cyclic(sub);
    if (cyc && !opt.include_cyclic) continue;
    SubgroupVerdict v;
    v.elements = cls.rep;
    v.class_size = cls.class_size;
    v.cyclic = cyc;
    v.label = group_label(sub);
    for (int i : cls.rep) v.traces.push_back(traces[i]);
    std::sort(v.traces.begin(), v.traces.end());
    v.trace_sum = std::accumulate(v.traces.begin(), v.traces.end(), 0L);
    if (v.trace_sum % sub.order() != 0)
      throw Error(ErrorCode::inconsistent, v.label + ": trace sum " + std::to_string(v.trace_sum) +
                                               " is not a multiple of the order");
    v.invariant_rank = static_cast<int>(v.trace_sum / sub.order());
    v.has_fixed_point = opt.fixed_point ? opt.fixed_point(cls.rep) : true;
    bool minimal = is_minimal(v.traces, sub.order());
    v.verdict = !minimal ? Verdict::non_minimal : v.has_fixed_point ? Verdict::minimal_fixed : Verdict::minimal_no_fixed;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cfl
