#pragma once

// Closed-form intersection numbers from projections onto the four-holed
// spheres around each pants curve.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvesys/arc_types.hpp"
#include "curvesys/curve_codes.hpp"

namespace curvesys {

struct ProjectedArc {
  int edge = 0;
  ArcFamily family = ArcFamily::A;
  HalfInt index;
  auto operator<=>(const ProjectedArc&) const = default;
};

enum class Method { Disjointness, EdgeMembership, SingleEdgeProjection, TwoEdgeSum, TorusCapping, Oracle };
std::string_view method_name(Method m);

/// Exact value when hi == lo; a lower bound only when hi is absent.
struct IntersectionResult {
  int lo = 0;
  std::optional<int> hi;
  Method method = Method::Oracle;

  static IntersectionResult exact(int n, Method m) { return {n, n, m}; }
  static IntersectionResult at_least(int n, Method m) { return {n, std::nullopt, m}; }
  bool is_exact() const { return hi && *hi == lo; }
  bool operator==(const IntersectionResult&) const = default;
};

/// i of two arcs around the same pants curve. Distinct families give
/// floor(|n-m|); two arcs of one family give |n-m|-1 (0 when equal).
int arc_intersection(const ProjectedArc& a, const ProjectedArc& b);  // throws on edge mismatch

// --- family table -------------------------------------------------------------

/// How a cycle through an edge projects to the four-holed sphere of that edge.
/// `cuffs` are the cycle's other edges at the lower and the higher end vertex.
struct FamilyEntry {
  int edge = 0;
  Cycle cycle;
  std::array<int, 2> cuffs{};
  ArcFamily family = ArcFamily::A;
  HalfInt offset;
  bool operator==(const FamilyEntry&) const = default;
};

class FamilyTable {
public:
  explicit FamilyTable(std::vector<FamilyEntry> entries);  // throws std::invalid_argument

  /// The frozen table shipped with the library.
  static const FamilyTable& builtin();
  static FamilyTable parse(std::string_view text);  // throws std::invalid_argument

  const FamilyEntry& lookup(int edge, Cycle cycle) const;  // throws std::out_of_range
  const std::vector<FamilyEntry>& entries() const { return entries_; }
  std::string to_text() const;
  bool operator==(const FamilyTable&) const = default;

private:
  std::vector<FamilyEntry> entries_;
};

/// Family from the cuff pair (by the planar rotation) and offset fitted
/// against the diagram oracle, normalized so the lower triangle through each
/// edge has offset 0.
FamilyTable derive_family_table();

// --- projections and closed forms --------------------------------------------------

std::optional<ProjectedArc> project(const CurveCode& c, int edge, const FamilyTable& table = FamilyTable::builtin());

/// Pairs that are not two curves on the same cycle. Throws std::invalid_argument
/// for a same-cycle pair.
IntersectionResult cross_cycle_intersection(const CurveCode& a, const CurveCode& b,
                                            const FamilyTable& table = FamilyTable::builtin());

/// |sum of twists difference| for two codes on one triangle: the intersection
/// after capping the three outer cuffs to get a torus, never above the truth.
int torus_lower_bound(const CurveCode& a, const CurveCode& b);  // throws std::invalid_argument

}  // namespace curvesys
