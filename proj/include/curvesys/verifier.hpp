#pragma once

// Mechanical checks: k-systems, saturation over a twist window, the square
// restriction on a cut triangle, and the bridged-graph bounds.

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "curvesys/arc_calculus.hpp"
#include "curvesys/curve_codes.hpp"
#include "curvesys/graph_model.hpp"

namespace curvesys {

enum class Engine { Formula, Oracle, Both };
Engine parse_engine(std::string_view s);  // throws std::invalid_argument
std::string_view engine_name(Engine e);

/// One intersection number with its provenance. The formula path falls back to
/// the oracle where no closed form is exact; Both runs the oracle everywhere
/// and compares it with every closed form and lower bound it can.
struct Evaluation {
  int value = 0;
  Method method = Method::Oracle;
  std::optional<int> formula;
  std::optional<int> oracle;
  std::optional<int> lower_bound;
  bool consistent() const;
};
Evaluation evaluate(const CurveCode& a, const CurveCode& b, Engine engine);

struct PairRecord {
  std::size_t i = 0, j = 0;
  int value = 0;
  Method method = Method::Oracle;
};

struct SystemReport {
  std::vector<CurveCode> system;
  int k = 1;
  int max_intersection = 0;
  std::vector<PairRecord> pairs;
  std::vector<PairRecord> violations;
  std::vector<PairRecord> disagreements;
  bool verified() const { return violations.empty() && disagreements.empty(); }
};

/// Throws std::invalid_argument when a code occurs twice.
SystemReport is_k_system(const std::vector<CurveCode>& system, int k, Engine engine = Engine::Formula);

// --- saturation ------------------------------------------------------------------

/// Twists range over [lo, hi] in every coordinate.
struct Window {
  int lo = -2;
  int hi = 3;
  static Window from_radius(int r) { return {1 - r, r}; }
  int width() const { return hi - lo + 1; }
  bool operator==(const Window&) const = default;
};
inline constexpr Window kMinimalWindow{-2, 3};

struct WindowTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// All pants curves and all cycle codes with twists in the window, in canonical
/// order: a1..a6, then cycles in k4_cycles order with twists lexicographic.
std::vector<CurveCode> window_candidates(Window w);

struct CandidateOutcome {
  CurveCode candidate;
  bool member = false;
  std::optional<std::size_t> blocker;  // index into the system
  int blocker_value = 0;
  Method method = Method::Oracle;
};

/// Beyond the window end `end_value` of `edge` on `cycle`, the single-edge term
/// against `member` is at least 2 and never decreases.
struct TailWitness {
  Cycle cycle;
  int edge = 0;
  int end_value = 0;
  int direction = 1;
  std::optional<std::size_t> member;
  int term = 0;
  bool monotone = false;
  bool valid() const { return member && term >= 2 && monotone; }
};

struct SaturationReport {
  Window window;
  std::size_t candidate_count = 0;
  std::size_t member_count = 0;
  std::vector<CandidateOutcome> outcomes;  // canonical candidate order
  std::vector<CurveCode> admissible;
  std::vector<TailWitness> tail;
  std::vector<PairRecord> disagreements;  // i: candidate index, j: member index
  bool tail_valid() const;
  bool saturated() const { return admissible.empty() && tail_valid() && disagreements.empty(); }
};

/// `system` must be duplicate-free. Throws WindowTooSmall when the window
/// misses part of [-2, 3]. `threads` > 1 splits candidates across threads; the
/// report does not depend on it.
SaturationReport saturation_check(const std::vector<CurveCode>& system, Window window = kMinimalWindow,
                                  Engine engine = Engine::Formula, int threads = 1);

// --- dual-engine audit -----------------------------------------------------------------

struct AuditMismatch {
  CurveCode a, b;
  int formula = 0;  // the closed form, or the torus bound on same-triangle pairs
  int oracle = 0;
};

struct AuditReport {
  Window window;
  std::size_t cross_pairs = 0;     // distinct-cycle pairs, formula against oracle
  std::size_t triangle_pairs = 0;  // same-triangle pairs, oracle against the torus bound
  std::vector<AuditMismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

/// Every pair of window candidates except two codes on one square. Slow: the
/// oracle runs on each pair.
AuditReport dual_engine_audit(Window window = kMinimalWindow, int threads = 1);

// --- square restriction --------------------------------------------------------------

struct SquareRestriction {
  Cycle triangle;
  int cut_edge = 0;
  Cycle square;                      // avoids the cut edge and its opposite
  std::array<int, 2> edges{};        // the two triangle edges the square uses
  std::vector<std::array<int, 2>> pairs;  // twists at `edges` that can join the triangle's members
};

/// Twist pairs at the two triangle edges for which some square code (twists in
/// the window) meets every member of `system` on `triangle` at most once.
SquareRestriction unique_square_restriction(const std::vector<CurveCode>& system, Cycle triangle, int cut_edge,
                                            Window window = kMinimalWindow, Engine engine = Engine::Formula);

/// The square code avoiding `cut_edge` assembled from the restrictions on both
/// triangles through `cut_edge`; absent when either restriction is not a
/// singleton.
std::optional<CycleCurve> reconstruct_square(const std::vector<CurveCode>& system, int cut_edge,
                                             Window window = kMinimalWindow, Engine engine = Engine::Formula);

// --- graphs --------------------------------------------------------------------------

struct GraphBound {
  TrivalentGraph graph;
  std::size_t bridges = 0;
  std::optional<int> bound;
};
std::vector<GraphBound> bridged_graph_bounds(const BoundTable& table = BoundTable::standard());

// --- reports -------------------------------------------------------------------------

nlohmann::ordered_json to_json(const SystemReport& r);
nlohmann::ordered_json to_json(const SaturationReport& r, const std::vector<CurveCode>& system);
nlohmann::ordered_json to_json(const SquareRestriction& r);
nlohmann::ordered_json to_json(const AuditReport& r);

}  // namespace curvesys
