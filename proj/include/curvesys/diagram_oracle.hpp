#pragma once

// Exact geometric intersection numbers by explicit drawing and bigon removal.
//
// A surface is assembled from pairs of pants and annuli. Curves are drawn so
// that arcs inside one pair of pants are pairwise disjoint; every crossing
// then lies in an annulus, where strands are straight lines in the universal
// cover. The overlay of two curves is refined into a cellular map of the
// surface, the complementary regions are classified by Euler characteristic,
// and empty bigons (and half-bigons, for arcs) are removed until none remain.
// By the bigon criterion the remaining crossing count is minimal.

#include <iosfwd>
#include <variant>
#include <vector>

#include "curvesys/arc_types.hpp"
#include "curvesys/curve_codes.hpp"

namespace curvesys {

struct CuffSlot {
  int pants = 0;
  int slot = 0;  // 0..2
  auto operator<=>(const CuffSlot&) const = default;
};

/// Annulus glued to one cuff at t=0 and another at t=1.
struct AnnulusChart {
  CuffSlot bottom;
  CuffSlot top;
};

/// Pants, annuli and the cuffs left as surface boundary.
struct SurfaceChart {
  int pants_count = 0;
  std::vector<AnnulusChart> annuli;
  std::vector<CuffSlot> free_cuffs;

  /// Pants v for vertex v of K4, annulus e for edge e; cuff slots follow the
  /// planar rotation at each vertex and every annulus runs from its lower to
  /// its higher vertex.
  static const SurfaceChart& genus3_k4();
  /// Two pants glued along annulus 0 at cuff slot 0; slots 1 and 2 of both
  /// pants are boundary.
  static const SurfaceChart& four_holed_sphere();

  void validate() const;  // throws std::logic_error
  int slot_of_edge(int pants, int edge) const;  // genus3_k4 only
};

struct PantsSegment {
  int pants = 0;
  int from_slot = 0;
  int to_slot = 0;
};

struct AnnulusStrand {
  int annulus = 0;
  int winding = 0;  // full left turns relative to the reference strand
};

using DiagramSegment = std::variant<PantsSegment, AnnulusStrand>;

/// A curve or arc drawn on a chart. Closed curves list a cyclic alternating
/// sequence; arcs start and end with pants segments at free cuffs; a core
/// curve is the core circle of one annulus.
struct CurveDiagram {
  enum class Kind { Closed, Arc, Core };
  Kind kind = Kind::Closed;
  std::vector<DiagramSegment> segments;
  int core_annulus = -1;

  void validate(const SurfaceChart& chart) const;  // throws std::invalid_argument
};

/// Drawing of a code on the genus-3 chart. Reference strands have winding 0;
/// the chart is the mirror of the usual drawing, so twist t becomes winding -t.
CurveDiagram realize(const CurveCode& c);

struct OracleOptions {
  /// Reverses the nesting order of parallel arcs of the two curves.
  bool swap_slot_order = false;
  /// Receives a deterministic text trace of the overlay and every reduction.
  std::ostream* trace = nullptr;
};

struct OverlayResult {
  int initial_crossings = 0;
  int final_crossings = 0;
  int bigons_removed = 0;
  int half_bigons_removed = 0;
  int euler_characteristic = 0;  // of the capped chart
};

/// Overlays two diagrams and reduces them to minimal position.
OverlayResult overlay_and_reduce(const SurfaceChart& chart, const CurveDiagram& first,
                                 const CurveDiagram& second, const OracleOptions& options = {});

/// Geometric intersection number on the closed genus-3 surface.
int intersection_number(const CurveCode& a, const CurveCode& b, const OracleOptions& options = {});

/// Arc of a family on the four-holed sphere, twisted `winding` times about mu.
CurveDiagram lemma_arc(ArcFamily family, int winding);

/// Windings of the four pairwise disjoint reference arcs alpha_0, beta_0,
/// gamma_1/2, delta_1/2 (found by search with the oracle itself).
struct LemmaReference {
  int alpha = 0, beta = 0, gamma = 0, delta = 0;
  int winding(ArcFamily f) const;
  HalfInt base_index(ArcFamily f) const;  // 0 for A,B and 1/2 for G,D
};
const LemmaReference& lemma_reference();

/// Intersection number of the arcs (f1, n) and (f2, m) on the four-holed
/// sphere. Throws std::invalid_argument when an index has the wrong parity for
/// its family.
int replay_lemma(ArcFamily f1, HalfInt n, ArcFamily f2, HalfInt m, const OracleOptions& options = {});

}  // namespace curvesys
