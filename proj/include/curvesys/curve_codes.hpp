#pragma once

// Twist-parameter encodings of curves relative to the K4 pants decomposition,
// the A4 action on them, and the 33-curve system.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "curvesys/graph_model.hpp"

namespace curvesys {

/// The pants curve dual to a K4 edge.
struct BoundaryCurve {
  int edge = 0;
  auto operator<=>(const BoundaryCurve&) const = default;
};

/// A multitwist of the reference curve of a cycle. Entries of `twist` off the
/// cycle are kept at zero so structural equality is canonical.
struct CycleCurve {
  Cycle cycle;
  std::array<int, kNumEdges> twist{};

  auto operator<=>(const CycleCurve&) const = default;
};

using CurveCode = std::variant<BoundaryCurve, CycleCurve>;

/// Builds a cycle curve from twists listed in ascending edge order of `cycle`.
CycleCurve make_cycle_curve(Cycle cycle, const std::vector<int>& twists_in_edge_order);

/// Triangle code on the reference triangle {e1,e2,e3}: <t1,t2,t3>.
CycleCurve triangle_code(int t1, int t2, int t3);

inline bool is_boundary(const CurveCode& c) { return std::holds_alternative<BoundaryCurve>(c); }
const CycleCurve* as_cycle(const CurveCode& c);
/// Cycle of a cycle curve, absent for pants curves.
std::optional<Cycle> cycle_of(const CurveCode& c);
/// Whether the curve crosses the pants curve of `edge`.
bool traverses(const CurveCode& c, int edge);

// --- tuple form ------------------------------------------------------------

/// Six slots indexed by e1..e6; blanks are the edges a cycle curve skips.
using TupleForm = std::array<std::optional<int>, kNumEdges>;

TupleForm to_tuple(const CycleCurve& c);
CycleCurve from_tuple(const TupleForm& t);  // throws std::invalid_argument

/// Canonical text: "a<k>" for pants curves, six comma-separated slots with
/// '_' blanks for cycle curves, e.g. "1,_,0,_,0,1".
std::string render(const CurveCode& c);
CurveCode parse_curve(std::string_view text);  // throws std::invalid_argument

// --- symmetry group ---------------------------------------------------------

/// An even permutation of the four vertices together with its edge action.
class Symmetry {
public:
  static Symmetry from_vertex_images(std::array<int, kNumVertices> images);  // throws if odd
  static Symmetry identity();

  int vertex(int v) const { return vertex_[v]; }
  int edge(int e) const { return edge_[e]; }
  const std::array<int, kNumVertices>& vertex_images() const { return vertex_; }

  Symmetry compose(const Symmetry& inner) const;  // (this o inner)
  Symmetry inverse() const;
  bool is_identity() const;
  /// Cycle notation on v1..v4, e.g. "(1 2 3)" or "()".
  std::string cycle_notation() const;

  auto operator<=>(const Symmetry& o) const { return vertex_ <=> o.vertex_; }
  bool operator==(const Symmetry& o) const { return vertex_ == o.vertex_; }

private:
  std::array<int, kNumVertices> vertex_{};
  std::array<int, kNumEdges> edge_{};
};

/// The twelve elements of A4, sorted by vertex images (identity first).
const std::vector<Symmetry>& a4_group();

CurveCode apply(const Symmetry& g, const CurveCode& c);
Cycle apply(const Symmetry& g, Cycle c);

/// Sorted, duplicate-free orbit under A4.
std::vector<CurveCode> orbit(const CurveCode& c);
/// Orbit under a given set of symmetries (closure is the caller's concern).
std::vector<CurveCode> orbit_under(const std::vector<Symmetry>& group, const CurveCode& c);
/// Elements of A4 fixing `c`.
std::vector<Symmetry> stabilizer(const CurveCode& c);
/// A4 elements fixing vertex v (a cyclic group of order three).
std::vector<Symmetry> vertex_stabilizer(int v);
bool is_subgroup(const std::vector<Symmetry>& elements);

// --- the 33-curve system ------------------------------------------------------

struct X0Generators {
  CycleCurve gamma1;  // <1,0,0> on {e1,e2,e3}
  CycleCurve gamma2;  // <1,1,0> on {e1,e2,e3}
  CycleCurve gamma3;  // <1,_,0,_,0,1>
};
X0Generators x0_generators();

/// The six pants curves together with the A4 orbits of gamma1..gamma3.
std::vector<CurveCode> build_X0();

/// Members of a system lying on a given cycle.
std::vector<CurveCode> restrict_to_cycle(const std::vector<CurveCode>& system, Cycle cycle);

struct TypeCensus {
  int boundary = 0;
  int triangle = 0;
  int square = 0;
};
TypeCensus census(const std::vector<CurveCode>& system);

}  // namespace curvesys
