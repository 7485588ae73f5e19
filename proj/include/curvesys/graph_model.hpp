#pragma once

// Trivalent multigraphs on four vertices (the dual graphs of pants
// decompositions of the closed genus-3 surface), the fixed K4 labeling used by
// the rest of the library, and the counting bounds for bridged graphs.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvesys {

inline constexpr int kNumVertices = 4;
inline constexpr int kNumEdges = 6;

/// Fixed incidence of K4: e1={v1,v2}, e2={v2,v3}, e3={v3,v1}, e4={v4,v1},
/// e5={v4,v2}, e6={v4,v3}. Indices are zero-based (edge 0 is e1).
inline constexpr std::array<std::array<int, 2>, kNumEdges> kK4Edges{{
    {0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}}};

/// Edge of K4 joining two distinct vertices.
int k4_edge_between(int u, int v);

/// The edge sharing no vertex with `e`. Pairs are (e1,e6), (e2,e4), (e3,e5).
int k4_opposite_edge(int e);

/// The three edges at `v` in the counter-clockwise order of the planar drawing
/// (v1, v2, v3 the outer triangle, v4 in the center).
std::array<int, 3> k4_rotation(int v);

enum class CycleKind { Triangle, Square };

/// A simple cycle of K4 stored as a bitmask over edges.
class Cycle {
public:
  constexpr Cycle() = default;
  static Cycle from_mask(std::uint8_t mask);  // throws if not a cycle of K4

  std::uint8_t mask() const { return mask_; }
  CycleKind kind() const;
  bool contains(int edge) const { return (mask_ >> edge) & 1U; }
  std::vector<int> edges() const;  // ascending
  std::vector<int> vertices() const;
  int size() const;
  /// Edges shared with another cycle, ascending.
  std::vector<int> shared_edges(Cycle other) const;

  auto operator<=>(const Cycle&) const = default;

private:
  explicit constexpr Cycle(std::uint8_t mask) : mask_(mask) {}
  std::uint8_t mask_ = 0;
};

/// All seven cycles of K4: triangles first (ascending mask), then squares.
const std::vector<Cycle>& k4_cycles();
const std::vector<Cycle>& k4_triangles();
const std::vector<Cycle>& k4_squares();

/// The triangle {e1,e2,e3} around v4.
Cycle reference_triangle();

/// The square avoiding an opposite pair.
Cycle square_avoiding(int edge);

using GraphEdge = std::pair<int, int>;  // first <= second; loops allowed

/// A multigraph on four vertices with six edges, every vertex of degree three.
class TrivalentGraph {
public:
  explicit TrivalentGraph(std::vector<GraphEdge> edges);  // validates

  const std::vector<GraphEdge>& edges() const { return edges_; }
  int degree(int v) const;
  bool connected() const;
  /// Indices into edges() of the bridges.
  std::vector<int> bridges() const;
  /// Lexicographically smallest edge list over all vertex relabelings.
  TrivalentGraph canonical() const;
  bool isomorphic(const TrivalentGraph& other) const;
  bool is_k4() const;
  std::string to_string() const;

  auto operator<=>(const TrivalentGraph&) const = default;

private:
  std::vector<GraphEdge> edges_;
};

/// One representative per isomorphism class of connected trivalent graphs on
/// four vertices, sorted by bridge count and then by edge list.
std::vector<TrivalentGraph> enumerate_trivalent_graphs();

/// Known maximal 1-system sizes on compact surfaces, keyed by
/// (genus, boundary count).
class BoundTable {
public:
  BoundTable() = default;
  explicit BoundTable(std::map<std::pair<int, int>, int> entries);

  /// (1,n) -> 3n for n = 1..3, and (2,1) -> 17.
  static BoundTable standard();

  std::optional<int> lookup(int genus, int boundary) const;
  const std::map<std::pair<int, int>, int>& entries() const { return entries_; }

private:
  std::map<std::pair<int, int>, int> entries_;
};

struct BlockSummary {
  int genus = 0;
  int boundary = 0;
  int vertices = 0;
  int edges = 0;
};

/// 2-edge-connected pieces left after deleting all bridges.
std::vector<BlockSummary> bridge_blocks(const TrivalentGraph& g);

/// Upper bound on the size of a 1-system containing the pants curves of `g`.
/// Absent for bridgeless graphs. Throws std::out_of_range when a block has no
/// table entry.
std::optional<int> bound_1system(const TrivalentGraph& g, const BoundTable& table);

}  // namespace curvesys
