#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>

#include "curvesys/graph_model.hpp"

using namespace curvesys;

namespace {

// Brute force, independent of the library: all 6-edge multisets over the ten
// vertex pairs (loops included), trivalent, connected, up to the 24 vertex
// permutations.
using EdgeList = std::vector<std::pair<int, int>>;

EdgeList relabel(const EdgeList& es, const std::array<int, 4>& p) {
  EdgeList out;
  for (auto [u, v] : es) out.push_back(std::minmax(p[u], p[v]));
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_connected(const EdgeList& es) {
  std::array<int, 4> root{0, 1, 2, 3};
  auto find = [&](int x) {
    while (root[x] != x) x = root[x];
    return x;
  };
  for (auto [u, v] : es) root[find(u)] = find(v);
  for (int v = 1; v < 4; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

std::set<EdgeList> brute_classes(bool want_connected) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 4; ++u)
    for (int v = u; v < 4; ++v) pairs.push_back({u, v});
  std::set<EdgeList> classes;
  std::vector<int> pick(6, 0);
  std::function<void(int, int)> rec = [&](int depth, int start) {
    if (depth == 6) {
      EdgeList es;
      std::array<int, 4> deg{};
      for (int i : pick) {
        es.push_back(pairs[i]);
        deg[pairs[i].first]++;
        deg[pairs[i].second]++;
      }
      if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 3; })) return;
      if (brute_connected(es) != want_connected) return;
      std::array<int, 4> p{0, 1, 2, 3};
      EdgeList best = relabel(es, p);
      while (std::next_permutation(p.begin(), p.end())) best = std::min(best, relabel(es, p));
      classes.insert(best);
      return;
    }
    for (int i = start; i < static_cast<int>(pairs.size()); ++i) {
      pick[depth] = i;
      rec(depth + 1, i);
    }
  };
  rec(0, 0);
  return classes;
}

}  // namespace

TEST(K4Labeling, IncidenceAndOpposites) {
  EXPECT_EQ(k4_edge_between(0, 1), 0);
  EXPECT_EQ(k4_edge_between(2, 0), 2);
  EXPECT_EQ(k4_edge_between(3, 2), 5);
  EXPECT_THROW(k4_edge_between(1, 1), std::invalid_argument);
  EXPECT_EQ(k4_opposite_edge(0), 5);
  EXPECT_EQ(k4_opposite_edge(1), 3);
  EXPECT_EQ(k4_opposite_edge(2), 4);
  for (int e = 0; e < kNumEdges; ++e) {
    int f = k4_opposite_edge(e);
    EXPECT_EQ(k4_opposite_edge(f), e);
    for (int v : kK4Edges[e]) EXPECT_TRUE(v != kK4Edges[f][0] && v != kK4Edges[f][1]);
  }
}

TEST(K4Labeling, RotationHasTheThreeIncidentEdges) {
  for (int v = 0; v < kNumVertices; ++v) {
    auto r = k4_rotation(v);
    std::set<int> got(r.begin(), r.end());
    std::set<int> want;
    for (int e = 0; e < kNumEdges; ++e)
      if (kK4Edges[e][0] == v || kK4Edges[e][1] == v) want.insert(e);
    EXPECT_EQ(got, want);
  }
}

TEST(Cycles, SevenCyclesWithSharingPattern) {
  EXPECT_EQ(k4_cycles().size(), 7u);
  EXPECT_EQ(k4_triangles().size(), 4u);
  EXPECT_EQ(k4_squares().size(), 3u);
  for (Cycle a : k4_cycles())
    for (Cycle b : k4_cycles()) {
      if (a == b) continue;
      bool both_triangles = a.kind() == CycleKind::Triangle && b.kind() == CycleKind::Triangle;
      EXPECT_EQ(a.shared_edges(b).size(), both_triangles ? 1u : 2u);
    }
  EXPECT_EQ(reference_triangle().edges(), (std::vector<int>{0, 1, 2}));
  EXPECT_THROW(Cycle::from_mask(0b000011), std::invalid_argument);
}

TEST(Cycles, SquareAvoidsAnOppositePair) {
  for (int e = 0; e < kNumEdges; ++e) {
    Cycle s = square_avoiding(e);
    EXPECT_EQ(s.kind(), CycleKind::Square);
    EXPECT_FALSE(s.contains(e));
    EXPECT_FALSE(s.contains(k4_opposite_edge(e)));
    EXPECT_EQ(s, square_avoiding(k4_opposite_edge(e)));
  }
}

TEST(GraphCatalog, FiveConnectedClassesMatchBruteForce) {
  auto gs = enumerate_trivalent_graphs();
  ASSERT_EQ(gs.size(), 5u);
  auto brute = brute_classes(true);
  EXPECT_EQ(brute.size(), 5u);
  std::set<EdgeList> lib;
  for (const auto& g : gs) {
    EXPECT_TRUE(g.connected());
    lib.insert(g.canonical().edges());
  }
  EXPECT_EQ(lib, brute);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) EXPECT_FALSE(gs[i].isomorphic(gs[j]));
  // disconnected trivalent graphs exist and are excluded
  EXPECT_EQ(brute_classes(false).size(), 3u);
}

TEST(GraphCatalog, BridgeCountsAndK4) {
  std::multiset<std::size_t> bridges;
  int k4 = 0;
  for (const auto& g : enumerate_trivalent_graphs()) {
    bridges.insert(g.bridges().size());
    k4 += g.is_k4();
  }
  EXPECT_EQ(bridges, (std::multiset<std::size_t>{0, 0, 1, 2, 3}));
  EXPECT_EQ(k4, 1);
}

TEST(GraphCatalog, RejectsNonTrivalent) {
  EXPECT_THROW(TrivalentGraph({{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}}), std::invalid_argument);
  EXPECT_THROW(TrivalentGraph({{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 2}}), std::invalid_argument);
}

TEST(Bounds, BridgedClasses) {
  std::multiset<int> got;
  int absent = 0;
  for (const auto& g : enumerate_trivalent_graphs()) {
    auto b = bound_1system(g, BoundTable::standard());
    if (b)
      got.insert(*b);
    else
      ++absent;
    EXPECT_EQ(b.has_value(), !g.bridges().empty());
  }
  EXPECT_EQ(got, (std::multiset<int>{21, 14, 12}));
  EXPECT_EQ(absent, 2);
  for (int b : got) EXPECT_LT(b, 33);
}

TEST(Bounds, BlocksAccountForTheWholeSurface) {
  for (const auto& g : enumerate_trivalent_graphs()) {
    auto blocks = bridge_blocks(g);
    int chi = 0, verts = 0;
    for (const auto& b : blocks) {
      chi += 2 * b.genus + b.boundary - 2;
      verts += b.vertices;
      EXPECT_GE(b.genus, 0);
    }
    EXPECT_EQ(chi, 4) << g.to_string();
    EXPECT_EQ(verts, 4);
  }
}

TEST(Bounds, MissingTableEntryThrows) {
  for (const auto& g : enumerate_trivalent_graphs())
    if (g.bridges().size() == 1) EXPECT_THROW(bound_1system(g, BoundTable({{{1, 1}, 3}})), std::out_of_range);
  EXPECT_THROW(BoundTable({{{1, 1}, 0}}), std::invalid_argument);
}
