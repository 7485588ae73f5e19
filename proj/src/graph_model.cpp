#include "curvesys/graph_model.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace curvesys {

int k4_edge_between(int u, int v) {
  for (int e = 0; e < kNumEdges; ++e) {
    auto [a, b] = kK4Edges[e];
    if ((a == u && b == v) || (a == v && b == u)) return e;
  }
  throw std::invalid_argument("k4_edge_between: vertices must be distinct");
}

int k4_opposite_edge(int e) {
  auto [a, b] = kK4Edges.at(e);
  for (int f = 0; f < kNumEdges; ++f) {
    auto [c, d] = kK4Edges[f];
    if (c != a && c != b && d != a && d != b) return f;
  }
  throw std::logic_error("K4 edge without opposite");
}

std::array<int, 3> k4_rotation(int v) {
  static constexpr std::array<std::array<int, 3>, kNumVertices> kRot{{
      {0, 3, 2}, {1, 4, 0}, {2, 5, 1}, {3, 4, 5}}};
  return kRot.at(v);
}

namespace {

bool mask_is_cycle(std::uint8_t mask) {
  int n = std::popcount(mask);
  if (n != 3 && n != 4) return false;
  std::array<int, kNumVertices> deg{};
  for (int e = 0; e < kNumEdges; ++e)
    if ((mask >> e) & 1U) {
      ++deg[kK4Edges[e][0]];
      ++deg[kK4Edges[e][1]];
    }
  int used = 0;
  for (int d : deg) {
    if (d != 0 && d != 2) return false;
    used += d == 2;
  }
  // a 2-regular subgraph of K4 with 3 or 4 edges is a single cycle
  return used == n;
}

}  // namespace

Cycle Cycle::from_mask(std::uint8_t mask) {
  if (!mask_is_cycle(mask)) throw std::invalid_argument("edge set is not a cycle of K4");
  return Cycle(mask);
}

CycleKind Cycle::kind() const {
  return std::popcount(mask_) == 3 ? CycleKind::Triangle : CycleKind::Square;
}

int Cycle::size() const { return std::popcount(mask_); }

std::vector<int> Cycle::edges() const {
  std::vector<int> out;
  for (int e = 0; e < kNumEdges; ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

std::vector<int> Cycle::vertices() const {
  std::vector<int> out;
  for (int e : edges())
    for (int v : kK4Edges[e])
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Cycle::shared_edges(Cycle other) const {
  std::vector<int> out;
  for (int e = 0; e < kNumEdges; ++e)
    if (contains(e) && other.contains(e)) out.push_back(e);
  return out;
}

const std::vector<Cycle>& k4_triangles() {
  static const std::vector<Cycle> tris = [] {
    std::vector<Cycle> out;
    for (int m = 1; m < 64; ++m)
      if (std::popcount(static_cast<unsigned>(m)) == 3 && mask_is_cycle(static_cast<std::uint8_t>(m)))
        out.push_back(Cycle::from_mask(static_cast<std::uint8_t>(m)));
    return out;
  }();
  return tris;
}

const std::vector<Cycle>& k4_squares() {
  static const std::vector<Cycle> sqs = [] {
    std::vector<Cycle> out;
    for (int m = 1; m < 64; ++m)
      if (std::popcount(static_cast<unsigned>(m)) == 4 && mask_is_cycle(static_cast<std::uint8_t>(m)))
        out.push_back(Cycle::from_mask(static_cast<std::uint8_t>(m)));
    return out;
  }();
  return sqs;
}

const std::vector<Cycle>& k4_cycles() {
  static const std::vector<Cycle> all = [] {
    auto out = k4_triangles();
    const auto& sq = k4_squares();
    out.insert(out.end(), sq.begin(), sq.end());
    return out;
  }();
  return all;
}

Cycle reference_triangle() { return Cycle::from_mask(0b000111); }

Cycle square_avoiding(int edge) {
  int opp = k4_opposite_edge(edge);
  return Cycle::from_mask(static_cast<std::uint8_t>(0b111111 & ~(1U << edge) & ~(1U << opp)));
}

// ---------------------------------------------------------------------------

TrivalentGraph::TrivalentGraph(std::vector<GraphEdge> edges) : edges_(std::move(edges)) {
  if (edges_.size() != kNumEdges) throw std::invalid_argument("trivalent graph needs 6 edges");
  for (auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= kNumVertices || b >= kNumVertices)
      throw std::invalid_argument("vertex id out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  for (int v = 0; v < kNumVertices; ++v)
    if (degree(v) != 3) throw std::invalid_argument("graph is not trivalent");
}

int TrivalentGraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

int component_count(const std::vector<GraphEdge>& edges, int skip) {
  Dsu d(kNumVertices);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (i != skip) d.unite(edges[i].first, edges[i].second);
  int n = 0;
  for (int v = 0; v < kNumVertices; ++v) n += d.find(v) == v;
  return n;
}

}  // namespace

bool TrivalentGraph::connected() const { return component_count(edges_, -1) == 1; }

std::vector<int> TrivalentGraph::bridges() const {
  std::vector<int> out;
  int base = component_count(edges_, -1);
  for (int i = 0; i < kNumEdges; ++i)
    if (component_count(edges_, i) > base) out.push_back(i);
  return out;
}

TrivalentGraph TrivalentGraph::canonical() const {
  std::array<int, kNumVertices> perm{0, 1, 2, 3};
  std::vector<GraphEdge> best;
  do {
    std::vector<GraphEdge> mapped;
    for (auto [a, b] : edges_) {
      int x = perm[a], y = perm[b];
      mapped.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return TrivalentGraph(best);
}

bool TrivalentGraph::isomorphic(const TrivalentGraph& other) const {
  return canonical() == other.canonical();
}

bool TrivalentGraph::is_k4() const {
  for (auto [a, b] : edges_)
    if (a == b) return false;
  auto e = edges_;
  return std::adjacent_find(e.begin(), e.end()) == e.end();
}

std::string TrivalentGraph::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ' ';
    os << 'v' << edges_[i].first + 1 << "-v" << edges_[i].second + 1;
  }
  os << ']';
  return os.str();
}

std::vector<TrivalentGraph> enumerate_trivalent_graphs() {
  std::vector<GraphEdge> pairs;
  for (int a = 0; a < kNumVertices; ++a)
    for (int b = a; b < kNumVertices; ++b) pairs.emplace_back(a, b);

  // multisets of six pairs, chosen with non-decreasing index
  std::vector<TrivalentGraph> classes;
  std::vector<int> pick(kNumEdges, 0);
  auto visit = [&](auto&& self, int pos, int start) -> void {
    if (pos == kNumEdges) {
      std::array<int, kNumVertices> deg{};
      for (int i : pick) {
        ++deg[pairs[i].first];
        ++deg[pairs[i].second];
      }
      for (int d : deg)
        if (d != 3) return;
      std::vector<GraphEdge> es;
      for (int i : pick) es.push_back(pairs[i]);
      TrivalentGraph g(es);
      // pants decompositions of a connected surface have connected dual graphs
      if (!g.connected()) return;
      auto c = g.canonical();
      if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
      return;
    }
    for (int i = start; i < static_cast<int>(pairs.size()); ++i) {
      pick[pos] = i;
      self(self, pos + 1, i);
    }
  };
  visit(visit, 0, 0);

  std::sort(classes.begin(), classes.end(), [](const TrivalentGraph& a, const TrivalentGraph& b) {
    auto ka = a.bridges().size(), kb = b.bridges().size();
    if (ka != kb) return ka < kb;
    return a.edges() < b.edges();
  });
  return classes;
}

// ---------------------------------------------------------------------------

BoundTable::BoundTable(std::map<std::pair<int, int>, int> entries) : entries_(std::move(entries)) {
  for (auto& [key, value] : entries_)
    if (value <= 0) throw std::invalid_argument("bound table entries must be positive");
}

BoundTable BoundTable::standard() {
  return BoundTable({{{1, 1}, 3}, {{1, 2}, 6}, {{1, 3}, 9}, {{2, 1}, 17}});
}

std::optional<int> BoundTable::lookup(int genus, int boundary) const {
  auto it = entries_.find({genus, boundary});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<BlockSummary> bridge_blocks(const TrivalentGraph& g) {
  const auto& edges = g.edges();
  auto br = g.bridges();
  auto is_bridge = [&](int i) { return std::find(br.begin(), br.end(), i) != br.end(); };

  Dsu d(kNumVertices);
  for (int i = 0; i < kNumEdges; ++i)
    if (!is_bridge(i)) d.unite(edges[i].first, edges[i].second);

  std::map<int, BlockSummary> blocks;
  for (int v = 0; v < kNumVertices; ++v) ++blocks[d.find(v)].vertices;
  for (int i = 0; i < kNumEdges; ++i) {
    auto [a, b] = edges[i];
    if (is_bridge(i)) {
      ++blocks[d.find(a)].boundary;
      ++blocks[d.find(b)].boundary;
    } else {
      ++blocks[d.find(a)].edges;
    }
  }
  std::vector<BlockSummary> out;
  for (auto& [root, s] : blocks) {
    s.genus = s.edges - s.vertices + 1;
    out.push_back(s);
  }
  return out;
}

std::optional<int> bound_1system(const TrivalentGraph& g, const BoundTable& table) {
  auto br = g.bridges();
  if (br.empty()) return std::nullopt;
  int total = static_cast<int>(br.size());
  for (const auto& b : bridge_blocks(g)) {
    // a lone pair of pants carries no curves besides its cuffs
    if (b.genus == 0) continue;
    auto v = table.lookup(b.genus, b.boundary);
    if (!v) throw std::out_of_range("no bound for genus " + std::to_string(b.genus) +
                                    " with " + std::to_string(b.boundary) + " boundary curves");
    total += *v;
  }
  return total;
}

}  // namespace curvesys
