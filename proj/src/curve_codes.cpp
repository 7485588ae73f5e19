#include "curvesys/curve_codes.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace curvesys {

CycleCurve make_cycle_curve(Cycle cycle, const std::vector<int>& twists_in_edge_order) {
  auto es = cycle.edges();
  if (es.size() != twists_in_edge_order.size())
    throw std::invalid_argument("twist count does not match cycle length");
  CycleCurve c{cycle, {}};
  for (std::size_t i = 0; i < es.size(); ++i) c.twist[es[i]] = twists_in_edge_order[i];
  return c;
}

CycleCurve triangle_code(int t1, int t2, int t3) {
  return make_cycle_curve(reference_triangle(), {t1, t2, t3});
}

const CycleCurve* as_cycle(const CurveCode& c) { return std::get_if<CycleCurve>(&c); }

std::optional<Cycle> cycle_of(const CurveCode& c) {
  if (auto* cc = as_cycle(c)) return cc->cycle;
  return std::nullopt;
}

bool traverses(const CurveCode& c, int edge) {
  auto* cc = as_cycle(c);
  return cc && cc->cycle.contains(edge);
}

TupleForm to_tuple(const CycleCurve& c) {
  TupleForm t;
  for (int e = 0; e < kNumEdges; ++e)
    if (c.cycle.contains(e)) t[e] = c.twist[e];
  return t;
}

CycleCurve from_tuple(const TupleForm& t) {
  std::uint8_t mask = 0;
  for (int e = 0; e < kNumEdges; ++e)
    if (t[e]) mask |= static_cast<std::uint8_t>(1U << e);
  CycleCurve c{Cycle::from_mask(mask), {}};
  for (int e = 0; e < kNumEdges; ++e)
    if (t[e]) c.twist[e] = *t[e];
  return c;
}

std::string render(const CurveCode& c) {
  if (auto* b = std::get_if<BoundaryCurve>(&c)) return "a" + std::to_string(b->edge + 1);
  const auto t = to_tuple(std::get<CycleCurve>(c));
  std::string out;
  for (int e = 0; e < kNumEdges; ++e) {
    if (e) out += ',';
    out += t[e] ? std::to_string(*t[e]) : "_";
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not an integer slot: '" + std::string(s) + "'");
  return v;
}

}  // namespace

CurveCode parse_curve(std::string_view text) {
  text = trim(text);
  if (text.size() == 2 && (text[0] == 'a' || text[0] == 'A') && text[1] >= '1' && text[1] <= '6')
    return BoundaryCurve{text[1] - '1'};

  TupleForm t;
  int slot = 0;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto tok = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    if (slot >= kNumEdges) throw std::invalid_argument("more than six slots");
    if (tok != "_") t[slot] = parse_int(tok);
    ++slot;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (slot != kNumEdges) throw std::invalid_argument("expected six slots, got " + std::to_string(slot));
  try {
    return from_tuple(t);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("blank pattern of '" + std::string(text) +
                                "' does not match a cycle of K4");
  }
}

// ---------------------------------------------------------------------------

Symmetry Symmetry::from_vertex_images(std::array<int, kNumVertices> images) {
  auto sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, kNumVertices>{0, 1, 2, 3})
    throw std::invalid_argument("not a permutation of the vertices");
  int inversions = 0;
  for (int i = 0; i < kNumVertices; ++i)
    for (int j = i + 1; j < kNumVertices; ++j) inversions += images[i] > images[j];
  if (inversions % 2) throw std::invalid_argument("odd permutation is not in A4");

  Symmetry s;
  s.vertex_ = images;
  for (int e = 0; e < kNumEdges; ++e)
    s.edge_[e] = k4_edge_between(images[kK4Edges[e][0]], images[kK4Edges[e][1]]);
  return s;
}

Symmetry Symmetry::identity() { return from_vertex_images({0, 1, 2, 3}); }

Symmetry Symmetry::compose(const Symmetry& inner) const {
  std::array<int, kNumVertices> img{};
  for (int v = 0; v < kNumVertices; ++v) img[v] = vertex_[inner.vertex_[v]];
  return from_vertex_images(img);
}

Symmetry Symmetry::inverse() const {
  std::array<int, kNumVertices> img{};
  for (int v = 0; v < kNumVertices; ++v) img[vertex_[v]] = v;
  return from_vertex_images(img);
}

bool Symmetry::is_identity() const { return vertex_ == std::array<int, kNumVertices>{0, 1, 2, 3}; }

std::string Symmetry::cycle_notation() const {
  std::string out;
  std::array<bool, kNumVertices> seen{};
  for (int v = 0; v < kNumVertices; ++v) {
    if (seen[v] || vertex_[v] == v) continue;
    out += '(';
    for (int w = v; !seen[w]; w = vertex_[w]) {
      if (w != v) out += ' ';
      out += std::to_string(w + 1);
      seen[w] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

const std::vector<Symmetry>& a4_group() {
  static const std::vector<Symmetry> group = [] {
    std::vector<Symmetry> out;
    std::array<int, kNumVertices> p{0, 1, 2, 3};
    do {
      try {
        out.push_back(Symmetry::from_vertex_images(p));
      } catch (const std::invalid_argument&) {
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return group;
}

Cycle apply(const Symmetry& g, Cycle c) {
  std::uint8_t mask = 0;
  for (int e : c.edges()) mask |= static_cast<std::uint8_t>(1U << g.edge(e));
  return Cycle::from_mask(mask);
}

CurveCode apply(const Symmetry& g, const CurveCode& c) {
  if (auto* b = std::get_if<BoundaryCurve>(&c)) return BoundaryCurve{g.edge(b->edge)};
  const auto& cc = std::get<CycleCurve>(c);
  CycleCurve out{apply(g, cc.cycle), {}};
  for (int e : cc.cycle.edges()) out.twist[g.edge(e)] = cc.twist[e];
  return out;
}

std::vector<CurveCode> orbit_under(const std::vector<Symmetry>& group, const CurveCode& c) {
  std::set<CurveCode> out;
  for (const auto& g : group) out.insert(apply(g, c));
  return {out.begin(), out.end()};
}

std::vector<CurveCode> orbit(const CurveCode& c) { return orbit_under(a4_group(), c); }

std::vector<Symmetry> stabilizer(const CurveCode& c) {
  std::vector<Symmetry> out;
  for (const auto& g : a4_group())
    if (apply(g, c) == c) out.push_back(g);
  return out;
}

std::vector<Symmetry> vertex_stabilizer(int v) {
  std::vector<Symmetry> out;
  for (const auto& g : a4_group())
    if (g.vertex(v) == v) out.push_back(g);
  return out;
}

bool is_subgroup(const std::vector<Symmetry>& elements) {
  auto has = [&](const Symmetry& s) {
    return std::find(elements.begin(), elements.end(), s) != elements.end();
  };
  if (!has(Symmetry::identity())) return false;
  for (const auto& a : elements) {
    if (!has(a.inverse())) return false;
    for (const auto& b : elements)
      if (!has(a.compose(b))) return false;
  }
  return true;
}

X0Generators x0_generators() {
  return {triangle_code(1, 0, 0), triangle_code(1, 1, 0),
          std::get<CycleCurve>(parse_curve("1,_,0,_,0,1"))};
}

std::vector<CurveCode> build_X0() {
  std::set<CurveCode> out;
  for (int e = 0; e < kNumEdges; ++e) out.insert(BoundaryCurve{e});
  auto gens = x0_generators();
  for (const CurveCode& g : {CurveCode{gens.gamma1}, CurveCode{gens.gamma2}, CurveCode{gens.gamma3}})
    for (auto& c : orbit(g)) out.insert(c);
  return {out.begin(), out.end()};
}

std::vector<CurveCode> restrict_to_cycle(const std::vector<CurveCode>& system, Cycle cycle) {
  std::vector<CurveCode> out;
  for (const auto& c : system)
    if (auto z = cycle_of(c); z && *z == cycle) out.push_back(c);
  return out;
}

TypeCensus census(const std::vector<CurveCode>& system) {
  TypeCensus t;
  for (const auto& c : system) {
    if (is_boundary(c))
      ++t.boundary;
    else if (std::get<CycleCurve>(c).cycle.kind() == CycleKind::Triangle)
      ++t.triangle;
    else
      ++t.square;
  }
  return t;
}

}  // namespace curvesys
