#include "curvesys/arc_calculus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "curvesys/diagram_oracle.hpp"

namespace curvesys {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Disjointness: return "disjointness";
    case Method::EdgeMembership: return "edge-membership";
    case Method::SingleEdgeProjection: return "single-edge-projection";
    case Method::TwoEdgeSum: return "two-edge-sum";
    case Method::TorusCapping: return "torus-capping";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

int arc_intersection(const ProjectedArc& a, const ProjectedArc& b) {
  if (a.edge != b.edge) throw std::invalid_argument("arcs live around different pants curves");
  HalfInt d = a.index - b.index;
  if (a.family != b.family) return d.floor_abs();
  return std::max(0, std::abs(d.as_integer()) - 1);
}

// ---------------------------------------------------------------------------

namespace {

std::string edge_name(int e) { return "e" + std::to_string(e + 1); }

int parse_edge(const std::string& s) {
  if (s.size() != 2 || s[0] != 'e' || s[1] < '1' || s[1] > '6')
    throw std::invalid_argument("bad edge name '" + s + "'");
  return s[1] - '1';
}

std::string cycle_name(Cycle c) {
  std::string out;
  for (int e : c.edges()) out += (out.empty() ? "" : ",") + edge_name(e);
  return out;
}

Cycle parse_cycle(const std::string& s) {
  std::uint8_t mask = 0;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) mask |= static_cast<std::uint8_t>(1U << parse_edge(tok));
  return Cycle::from_mask(mask);
}

HalfInt parse_half(const std::string& s) {
  try {
    std::size_t used = 0;
    if (auto slash = s.find('/'); slash != std::string::npos) {
      if (s.substr(slash) != "/2") throw std::invalid_argument(s);
      int twice = std::stoi(s.substr(0, slash), &used);
      if (used != slash || twice % 2 == 0) throw std::invalid_argument(s);
      return HalfInt::from_twice(twice);
    }
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return HalfInt::integer(v);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad offset '" + s + "'");
  }
}

// The cycle's other edge at vertex v, as a slot relative to `edge`: 1 when it
// follows `edge` in the rotation at v, 2 otherwise.
int relative_slot(int v, int edge, Cycle c) {
  auto r = k4_rotation(v);
  int i = static_cast<int>(std::find(r.begin(), r.end(), edge) - r.begin());
  return c.contains(r[(i + 1) % 3]) ? 1 : 2;
}

int other_edge_at(int v, int edge, Cycle c) {
  for (int f : k4_rotation(v))
    if (f != edge && c.contains(f)) return f;
  throw std::logic_error("cycle does not pass through vertex");
}

ArcFamily family_for(int edge, Cycle c) {
  int lo = std::min(kK4Edges[edge][0], kK4Edges[edge][1]);
  int hi = std::max(kK4Edges[edge][0], kK4Edges[edge][1]);
  int s1 = relative_slot(lo, edge, c), s2 = relative_slot(hi, edge, c);
  if (s1 == 1 && s2 == 2) return ArcFamily::A;
  if (s1 == 2 && s2 == 1) return ArcFamily::B;
  if (s1 == 1) return ArcFamily::G;
  return ArcFamily::D;
}

FamilyEntry skeleton_entry(int edge, Cycle c) {
  int lo = std::min(kK4Edges[edge][0], kK4Edges[edge][1]);
  int hi = std::max(kK4Edges[edge][0], kK4Edges[edge][1]);
  return {edge, c, {other_edge_at(lo, edge, c), other_edge_at(hi, edge, c)}, family_for(edge, c), HalfInt{}};
}

}  // namespace

FamilyTable::FamilyTable(std::vector<FamilyEntry> entries) : entries_(std::move(entries)) {
  std::set<std::pair<int, Cycle>> seen;
  for (const auto& e : entries_) {
    if (!e.cycle.contains(e.edge)) throw std::invalid_argument("family entry for a cycle off its edge");
    if (!seen.insert({e.edge, e.cycle}).second) throw std::invalid_argument("duplicate family entry");
    if (family_is_integral(e.family) != e.offset.is_integer())
      throw std::invalid_argument("offset parity does not match the family");
    if (skeleton_entry(e.edge, e.cycle).cuffs != e.cuffs || skeleton_entry(e.edge, e.cycle).family != e.family)
      throw std::invalid_argument("family entry disagrees with the cuff pair");
  }
  if (entries_.size() != 4 * kNumEdges) throw std::invalid_argument("family table needs 24 entries");
}

const FamilyEntry& FamilyTable::lookup(int edge, Cycle cycle) const {
  for (const auto& e : entries_)
    if (e.edge == edge && e.cycle == cycle) return e;
  throw std::out_of_range("no family entry for this edge and cycle");
}

std::string FamilyTable::to_text() const {
  std::ostringstream os;
  os << "# curvesys family table v1\n";
  os << "# edge cycle cuff-at-lower cuff-at-higher family offset\n";
  for (const auto& e : entries_)
    os << edge_name(e.edge) << ' ' << cycle_name(e.cycle) << ' ' << edge_name(e.cuffs[0]) << ' '
       << edge_name(e.cuffs[1]) << ' ' << family_letter(e.family) << ' ' << e.offset.to_string() << '\n';
  return os.str();
}

FamilyTable FamilyTable::parse(std::string_view text) {
  std::vector<FamilyEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string edge, cycle, lo, hi, fam, off, extra;
    if (!(ls >> edge >> cycle >> lo >> hi >> fam >> off) || (ls >> extra))
      throw std::invalid_argument("malformed family table line: " + line);
    if (fam.size() != 1) throw std::invalid_argument("bad family '" + fam + "'");
    out.push_back({parse_edge(edge), parse_cycle(cycle), {parse_edge(lo), parse_edge(hi)},
                   family_from_letter(fam[0]), parse_half(off)});
  }
  return FamilyTable(std::move(out));
}

const FamilyTable& FamilyTable::builtin() {
  static const FamilyTable table = parse(
#include "family_table.inc"
  );
  return table;
}

FamilyTable derive_family_table() {
  constexpr int kScan = 6;
  auto zero_code = [](Cycle c) { return CycleCurve{c, {}}; };
  auto through = [](int e, CycleKind k) {
    std::vector<Cycle> out;
    for (Cycle c : k4_cycles())
      if (c.contains(e) && c.kind() == k) out.push_back(c);
    return out;
  };

  std::map<std::pair<int, Cycle>, HalfInt> offset;
  // triangles: against the lower triangle, i = |x + o| vanishes at one twist
  for (int e = 0; e < kNumEdges; ++e) {
    auto tri = through(e, CycleKind::Triangle);
    offset[{e, tri[0]}] = HalfInt::integer(0);
    std::vector<int> zeros;
    for (int x = -kScan; x <= kScan; ++x) {
      auto c = zero_code(tri[1]);
      c.twist[e] = x;
      if (intersection_number(zero_code(tri[0]), c) == 0) zeros.push_back(x);
    }
    if (zeros.size() != 1) throw std::logic_error("triangle offset fit is not unique at " + edge_name(e));
    offset[{e, tri[1]}] = HalfInt::integer(-zeros[0]);
  }
  // squares: against the lower triangle T, which shares e and one more edge f;
  // the twists at e admitting disjointness are o_T - o_S -+ 1/2
  for (int e = 0; e < kNumEdges; ++e) {
    Cycle t = through(e, CycleKind::Triangle)[0];
    for (Cycle s : through(e, CycleKind::Square)) {
      auto shared = s.shared_edges(t);
      int f = shared[0] == e ? shared[1] : shared[0];
      std::vector<int> xs;
      for (int x = -kScan; x <= kScan; ++x)
        for (int y = -kScan; y <= kScan; ++y) {
          auto c = zero_code(s);
          c.twist[e] = x;
          c.twist[f] = y;
          if (intersection_number(zero_code(t), c) == 0) {
            xs.push_back(x);
            break;
          }
        }
      if (xs.size() != 2 || xs[1] != xs[0] + 1)
        throw std::logic_error("square offset fit failed at " + edge_name(e));
      offset[{e, s}] = offset.at({e, t}) - HalfInt::integer(xs[0]) - HalfInt::from_twice(1);
    }
  }

  std::vector<FamilyEntry> entries;
  for (int e = 0; e < kNumEdges; ++e)
    for (Cycle c : k4_cycles())
      if (c.contains(e)) {
        auto entry = skeleton_entry(e, c);
        entry.offset = offset.at({e, c});
        entries.push_back(entry);
      }
  return FamilyTable(std::move(entries));
}

// ---------------------------------------------------------------------------

std::optional<ProjectedArc> project(const CurveCode& c, int edge, const FamilyTable& table) {
  const auto* cc = as_cycle(c);
  if (!cc || !cc->cycle.contains(edge)) return std::nullopt;
  const auto& entry = table.lookup(edge, cc->cycle);
  return ProjectedArc{edge, entry.family, HalfInt::integer(cc->twist[edge]) + entry.offset};
}

IntersectionResult cross_cycle_intersection(const CurveCode& a, const CurveCode& b, const FamilyTable& table) {
  const auto* ca = as_cycle(a);
  const auto* cb = as_cycle(b);
  if (!ca && !cb) return IntersectionResult::exact(0, Method::Disjointness);
  if (!ca || !cb) {
    int edge = ca ? std::get<BoundaryCurve>(b).edge : std::get<BoundaryCurve>(a).edge;
    Cycle cyc = ca ? ca->cycle : cb->cycle;
    return IntersectionResult::exact(cyc.contains(edge) ? 1 : 0, Method::EdgeMembership);
  }
  if (ca->cycle == cb->cycle) throw std::invalid_argument("both curves lie on the same cycle");
  auto shared = ca->cycle.shared_edges(cb->cycle);
  int total = 0;
  std::array<int, 2> side{};
  for (std::size_t k = 0; k < shared.size(); ++k) {
    auto pa = *project(a, shared[k], table), pb = *project(b, shared[k], table);
    total += arc_intersection(pa, pb);
    side[k] = (pa.index - pb.index).twice();
  }
  // a triangle and a square share two edges at one vertex; the pair of pants
  // there lies in both projections and forces one more crossing when the arcs
  // sit on the same side at both shared cuffs
  if (shared.size() == 2 && ca->cycle.kind() != cb->cycle.kind() && side[0] * side[1] > 0) ++total;
  return IntersectionResult::exact(total, shared.size() == 1 ? Method::SingleEdgeProjection : Method::TwoEdgeSum);
}

int torus_lower_bound(const CurveCode& a, const CurveCode& b) {
  const auto* ca = as_cycle(a);
  const auto* cb = as_cycle(b);
  if (!ca || !cb || ca->cycle != cb->cycle || ca->cycle.kind() != CycleKind::Triangle)
    throw std::invalid_argument("torus bound needs two codes on one triangle");
  int sa = std::accumulate(ca->twist.begin(), ca->twist.end(), 0);
  int sb = std::accumulate(cb->twist.begin(), cb->twist.end(), 0);
  return std::abs(sa - sb);
}

}  // namespace curvesys
