#include "curvesys/diagram_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace curvesys {

// ---------------------------------------------------------------------------
// charts

namespace {

int slot_in_rotation(int v, int e) {
  auto r = k4_rotation(v);
  for (int i = 0; i < 3; ++i)
    if (r[i] == e) return i;
  throw std::invalid_argument("edge " + std::to_string(e) + " is not at vertex " + std::to_string(v));
}

}  // namespace

const SurfaceChart& SurfaceChart::genus3_k4() {
  static const SurfaceChart chart = [] {
    SurfaceChart c;
    c.pants_count = kNumVertices;
    for (int e = 0; e < kNumEdges; ++e) {
      int lo = std::min(kK4Edges[e][0], kK4Edges[e][1]);
      int hi = std::max(kK4Edges[e][0], kK4Edges[e][1]);
      c.annuli.push_back({{lo, slot_in_rotation(lo, e)}, {hi, slot_in_rotation(hi, e)}});
    }
    c.validate();
    return c;
  }();
  return chart;
}

const SurfaceChart& SurfaceChart::four_holed_sphere() {
  static const SurfaceChart chart = [] {
    SurfaceChart c;
    c.pants_count = 2;
    c.annuli.push_back({{0, 0}, {1, 0}});
    c.free_cuffs = {{0, 1}, {0, 2}, {1, 1}, {1, 2}};
    c.validate();
    return c;
  }();
  return chart;
}

void SurfaceChart::validate() const {
  std::map<CuffSlot, int> uses;
  for (int p = 0; p < pants_count; ++p)
    for (int s = 0; s < 3; ++s) uses[{p, s}] = 0;
  auto use = [&](CuffSlot c) {
    auto it = uses.find(c);
    if (it == uses.end()) throw std::logic_error("chart references a missing cuff");
    ++it->second;
  };
  for (const auto& a : annuli) {
    use(a.bottom);
    use(a.top);
  }
  for (const auto& c : free_cuffs) use(c);
  for (const auto& [c, n] : uses)
    if (n != 1) throw std::logic_error("every cuff must be glued or free exactly once");
}

int SurfaceChart::slot_of_edge(int pants, int edge) const { return slot_in_rotation(pants, edge); }

// ---------------------------------------------------------------------------
// diagrams

void CurveDiagram::validate(const SurfaceChart& chart) const {
  auto bad = [](const std::string& why) { throw std::invalid_argument("bad diagram: " + why); };
  if (kind == Kind::Core) {
    if (core_annulus < 0 || core_annulus >= static_cast<int>(chart.annuli.size())) bad("core annulus");
    if (!segments.empty()) bad("core curve with segments");
    return;
  }
  const int n = static_cast<int>(segments.size());
  if (n == 0) bad("empty");
  if (kind == Kind::Closed && n % 2) bad("closed curve must alternate");
  if (kind == Kind::Arc && n % 2 == 0) bad("arc must start and end in pants");

  std::set<CuffSlot> visited;
  auto visit = [&](CuffSlot c) {
    if (!visited.insert(c).second) bad("cuff visited twice");
  };
  auto is_free = [&](CuffSlot c) {
    return std::find(chart.free_cuffs.begin(), chart.free_cuffs.end(), c) != chart.free_cuffs.end();
  };
  for (int i = 0; i < n; ++i) {
    bool want_pants = i % 2 == 0;
    if (want_pants != std::holds_alternative<PantsSegment>(segments[i])) bad("segments must alternate");
    if (auto* p = std::get_if<PantsSegment>(&segments[i])) {
      if (p->pants < 0 || p->pants >= chart.pants_count || p->from_slot == p->to_slot ||
          p->from_slot < 0 || p->from_slot > 2 || p->to_slot < 0 || p->to_slot > 2)
        bad("pants segment");
      visit({p->pants, p->from_slot});
      visit({p->pants, p->to_slot});
      continue;
    }
    const auto& s = std::get<AnnulusStrand>(segments[i]);
    if (s.annulus < 0 || s.annulus >= static_cast<int>(chart.annuli.size())) bad("annulus index");
    const auto& prev = std::get<PantsSegment>(segments[i - 1]);
    const auto& next = std::get<PantsSegment>(segments[(i + 1) % n]);
    CuffSlot out{prev.pants, prev.to_slot}, in{next.pants, next.from_slot};
    const auto& a = chart.annuli[s.annulus];
    bool ok = (out == a.bottom && in == a.top) || (out == a.top && in == a.bottom);
    if (!ok) bad("strand does not join the cuffs of its neighbours");
  }
  if (kind == Kind::Arc) {
    const auto& first = std::get<PantsSegment>(segments.front());
    const auto& last = std::get<PantsSegment>(segments.back());
    if (!is_free({first.pants, first.from_slot}) || !is_free({last.pants, last.to_slot}))
      bad("arc must end on the boundary");
  }
}

// The chart is the mirror image of the reference embedding the twist codes
// are defined against, so a left twist turns a strand by -1.
constexpr int kTwistSign = -1;

CurveDiagram realize(const CurveCode& c) {
  const auto& chart = SurfaceChart::genus3_k4();
  CurveDiagram d;
  if (auto* b = std::get_if<BoundaryCurve>(&c)) {
    d.kind = CurveDiagram::Kind::Core;
    d.core_annulus = b->edge;
    return d;
  }
  const auto& cc = std::get<CycleCurve>(c);
  const auto es = cc.cycle.edges();
  auto other_edge_at = [&](int v, int e) {
    for (int f : es)
      if (f != e && (kK4Edges[f][0] == v || kK4Edges[f][1] == v)) return f;
    throw std::logic_error("cycle is not 2-regular");
  };
  // Start in the pants of the lower endpoint of the first edge, leaving
  // along that edge.
  int e = es.front();
  int v = std::min(kK4Edges[e][0], kK4Edges[e][1]);
  for (std::size_t k = 0; k < es.size(); ++k) {
    int in = other_edge_at(v, e);
    d.segments.push_back(PantsSegment{v, chart.slot_of_edge(v, in), chart.slot_of_edge(v, e)});
    d.segments.push_back(AnnulusStrand{e, kTwistSign * cc.twist[e]});
    v = kK4Edges[e][0] == v ? kK4Edges[e][1] : kK4Edges[e][0];
    e = other_edge_at(v, e);
  }
  d.kind = CurveDiagram::Kind::Closed;
  d.validate(chart);
  return d;
}

// ---------------------------------------------------------------------------
// overlay

namespace {

using Q = boost::rational<long long>;

long long floor_q(const Q& x) {
  long long n = x.numerator(), d = x.denominator();
  long long q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}
Q frac(const Q& x) { return x - Q(floor_q(x)); }
bool is_integral(const Q& x) { return x.denominator() == 1; }

// Seam points sit at +-kSeam on each cuff; arc endpoints at +-k*kEps. The odd
// denominator keeps seam crossings away from the lattice of arc positions.
const Q kSeam = Q(1, 4) + Q(1, 1009);
const Q kEps = Q(1, 32);

struct Vec {
  Q x, y;
};

// Comparisons go through Q(0): mixed rational/int equality recurses under
// C++20 rewritten operators in older Boost releases.
const Q kZero(0);

int half_plane(const Vec& v) { return (v.y > kZero || (v.y == kZero && v.x > kZero)) ? 0 : 1; }
bool angle_less(const Vec& a, const Vec& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > kZero;
}

constexpr int kSkeleton = -1;

struct MHalf {
  int origin = -1;
  int twin = -1;
  int label = kSkeleton;
  bool free_boundary = false;
  bool hole_left = false;
  Vec dir;
};

// Cellular map of the surface: skeleton plus curves, rotations counterclockwise.
struct Mesh {
  std::vector<MHalf> he;
  std::vector<std::vector<int>> rot;
  std::vector<char> on_free;
  std::vector<int> pos;

  int add_vertex(bool free) {
    rot.emplace_back();
    on_free.push_back(free);
    return static_cast<int>(rot.size()) - 1;
  }
  int add_edge(int u, int v, int label, Vec du, Vec dv) {
    int a = static_cast<int>(he.size());
    he.push_back({u, a + 1, label, false, false, du});
    he.push_back({v, a, label, false, false, dv});
    rot[u].push_back(a);
    rot[v].push_back(a + 1);
    return a;
  }
  void finalize() {
    pos.assign(he.size(), -1);
    for (auto& r : rot) {
      std::sort(r.begin(), r.end(), [&](int a, int b) { return angle_less(he[a].dir, he[b].dir); });
      for (std::size_t i = 0; i + 1 < r.size(); ++i)
        if (!angle_less(he[r[i]].dir, he[r[i + 1]].dir))
          throw std::logic_error("degenerate drawing: two edges leave a vertex in one direction");
      for (std::size_t i = 0; i < r.size(); ++i) pos[r[i]] = static_cast<int>(i);
    }
  }
  int next(int h) const {
    int t = he[h].twin;
    const auto& r = rot[he[t].origin];
    return r[(pos[t] + r.size() - 1) % r.size()];
  }
};

struct CuffState {
  int sign = -1;  // chart angle is sign * (pants boundary coordinate)
  bool free = false;
  std::map<Q, int> points;
};

struct Dsu {
  std::vector<int> p;
  int add() {
    p.push_back(static_cast<int>(p.size()));
    return p.back();
  }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
};

constexpr int kHole = -1;
constexpr int kBoundaryLabel = 2;

struct GHalf {
  int origin = -1;
  int twin = -1;
  int label = 0;
  int region = kHole;
  bool alive = true;
};

struct GVert {
  std::vector<int> rot;  // crossings: 4 curve half-edges; endpoints: b+, b-, curve
  bool alive = true;
  bool endpoint = false;
  int cuff = -1;
};

class Overlay {
public:
  Overlay(const SurfaceChart& chart, std::array<const CurveDiagram*, 2> curves, bool swap,
          std::ostream* trace)
      : chart_(chart), curves_(curves), swap_(swap), trace_(trace) {}

  OverlayResult run() {
    build_mesh();
    build_regions();
    build_graph();
    OverlayResult r;
    r.euler_characteristic = euler_;
    r.initial_crossings = live_crossings();
    if (trace_) {
      *trace_ << "overlay V=" << mesh_.rot.size() << " E=" << mesh_.he.size() / 2 << " F=" << faces_
              << " chi=" << euler_ << "\n";
      *trace_ << "crossings " << r.initial_crossings << "\n";
      trace_regions();
    }
    while (true) {
      int kind = reduce_once();
      if (kind == 0) break;
      (kind == 1 ? r.bigons_removed : r.half_bigons_removed)++;
      check_walks();
    }
    r.final_crossings = live_crossings();
    if (trace_) *trace_ << "final " << r.final_crossings << "\n";
    return r;
  }

private:
  // --- mesh construction ----------------------------------------------------

  CuffState& cuff(CuffSlot c) { return cuffs_.at(c); }

  int cuff_vertex(CuffSlot c, const Q& phi) {
    auto& st = cuff(c);
    Q theta = frac(Q(st.sign) * phi);
    auto it = st.points.find(theta);
    if (it != st.points.end()) return it->second;
    int v = mesh_.add_vertex(st.free);
    st.points.emplace(theta, v);
    return v;
  }

  Vec pants_dir(CuffSlot c) { return {Q(0), Q(cuff(c).sign == 1 ? 1 : -1)}; }

  int rank(int curve) const { return 1 + (swap_ ? 1 - curve : curve); }

  void build_mesh() {
    chart_.validate();
    for (int p = 0; p < chart_.pants_count; ++p)
      for (int s = 0; s < 3; ++s) cuffs_[{p, s}] = {};
    for (const auto& a : chart_.annuli) cuffs_[a.top].sign = 1;
    for (const auto& c : chart_.free_cuffs) cuffs_[c].free = true;

    // seams: three per pants, cutting it into two hexagons
    for (int p = 0; p < chart_.pants_count; ++p)
      for (int s = 0; s < 3; ++s) {
        CuffSlot a{p, s}, b{p, (s + 1) % 3};
        mesh_.add_edge(cuff_vertex(a, kSeam), cuff_vertex(b, -kSeam), kSkeleton, pants_dir(a), pants_dir(b));
      }

    // arcs in pants; record where each curve meets each cuff
    std::map<std::pair<int, CuffSlot>, Q> end_phi;
    for (int c = 0; c < 2; ++c) {
      curves_[c]->validate(chart_);
      for (const auto& seg : curves_[c]->segments) {
        auto* ps = std::get_if<PantsSegment>(&seg);
        if (!ps) continue;
        CuffSlot a{ps->pants, ps->from_slot}, b{ps->pants, ps->to_slot};
        Q k = Q(rank(c)) * kEps;
        Q pa = ps->to_slot == (ps->from_slot + 1) % 3 ? k : -k;
        Q pb = ps->from_slot == (ps->to_slot + 1) % 3 ? k : -k;
        end_phi[{c, a}] = pa;
        end_phi[{c, b}] = pb;
        mesh_.add_edge(cuff_vertex(a, pa), cuff_vertex(b, pb), c, pants_dir(a), pants_dir(b));
      }
    }

    for (int ai = 0; ai < static_cast<int>(chart_.annuli.size()); ++ai) build_annulus(ai, end_phi);

    // cuff circles
    for (auto& [slot, st] : cuffs_) {
      std::vector<std::pair<Q, int>> pts(st.points.begin(), st.points.end());
      if (pts.empty()) throw std::logic_error("cuff without seam points");
      for (std::size_t i = 0; i < pts.size(); ++i) {
        int u = pts[i].second, v = pts[(i + 1) % pts.size()].second;
        int h = mesh_.add_edge(u, v, kSkeleton, {Q(1), Q(0)}, {Q(-1), Q(0)});
        if (st.free) {
          mesh_.he[h].free_boundary = mesh_.he[h + 1].free_boundary = true;
          mesh_.he[h].hole_left = true;
        }
      }
    }
    mesh_.finalize();
  }

  struct Obj {
    int label = kSkeleton;
    bool core = false;
    Q b, delta;  // lifted angle b + delta*t
    int v_bottom = -1, v_top = -1;
    std::vector<std::pair<Q, int>> elems;
  };

  void build_annulus(int ai, const std::map<std::pair<int, CuffSlot>, Q>& end_phi) {
    const auto& an = chart_.annuli[ai];
    std::vector<Obj> objs;

    Obj rung;
    rung.b = kSeam;
    rung.delta = kZero;
    rung.v_bottom = cuff_vertex(an.bottom, -kSeam);
    rung.v_top = cuff_vertex(an.top, kSeam);
    objs.push_back(rung);

    for (int c = 0; c < 2; ++c) {
      const auto& d = *curves_[c];
      if (d.kind == CurveDiagram::Kind::Core) {
        if (d.core_annulus == ai) {
          Obj o;
          o.label = c;
          o.core = true;
          objs.push_back(o);
        }
        continue;
      }
      for (const auto& seg : d.segments) {
        auto* s = std::get_if<AnnulusStrand>(&seg);
        if (!s || s->annulus != ai) continue;
        Q pb = end_phi.at({c, an.bottom}), pt = end_phi.at({c, an.top});
        Obj o;
        o.label = c;
        o.b = frac(Q(cuff(an.bottom).sign) * pb);
        Q top = frac(Q(cuff(an.top).sign) * pt) + Q(s->winding);
        o.delta = top - o.b;
        o.v_bottom = cuff_vertex(an.bottom, pb);
        o.v_top = cuff_vertex(an.top, pt);
        objs.push_back(o);
      }
    }

    std::set<std::pair<Q, Q>> used;
    auto crossing = [&](Obj& x, const Q& px, Obj& y, const Q& py, const Q& theta, const Q& t) {
      if (!used.insert({frac(theta), t}).second)
        throw std::logic_error("degenerate drawing: three strands meet in a point");
      int v = mesh_.add_vertex(false);
      x.elems.emplace_back(px, v);
      y.elems.emplace_back(py, v);
    };

    const Q half(1, 2);
    for (std::size_t i = 0; i < objs.size(); ++i)
      for (std::size_t j = i + 1; j < objs.size(); ++j) {
        Obj& x = objs[i];
        Obj& y = objs[j];
        if (x.core && y.core) throw std::logic_error("two core curves in one annulus");
        if (x.core || y.core) {
          Obj& s = x.core ? y : x;
          Obj& c = x.core ? x : y;
          Q theta = frac(s.b + s.delta * half);
          crossing(s, half, c, theta, theta, half);
          continue;
        }
        Q d0 = x.b - y.b, d1 = d0 + x.delta - y.delta;
        if (is_integral(d0) || is_integral(d1)) throw std::logic_error("strands share an endpoint");
        if (x.delta == y.delta) continue;
        long long lo = floor_q(std::min(d0, d1)) + 1, hi = floor_q(std::max(d0, d1));
        for (long long k = lo; k <= hi; ++k) {
          Q t = (Q(k) - d0) / (x.delta - y.delta);
          crossing(x, t, y, t, x.b + x.delta * t, t);
        }
      }

    for (auto& o : objs) {
      if (o.core) {
        std::sort(o.elems.begin(), o.elems.end());
        const std::size_t n = o.elems.size();
        for (std::size_t i = 0; i < n; ++i)
          mesh_.add_edge(o.elems[i].second, o.elems[(i + 1) % n].second, o.label, {Q(1), Q(0)},
                         {Q(-1), Q(0)});
        continue;
      }
      o.elems.emplace_back(Q(0), o.v_bottom);
      o.elems.emplace_back(Q(1), o.v_top);
      std::sort(o.elems.begin(), o.elems.end());
      Vec up{o.delta, Q(1)}, down{-o.delta, Q(-1)};
      for (std::size_t i = 0; i + 1 < o.elems.size(); ++i)
        mesh_.add_edge(o.elems[i].second, o.elems[i + 1].second, o.label, up, down);
    }
  }

  // --- faces and regions ----------------------------------------------------

  void build_regions() {
    face_.assign(mesh_.he.size(), -1);
    faces_ = 0;
    for (int h = 0; h < static_cast<int>(mesh_.he.size()); ++h) {
      if (face_[h] != -1) continue;
      int k = h;
      do {
        face_[k] = faces_;
        k = mesh_.next(k);
      } while (k != h);
      ++faces_;
    }
    const int V = static_cast<int>(mesh_.rot.size());
    const int E = static_cast<int>(mesh_.he.size()) / 2;
    euler_ = V - E + faces_;
    const int expected = -chart_.pants_count + static_cast<int>(chart_.free_cuffs.size());
    if (euler_ != expected)
      throw std::logic_error("overlay is not a cellular map of the chart (chi " + std::to_string(euler_) +
                             ", expected " + std::to_string(expected) + ")");

    std::vector<char> hole(faces_, 0);
    for (const auto& h : mesh_.he)
      if (h.hole_left) hole[face_[&h - mesh_.he.data()]] = 1;
    for (int h = 0; h < static_cast<int>(mesh_.he.size()); ++h)
      if (hole[face_[h]] && !mesh_.he[h].hole_left) throw std::logic_error("hole face touches the surface");

    Dsu fd;
    for (int f = 0; f < faces_; ++f) fd.add();
    for (int h = 0; h < static_cast<int>(mesh_.he.size()); ++h) {
      const auto& e = mesh_.he[h];
      if (e.label == kSkeleton && !e.free_boundary) fd.p[fd.find(face_[h])] = fd.find(face_[e.twin]);
    }

    std::map<int, int> compact;
    region_of_face_.assign(faces_, kHole);
    for (int f = 0; f < faces_; ++f) {
      if (hole[f]) continue;
      int r = fd.find(f);
      auto [it, fresh] = compact.emplace(r, static_cast<int>(chi_.size()));
      if (fresh) {
        chi_.push_back(0);
        regions_.add();
      }
      region_of_face_[f] = it->second;
      ++chi_[it->second];
    }
    for (int h = 0; h < static_cast<int>(mesh_.he.size()); h += 2) {
      const auto& e = mesh_.he[h];
      if (e.label == kSkeleton && !e.free_boundary) --chi_[region_of_face_[face_[h]]];
    }
    for (int v = 0; v < V; ++v) {
      if (mesh_.on_free[v]) continue;
      bool touches_curve = false;
      for (int h : mesh_.rot[v]) touches_curve |= mesh_.he[h].label != kSkeleton;
      if (!touches_curve) ++chi_[region_of_face_[face_[mesh_.rot[v].front()]]];
    }
  }

  // --- the crossing graph ---------------------------------------------------

  int curve_degree(int v) const {
    int n = 0;
    for (int h : mesh_.rot[v]) n += mesh_.he[h].label != kSkeleton;
    return n;
  }

  void build_graph() {
    const int V = static_cast<int>(mesh_.rot.size());
    std::vector<int> gv(V, -1);
    for (int v = 0; v < V; ++v) {
      int d = curve_degree(v);
      if (d == 4 || (mesh_.on_free[v] && d == 1)) {
        gv[v] = static_cast<int>(gverts_.size());
        gverts_.push_back({});
        gverts_.back().endpoint = d == 1;
      }
    }

    std::map<int, int> by_first_mesh_half;
    std::vector<int> last_mesh_half;
    for (int v = 0; v < V; ++v) {
      if (gv[v] < 0) continue;
      for (int h : mesh_.rot[v]) {
        const int label = mesh_.he[h].label;
        if (label == kSkeleton) continue;
        int cur = h;
        while (true) {
          int t = mesh_.he[cur].twin;
          int w = mesh_.he[t].origin;
          if (gv[w] >= 0) break;
          int nxt = -1;
          for (int k : mesh_.rot[w])
            if (k != t && mesh_.he[k].label == label) nxt = k;
          if (nxt < 0) throw std::logic_error("curve stops at an interior vertex");
          cur = nxt;
        }
        int id = static_cast<int>(ghalf_.size());
        ghalf_.push_back({gv[v], -1, label, region_of_face_[face_[h]], true});
        by_first_mesh_half[h] = id;
        last_mesh_half.push_back(cur);
        gverts_[gv[v]].rot.push_back(id);
      }
    }
    for (int id = 0; id < static_cast<int>(ghalf_.size()); ++id)
      ghalf_[id].twin = by_first_mesh_half.at(mesh_.he[last_mesh_half[id]].twin);

    // endpoints on each free cuff, in increasing chart angle
    for (int ci = 0; ci < static_cast<int>(chart_.free_cuffs.size()); ++ci) {
      std::vector<int> list;
      for (const auto& [theta, v] : cuff(chart_.free_cuffs[ci]).points)
        if (gv[v] >= 0) list.push_back(gv[v]);
      for (int g : list) {
        gverts_[g].cuff = ci;
        int c = gverts_[g].rot.front();
        gverts_[g].rot = {-1, -1, c};
      }
      cuff_lists_.push_back(list);
      rebuild_boundary(ci);
    }
    check_walks();
  }

  void rebuild_boundary(int ci) {
    const auto& list = cuff_lists_[ci];
    for (int g : list)
      for (int k = 0; k < 2; ++k)
        if (int h = gverts_[g].rot[k]; h >= 0) ghalf_[h].alive = false;
    const std::size_t n = list.size();
    for (std::size_t i = 0; i < n; ++i) {
      int a = list[i], b = list[(i + 1) % n];
      int fwd = static_cast<int>(ghalf_.size());
      int surface = ghalf_[gverts_[a].rot[2]].region;
      ghalf_.push_back({a, fwd + 1, kBoundaryLabel, kHole, true});
      ghalf_.push_back({b, fwd, kBoundaryLabel, surface, true});
      gverts_[a].rot[0] = fwd;
      gverts_[b].rot[1] = fwd + 1;
    }
  }

  int rot_step(int h, int k) const {
    const auto& r = gverts_[ghalf_[h].origin].rot;
    const int n = static_cast<int>(r.size());
    int i = static_cast<int>(std::find(r.begin(), r.end(), h) - r.begin());
    if (i == n) throw std::logic_error("half-edge missing from its rotation");
    return r[((i + k) % n + n) % n];
  }
  int gnext(int h) const { return rot_step(ghalf_[h].twin, -1); }

  int region_root(int r) { return r == kHole ? kHole : regions_.find(r); }

  int live_crossings() const {
    int n = 0;
    for (const auto& v : gverts_) n += v.alive && !v.endpoint;
    return n;
  }

  std::vector<int> walk(int h) const {
    std::vector<int> w;
    int k = h;
    do {
      w.push_back(k);
      k = gnext(k);
      if (w.size() > ghalf_.size()) throw std::logic_error("face walk does not close");
    } while (k != h);
    return w;
  }

  void check_walks() {
    for (int h = 0; h < static_cast<int>(ghalf_.size()); ++h) {
      if (!ghalf_[h].alive) continue;
      if (!ghalf_[ghalf_[h].twin].alive || ghalf_[ghalf_[h].twin].twin != h)
        throw std::logic_error("twin links are broken");
      int r = region_root(ghalf_[h].region);
      for (int k : walk(h))
        if (region_root(ghalf_[k].region) != r) throw std::logic_error("face walk crosses region labels");
    }
  }

  // 0: nothing removed, 1: bigon, 2: half-bigon
  int reduce_once() {
    std::vector<char> seen(ghalf_.size(), 0);
    for (int h = 0; h < static_cast<int>(ghalf_.size()); ++h) {
      if (!ghalf_[h].alive || seen[h]) continue;
      auto w = walk(h);
      for (int k : w) seen[k] = 1;
      int r = region_root(ghalf_[h].region);
      if (r == kHole || chi_[r] != 1) continue;
      if (w.size() == 2 && try_bigon(w[0], w[1])) return 1;
      if (w.size() == 3 && try_half_bigon(w)) return 2;
    }
    return 0;
  }

  bool try_bigon(int h1, int h2) {
    const auto& a = ghalf_[h1];
    const auto& b = ghalf_[h2];
    if (a.label == kBoundaryLabel || b.label == kBoundaryLabel) return false;
    if (a.label == b.label) throw std::logic_error("curve bounds a disk by itself");
    const int x = a.origin, y = b.origin;
    if (x == y || gverts_[x].endpoint || gverts_[y].endpoint) throw std::logic_error("malformed bigon");

    const int u = rot_step(h1, 2), v = rot_step(a.twin, 2);
    const int wy = rot_step(h2, 2), wx = rot_step(b.twin, 2);
    const int rx = region_root(ghalf_[u].region), ry = region_root(ghalf_[wy].region);
    const int ru = ghalf_[u].region, rv = ghalf_[v].region;

    if (rx == ry) {
      --chi_[rx];
    } else {
      chi_[ry] += chi_[rx] - 1;
      regions_.p[rx] = ry;
    }

    // join the two strands that ran into the bigon corners along one curve
    auto splice = [&](int p, int q) {
      int tp = ghalf_[p].twin, tq = ghalf_[q].twin;
      ghalf_[p].alive = ghalf_[q].alive = false;
      if (tp == q) return;
      ghalf_[tp].twin = tq;
      ghalf_[tq].twin = tp;
    };
    const int tu = ghalf_[u].twin, tv = ghalf_[v].twin;
    const bool a_closes = tu == v;
    splice(u, v);
    splice(wy, wx);
    for (int k : {h1, ghalf_[h1].twin, h2, ghalf_[h2].twin}) ghalf_[k].alive = false;
    gverts_[x].alive = gverts_[y].alive = false;

    if (!a_closes) {
      // the spliced strand keeps the regions it had on either side
      if (region_root(ghalf_[tu].region) != region_root(rv) || region_root(ghalf_[tv].region) != region_root(ru))
        throw std::logic_error("bigon removal mislabels a region");
    }
    if (trace_)
      *trace_ << "bigon " << x << " " << y << " chi " << chi_[region_root(ry)] << "\n";
    return true;
  }

  bool try_half_bigon(std::vector<int> w) {
    int nb = 0;
    for (int k : w) nb += ghalf_[k].label == kBoundaryLabel;
    if (nb != 1) return false;
    while (ghalf_[w[2]].label != kBoundaryLabel) std::rotate(w.begin(), w.begin() + 1, w.end());
    const int ha = w[0], hb = w[1];
    const int p = ghalf_[ha].origin, x = ghalf_[hb].origin, q = ghalf_[w[2]].origin;
    if (ghalf_[ha].label == ghalf_[hb].label) throw std::logic_error("arc bounds a half-disk by itself");
    if (!gverts_[p].endpoint || gverts_[x].endpoint || !gverts_[q].endpoint)
      throw std::logic_error("malformed half-bigon");

    const int ta = ghalf_[ha].twin;
    const int ua = rot_step(ta, 2), ub = rot_step(hb, 2);
    const int ra = ghalf_[ua].twin, rb = ghalf_[ub].twin;
    const int tb = ghalf_[hb].twin;

    ghalf_[ha].twin = ra;
    ghalf_[ra].twin = ha;
    ghalf_[ha].region = ghalf_[ua].region;
    ghalf_[tb].twin = rb;
    ghalf_[rb].twin = tb;
    ghalf_[tb].region = ghalf_[ub].region;
    for (int k : {ta, ua, hb, ub}) ghalf_[k].alive = false;
    gverts_[x].alive = false;

    const int ci = gverts_[p].cuff;
    auto& list = cuff_lists_[ci];
    auto ip = std::find(list.begin(), list.end(), p), iq = std::find(list.begin(), list.end(), q);
    std::iter_swap(ip, iq);
    rebuild_boundary(ci);
    if (trace_) *trace_ << "half-bigon " << x << "\n";
    return true;
  }

  void trace_regions() {
    std::map<int, int> by_chi;
    for (int r = 0; r < static_cast<int>(chi_.size()); ++r)
      if (regions_.find(r) == r) ++by_chi[chi_[r]];
    *trace_ << "regions";
    for (auto it = by_chi.rbegin(); it != by_chi.rend(); ++it)
      *trace_ << " chi" << it->first << "x" << it->second;
    *trace_ << "\n";
  }

  const SurfaceChart& chart_;
  std::array<const CurveDiagram*, 2> curves_;
  bool swap_;
  std::ostream* trace_;

  Mesh mesh_;
  std::map<CuffSlot, CuffState> cuffs_;
  std::vector<int> face_;
  int faces_ = 0;
  int euler_ = 0;
  std::vector<int> region_of_face_;
  std::vector<int> chi_;
  Dsu regions_;

  std::vector<GHalf> ghalf_;
  std::vector<GVert> gverts_;
  std::vector<std::vector<int>> cuff_lists_;
};

}  // namespace

OverlayResult overlay_and_reduce(const SurfaceChart& chart, const CurveDiagram& first,
                                 const CurveDiagram& second, const OracleOptions& options) {
  Overlay o(chart, {&first, &second}, options.swap_slot_order, options.trace);
  return o.run();
}

int intersection_number(const CurveCode& a, const CurveCode& b, const OracleOptions& options) {
  if (a == b) return 0;
  return overlay_and_reduce(SurfaceChart::genus3_k4(), realize(a), realize(b), options).final_crossings;
}

// ---------------------------------------------------------------------------
// arcs in the four-holed sphere

CurveDiagram lemma_arc(ArcFamily family, int winding) {
  // (slot in the first pants, slot in the second); slot 1 follows mu in the
  // rotation. Crossed pairs are the ones a triangle through mu uses.
  static constexpr std::array<std::array<int, 2>, 4> kSlots{{{1, 2}, {2, 1}, {1, 1}, {2, 2}}};
  auto [s1, s2] = kSlots[static_cast<int>(family)];
  CurveDiagram d;
  d.kind = CurveDiagram::Kind::Arc;
  d.segments = {PantsSegment{0, s1, 0}, AnnulusStrand{0, winding}, PantsSegment{1, 0, s2}};
  return d;
}

namespace {

int arc_crossings(ArcFamily f1, int w1, ArcFamily f2, int w2, const OracleOptions& options = {}) {
  return overlay_and_reduce(SurfaceChart::four_holed_sphere(), lemma_arc(f1, w1), lemma_arc(f2, w2), options)
      .final_crossings;
}

}  // namespace

int LemmaReference::winding(ArcFamily f) const {
  switch (f) {
    case ArcFamily::A: return alpha;
    case ArcFamily::B: return beta;
    case ArcFamily::G: return gamma;
    case ArcFamily::D: return delta;
  }
  throw std::logic_error("unknown family");
}

HalfInt LemmaReference::base_index(ArcFamily f) const {
  return family_is_integral(f) ? HalfInt::integer(0) : HalfInt::from_twice(1);
}

const LemmaReference& lemma_reference() {
  static const LemmaReference ref = [] {
    constexpr int kRange = 4;
    auto disjoint_from_alpha = [](ArcFamily f) {
      std::vector<int> out;
      for (int w = -kRange; w <= kRange; ++w)
        if (arc_crossings(ArcFamily::A, 0, f, w) == 0) out.push_back(w);
      return out;
    };
    auto bs = disjoint_from_alpha(ArcFamily::B);
    auto gs = disjoint_from_alpha(ArcFamily::G);
    auto ds = disjoint_from_alpha(ArcFamily::D);
    std::vector<LemmaReference> found;
    for (int b : bs)
      for (int g : gs)
        for (int d : ds) {
          if (arc_crossings(ArcFamily::B, b, ArcFamily::G, g) || arc_crossings(ArcFamily::B, b, ArcFamily::D, d) ||
              arc_crossings(ArcFamily::G, g, ArcFamily::D, d))
            continue;
          // the gamma of index 1/2 is the one left disjoint by a single left
          // twist of alpha_0; the other solution is its mirror
          if (arc_crossings(ArcFamily::A, kTwistSign, ArcFamily::G, g) != 0) continue;
          found.push_back({0, b, g, d});
        }
    if (found.size() != 1)
      throw std::logic_error("expected exactly one disjoint reference configuration, found " +
                             std::to_string(found.size()));
    return found.front();
  }();
  return ref;
}

int replay_lemma(ArcFamily f1, HalfInt n, ArcFamily f2, HalfInt m, const OracleOptions& options) {
  const auto& ref = lemma_reference();
  auto wind = [&](ArcFamily f, HalfInt idx) {
    HalfInt off = idx - ref.base_index(f);
    if (!off.is_integer())
      throw std::invalid_argument(std::string("index ") + idx.to_string() + " has the wrong parity for family " +
                                  family_letter(f));
    return ref.winding(f) + kTwistSign * off.as_integer();
  };
  return arc_crossings(f1, wind(f1, n), f2, wind(f2, m), options);
}

}  // namespace curvesys
