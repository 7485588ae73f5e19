// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "curvesys/arc_calculus.hpp"
#include "curvesys/curve_codes.hpp"
#include "curvesys/diagram_oracle.hpp"
#include "curvesys/graph_model.hpp"
#include "curvesys/verifier.hpp"

using namespace curvesys;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) why << what;
      ok = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

CurveCode code(const char* s) { return parse_curve(s); }

// --- criteria -------------------------------------------------------------------

std::string c1(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto x = build_X0();
  auto t = census(x);
  c.require(x.size() == 33 && t.boundary == 6 && t.triangle == 24 && t.square == 3, "wrong census");
  c.require(std::set<CurveCode>(x.begin(), x.end()).size() == 33, "duplicate codes");
  for (const auto& m : x) c.require(parse_curve(render(m)) == m, "non-canonical code " + render(m));
  int max = 0, pairs = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      max = std::max(max, intersection_number(x[i], x[j]));
      ++pairs;
    }
  double dt = seconds_since(t0);
  c.require(max <= 1, "pair with intersection " + std::to_string(max));
  c.require(dt < 60, "too slow");
  return "33 codes, " + std::to_string(pairs) + " oracle pairs, max " + std::to_string(max) + ", " +
         std::to_string(dt).substr(0, 4) + "s";
}

std::string c2(Check& c) {
  auto x = build_X0();
  auto r = saturation_check(x, kMinimalWindow, Engine::Both, threads());
  c.require(r.candidate_count == 4758, "candidate count");
  c.require(r.admissible.empty(), std::to_string(r.admissible.size()) + " admissible extensions");
  c.require(r.tail_valid(), "tail certificate invalid");
  c.require(r.disagreements.empty(), "engine disagreement during search");
  int exact = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto y = x;
    y.erase(y.begin() + static_cast<std::ptrdiff_t>(i));
    auto s = saturation_check(y, kMinimalWindow, Engine::Formula, threads());
    if (s.admissible == std::vector<CurveCode>{x[i]})
      ++exact;
    else
      c.require(false, "removing " + render(x[i]) + " admits " + std::to_string(s.admissible.size()) + " codes");
  }
  return std::to_string(r.candidate_count) + " candidates, " + std::to_string(r.admissible.size()) +
         " admissible, tail " + std::to_string(r.tail.size()) + " witnesses; remove-one exact " +
         std::to_string(exact) + "/33";
}

std::string c3(Check& c) {
  const ArcFamily fams[] = {ArcFamily::A, ArcFamily::B, ArcFamily::G, ArcFamily::D};
  int cases = 0, bad = 0;
  for (auto f : fams)
    for (auto g : fams) {
      if (f == g) continue;
      for (int tn = -8; tn <= 8; ++tn)
        for (int tm = -8; tm <= 8; ++tm) {
          if ((tn % 2 == 0) != family_is_integral(f) || (tm % 2 == 0) != family_is_integral(g)) continue;
          HalfInt n = HalfInt::from_twice(tn), m = HalfInt::from_twice(tm);
          ++cases;
          bad += replay_lemma(f, n, g, m) != (n - m).floor_abs();
        }
    }
  c.require(bad == 0, std::to_string(bad) + " mismatches");
  return std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches";
}

std::string c4(Check& c) {
  c.require(intersection_number(triangle_code(0, 0, 0), triangle_code(1, 1, 0)) == 2, "i(<0,0,0>,<1,1,0>) != 2");
  auto g3 = code("1,_,0,_,0,1"), g3p = code("_,0,1,0,1,_"), g3pp = code("0,1,_,1,_,0");
  c.require(intersection_number(g3, g3p) == 0 && intersection_number(g3, g3pp) == 0 &&
                intersection_number(g3p, g3pp) == 0,
            "square pair not disjoint");
  auto xc = restrict_to_cycle(build_X0(), reference_triangle());
  for (const auto& a : xc)
    for (const auto& b : xc) c.require(intersection_number(a, b) <= 1, "X_C pair above 1");
  for (int e = 0; e < kNumEdges; ++e)
    for (int f = 0; f < kNumEdges; ++f)
      c.require(intersection_number(BoundaryCurve{e}, BoundaryCurve{f}) == 0, "boundary curves meet");
  return "i=2, squares disjoint, X_C <= 1, boundary 0";
}

std::string c5(Check& c) {
  auto gen = x0_generators();
  auto o1 = orbit(gen.gamma1), o2 = orbit(gen.gamma2);
  std::set<CurveCode> u(o1.begin(), o1.end());
  u.insert(o2.begin(), o2.end());
  c.require(o1.size() == 12 && o2.size() == 12 && u.size() == 24, "triangle orbits");
  auto o3 = orbit(gen.gamma3);
  c.require(std::set<CurveCode>(o3.begin(), o3.end()) ==
                std::set<CurveCode>{code("1,_,0,_,0,1"), code("_,0,1,0,1,_"), code("0,1,_,1,_,0")},
            "square orbit");
  auto stab = stabilizer(gen.gamma3);
  bool klein = stab.size() == 4 && is_subgroup(stab);
  for (const auto& g : stab) klein = klein && g.compose(g).is_identity();
  c.require(klein, "stabilizer of gamma3 is not the Klein group");
  auto h = vertex_stabilizer(3);
  std::set<CurveCode> closure;
  for (const auto& g : h) {
    closure.insert(curvesys::apply(g, gen.gamma1));
    closure.insert(curvesys::apply(g, gen.gamma2));
  }
  std::set<CurveCode> xc{triangle_code(1, 0, 0), triangle_code(0, 1, 0), triangle_code(0, 0, 1),
                         triangle_code(1, 1, 0), triangle_code(1, 0, 1), triangle_code(0, 1, 1)};
  c.require(closure == xc, "vertex-stabilizer closure differs from X_C");
  return "orbits 12+12=24, square orbit 3, |Stab|=4 (V4), X_C of size 6";
}

std::string c6(Check& c) {
  auto x = build_X0();
  auto r = unique_square_restriction(x, reference_triangle(), 1);
  c.require(r.pairs == std::vector<std::array<int, 2>>{{1, 0}}, "restriction at e2 is not {(1,0)}");
  std::set<CurveCode> built, squares;
  for (const auto& m : x)
    if (auto* cc = as_cycle(m); cc && cc->cycle.kind() == CycleKind::Square) squares.insert(m);
  for (int e : {0, 1, 2}) {
    auto a = reconstruct_square(x, e), b = reconstruct_square(x, k4_opposite_edge(e));
    c.require(a && b && *a == *b, "opposite cut edges disagree");
    if (a) built.insert(*a);
  }
  c.require(built == squares, "reconstruction differs from the square curves");
  std::string pairs;
  for (const auto& p : r.pairs) pairs += "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
  return "restriction " + pairs + " at e1,e3; rebuilt " + std::to_string(built.size()) + " squares";
}

std::string c7(Check& c) {
  auto gs = enumerate_trivalent_graphs();
  c.require(gs.size() == 5, "catalog size " + std::to_string(gs.size()));
  std::multiset<int> bounds;
  int absent = 0;
  for (const auto& g : bridged_graph_bounds()) {
    if (g.bound)
      bounds.insert(*g.bound);
    else
      ++absent;
    c.require(g.bound.has_value() == (g.bridges > 0), "bound presence does not follow bridges");
  }
  c.require(bounds == std::multiset<int>{21, 14, 12} && absent == 2, "bounds differ");
  std::string list;
  for (int b : bounds) list += (list.empty() ? "" : ",") + std::to_string(b);
  return "5 classes, bounds {" + list + "}, " + std::to_string(absent) + " unbounded";
}

std::string c8(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto audit = dual_engine_audit(kMinimalWindow, threads());
  c.require(audit.passed(), std::to_string(audit.mismatches.size()) + " engine mismatches");

  auto cands = window_candidates(kMinimalWindow);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_g(0, 11);
  std::uniform_int_distribution<int> pick_t(-3, 3);
  int a4 = 0, twist = 0;
  while (a4 < 2000) {
    const auto& a = cands[pick(rng)];
    const auto& b = cands[pick(rng)];
    const auto& g = a4_group()[pick_g(rng)];
    ++a4;
    c.require(intersection_number(a, b) == intersection_number(curvesys::apply(g, a), curvesys::apply(g, b)),
              "A4 equivariance fails on " + render(a) + " " + render(b));
  }
  // twisting both curves along one pants curve is a homeomorphism
  while (twist < 2000) {
    auto a = cands[pick(rng)], b = cands[pick(rng)];
    auto* ca = std::get_if<CycleCurve>(&a);
    auto* cb = std::get_if<CycleCurve>(&b);
    if (!ca || !cb) continue;
    int e = static_cast<int>(pick(rng) % kNumEdges), t = pick_t(rng);
    int before = intersection_number(a, b);
    if (ca->cycle.contains(e)) ca->twist[e] += t;
    if (cb->cycle.contains(e)) cb->twist[e] += t;
    ++twist;
    c.require(before == intersection_number(a, b), "twist equivariance fails");
  }
  for (const auto& m : build_X0())
    c.require(orbit(m).size() * stabilizer(m).size() == a4_group().size(), "orbit-stabilizer fails");
  return std::to_string(audit.cross_pairs) + " distinct-cycle pairs and " + std::to_string(audit.triangle_pairs) +
         " same-triangle bounds audited, " + std::to_string(a4) + " A4 and " + std::to_string(twist) +
         " twist samples, orbit-stabilizer on 33 members, " + std::to_string(static_cast<int>(seconds_since(t0))) +
         "s";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<std::string(Check&)>> criteria[] = {
      {"X0 is a 1-system of 33 curves", c1},
      {"X0 is saturated in the window", c2},
      {"arc formula replay", c3},
      {"point values", c4},
      {"orbits and stabilizers", c5},
      {"square restriction and reconstruction", c6},
      {"graph catalog and bounds", c7},
      {"property suites", c8},
  };
  int failed = 0, n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Check c;
    std::string detail;
    try {
      detail = run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    failed += !c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << ' ' << n << ' ' << name << ": " << (c.ok ? detail : c.why.str())
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
