#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

#include "curvesys/arc_calculus.hpp"
#include "curvesys/diagram_oracle.hpp"

using namespace curvesys;

namespace {

CurveCode code(const char* s) { return parse_curve(s); }
HalfInt half(int twice) { return HalfInt::from_twice(twice); }

std::vector<HalfInt> lemma_indices(ArcFamily f, int r) {
  std::vector<HalfInt> out;
  for (int t = -2 * r; t <= 2 * r; ++t)
    if ((t % 2 == 0) == family_is_integral(f)) out.push_back(half(t));
  return out;
}

constexpr ArcFamily kFamilies[] = {ArcFamily::A, ArcFamily::B, ArcFamily::G, ArcFamily::D};

// Independent model for two arcs of one family on the four-holed sphere: the
// pillowcase quotient of the torus by -1, where both arcs lift to lines
// through the lattice point 0, of slopes 0/1 and 2k/1 for twist difference k.
// Crossings on the torus not at the four half-lattice punctures pair up under
// the involution.
int pillowcase_same_family(int k) {
  if (k == 0) return 0;
  int n = 2 * std::abs(k);
  int interior = 0;
  // second line: t -> (n t, t) meets x = 0 (mod 1) at t = j/n
  for (int j = 0; j < n; ++j) {
    // the point is (0, j/n) mod 1; a puncture iff 2j/n is an integer
    bool puncture = (2 * j) % n == 0;
    interior += !puncture;
  }
  return interior / 2;
}

}  // namespace

TEST(Charts, ValidateAndCountCuffs) {
  const auto& g = SurfaceChart::genus3_k4();
  EXPECT_NO_THROW(g.validate());
  EXPECT_EQ(g.pants_count, 4);
  EXPECT_EQ(g.annuli.size(), 6u);
  EXPECT_TRUE(g.free_cuffs.empty());
  for (int e = 0; e < kNumEdges; ++e) {
    int lo = std::min(kK4Edges[e][0], kK4Edges[e][1]);
    int hi = std::max(kK4Edges[e][0], kK4Edges[e][1]);
    EXPECT_EQ(g.annuli[e].bottom.pants, lo);
    EXPECT_EQ(g.annuli[e].top.pants, hi);
    EXPECT_EQ(g.annuli[e].bottom.slot, g.slot_of_edge(lo, e));
  }
  const auto& s = SurfaceChart::four_holed_sphere();
  EXPECT_NO_THROW(s.validate());
  EXPECT_EQ(s.free_cuffs.size(), 4u);
}

TEST(Realize, ReferenceAndTwistedTriangle) {
  auto d = realize(triangle_code(0, 0, 0));
  EXPECT_EQ(d.kind, CurveDiagram::Kind::Closed);
  ASSERT_EQ(d.segments.size(), 6u);
  int pants = 0;
  for (const auto& s : d.segments) {
    if (std::holds_alternative<PantsSegment>(s))
      ++pants;
    else
      EXPECT_EQ(std::get<AnnulusStrand>(s).winding, 0);
  }
  EXPECT_EQ(pants, 3);

  auto t = realize(triangle_code(1, 1, 0));
  std::map<int, int> winding;
  for (const auto& s : t.segments)
    if (auto* a = std::get_if<AnnulusStrand>(&s)) winding[a->annulus] = a->winding;
  EXPECT_EQ(winding, (std::map<int, int>{{0, -1}, {1, -1}, {2, 0}}));
}

TEST(Realize, BoundaryIsACoreCircle) {
  auto d = realize(BoundaryCurve{0});
  EXPECT_EQ(d.kind, CurveDiagram::Kind::Core);
  EXPECT_EQ(d.core_annulus, 0);
  EXPECT_TRUE(d.segments.empty());
}

TEST(Realize, SquareVisitsEachAnnulusOnce) {
  auto d = realize(code("1,_,0,_,0,1"));
  std::set<int> seen;
  for (const auto& s : d.segments)
    if (auto* a = std::get_if<AnnulusStrand>(&s)) EXPECT_TRUE(seen.insert(a->annulus).second);
  EXPECT_EQ(seen, (std::set<int>{0, 2, 4, 5}));
  EXPECT_NO_THROW(d.validate(SurfaceChart::genus3_k4()));
}

TEST(Oracle, PointValues) {
  EXPECT_EQ(intersection_number(BoundaryCurve{0}, BoundaryCurve{1}), 0);
  EXPECT_EQ(intersection_number(triangle_code(0, 0, 0), triangle_code(1, 1, 0)), 2);
  auto g3 = code("1,_,0,_,0,1"), g3p = code("_,0,1,0,1,_"), g3pp = code("0,1,_,1,_,0");
  EXPECT_EQ(intersection_number(g3, g3p), 0);
  EXPECT_EQ(intersection_number(g3, g3pp), 0);
  EXPECT_EQ(intersection_number(g3p, g3pp), 0);
  EXPECT_EQ(intersection_number(g3, g3), 0);
  EXPECT_EQ(intersection_number(BoundaryCurve{1}, g3), 0);
  EXPECT_EQ(intersection_number(BoundaryCurve{0}, g3), 1);
}

TEST(Oracle, XCPairsMeetAtMostOnce) {
  auto xc = restrict_to_cycle(build_X0(), reference_triangle());
  ASSERT_EQ(xc.size(), 6u);
  for (const auto& a : xc)
    for (const auto& b : xc) EXPECT_LE(intersection_number(a, b), 1) << render(a) << ' ' << render(b);
  // the untwisted pair the argument reduces to
  EXPECT_LE(intersection_number(triangle_code(1, 0, 0), triangle_code(0, 0, 0)), 1);
}

TEST(Oracle, OverlayBookkeeping) {
  const auto& chart = SurfaceChart::genus3_k4();
  for (auto [a, b] : {std::pair{"0,0,0,_,_,_", "1,1,0,_,_,_"}, std::pair{"3,0,0,_,_,_", "0,_,_,0,1,_"},
                      std::pair{"1,_,0,_,0,1", "2,1,_,-1,_,0"},
                      std::pair{"2,-1,0,_,_,_", "0,0,0,_,_,_"}}) {
    auto r = overlay_and_reduce(chart, realize(code(a)), realize(code(b)));
    EXPECT_EQ(r.euler_characteristic, -4);
    EXPECT_EQ(r.half_bigons_removed, 0);
    EXPECT_EQ(r.final_crossings, r.initial_crossings - 2 * r.bigons_removed);
    EXPECT_LE(r.bigons_removed, r.initial_crossings);
    EXPECT_EQ(r.final_crossings, intersection_number(code(a), code(b)));
  }
}

TEST(Oracle, TraceIsDeterministic) {
  auto run = [] {
    std::ostringstream os;
    OracleOptions o;
    o.trace = &os;
    intersection_number(triangle_code(1, -1, 0), triangle_code(0, 0, 0), o);
    return os.str();
  };
  auto first = run();
  EXPECT_EQ(first, run());
  EXPECT_NE(first.find("crossings 2"), std::string::npos);
  EXPECT_NE(first.find("final 0"), std::string::npos);
  EXPECT_NE(first.find("bigon"), std::string::npos);
}

TEST(Oracle, SlotOrderDoesNotChangeTheCount) {
  OracleOptions swapped;
  swapped.swap_slot_order = true;
  auto x = build_X0();
  std::vector<CurveCode> probes = {triangle_code(0, 0, 0), triangle_code(3, -1, 0), code("2,_,_,0,-1,_"),
                                   code("0,2,_,-1,_,1"), code("_,-2,0,1,0,_")};
  probes.insert(probes.end(), x.begin(), x.end());
  for (const auto& a : probes)
    for (const auto& b : probes)
      EXPECT_EQ(intersection_number(a, b), intersection_number(a, b, swapped)) << render(a) << ' ' << render(b);
}

TEST(ArcReplay, PointValues) {
  EXPECT_EQ(replay_lemma(ArcFamily::A, half(6), ArcFamily::B, half(0)), 3);
  EXPECT_EQ(replay_lemma(ArcFamily::A, half(4), ArcFamily::G, half(1)), 1);
  EXPECT_EQ(replay_lemma(ArcFamily::G, half(1), ArcFamily::D, half(1)), 0);
  EXPECT_EQ(replay_lemma(ArcFamily::A, half(0), ArcFamily::B, half(0)), 0);
  EXPECT_EQ(replay_lemma(ArcFamily::A, half(2), ArcFamily::B, half(0)), 1);
  EXPECT_EQ(replay_lemma(ArcFamily::A, half(2), ArcFamily::G, half(1)), 0);
  EXPECT_EQ(replay_lemma(ArcFamily::A, half(0), ArcFamily::G, half(3)), 1);
}

TEST(ArcReplay, ParityViolationThrows) {
  EXPECT_THROW(replay_lemma(ArcFamily::A, half(1), ArcFamily::B, half(0)), std::invalid_argument);
  EXPECT_THROW(replay_lemma(ArcFamily::A, half(0), ArcFamily::G, half(2)), std::invalid_argument);
}

TEST(ArcReplay, ReferenceArcsArePairwiseDisjoint) {
  const auto& ref = lemma_reference();
  const auto& chart = SurfaceChart::four_holed_sphere();
  for (auto f : kFamilies)
    for (auto g : kFamilies)
      if (f != g)
        EXPECT_EQ(overlay_and_reduce(chart, lemma_arc(f, ref.winding(f)), lemma_arc(g, ref.winding(g))).final_crossings,
                  0);
}

TEST(ArcReplay, DistinctFamiliesMatchFloorFormulaOnGrid) {
  int cases = 0;
  for (auto f : kFamilies)
    for (auto g : kFamilies) {
      if (f == g) continue;
      for (HalfInt n : lemma_indices(f, 4))
        for (HalfInt m : lemma_indices(g, 4)) {
          ++cases;
          EXPECT_EQ(replay_lemma(f, n, g, m), (n - m).floor_abs())
              << family_letter(f) << n.to_string() << ' ' << family_letter(g) << m.to_string();
        }
    }
  EXPECT_GE(cases, 800);
}

TEST(ArcReplay, SameFamilyMatchesPillowcase) {
  for (auto f : kFamilies)
    for (HalfInt n : lemma_indices(f, 4))
      for (HalfInt m : lemma_indices(f, 4)) {
        int k = (n - m).as_integer();
        EXPECT_EQ(replay_lemma(f, n, f, m), pillowcase_same_family(k))
            << family_letter(f) << n.to_string() << ' ' << m.to_string();
      }
}

TEST(ArcReplay, ArcOverlayBookkeeping) {
  auto ref = lemma_reference();
  auto r = overlay_and_reduce(SurfaceChart::four_holed_sphere(), lemma_arc(ArcFamily::A, ref.winding(ArcFamily::A) - 1),
                              lemma_arc(ArcFamily::G, ref.winding(ArcFamily::G)));
  EXPECT_EQ(r.euler_characteristic, 2);
  EXPECT_EQ(r.final_crossings, r.initial_crossings - 2 * r.bigons_removed - r.half_bigons_removed);
}
