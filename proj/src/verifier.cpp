#include "curvesys/verifier.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "curvesys/diagram_oracle.hpp"

namespace curvesys {

Engine parse_engine(std::string_view s) {
  if (s == "formula") return Engine::Formula;
  if (s == "oracle") return Engine::Oracle;
  if (s == "both") return Engine::Both;
  throw std::invalid_argument("unknown method '" + std::string(s) + "' (formula, oracle, both)");
}

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::Formula: return "formula";
    case Engine::Oracle: return "oracle";
    case Engine::Both: return "both";
  }
  return "?";
}

bool Evaluation::consistent() const {
  if (formula && oracle && *formula != *oracle) return false;
  if (lower_bound && oracle && *oracle < *lower_bound) return false;
  return true;
}

Evaluation evaluate(const CurveCode& a, const CurveCode& b, Engine engine) {
  Evaluation ev;
  const auto* ca = as_cycle(a);
  const auto* cb = as_cycle(b);
  const bool same_cycle = ca && cb && ca->cycle == cb->cycle;

  std::optional<IntersectionResult> closed;
  if (engine != Engine::Oracle) {
    if (!same_cycle)
      closed = cross_cycle_intersection(a, b);
    else if (ca->cycle.kind() == CycleKind::Triangle)
      ev.lower_bound = torus_lower_bound(a, b);
    if (closed) ev.formula = closed->lo;
  }
  if (engine != Engine::Formula || !closed) ev.oracle = intersection_number(a, b);

  if (closed && engine != Engine::Oracle) {
    ev.value = *ev.formula;
    ev.method = closed->method;
  } else {
    ev.value = *ev.oracle;
    ev.method = Method::Oracle;
  }
  return ev;
}

namespace {

void require_distinct(const std::vector<CurveCode>& system) {
  std::set<CurveCode> seen;
  for (const auto& c : system)
    if (!seen.insert(c).second) throw std::invalid_argument("duplicate code in system: " + render(c));
}

std::string cycle_text(Cycle c) {
  std::string out;
  for (int e : c.edges()) out += (out.empty() ? "e" : ",e") + std::to_string(e + 1);
  return out;
}

}  // namespace

SystemReport is_k_system(const std::vector<CurveCode>& system, int k, Engine engine) {
  require_distinct(system);
  SystemReport r;
  r.system = system;
  r.k = k;
  for (std::size_t i = 0; i < system.size(); ++i)
    for (std::size_t j = i + 1; j < system.size(); ++j) {
      auto ev = evaluate(system[i], system[j], engine);
      PairRecord p{i, j, ev.value, ev.method};
      r.pairs.push_back(p);
      r.max_intersection = std::max(r.max_intersection, ev.value);
      if (ev.value > k) r.violations.push_back(p);
      if (!ev.consistent()) r.disagreements.push_back(p);
    }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<CurveCode> window_candidates(Window w) {
  std::vector<CurveCode> out;
  for (int e = 0; e < kNumEdges; ++e) out.push_back(BoundaryCurve{e});
  for (Cycle c : k4_cycles()) {
    const auto es = c.edges();
    std::vector<int> digits(es.size(), 0);
    while (true) {
      CycleCurve code{c, {}};
      for (std::size_t i = 0; i < es.size(); ++i) code.twist[es[i]] = w.lo + digits[i];
      out.push_back(code);
      int pos = static_cast<int>(es.size()) - 1;
      while (pos >= 0 && ++digits[pos] == w.width()) digits[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return out;
}

bool SaturationReport::tail_valid() const {
  return !tail.empty() && std::all_of(tail.begin(), tail.end(), [](const TailWitness& t) { return t.valid(); });
}

namespace {

std::vector<TailWitness> tail_certificate(const std::vector<CurveCode>& system, Window w) {
  constexpr int kScanBeyond = 64;
  std::vector<TailWitness> out;
  for (Cycle z : k4_cycles())
    for (int e : z.edges())
      for (auto [end, dir] : {std::pair{w.lo, -1}, std::pair{w.hi, 1}}) {
        TailWitness t{z, e, end, dir, std::nullopt, 0, false};
        auto term_at = [&](int twist, const CurveCode& m) {
          CycleCurve probe{z, {}};
          probe.twist[e] = twist;
          return arc_intersection(*project(probe, e), *project(m, e));
        };
        for (std::size_t j = 0; j < system.size(); ++j) {
          const auto* m = as_cycle(system[j]);
          if (!m || m->cycle == z || !m->cycle.contains(e)) continue;
          int term = term_at(end, system[j]);
          if (term < 2) continue;
          // the term grows with the distance of the two indices, so it is
          // monotone once the twist moves away from the member's index
          CycleCurve probe{z, {}};
          probe.twist[e] = end;
          HalfInt d = project(probe, e)->index - project(system[j], e)->index;
          bool monotone = dir * d.twice() > 0;
          for (int s = 1, prev = term; monotone && s <= kScanBeyond; ++s) {
            int next = term_at(end + dir * s, system[j]);
            monotone = next >= prev;
            prev = next;
          }
          if (!monotone) continue;
          t.member = j;
          t.term = term;
          t.monotone = true;
          break;
        }
        out.push_back(t);
      }
  return out;
}

}  // namespace

SaturationReport saturation_check(const std::vector<CurveCode>& system, Window window, Engine engine,
                                  int threads) {
  if (window.lo > kMinimalWindow.lo || window.hi < kMinimalWindow.hi)
    throw WindowTooSmall("window [" + std::to_string(window.lo) + ", " + std::to_string(window.hi) +
                         "] does not cover [-2, 3]; tails beyond it cannot be certified");
  require_distinct(system);
  const std::set<CurveCode> members(system.begin(), system.end());

  SaturationReport r;
  r.window = window;
  const auto candidates = window_candidates(window);
  r.candidate_count = candidates.size();
  r.outcomes.resize(candidates.size());
  std::vector<std::vector<PairRecord>> audit(candidates.size());

  auto examine = [&](std::size_t i) {
    CandidateOutcome o;
    o.candidate = candidates[i];
    if (members.count(o.candidate)) {
      o.member = true;
    } else {
      for (std::size_t j = 0; j < system.size(); ++j) {
        auto ev = evaluate(o.candidate, system[j], engine);
        if (!ev.consistent()) audit[i].push_back({i, j, ev.value, ev.method});
        if (ev.value >= 2) {
          o.blocker = j;
          o.blocker_value = ev.value;
          o.method = ev.method;
          break;
        }
      }
    }
    r.outcomes[i] = std::move(o);
  };

  const std::size_t n = candidates.size();
  const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) examine(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) examine(i);
      });
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& o = r.outcomes[i];
    if (o.member)
      ++r.member_count;
    else if (!o.blocker)
      r.admissible.push_back(o.candidate);
    r.disagreements.insert(r.disagreements.end(), audit[i].begin(), audit[i].end());
  }
  r.tail = tail_certificate(system, window);
  return r;
}

// ---------------------------------------------------------------------------

AuditReport dual_engine_audit(Window window, int threads) {
  AuditReport r;
  r.window = window;
  const auto cands = window_candidates(window);
  const std::size_t n = cands.size();
  std::vector<std::vector<AuditMismatch>> found(n);
  std::vector<std::size_t> cross(n, 0), tri(n, 0);

  auto row = [&](std::size_t i) {
    const auto* ci = as_cycle(cands[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto* cj = as_cycle(cands[j]);
      if (ci && cj && ci->cycle == cj->cycle) {
        if (ci->cycle.kind() != CycleKind::Triangle) continue;
        ++tri[i];
        int lb = torus_lower_bound(cands[i], cands[j]);
        int o = intersection_number(cands[i], cands[j]);
        if (o < lb) found[i].push_back({cands[i], cands[j], lb, o});
        continue;
      }
      ++cross[i];
      int f = cross_cycle_intersection(cands[i], cands[j]).lo;
      int o = intersection_number(cands[i], cands[j]);
      if (f != o) found[i].push_back({cands[i], cands[j], f, o});
    }
  };
  const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) row(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) row(i);
      });
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < n; ++i) {
    r.cross_pairs += cross[i];
    r.triangle_pairs += tri[i];
    r.mismatches.insert(r.mismatches.end(), found[i].begin(), found[i].end());
  }
  return r;
}

// ---------------------------------------------------------------------------

SquareRestriction unique_square_restriction(const std::vector<CurveCode>& system, Cycle triangle, int cut_edge,
                                            Window window, Engine engine) {
  if (triangle.kind() != CycleKind::Triangle || !triangle.contains(cut_edge))
    throw std::invalid_argument("cut edge must lie on a triangle");
  SquareRestriction r;
  r.triangle = triangle;
  r.cut_edge = cut_edge;
  r.square = square_avoiding(cut_edge);

  std::vector<int> kept, rest;
  for (int e : r.square.edges()) (triangle.contains(e) ? kept : rest).push_back(e);
  r.edges = {kept.at(0), kept.at(1)};
  const auto on_triangle = restrict_to_cycle(system, triangle);

  auto compatible = [&](const CycleCurve& sq) {
    for (const auto& m : on_triangle)
      if (evaluate(sq, m, engine).value > 1) return false;
    return true;
  };
  for (int x = window.lo; x <= window.hi; ++x)
    for (int y = window.lo; y <= window.hi; ++y) {
      bool found = false;
      for (int u = window.lo; u <= window.hi && !found; ++u)
        for (int v = window.lo; v <= window.hi && !found; ++v) {
          CycleCurve sq{r.square, {}};
          sq.twist[r.edges[0]] = x;
          sq.twist[r.edges[1]] = y;
          sq.twist[rest[0]] = u;
          sq.twist[rest[1]] = v;
          found = compatible(sq);
        }
      if (found) r.pairs.push_back({x, y});
    }
  return r;
}

std::optional<CycleCurve> reconstruct_square(const std::vector<CurveCode>& system, int cut_edge, Window window,
                                             Engine engine) {
  CycleCurve out{square_avoiding(cut_edge), {}};
  for (Cycle t : k4_triangles()) {
    if (!t.contains(cut_edge)) continue;
    auto r = unique_square_restriction(system, t, cut_edge, window, engine);
    if (r.pairs.size() != 1) return std::nullopt;
    out.twist[r.edges[0]] = r.pairs[0][0];
    out.twist[r.edges[1]] = r.pairs[0][1];
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<GraphBound> bridged_graph_bounds(const BoundTable& table) {
  std::vector<GraphBound> out;
  for (const auto& g : enumerate_trivalent_graphs()) out.push_back({g, g.bridges().size(), bound_1system(g, table)});
  return out;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json pair_json(const std::vector<CurveCode>& sys, const PairRecord& p) {
  nlohmann::ordered_json j;
  j["a"] = render(sys[p.i]);
  j["b"] = render(sys[p.j]);
  j["value"] = p.value;
  j["method"] = method_name(p.method);
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const SystemReport& r) {
  nlohmann::ordered_json j;
  j["k"] = r.k;
  j["size"] = r.system.size();
  j["max_intersection"] = r.max_intersection;
  j["verified"] = r.verified();
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& p : r.violations) j["violations"].push_back(pair_json(r.system, p));
  j["disagreements"] = nlohmann::ordered_json::array();
  for (const auto& p : r.disagreements) j["disagreements"].push_back(pair_json(r.system, p));
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : r.pairs) j["pairs"].push_back(pair_json(r.system, p));
  return j;
}

nlohmann::ordered_json to_json(const SaturationReport& r, const std::vector<CurveCode>& system) {
  nlohmann::ordered_json j;
  j["window"] = {r.window.lo, r.window.hi};
  j["candidates"] = r.candidate_count;
  j["members"] = r.member_count;
  j["saturated"] = r.saturated();
  j["tail_valid"] = r.tail_valid();
  j["admissible"] = nlohmann::ordered_json::array();
  for (const auto& c : r.admissible) j["admissible"].push_back(render(c));
  j["disagreements"] = r.disagreements.size();
  j["tail"] = nlohmann::ordered_json::array();
  for (const auto& t : r.tail) {
    nlohmann::ordered_json w;
    w["cycle"] = cycle_text(t.cycle);
    w["edge"] = "e" + std::to_string(t.edge + 1);
    w["end"] = t.end_value;
    w["direction"] = t.direction;
    w["member"] = t.member ? nlohmann::ordered_json(render(system[*t.member])) : nlohmann::ordered_json();
    w["term"] = t.term;
    w["monotone"] = t.monotone;
    j["tail"].push_back(w);
  }
  j["blockers"] = nlohmann::ordered_json::array();
  for (const auto& o : r.outcomes) {
    if (o.member || !o.blocker) continue;
    nlohmann::ordered_json b;
    b["candidate"] = render(o.candidate);
    b["blocker"] = render(system[*o.blocker]);
    b["value"] = o.blocker_value;
    b["method"] = method_name(o.method);
    j["blockers"].push_back(b);
  }
  return j;
}

nlohmann::ordered_json to_json(const SquareRestriction& r) {
  nlohmann::ordered_json j;
  j["triangle"] = cycle_text(r.triangle);
  j["cut_edge"] = "e" + std::to_string(r.cut_edge + 1);
  j["square"] = cycle_text(r.square);
  j["edges"] = {"e" + std::to_string(r.edges[0] + 1), "e" + std::to_string(r.edges[1] + 1)};
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : r.pairs) j["pairs"].push_back({p[0], p[1]});
  return j;
}

nlohmann::ordered_json to_json(const AuditReport& r) {
  nlohmann::ordered_json j;
  j["window"] = {r.window.lo, r.window.hi};
  j["cross_pairs"] = r.cross_pairs;
  j["triangle_pairs"] = r.triangle_pairs;
  j["passed"] = r.passed();
  j["mismatches"] = nlohmann::ordered_json::array();
  for (const auto& m : r.mismatches)
    j["mismatches"].push_back({{"a", render(m.a)}, {"b", render(m.b)}, {"formula", m.formula}, {"oracle", m.oracle}});
  return j;
}

}  // namespace curvesys
