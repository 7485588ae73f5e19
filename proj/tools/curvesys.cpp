// curvesys: reproduce and explore the 33-curve 1-system on the genus-3 surface.
//
// Exit status: 0 verified, 1 counterexample or disagreement, 2 window too
// small, 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>

#include "curvesys/arc_calculus.hpp"
#include "curvesys/curve_codes.hpp"
#include "curvesys/diagram_oracle.hpp"
#include "curvesys/graph_model.hpp"
#include "curvesys/verifier.hpp"

using namespace curvesys;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string method;
  int radius = 3;
  bool json_out = false;
  int threads = 1;
};

Engine engine_of(const Options& o, Engine fallback) { return o.method.empty() ? fallback : parse_engine(o.method); }

CurveCode parse_arg(const std::string& text) {
  try {
    return parse_curve(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int parse_edge_arg(const std::string& s) {
  if (s.size() == 2 && s[0] == 'e' && s[1] >= '1' && s[1] <= '6') return s[1] - '1';
  throw UsageError("bad edge '" + s + "' (e1..e6)");
}

Cycle parse_cycle_arg(const std::string& s) {
  std::uint8_t mask = 0;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) mask |= static_cast<std::uint8_t>(1U << parse_edge_arg(tok));
  try {
    return Cycle::from_mask(mask);
  } catch (const std::invalid_argument&) {
    throw UsageError("'" + s + "' is not a cycle of K4");
  }
}

std::string cycle_text(Cycle c) {
  std::string out;
  for (int e : c.edges()) out += (out.empty() ? "e" : ",e") + std::to_string(e + 1);
  return out;
}

std::vector<CurveCode> edited_x0(const std::vector<std::string>& add, const std::vector<std::string>& remove) {
  auto x = build_X0();
  for (const auto& r : remove) {
    auto c = parse_arg(r);
    auto it = std::find(x.begin(), x.end(), c);
    if (it == x.end()) throw UsageError(r + " is not a member of the system");
    x.erase(it);
  }
  for (const auto& a : add) {
    auto c = parse_arg(a);
    if (std::find(x.begin(), x.end(), c) != x.end()) throw UsageError(a + " is already a member");
    x.push_back(c);
  }
  std::sort(x.begin(), x.end());
  return x;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// --- subcommands -------------------------------------------------------------

int cmd_x0(const Options& o) {
  auto x = build_X0();
  if (o.json_out) {
    json j;
    j["size"] = x.size();
    j["codes"] = json::array();
    for (const auto& c : x) j["codes"].push_back(render(c));
    emit(j);
  } else {
    for (const auto& c : x) std::cout << render(c) << '\n';
  }
  return 0;
}

int cmd_intersect(const Options& o, const std::string& a, const std::string& b) {
  auto ca = parse_arg(a), cb = parse_arg(b);
  auto ev = evaluate(ca, cb, engine_of(o, Engine::Formula));
  if (o.json_out) {
    json j;
    j["a"] = render(ca);
    j["b"] = render(cb);
    j["value"] = ev.value;
    j["method"] = method_name(ev.method);
    j["formula"] = ev.formula ? json(*ev.formula) : json();
    j["oracle"] = ev.oracle ? json(*ev.oracle) : json();
    j["lower_bound"] = ev.lower_bound ? json(*ev.lower_bound) : json();
    j["consistent"] = ev.consistent();
    emit(j);
  } else {
    std::cout << ev.value << " (" << method_name(ev.method) << ")\n";
    if (ev.lower_bound) std::cout << "torus lower bound " << *ev.lower_bound << '\n';
  }
  if (!ev.consistent()) {
    std::cerr << "engines disagree\n";
    return 1;
  }
  return 0;
}

int cmd_verify(const Options& o, int k, const std::vector<CurveCode>& x) {
  auto r = is_k_system(x, k, engine_of(o, Engine::Both));
  if (o.json_out) {
    emit(to_json(r));
  } else {
    std::cout << x.size() << " curves, max pairwise intersection " << r.max_intersection << '\n';
    for (const auto& p : r.violations)
      std::cout << "violation " << render(x[p.i]) << ' ' << render(x[p.j]) << " i=" << p.value << " ("
                << method_name(p.method) << ")\n";
    for (const auto& p : r.disagreements)
      std::cout << "disagreement " << render(x[p.i]) << ' ' << render(x[p.j]) << '\n';
  }
  return r.verified() ? 0 : 1;
}

int cmd_saturation(const Options& o, const std::vector<CurveCode>& x) {
  auto r = saturation_check(x, Window::from_radius(o.radius), engine_of(o, Engine::Formula), o.threads);
  if (o.json_out) {
    emit(to_json(r, x));
  } else {
    std::cout << "window [" << r.window.lo << ", " << r.window.hi << "]: " << r.candidate_count << " candidates, "
              << r.member_count << " members, " << r.admissible.size() << " admissible\n";
    for (const auto& c : r.admissible) std::cout << "admissible " << render(c) << '\n';
    std::size_t good = std::count_if(r.tail.begin(), r.tail.end(), [](const TailWitness& t) { return t.valid(); });
    std::cout << "tail certificate " << good << '/' << r.tail.size() << (r.tail_valid() ? " valid" : " INVALID")
              << '\n';
    if (!r.disagreements.empty()) std::cout << r.disagreements.size() << " engine disagreements\n";
    std::cout << (r.saturated() ? "saturated" : "not saturated") << '\n';
  }
  return r.saturated() ? 0 : 1;
}

int cmd_orbits(const Options& o, const std::string& text) {
  auto c = parse_arg(text);
  auto orb = orbit(c);
  auto stab = stabilizer(c);
  if (o.json_out) {
    json j;
    j["code"] = render(c);
    j["orbit"] = json::array();
    for (const auto& d : orb) j["orbit"].push_back(render(d));
    j["stabilizer"] = json::array();
    for (const auto& g : stab) j["stabilizer"].push_back(g.cycle_notation());
    emit(j);
  } else {
    std::cout << "orbit (" << orb.size() << "):\n";
    for (const auto& d : orb) std::cout << "  " << render(d) << '\n';
    std::cout << "stabilizer (" << stab.size() << "):";
    for (const auto& g : stab) std::cout << ' ' << g.cycle_notation();
    std::cout << '\n';
  }
  return 0;
}

int cmd_graphs(const Options& o) {
  auto gs = enumerate_trivalent_graphs();
  if (o.json_out) {
    json j = json::array();
    for (const auto& g : gs)
      j.push_back({{"graph", g.to_string()}, {"bridges", g.bridges().size()}, {"k4", g.is_k4()}});
    emit(j);
  } else {
    for (const auto& g : gs)
      std::cout << g.to_string() << "  bridges=" << g.bridges().size() << (g.is_k4() ? "  K4" : "") << '\n';
  }
  return 0;
}

int cmd_bounds(const Options& o) {
  auto rows = bridged_graph_bounds();
  if (o.json_out) {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"graph", r.graph.to_string()}, {"bridges", r.bridges}, {"bound", r.bound ? json(*r.bound) : json()}});
    emit(j);
  } else {
    for (const auto& r : rows)
      std::cout << r.graph.to_string() << "  " << (r.bound ? std::to_string(*r.bound) : "unbounded") << '\n';
  }
  return 0;
}

int cmd_lemma_table(const Options& o, int range) {
  const ArcFamily fams[] = {ArcFamily::A, ArcFamily::B, ArcFamily::G, ArcFamily::D};
  auto indices = [&](ArcFamily f) {
    std::vector<HalfInt> out;
    for (int t = -2 * range; t <= 2 * range; ++t)
      if ((t % 2 == 0) == family_is_integral(f)) out.push_back(HalfInt::from_twice(t));
    return out;
  };
  json rows = json::array();
  std::size_t total = 0, bad = 0;
  for (auto f1 : fams)
    for (auto f2 : fams) {
      std::size_t cases = 0, miss = 0;
      for (HalfInt n : indices(f1))
        for (HalfInt m : indices(f2)) {
          int oracle = replay_lemma(f1, n, f2, m);
          int formula = arc_intersection({0, f1, n}, {0, f2, m});
          ++cases;
          if (oracle != formula) {
            ++miss;
            if (!o.json_out)
              std::cout << "mismatch " << family_letter(f1) << '_' << n.to_string() << ' ' << family_letter(f2) << '_'
                        << m.to_string() << " oracle " << oracle << " formula " << formula << '\n';
          }
        }
      total += cases;
      bad += miss;
      std::string pair{family_letter(f1), family_letter(f2)};
      if (o.json_out)
        rows.push_back({{"families", pair}, {"cases", cases}, {"mismatches", miss}});
      else
        std::cout << pair << ' ' << cases << " cases, " << miss << " mismatches\n";
    }
  if (o.json_out)
    emit({{"range", range}, {"cases", total}, {"mismatches", bad}, {"rows", rows}});
  else
    std::cout << "total " << total << " cases, " << bad << " mismatches\n";
  return bad == 0 ? 0 : 1;
}

int cmd_family_table(const Options&, bool derive) {
  const auto& table = FamilyTable::builtin();
  if (!derive) {
    std::cout << table.to_text();
    return 0;
  }
  auto fresh = derive_family_table();
  if (fresh == table) {
    std::cout << "derived table matches the built-in table\n";
    return 0;
  }
  std::cout << fresh.to_text();
  std::cerr << "derived table differs from the built-in table\n";
  return 1;
}

int cmd_restriction(const Options& o, const std::string& tri, const std::string& cut) {
  Cycle t = parse_cycle_arg(tri);
  int e = parse_edge_arg(cut);
  if (t.kind() != CycleKind::Triangle || !t.contains(e)) throw UsageError("the cut edge must lie on the triangle");
  auto x = build_X0();
  auto r = unique_square_restriction(x, t, e, Window::from_radius(o.radius), engine_of(o, Engine::Formula));
  auto sq = reconstruct_square(x, e, Window::from_radius(o.radius), engine_of(o, Engine::Formula));
  if (o.json_out) {
    auto j = to_json(r);
    j["reconstructed"] = sq ? json(render(*sq)) : json();
    emit(j);
  } else {
    std::cout << "square " << cycle_text(r.square) << ", twists at e" << r.edges[0] + 1 << ",e" << r.edges[1] + 1
              << ':';
    for (const auto& p : r.pairs) std::cout << " (" << p[0] << ',' << p[1] << ')';
    std::cout << "\nreconstructed " << (sq ? render(*sq) : "none") << '\n';
  }
  return r.pairs.size() == 1 && sq ? 0 : 1;
}

int cmd_audit(const Options& o) {
  auto r = dual_engine_audit(Window::from_radius(o.radius), o.threads);
  if (o.json_out) {
    emit(to_json(r));
  } else {
    std::cout << r.cross_pairs << " distinct-cycle pairs, " << r.triangle_pairs << " same-triangle pairs, "
              << r.mismatches.size() << " mismatches\n";
    for (const auto& m : r.mismatches)
      std::cout << "mismatch " << render(m.a) << ' ' << render(m.b) << " formula " << m.formula << " oracle "
                << m.oracle << '\n';
  }
  return r.passed() ? 0 : 1;
}

int default_radius() {
  const char* env = std::getenv("CURVESYS_WINDOW");
  if (!env || !*env) return 3;
  try {
    std::size_t used = 0;
    int r = std::stoi(env, &used);
    if (used == std::string(env).size() && r >= 1) return r;
  } catch (const std::logic_error&) {
  }
  throw UsageError(std::string("CURVESYS_WINDOW must be a positive integer, got '") + env + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curve systems on the genus-3 surface with the K4 pants decomposition"};
  app.require_subcommand(1);
  Options o;
  try {
    o.radius = default_radius();
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  app.add_option("--method", o.method, "formula, oracle or both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));
  app.add_option("--window", o.radius, "twist window radius r, covering [1-r, r] (default 3, or $CURVESYS_WINDOW)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json_out, "machine-readable output");
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);

  std::function<int()> run;
  std::vector<std::string> add, remove;
  std::string a, b, tri = "e1,e2,e3", cut = "e2";
  int k = 1, range = 4;
  bool derive = false;

  app.add_subcommand("x0", "list the 33 codes")->callback([&] { run = [&] { return cmd_x0(o); }; });
  auto* inter = app.add_subcommand("intersect", "intersection number of two codes");
  inter->add_option("a", a)->required();
  inter->add_option("b", b)->required();
  inter->callback([&] { run = [&] { return cmd_intersect(o, a, b); }; });

  auto* verify = app.add_subcommand("verify", "check that the system is a k-system");
  verify->add_option("-k", k, "intersection bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--add", add, "extra codes");
  verify->add_option("--remove", remove, "codes to drop");
  verify->callback([&] { run = [&] { return cmd_verify(o, k, edited_x0(add, remove)); }; });

  auto* sat = app.add_subcommand("saturation", "search the twist window for admissible extensions");
  sat->add_option("--add", add, "extra codes");
  sat->add_option("--remove", remove, "codes to drop");
  sat->callback([&] { run = [&] { return cmd_saturation(o, edited_x0(add, remove)); }; });

  auto* orb = app.add_subcommand("orbits", "A4 orbit and stabilizer of a code");
  orb->add_option("code", a)->required();
  orb->callback([&] { run = [&] { return cmd_orbits(o, a); }; });

  app.add_subcommand("graphs", "connected trivalent graphs on four vertices")->callback([&] {
    run = [&] { return cmd_graphs(o); };
  });
  app.add_subcommand("bounds", "1-system bounds for the bridged graphs")->callback([&] {
    run = [&] { return cmd_bounds(o); };
  });

  auto* lemma = app.add_subcommand("lemma-table", "arc formula against the oracle on the four-holed sphere");
  lemma->add_option("--range", range, "indices in [-range, range]")->check(CLI::Range(0, 12));
  lemma->callback([&] { run = [&] { return cmd_lemma_table(o, range); }; });

  auto* fam = app.add_subcommand("family-table", "print the frozen arc family table");
  fam->add_flag("--derive", derive, "re-derive it with the oracle and compare");
  fam->callback([&] { run = [&] { return cmd_family_table(o, derive); }; });

  auto* restr = app.add_subcommand("restriction", "square twists compatible with a triangle's members");
  restr->add_option("--triangle", tri, "triangle edges, e.g. e1,e2,e3");
  restr->add_option("--cut", cut, "cut edge on the triangle");
  restr->callback([&] { run = [&] { return cmd_restriction(o, tri, cut); }; });

  app.add_subcommand("audit", "formula against oracle on every window pair (slow)")->callback([&] {
    run = [&] { return cmd_audit(o); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const WindowTooSmall& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
}
