// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance --cli <path to digicover> --workdir <scratch directory>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "digicover/covering.hpp"
#include "digicover/dot.hpp"
#include "digicover/errors.hpp"
#include "digicover/fixtures.hpp"
#include "digicover/io.hpp"
#include "digicover/lifting.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace digicover;
using nlohmann::json;

namespace {

// Population sizes and budgets. Disagreement tolerances are zero throughout.
constexpr std::uint64_t kMapSeeds = 500;
constexpr std::uint64_t kCoveringSeeds = 250;
constexpr std::uint64_t kFunctionSeeds = 500;
constexpr std::size_t kMaxDomain = 12;
constexpr std::size_t kOracleLength = 6;
constexpr std::size_t kSubsetOraclePoints = 8;
constexpr double kFixtureBudgetSeconds = 1.0;
constexpr double kEquivalenceBudgetSeconds = 30.0;
constexpr std::size_t kExitMatrixMinimum = 20;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failed checks for one criterion.
struct Checks {
  std::size_t run = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++run;
    if (!ok) failures.push_back(what);
  }
};

template <typename E, typename F>
bool throws(F&& f) {
  try {
    f();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

int g_failed = 0;

void report(int id, const std::string& title, const Checks& c, const std::string& extra) {
  const bool ok = c.failures.empty();
  if (!ok) ++g_failed;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " ("
            << c.run - c.failures.size() << "/" << c.run << " checks" << (extra.empty() ? "" : "; ")
            << extra << ")\n";
  for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) {
    std::cout << "        - " << c.failures[i] << "\n";
  }
  if (c.failures.size() > 10) std::cout << "        ... " << c.failures.size() - 10 << " more\n";
}

std::set<Point> as_set(const std::vector<Point>& v) { return {v.begin(), v.end()}; }

std::vector<DigitalMap> map_population() {
  std::vector<DigitalMap> out;
  for (std::uint64_t s = 0; s < kMapSeeds; ++s) out.push_back(random_map(s, {kMaxDomain, 2}));
  return out;
}

std::vector<DigitalMap> covering_population() {
  std::vector<DigitalMap> out;
  for (std::uint64_t s = 0; s < kCoveringSeeds; ++s) out.push_back(random_covering(s));
  return out;
}

// ---------------------------------------------------------------- criterion 1

void criterion_1() {
  Checks c;
  const auto t0 = Clock::now();

  {  // pr1
    const auto fx = fixture_pr1(3, 5);
    const auto& p = fx.map;
    c.expect(is_continuous(p).holds, "pr1 continuous");
    c.expect(is_surjective(p).holds, "pr1 surjective");
    c.expect(has_plp(p).holds, "pr1 plp holds");
    c.expect(!has_unique_lifts(p).holds, "pr1 uniqueness fails");
    const auto uv = uniqueness_violations(p);
    const std::vector<Point> triple{{0, 0}, {1, -1}, {1, 1}};
    c.expect(std::any_of(uv.begin(), uv.end(),
                         [&](const auto& v) { return v.points == triple; }),
             "pr1 uniqueness violations include ((0,0),(1,1),(1,-1))");
    const auto lifts = all_lifts({p, validate_path(p.codomain(), {{0}, {1}, {2}}), {0, 0}});
    auto has = [&](const std::vector<Point>& steps) {
      return std::any_of(lifts.begin(), lifts.end(), [&](const auto& l) { return l.steps() == steps; });
    };
    c.expect(has({{0, 0}, {1, 1}, {2, 0}}), "pr1 beta is a lift of alpha");
    c.expect(has({{0, 0}, {1, -1}, {2, 0}}), "pr1 gamma is a lift of alpha");
    const auto cov = is_covering(p);
    c.expect(!cov.holds(), "pr1 is not a covering");
    bool all_injectivity = true;
    std::set<Point> centers;
    for (const auto& v : cov.violations) {
      if (v.condition != 3) continue;
      centers.insert(v.points.front());
      all_injectivity = all_injectivity && v.restriction && v.restriction->leg == Leg::Injectivity;
    }
    c.expect(all_injectivity && centers.size() == p.domain().size(),
             "pr1 restriction to every N(e,1) fails injectivity");
  }

  {  // mod-4 ray
    const auto fx = fixture_mod4_ray(12);
    const auto& p = fx.map;
    const auto c0 = Point{0, 0}, c1 = Point{1, 1}, c3 = Point{1, -1};
    const auto plp = has_plp(p);
    c.expect(!plp.holds, "mod4 plp fails");
    c.expect(std::get<PointWitness>(plp.witness).points == std::vector<Point>{c0, c3, Point{0}},
             "mod4 plp witness is (c_0, c_3, 0)");
    c.expect(!lift_path({p, validate_path(p.codomain(), {c0, c3}), Point{0}}).has_value(),
             "mod4 gamma = (c_0, c_3) has no lift from 0");
    c.expect(has_unique_lifts(p).holds, "mod4 uniqueness holds");
    bool only_ends = true;
    for (const auto& v : plp_violations(p)) {
      only_ends = only_ends && (v.start == Point{0} || v.start == Point{12});
    }
    c.expect(only_ends, "mod4 plp violations sit only at 0 and the truncation end");
    c.expect(!is_covering(p).holds(), "mod4 is not a covering");
  }

  {  // mod-3, cycle model
    const auto fx = fixture_mod3(9, DomainModel::Cycle);
    const auto& p = fx.map;
    c.expect(has_upl(p).holds, "mod3 u.p.l holds");
    const auto conc = conciliator_points(p);
    c.expect(conc.count(Point{0}) && conc.count(Point{3}) && conc.count(Point{6}),
             "mod3 conciliator points include 0, 3, 6");
    const auto cov = is_covering(p);
    c.expect(!cov.holds(), "mod3 is not a covering");
    const auto& w = std::get<ConditionFailure>(cov.verdict.witness);
    c.expect(w.condition == 3 && w.base == Point{0, 0} && w.points == std::vector<Point>{Point{0}},
             "mod3 covering fails at condition (3), b_0, center 0");
    c.expect(w.restriction && w.restriction->leg == Leg::InverseContinuity &&
                 as_set(w.restriction->points) == std::set<Point>{{1, 0}, {0, 1}},
             "mod3 inverse leg fails on (b_1, b_2)");
  }

  {  // mod-3, line model: interior claims only
    const auto fx = fixture_mod3(9, DomainModel::Line);
    const auto& p = fx.map;
    const auto boundary = as_set(fx.boundary_points);
    bool interior_plp = true;
    for (const auto& v : plp_violations(p)) interior_plp = interior_plp && boundary.count(v.start);
    c.expect(interior_plp, "mod3 line: plp violations only at boundary points");
    c.expect(uniqueness_violations(p).empty(), "mod3 line: uniqueness holds");
    const auto conc = conciliator_points(p);
    c.expect(conc.count(Point{3}) && conc.count(Point{6}), "mod3 line: 3 and 6 are conciliators");
    bool found = false;
    for (const auto& v : is_covering(p).violations) {
      if (v.condition == 3 && v.base == Point{0, 0} && v.points.front() == Point{3} && v.restriction &&
          v.restriction->leg == Leg::InverseContinuity &&
          as_set(v.restriction->points) == std::set<Point>{{1, 0}, {0, 1}}) {
        found = true;
      }
    }
    c.expect(found, "mod3 line: condition (3) fails at b_0 around 3 on (b_1, b_2)");
  }

  {  // Han
    const auto fx = fixture_han_example();
    const auto& p = fx.map;
    const auto v = is_continuous(p);
    c.expect(!v.holds, "Han map is not continuous");
    c.expect(as_set(std::get<PointWitness>(v.witness).points) == std::set<Point>{{0, 0}, {-1, -1}},
             "Han continuity witness is (q_0, q_6)");
    std::size_t broken = 0;
    for (const auto& [a, b] : p.domain().edges()) {
      const auto fa = p.at(a), fb = p.at(b);
      broken += fa != fb && !p.codomain().adjacent_at(fa, fb);
    }
    c.expect(broken == 1, "Han map breaks exactly one edge");
    c.expect(throws<NotContinuousError>([&] { has_plp(p); }), "Han plp raises NotContinuousError");
    c.expect(throws<NotContinuousError>([&] { is_local_isomorphism(p); }),
             "Han local isomorphism raises NotContinuousError");
  }

  {  // C_10 -> C_5
    const auto fx = fixture_cycle_cover(2, 5);
    const auto& p = fx.map;
    c.expect(is_covering(p).holds(), "C_10 -> C_5 is a covering");
    const auto r2 = is_radius_n_covering(p, 2);
    c.expect(!r2.holds(), "C_10 -> C_5 is not a radius-2 covering");
    const auto& w = std::get<ConditionFailure>(r2.verdict.witness);
    c.expect(w.condition == 3 && w.base == Point{0} && w.points == std::vector<Point>{Point{0}} &&
                 w.restriction && w.restriction->leg == Leg::InverseContinuity &&
                 as_set(w.restriction->points) == std::set<Point>{{2}, {3}},
             "radius-2 failure at b_0 on (b_2, b_3)");
    // The preimages of b_2 and b_3 in N(0,2) are 2 and -2 = 8.
    const auto ball = neighborhood(p.domain(), Point{0}, 2);
    std::set<Point> pre;
    for (const auto& x : ball) {
      if (p(x) == Point{2} || p(x) == Point{3}) pre.insert(x);
    }
    c.expect(pre == std::set<Point>{{2}, {8}} && !p.domain().adjacent_at(2, 8),
             "preimages 2 and -2 are not adjacent");
    c.expect(!loop_criterion(p, 2).holds, "loop criterion n=2 fails");
    c.expect(!closed_loop_lifts(p, 5).holds, "length-5 loop lift is not closed");
    c.expect(simple_loop_lifts(p, 4).holds, "loops of length <= 4 pass");
  }

  const double secs = seconds_since(t0);
  c.expect(secs < kFixtureBudgetSeconds, "fixture suite runs in under 1 s");
  std::ostringstream extra;
  extra << secs << " s";
  report(1, "example fixture golden suite", c, extra.str());
}

// ---------------------------------------------------------------- criterion 2, 3

void criterion_2_3(const std::vector<DigitalMap>& maps) {
  Checks c2, c3;
  const auto t0 = Clock::now();
  std::size_t coverings = 0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& p = maps[i];
    const bool cov = is_covering(p).holds();
    const bool li = is_local_isomorphism(p).holds;
    coverings += cov;
    c2.expect(cov == li, "seed " + std::to_string(i) + ": covering " + std::to_string(cov) +
                             " vs local iso " + std::to_string(li));
    const bool upl = has_upl(p).holds;
    const bool cf = is_conciliator_free(p).holds;
    c3.expect(!(upl && cf) || cov, "seed " + std::to_string(i) + ": u.p.l without conciliators but not a covering");
    c3.expect(!cov || upl, "seed " + std::to_string(i) + ": covering without u.p.l");
  }
  const double secs = seconds_since(t0);
  c2.expect(coverings > 0 && coverings < maps.size(), "population mixes coverings and non-coverings");
  c2.expect(secs < kEquivalenceBudgetSeconds, "harness runs in under 30 s");
  std::ostringstream extra;
  extra << maps.size() << " maps, " << coverings << " coverings, " << secs << " s";
  report(2, "covering == local isomorphism", c2, extra.str());
  report(3, "u.p.l + no conciliator => covering => u.p.l", c3, std::to_string(maps.size()) + " maps");
}

// ---------------------------------------------------------------- criterion 4

void criterion_4(const std::vector<DigitalMap>& coverings) {
  Checks c;
  std::size_t r2_true = 0;
  for (std::size_t i = 0; i < coverings.size(); ++i) {
    const auto& p = coverings[i];
    c.expect(p.codomain().size() <= 12, "seed " + std::to_string(i) + ": codomain too large");
    for (std::size_t n : {1, 2}) {
      const bool loops = loop_criterion(p, n).holds;
      const bool local = is_radius_n_local_isomorphism(p, n).overall;
      const bool cov = is_radius_n_covering(p, n).holds();
      if (n == 2) r2_true += cov;
      c.expect(loops == local && local == cov,
               "seed " + std::to_string(i) + " n=" + std::to_string(n) + ": loops " +
                   std::to_string(loops) + ", local " + std::to_string(local) + ", covering " +
                   std::to_string(cov));
    }
  }
  const auto p = fixture_cycle_cover(2, 5).map;
  c.expect(simple_loop_lifts(p, 4).holds, "C_10 -> C_5: loops of length <= 2n pass");
  c.expect(!simple_loop_lifts(p, 5).holds, "C_10 -> C_5: the length-5 loop fails");
  c.expect(!is_radius_n_covering(p, 2).holds(), "C_10 -> C_5: not radius 2");
  c.expect(r2_true > 0 && r2_true < coverings.size(), "population mixes radius-2 outcomes");
  report(4, "loop criterion == radius-n local iso == radius-n covering", c,
         std::to_string(coverings.size()) + " coverings, " + std::to_string(r2_true) + " radius-2");
}

// ---------------------------------------------------------------- criterion 5

void criterion_5(const std::vector<DigitalMap>& maps) {
  Checks c;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& p = maps[i];
    const bool plp = has_plp(p).holds;
    const bool plp_o = plp_oracle(p, kOracleLength).holds;
    c.expect(plp == plp_o, "seed " + std::to_string(i) + ": plp local " + std::to_string(plp) +
                               " vs oracle " + std::to_string(plp_o));
    const bool un = has_unique_lifts(p).holds;
    const bool un_o = uniqueness_oracle(p, kOracleLength).holds;
    c.expect(un == un_o, "seed " + std::to_string(i) + ": uniqueness local " + std::to_string(un) +
                             " vs oracle " + std::to_string(un_o));
  }
  std::size_t subset_checked = 0;
  auto subset_check = [&](const DigitalMap& f, const std::string& name) {
    if (f.domain().size() > kSubsetOraclePoints || f.codomain().size() > kSubsetOraclePoints) return;
    ++subset_checked;
    c.expect(is_continuous(f).holds == oracle::continuous_by_connected_subsets(f),
             name + ": edge criterion disagrees with connected subsets");
  };
  for (std::size_t i = 0; i < maps.size(); ++i) subset_check(maps[i], "map seed " + std::to_string(i));
  for (std::uint64_t s = 0; s < kFunctionSeeds; ++s) {
    subset_check(random_function(s, kSubsetOraclePoints), "function seed " + std::to_string(s));
  }
  for (const auto& fx : example_fixtures()) subset_check(fx.map, fx.name);
  report(5, "local criteria == path oracles; edge == subset continuity", c,
         std::to_string(maps.size()) + " maps, " + std::to_string(subset_checked) + " small maps");
}

// ---------------------------------------------------------------- criterion 6

void criterion_6(const std::vector<DigitalMap>& maps, const std::vector<DigitalMap>& coverings) {
  Checks c;
  std::size_t upl_maps = 0;
  auto scan = [&](const DigitalMap& p, const std::string& name) {
    if (!has_upl(p).holds) return;
    ++upl_maps;
    const auto v = oracle::upl_consequence_violations(p);
    c.expect(v.empty(), name + ": " + (v.empty() ? "" : v.front()));
  };
  for (std::size_t i = 0; i < maps.size(); ++i) scan(maps[i], "map seed " + std::to_string(i));
  for (std::size_t i = 0; i < coverings.size(); ++i) scan(coverings[i], "covering seed " + std::to_string(i));
  for (const auto& fx : example_fixtures()) {
    if (is_continuous(fx.map).holds) scan(fx.map, fx.name);
  }
  for (std::size_t i = 0; i < coverings.size(); ++i) {
    const auto& p = coverings[i];
    const auto v = oracle::fiber_separation_violations(p);
    c.expect(fiber_separation_scan(p).holds && v.empty(),
             "covering seed " + std::to_string(i) + ": " + (v.empty() ? "library scan" : v.front()));
  }
  report(6, "pointwise u.p.l consequences and fiber separation within N(e,2)", c,
         std::to_string(upl_maps) + " u.p.l maps, " + std::to_string(coverings.size()) + " coverings");
}

// ---------------------------------------------------------------- criterion 7

struct Cli {
  std::string binary;
  fs::path work;

  // Runs the CLI through the shell; returns the exit code, stdout in `out`.
  int run(const std::string& args, std::string* out = nullptr, const std::string& env = "") const {
    const auto out_file = work / "stdout.txt";
    const auto err_file = work / "stderr.txt";
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + binary + "' " + args + " > '" +
                            out_file.string() + "' 2> '" + err_file.string() + "'";
    const int status = std::system(cmd.c_str());
    if (out) {
      std::ifstream in(out_file);
      std::ostringstream s;
      s << in.rdbuf();
      *out = s.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
};

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void criterion_7(const Cli& cli) {
  Checks c;
  const auto& w = cli.work;

  // Round trip: library documents and CLI-exported fixtures.
  std::size_t round_trips = 0;
  auto round_trip = [&](const DigitalMap& f, const std::string& name) {
    ++round_trips;
    const auto j = io::map_to_json(f);
    const auto back = io::map_from_json(j).map;
    c.expect(back == f && io::map_to_json(back) == j, name + ": map round trip");
    const auto ji = io::image_to_json(f.domain());
    c.expect(io::image_to_json(io::image_from_json(ji)) == ji &&
                 io::image_from_json(ji) == f.domain(),
             name + ": image round trip");
  };
  for (const auto& fx : example_fixtures()) round_trip(fx.map, fx.name);
  for (std::uint64_t s = 0; s < 100; ++s) round_trip(random_map(s), "map seed " + std::to_string(s));
  for (std::uint64_t s = 0; s < 50; ++s) round_trip(random_covering(s), "covering seed " + std::to_string(s));
  {
    const auto img = fixture_mod4_ray().map.codomain();
    const auto path = validate_path(img, {{0, 0}, {1, 1}, {1, 1}, {2, 0}});
    c.expect(io::path_from_json(io::path_to_json(path)) == path, "path round trip");
  }
  for (const auto& name : fixture_names()) {
    const auto file = w / (name + ".json");
    c.expect(cli.run("fixtures export " + name + " -o " + q(file)) == 0, name + ": export");
    const auto text = slurp(file);
    const auto j = json::parse(text);
    c.expect(io::map_to_json(io::map_from_json(j).map, j.value("caveats", std::vector<std::string>{}))
                     .dump(2) + "\n" == text,
             name + ": exported document is canonical");
  }

  // Replayable witnesses from CLI reports.
  std::size_t replayed = 0;
  auto replay_all = [&](const fs::path& file, const DigitalMap& p, const std::string& name) {
    std::string out;
    const int code = cli.run("check " + q(file) + " --all --radius 2 --loop-criterion 2 --oracle 4", &out);
    json report;
    try {
      report = json::parse(out);
    } catch (...) {
      c.expect(false, name + ": report is not JSON");
      return;
    }
    bool all_hold = true;
    for (const auto& [k, v] : report["verdicts"].items()) all_hold = all_hold && v.get<bool>();
    c.expect(code == (all_hold ? 0 : 1), name + ": exit code matches verdicts");
    c.expect(report["input_digest"].get<std::string>().starts_with("sha256:"), name + ": digest");
    for (const auto& wit : report["witnesses"]) {
      ++replayed;
      const auto why = oracle::replay_witness(p, wit);
      c.expect(why.empty(), name + " / " + wit["predicate"].get<std::string>() + ": " + why);
    }
  };
  for (const auto& name : fixture_names()) {
    replay_all(w / (name + ".json"), fixture_by_name(name)->map, name);
  }
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto p = random_map(1000 + s);
    const auto file = w / ("random_" + std::to_string(s) + ".json");
    write(file, io::map_to_json(p).dump());
    replay_all(file, p, "random seed " + std::to_string(1000 + s));
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto p = random_function(2000 + s, 8);
    if (!is_surjective(p).holds) continue;
    const auto file = w / ("function_" + std::to_string(s) + ".json");
    write(file, io::map_to_json(p).dump());
    replay_all(file, p, "function seed " + std::to_string(2000 + s));
  }

  // Exit-code matrix.
  const auto mod3 = w / "mod3.json";
  const auto cover = w / "cycle-cover-2-5.json";
  const auto pr1 = w / "pr1.json";
  const auto mod4 = w / "mod4-ray.json";
  const auto han = w / "han.json";
  write(w / "bad_point.json",
        R"({"format":1,"domain":{"dimension":1,"adjacency":{"kind":"lu","u":1},"points":[[0],[1,"x"]]},)"
        R"("codomain":{"dimension":1,"adjacency":{"kind":"lu","u":1},"points":[[0]]},"pairs":[[[0],[0]],[[1],[0]]]})");
  write(w / "not_json.json", "{ this is not json");
  write(w / "bad_version.json",
        R"({"format":7,"domain":{"dimension":1,"adjacency":{"kind":"lu","u":1},"points":[[0]]},)"
        R"("codomain":{"dimension":1,"adjacency":{"kind":"lu","u":1},"points":[[0]]},"pairs":[[[0],[0]]]})");
  write(w / "partial.json",
        R"({"format":1,"domain":{"dimension":1,"adjacency":{"kind":"lu","u":1},"points":[[0],[1]]},)"
        R"("codomain":{"dimension":1,"adjacency":{"kind":"lu","u":1},"points":[[0]]},"pairs":[[[0],[0]]]})");
  write(w / "bad_kind.json",
        R"({"format":1,"domain":{"dimension":1,"adjacency":{"kind":"hex"},"points":[[0]]},)"
        R"("codomain":{"dimension":1,"adjacency":{"kind":"lu","u":1},"points":[[0]]},"pairs":[[[0],[0]]]})");
  write(w / "ragged.json",
        R"({"format":1,"domain":{"dimension":2,"adjacency":{"kind":"lu","u":2},"points":[[0,0],[1]]},)"
        R"("codomain":{"dimension":1,"adjacency":{"kind":"lu","u":1},"points":[[0]]},"pairs":[[[0,0],[0]],[[1],[0]]]})");
  write(w / "gamma.json", R"({"format":1,"steps":[[0,0],[1,-1]]})");
  write(w / "alpha.json", R"({"format":1,"steps":[[0],[1],[2]]})");
  write(w / "c4.json", io::image_to_json(make_cycle_image(4)).dump());
  {
    const auto img = box_image({{0, 2}, {0, 2}}, 1, "box");
    write(w / "identity.json", io::map_to_json(DigitalMap::identity(img)).dump());
    write(w / "box_path.json", R"({"format":1,"steps":[[0,0],[1,0],[1,1],[1,2]]})");
  }
  write(w / "big.json", io::map_to_json(fixture_cycle_cover(13, 5).map).dump());

  struct Case {
    std::string args;
    int expected;
    std::string env;
    std::function<bool(const std::string&)> check;
  };
  auto contains = [](std::string needle) {
    return [needle](const std::string& out) { return out.find(needle) != std::string::npos; };
  };
  const std::vector<Case> cases{
      {"check " + q(mod3) + " --all", 1, "",
       [](const std::string& out) {
         auto r = json::parse(out);
         return r["verdicts"]["upl"] == true && r["verdicts"]["covering"] == false;
       }},
      {"check " + q(cover) + " --covering", 0, "", {}},
      {"check " + q(w / "bad_point.json") + " --all", 2, "", {}},
      {"check " + q(w / "missing.json") + " --all", 2, "", {}},
      {"check " + q(w / "not_json.json") + " --all", 2, "", {}},
      {"check " + q(w / "bad_version.json") + " --all", 2, "", {}},
      {"check " + q(w / "partial.json") + " --all", 2, "", {}},
      {"check " + q(w / "bad_kind.json") + " --all", 2, "", {}},
      {"check " + q(w / "ragged.json") + " --all", 2, "", {}},
      {"check " + q(mod3), 2, "", {}},
      {"check " + q(mod3) + " --bogus", 2, "", {}},
      {"", 2, "", {}},
      {"check " + q(han) + " --all", 1, "", {}},
      {"lift " + q(mod4) + " " + q(w / "gamma.json") + " --start 0", 1, "", contains("no lift")},
      {"lift " + q(pr1) + " " + q(w / "alpha.json") + " --start 0,0 --all", 0, "",
       [](const std::string& out) { return json::parse(out)["lifts"].size() >= 2; }},
      {"lift " + q(pr1) + " " + q(w / "alpha.json") + " --start 0,0", 1, "", contains("ambiguous")},
      {"lift " + q(w / "identity.json") + " " + q(w / "box_path.json") + " --start 0,0", 0, "",
       [](const std::string& out) {
         return json::parse(out)["lifts"] == json::parse(R"([[[0,0],[1,0],[1,1],[1,2]]])");
       }},
      {"lift " + q(pr1) + " " + q(w / "alpha.json") + " --start 1,0", 2, "", {}},
      {"export-dot " + q(w / "c4.json"), 0, "", contains("n0 -- n3;")},
      {"export-dot " + q(w / "not_json.json"), 2, "", {}},
      {"fixtures list", 0, "", contains("cycle-cover-2-5")},
      {"fixtures export no-such-fixture", 2, "", {}},
      {"check " + q(w / "big.json") + " --oracle 3", 2, "", {}},
      {"check " + q(w / "big.json") + " --loop-criterion 1", 2, "", {}},
      {"check " + q(w / "big.json") + " --oracle 3 --force", 0, "", {}},
      {"check " + q(w / "big.json") + " --loop-criterion 1", 0, "DIGICOVER_SIZE_GUARD=100", {}},
      {"check " + q(w / "big.json") + " --radius 0", 2, "", {}},
      {"loops " + q(w / "c4.json"), 0, "", contains("\"count\": 1")},
      {"--help", 0, "", {}},
  };
  std::size_t matrix_ok = 0;
  for (const auto& k : cases) {
    std::string out;
    const int code = cli.run(k.args, &out, k.env);
    bool ok = code == k.expected;
    if (ok && k.check) {
      try {
        ok = k.check(out);
      } catch (...) {
        ok = false;
      }
    }
    matrix_ok += ok;
    c.expect(ok, "digicover " + k.args + " -> exit " + std::to_string(code) + ", expected " +
                     std::to_string(k.expected));
  }
  c.expect(cases.size() >= kExitMatrixMinimum, "exit-code matrix has at least 20 cases");

  // DOT determinism.
  std::string first, second;
  cli.run("export-dot " + q(mod3), &first);
  cli.run("export-dot " + q(mod3), &second);
  c.expect(!first.empty() && first == second, "DOT output is byte-identical across runs");

  report(7, "CLI contract", c,
         std::to_string(round_trips) + " round trips, " + std::to_string(replayed) +
             " witnesses replayed, " + std::to_string(matrix_ok) + "/" +
             std::to_string(cases.size()) + " exit cases");
}

}  // namespace

int main(int argc, char** argv) {
  std::string binary;
  fs::path work = fs::temp_directory_path() / "digicover_acceptance";
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") binary = argv[i + 1];
    if (flag == "--workdir") work = argv[i + 1];
  }
  if (binary.empty()) {
    std::cerr << "usage: acceptance --cli <digicover> [--workdir DIR]\n";
    return 2;
  }
  fs::create_directories(work);

  criterion_1();
  const auto maps = map_population();
  const auto coverings = covering_population();
  criterion_2_3(maps);
  criterion_4(coverings);
  criterion_5(maps);
  criterion_6(maps, coverings);
  criterion_7(Cli{binary, work});

  std::cout << (g_failed == 0 ? "all criteria passed" : std::to_string(g_failed) + " criterion(s) failed")
            << "\n";
  return g_failed == 0 ? 0 : 1;
}
