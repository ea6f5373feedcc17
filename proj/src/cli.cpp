#include "digicover/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "digicover/covering.hpp"
#include "digicover/dot.hpp"
#include "digicover/errors.hpp"
#include "digicover/fixtures.hpp"
#include "digicover/io.hpp"
#include "digicover/lifting.hpp"

namespace digicover::cli {

namespace fs = std::filesystem;
using io::json;

std::size_t size_guard_from_env() {
  const char* raw = std::getenv("DIGICOVER_SIZE_GUARD");
  if (raw == nullptr) return kDefaultSizeGuard;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return kDefaultSizeGuard;
  return static_cast<std::size_t>(v);
}

namespace {

// Usage errors that should exit with kExitInputError.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string sha256_of_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError(file.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::ostringstream hex;
  hex << "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return hex.str();
}

fs::path dir_of(const fs::path& file) {
  auto dir = file.parent_path();
  return dir.empty() ? fs::path(".") : dir;
}

void emit(const json& report, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << report.dump(2) << "\n";
    return;
  }
  std::ofstream file(output);
  if (!file) throw UsageError(output + ": cannot write file");
  file << report.dump(2) << "\n";
}

struct CheckOptions {
  std::string map_file;
  std::string output;
  bool continuity = false;
  bool surjective = false;
  bool plp = false;
  bool unique_lifts = false;
  bool upl = false;
  bool conciliator = false;
  bool local_iso = false;
  bool covering = false;
  bool all = false;
  bool force = false;
  std::vector<std::size_t> radius;
  std::vector<std::size_t> loop_criterion;
  std::vector<std::size_t> oracle;
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  const auto digest = sha256_of_file(o.map_file);
  auto doc = io::map_from_json(io::read_json_file(o.map_file), dir_of(o.map_file));
  const auto& p = doc.map;

  const bool all = o.all;
  const bool any = all || o.continuity || o.surjective || o.plp || o.unique_lifts || o.upl ||
                   o.conciliator || o.local_iso || o.covering || !o.radius.empty() ||
                   !o.loop_criterion.empty() || !o.oracle.empty();
  if (!any) throw UsageError("check: no predicate requested (try --all)");

  const std::size_t points = p.domain().size() + p.codomain().size();
  const std::size_t guard = size_guard_from_env();
  const bool exhaustive = !o.loop_criterion.empty() || !o.oracle.empty();
  if (exhaustive && points > guard && !o.force) {
    throw UsageError("document has " + std::to_string(points) + " points, above the size guard of " +
                     std::to_string(guard) + "; pass --force to run exhaustive checks");
  }
  const std::size_t oracle_guard = o.force ? std::numeric_limits<std::size_t>::max() : guard;

  json verdicts = json::object();
  json witnesses = json::array();
  json caveats = json::array();
  for (const auto& c : doc.caveats) caveats.push_back(c);
  bool ok = true;

  auto record = [&](const std::string& name, const auto& compute) {
    Verdict v;
    try {
      v = compute();
    } catch (const NotContinuousError& e) {
      v = Verdict::fail(std::string("precondition"), e.what());
    } catch (const NotSurjectiveError& e) {
      v = Verdict::fail(std::string("precondition"), e.what());
    } catch (const NotACoveringError& e) {
      v = Verdict::fail(std::string("precondition"), e.what());
    }
    verdicts[name] = v.holds;
    ok = ok && v.holds;
    if (!v.holds) {
      json w = io::verdict_to_json(v);
      w["predicate"] = name;
      witnesses.push_back(std::move(w));
    }
  };

  if (all || o.continuity) record("continuity", [&] { return is_continuous(p); });
  if (all || o.surjective) record("surjective", [&] { return is_surjective(p); });
  if (all || o.plp) record("plp", [&] { return has_plp(p); });
  if (all || o.unique_lifts) record("unique_lifts", [&] { return has_unique_lifts(p); });
  if (all || o.upl) record("upl", [&] { return has_upl(p); });
  if (all || o.conciliator) record("conciliator_free", [&] { return is_conciliator_free(p); });
  if (all || o.local_iso) record("local_iso", [&] { return is_local_isomorphism(p); });
  if (all || o.covering) record("covering", [&] { return is_covering(p).verdict; });
  for (std::size_t n : o.radius) {
    if (n == 0) throw UsageError("--radius needs a positive integer");
    record("radius_" + std::to_string(n) + "_covering", [&] { return is_radius_n_covering(p, n).verdict; });
  }
  for (std::size_t n : o.loop_criterion) {
    if (n == 0) throw UsageError("--loop-criterion needs a positive integer");
    record("loop_criterion_" + std::to_string(n), [&] { return loop_criterion(p, n); });
  }
  for (std::size_t len : o.oracle) {
    record("plp_oracle_" + std::to_string(len), [&] {
      if (!is_continuous(p).holds) return Verdict::fail(std::string("precondition"), "map is not continuous");
      return plp_oracle(p, len, oracle_guard);
    });
    record("uniqueness_oracle_" + std::to_string(len), [&] {
      if (!is_continuous(p).holds) return Verdict::fail(std::string("precondition"), "map is not continuous");
      return uniqueness_oracle(p, len, oracle_guard);
    });
  }

  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  json report{{"format", io::kFormatVersion},
              {"command", "check"},
              {"input", o.map_file},
              {"input_digest", digest},
              {"verdicts", std::move(verdicts)},
              {"witnesses", std::move(witnesses)},
              {"caveats", std::move(caveats)},
              {"runtime_ms", elapsed.count()}};
  emit(report, o.output, out);
  return ok ? kExitOk : kExitPredicateFailed;
}

struct LiftOptions {
  std::string map_file;
  std::string path_file;
  std::string start;
  std::string output;
  bool all = false;
};

int cmd_lift(const LiftOptions& o, std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  const auto digest = sha256_of_file(o.map_file);
  auto doc = io::map_from_json(io::read_json_file(o.map_file), dir_of(o.map_file));
  auto path_json = io::read_json_file(o.path_file);
  // A path document without an image lives in the map's codomain.
  if (path_json.is_object() && !path_json.contains("image")) {
    path_json["image"] = io::image_to_json(doc.map.codomain());
  }
  auto path = io::path_from_json(path_json, dir_of(o.path_file));
  const Point start = parse_point(o.start);
  LiftQuery q{doc.map, path, start};

  json lifts = json::array();
  std::string result;
  int code = kExitOk;
  if (o.all) {
    for (const auto& l : all_lifts(q)) lifts.push_back(io::path_to_json(l)["steps"]);
    result = lifts.empty() ? "no lift" : std::to_string(lifts.size()) + " lift(s)";
    if (lifts.empty()) code = kExitPredicateFailed;
  } else {
    try {
      if (auto l = lift_path(q)) {
        lifts.push_back(io::path_to_json(*l)["steps"]);
        result = "unique lift";
      } else {
        result = "no lift";
        code = kExitPredicateFailed;
      }
    } catch (const AmbiguousLiftError& e) {
      lifts.push_back(io::path_to_json(e.first())["steps"]);
      lifts.push_back(io::path_to_json(e.second())["steps"]);
      result = "ambiguous";
      code = kExitPredicateFailed;
    }
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  json report{{"format", io::kFormatVersion},
              {"command", "lift"},
              {"input", o.map_file},
              {"input_digest", digest},
              {"path", io::path_to_json(path)["steps"]},
              {"start", io::point_to_json(start)},
              {"result", result},
              {"lifts", std::move(lifts)},
              {"caveats", doc.caveats},
              {"runtime_ms", elapsed.count()}};
  emit(report, o.output, out);
  return code;
}

bool is_map_document(const json& j) { return j.is_object() && j.contains("pairs"); }

int cmd_loops(const std::string& file, std::size_t max_len, bool force, std::ostream& out) {
  const auto digest = sha256_of_file(file);
  auto j = io::read_json_file(file);
  const DigitalImage img = is_map_document(j) ? io::map_from_json(j, dir_of(file)).map.codomain()
                                              : io::image_from_json(j, dir_of(file));
  const std::size_t guard = size_guard_from_env();
  if (img.size() > guard && !force) {
    throw UsageError("image has " + std::to_string(img.size()) + " points, above the size guard of " +
                     std::to_string(guard) + "; pass --force");
  }
  json loops = json::array();
  for (const auto& loop : enumerate_simple_loops(img, max_len)) {
    loops.push_back(io::path_to_json(loop)["steps"]);
  }
  json report{{"format", io::kFormatVersion},
              {"command", "loops"},
              {"input", file},
              {"input_digest", digest},
              {"max_len", max_len},
              {"count", loops.size()},
              {"loops", std::move(loops)}};
  out << report.dump(2) << "\n";
  return kExitOk;
}

int cmd_export_dot(const std::string& file, std::ostream& out) {
  auto j = io::read_json_file(file);
  if (is_map_document(j)) {
    out << map_to_dot(io::map_from_json(j, dir_of(file)).map);
  } else {
    out << image_to_dot(io::image_from_json(j, dir_of(file)));
  }
  return kExitOk;
}

int cmd_fixtures_export(const std::string& name, const std::string& output, std::ostream& out) {
  auto f = fixture_by_name(name);
  if (!f) throw UsageError("unknown fixture \"" + name + "\"");
  const auto doc = io::map_to_json(f->map, {f->boundary_caveats}).dump(2) + "\n";
  if (output.empty()) {
    out << doc;
  } else {
    std::ofstream file(output);
    if (!file) throw UsageError(output + ": cannot write file");
    file << doc;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide covering-map properties of maps between digital images.", "digicover"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Run predicates on a map document");
  check_cmd->add_option("map", check.map_file, "Map document (JSON)")->required();
  check_cmd->add_flag("--continuity", check.continuity, "Edge-criterion continuity");
  check_cmd->add_flag("--surjective", check.surjective, "Surjectivity");
  check_cmd->add_flag("--plp", check.plp, "Path lifting property");
  check_cmd->add_flag("--unique-lifts", check.unique_lifts, "Uniqueness of path lifts");
  check_cmd->add_flag("--upl", check.upl, "Unique path lifting");
  check_cmd->add_flag("--conciliator", check.conciliator, "No conciliator points");
  check_cmd->add_flag("--local-iso", check.local_iso, "Local isomorphism");
  check_cmd->add_flag("--covering", check.covering, "Covering map");
  check_cmd->add_option("--radius", check.radius, "Radius-N covering (repeatable)");
  check_cmd->add_option("--loop-criterion", check.loop_criterion,
                        "Lifts of simple loops of length <= 2N+1 are simple (repeatable)");
  check_cmd->add_option("--oracle", check.oracle, "Path-quantified oracles up to length N");
  check_cmd->add_flag("--all", check.all, "Every radius-1 predicate");
  check_cmd->add_flag("--force", check.force, "Ignore the size guard");
  check_cmd->add_option("-o,--output", check.output, "Write the report here instead of stdout");

  LiftOptions lift;
  auto* lift_cmd = app.add_subcommand("lift", "Lift a codomain path");
  lift_cmd->add_option("map", lift.map_file, "Map document (JSON)")->required();
  lift_cmd->add_option("path", lift.path_file, "Path document (JSON)")->required();
  lift_cmd->add_option("--start", lift.start, "Start point, e.g. 0,0")->required();
  lift_cmd->add_flag("--all", lift.all, "List every lift");
  lift_cmd->add_option("-o,--output", lift.output, "Write the report here instead of stdout");

  std::string loops_file;
  std::size_t loops_max = 8;
  bool loops_force = false;
  auto* loops_cmd = app.add_subcommand("loops", "Enumerate simple loops of an image (or a map's codomain)");
  loops_cmd->add_option("file", loops_file, "Image or map document")->required();
  loops_cmd->add_option("--max-len", loops_max, "Longest loop to list")->capture_default_str();
  loops_cmd->add_flag("--force", loops_force, "Ignore the size guard");

  std::string dot_file;
  auto* dot_cmd = app.add_subcommand("export-dot", "Write an image or map as Graphviz DOT");
  dot_cmd->add_option("file", dot_file, "Image or map document")->required();

  auto* fixtures_cmd = app.add_subcommand("fixtures", "List or export the built-in examples");
  fixtures_cmd->require_subcommand(1);
  auto* fixtures_list = fixtures_cmd->add_subcommand("list", "Print fixture names");
  std::string fixture_name;
  std::string fixture_output;
  auto* fixtures_export = fixtures_cmd->add_subcommand("export", "Print a fixture as a map document");
  fixtures_export->add_option("name", fixture_name, "Fixture name")->required();
  fixtures_export->add_option("-o,--output", fixture_output, "Write here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(check, out);
    if (lift_cmd->parsed()) return cmd_lift(lift, out);
    if (loops_cmd->parsed()) return cmd_loops(loops_file, loops_max, loops_force, out);
    if (dot_cmd->parsed()) return cmd_export_dot(dot_file, out);
    if (fixtures_list->parsed()) {
      for (const auto& name : fixture_names()) out << name << "\n";
      return kExitOk;
    }
    if (fixtures_export->parsed()) return cmd_fixtures_export(fixture_name, fixture_output, out);
  } catch (const std::exception& e) {
    err << "digicover: " << e.what() << "\n";
    return kExitInputError;
  } catch (...) {
    err << "digicover: unknown error\n";
    return kExitInputError;
  }
  err << "digicover: no command\n";
  return kExitInputError;
}

}  // namespace digicover::cli
