#include "digicover/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "digicover/errors.hpp"

namespace digicover::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    fail(where, "integer out of range");
  }
  return static_cast<int>(v);
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

void check_format(const json& j, const std::string& where) {
  if (auto it = j.find("format"); it != j.end()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() != kFormatVersion) {
      fail(where + ".format", "unsupported format version (expected " +
                                  std::to_string(kFormatVersion) + ")");
    }
  }
}

json points_to_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(point_to_json(p));
  return out;
}

// A nested document or a string naming a file relative to base_dir.
std::pair<json, fs::path> resolve(const json& j, const fs::path& base_dir) {
  if (!j.is_string()) return {j, base_dir};
  const fs::path file = base_dir / j.get<std::string>();
  return {read_json_file(file), file.parent_path()};
}

DigitalImage parse_image(const json& input, const fs::path& base_dir, const std::string& where);

// A nested image, or a file reference whose errors are located in that file.
DigitalImage image_at(const json& j, const fs::path& base_dir, const std::string& where) {
  if (j.is_string()) return parse_image(j, base_dir, j.get<std::string>() + ":$");
  return parse_image(j, base_dir, where);
}

}  // namespace

json point_to_json(const Point& p) { return json(p.coords); }

Point point_from_json(const json& j, const std::string& where) {
  as_array(j, where);
  if (j.empty()) fail(where, "a point needs at least one coordinate");
  std::vector<int> coords;
  for (std::size_t i = 0; i < j.size(); ++i) {
    coords.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return Point(std::move(coords));
}

json image_to_json(const DigitalImage& img) {
  json out;
  out["format"] = kFormatVersion;
  out["label"] = img.label();
  out["dimension"] = img.dimension();
  if (auto m = as_standard_cycle(img)) {
    out["adjacency"] = {{"kind", "cycle"}, {"m", *m}};
    return out;
  }
  if (const auto* l = std::get_if<LuAdjacency>(&img.adjacency())) {
    out["adjacency"] = {{"kind", "lu"}, {"u", l->u}};
  } else {
    json edges = json::array();
    for (const auto& [a, b] : img.edges()) {
      edges.push_back(json::array({point_to_json(img.point(a)), point_to_json(img.point(b))}));
    }
    out["adjacency"] = {{"kind", "explicit"}, {"edges", std::move(edges)}};
  }
  out["points"] = points_to_json(img.points());
  return out;
}

DigitalImage image_from_json(const json& input, const fs::path& base_dir) {
  return parse_image(input, base_dir, "$");
}

namespace {

DigitalImage parse_image(const json& input, const fs::path& base_dir, const std::string& where) {
  auto [j, dir] = resolve(input, base_dir);
  if (!j.is_object()) fail(where, "an image document must be an object");
  check_format(j, where);
  std::string label;
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) fail(where + ".label", "expected a string");
    label = it->get<std::string>();
  }
  const auto& adj = field(j, "adjacency", where);
  if (!adj.is_object()) fail(where + ".adjacency", "expected an object");
  const auto& kind_j = field(adj, "kind", where + ".adjacency");
  if (!kind_j.is_string()) fail(where + ".adjacency.kind", "expected a string");
  const auto kind = kind_j.get<std::string>();

  if (kind == "cycle") {
    const int m = as_int(field(adj, "m", where + ".adjacency"), where + ".adjacency.m");
    if (m < 3) fail(where + ".adjacency.m", "a cycle needs m >= 3");
    if (auto it = j.find("dimension"); it != j.end() && as_int(*it, where + ".dimension") != 1) {
      fail(where + ".dimension", "a cycle image is 1-dimensional");
    }
    auto img = make_cycle_image(m);
    if (auto it = j.find("points"); it != j.end()) {
      as_array(*it, where + ".points");
      std::vector<Point> pts;
      for (std::size_t i = 0; i < it->size(); ++i) {
        pts.push_back(point_from_json((*it)[i], where + ".points[" + std::to_string(i) + "]"));
      }
      std::sort(pts.begin(), pts.end());
      if (pts != img.points()) fail(where + ".points", "cycle points must be 0..m-1");
    }
    return j.contains("label") ? img.relabeled(label) : img;
  }

  const int dim = as_int(field(j, "dimension", where), where + ".dimension");
  if (dim < 1) fail(where + ".dimension", "dimension must be positive");
  const auto& pts_j = as_array(field(j, "points", where), where + ".points");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < pts_j.size(); ++i) {
    const std::string at = where + ".points[" + std::to_string(i) + "]";
    auto p = point_from_json(pts_j[i], at);
    if (static_cast<int>(p.dimension()) != dim) {
      fail(at, "expected " + std::to_string(dim) + " coordinates, got " +
                   std::to_string(p.dimension()));
    }
    pts.push_back(std::move(p));
  }

  if (kind == "lu") {
    const int u = as_int(field(adj, "u", where + ".adjacency"), where + ".adjacency.u");
    if (u < 1 || u > dim) fail(where + ".adjacency.u", "u must lie in [1, dimension]");
    return DigitalImage(std::move(pts), lu(u, dim), std::move(label));
  }
  if (kind == "explicit") {
    const auto& edges_j = as_array(field(adj, "edges", where + ".adjacency"), where + ".adjacency.edges");
    std::vector<std::pair<Point, Point>> edges;
    for (std::size_t i = 0; i < edges_j.size(); ++i) {
      const std::string at = where + ".adjacency.edges[" + std::to_string(i) + "]";
      const auto& e = as_array(edges_j[i], at);
      if (e.size() != 2) fail(at, "an edge needs exactly two points");
      edges.emplace_back(point_from_json(e[0], at + "[0]"), point_from_json(e[1], at + "[1]"));
    }
    try {
      return DigitalImage(std::move(pts), explicit_edges(edges), std::move(label));
    } catch (const InvalidImageError& e) {
      fail(where + ".adjacency.edges", e.what());
    } catch (const std::invalid_argument& e) {
      fail(where + ".adjacency.edges", e.what());
    }
  }
  fail(where + ".adjacency.kind", "unknown kind \"" + kind + "\"");
}

}  // namespace

json map_to_json(const DigitalMap& f, const std::vector<std::string>& caveats) {
  json out;
  out["format"] = kFormatVersion;
  out["domain"] = image_to_json(f.domain());
  out["codomain"] = image_to_json(f.codomain());
  json pairs = json::array();
  for (const auto& [x, y] : f.pairs()) pairs.push_back(json::array({point_to_json(x), point_to_json(y)}));
  out["pairs"] = std::move(pairs);
  if (!caveats.empty()) out["caveats"] = caveats;
  return out;
}

MapDocument map_from_json(const json& input, const fs::path& base_dir) {
  auto [j, dir] = resolve(input, base_dir);
  const std::string where = "$";
  if (!j.is_object()) fail(where, "a map document must be an object");
  check_format(j, where);
  auto dom = image_at(field(j, "domain", where), dir, where + ".domain");
  auto cod = image_at(field(j, "codomain", where), dir, where + ".codomain");
  const auto& pairs_j = as_array(field(j, "pairs", where), where + ".pairs");
  std::vector<std::pair<Point, Point>> pairs;
  for (std::size_t i = 0; i < pairs_j.size(); ++i) {
    const std::string at = where + ".pairs[" + std::to_string(i) + "]";
    const auto& e = as_array(pairs_j[i], at);
    if (e.size() != 2) fail(at, "a pair needs exactly two points");
    pairs.emplace_back(point_from_json(e[0], at + "[0]"), point_from_json(e[1], at + "[1]"));
  }
  std::vector<std::string> caveats;
  if (auto it = j.find("caveats"); it != j.end()) {
    as_array(*it, where + ".caveats");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) fail(where + ".caveats[" + std::to_string(i) + "]", "expected a string");
      caveats.push_back((*it)[i].get<std::string>());
    }
  }
  try {
    return {DigitalMap::from_pairs(std::move(dom), std::move(cod), pairs), std::move(caveats)};
  } catch (const InvalidMapError& e) {
    fail(where + ".pairs", e.what());
  }
}

json path_to_json(const DigitalPath& path) {
  json out;
  out["format"] = kFormatVersion;
  out["image"] = image_to_json(path.image());
  out["steps"] = points_to_json(path.steps());
  return out;
}

DigitalPath path_from_json(const json& input, const fs::path& base_dir) {
  auto [j, dir] = resolve(input, base_dir);
  const std::string where = "$";
  if (!j.is_object()) fail(where, "a path document must be an object");
  check_format(j, where);
  auto img = image_at(field(j, "image", where), dir, where + ".image");
  const auto& steps_j = as_array(field(j, "steps", where), where + ".steps");
  std::vector<Point> steps;
  for (std::size_t i = 0; i < steps_j.size(); ++i) {
    steps.push_back(point_from_json(steps_j[i], where + ".steps[" + std::to_string(i) + "]"));
  }
  return validate_path(img, std::move(steps));
}

json read_json_file(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(file.string() + ": " + e.what());
  }
}

namespace {

json map_failure_json(const MapFailure& f) {
  return {{"leg", to_string(f.leg)}, {"points", points_to_json(f.points)}};
}

}  // namespace

json witness_to_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, PointWitness>) {
          return {{"kind", "points"}, {"points", points_to_json(v.points)}};
        } else if constexpr (std::is_same_v<T, MapFailure>) {
          json out = map_failure_json(v);
          out["kind"] = "map_failure";
          return out;
        } else if constexpr (std::is_same_v<T, LocalFailure>) {
          json out = map_failure_json(v.failure);
          out["kind"] = "local_failure";
          out["center"] = point_to_json(v.center);
          return out;
        } else if constexpr (std::is_same_v<T, ConditionFailure>) {
          json out{{"kind", "condition"},
                   {"condition", v.condition},
                   {"base", point_to_json(v.base)},
                   {"points", points_to_json(v.points)}};
          if (v.restriction) out["restriction"] = map_failure_json(*v.restriction);
          return out;
        } else if constexpr (std::is_same_v<T, SheetCertificate>) {
          json sheets = json::array();
          for (const auto& s : v.sheets) {
            sheets.push_back({{"center", point_to_json(s.center)}, {"points", points_to_json(s.points)}});
          }
          return {{"kind", "sheets"},
                  {"base", point_to_json(v.base)},
                  {"radius", v.radius},
                  {"elementary_neighborhood", points_to_json(v.elementary_neighborhood)},
                  {"sheets", std::move(sheets)}};
        } else if constexpr (std::is_same_v<T, PathPair>) {
          return {{"kind", "path_pair"},
                  {"first", points_to_json(v.first)},
                  {"second", points_to_json(v.second)}};
        } else if constexpr (std::is_same_v<T, LoopWitness>) {
          return {{"kind", "loop"},
                  {"loop", points_to_json(v.loop)},
                  {"start", point_to_json(v.start)},
                  {"lift", points_to_json(v.lift)}};
        } else {
          return {{"kind", "text"}, {"text", v}};
        }
      },
      w);
}

json verdict_to_json(const Verdict& v) {
  json out{{"holds", v.holds}, {"witness", witness_to_json(v.witness)}};
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

}  // namespace digicover::io
