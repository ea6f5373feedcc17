#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "digicover/map.hpp"
#include "digicover/path.hpp"
#include "digicover/verdict.hpp"

namespace digicover::io {

inline constexpr int kFormatVersion = 1;

using json = nlohmann::json;

json point_to_json(const Point& p);
/// Throws ParseError naming `where` when the value is not an integer array.
Point point_from_json(const json& j, const std::string& where);

/// Canonical ImageDocument: sorted points, sorted edges, "cycle" form for
/// standard cycle images.
json image_to_json(const DigitalImage& img);
/// `base_dir` resolves file references (a string in place of a document).
DigitalImage image_from_json(const json& j, const std::filesystem::path& base_dir = {});

struct MapDocument {
  DigitalMap map;
  std::vector<std::string> caveats;
};

json map_to_json(const DigitalMap& f, const std::vector<std::string>& caveats = {});
MapDocument map_from_json(const json& j, const std::filesystem::path& base_dir = {});

json path_to_json(const DigitalPath& path);
DigitalPath path_from_json(const json& j, const std::filesystem::path& base_dir = {});

/// Reads and parses a file; throws ParseError with the file name on failure.
json read_json_file(const std::filesystem::path& file);

json witness_to_json(const Witness& w);
json verdict_to_json(const Verdict& v);

}  // namespace digicover::io
