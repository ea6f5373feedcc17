#include "digicover/point.hpp"

#include <charconv>
#include <sstream>

#include "digicover/errors.hpp"

namespace digicover {

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.coords[i]);
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }

Point parse_point(const std::string& text) {
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  if (body.empty()) throw ParseError("empty point '" + text + "'");
  std::vector<int> coords;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    std::string_view field(body.data() + pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ParseError("malformed point '" + text + "'");
    }
    coords.push_back(value);
    pos = comma + 1;
  }
  return Point(std::move(coords));
}

}  // namespace digicover
