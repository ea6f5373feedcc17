#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace digicover {

/// A lattice point of Z^n. Ordering is lexicographic on coordinates, which
/// is the deterministic order used for every enumeration in the library.
struct Point {
  std::vector<int> coords;

  Point() = default;
  Point(std::initializer_list<int> c) : coords(c) {}
  explicit Point(std::vector<int> c) : coords(std::move(c)) {}

  std::size_t dimension() const noexcept { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;
};

/// "(x,y,...)" with no spaces.
std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

/// Parses "x,y,..." or "(x,y,...)"; throws ParseError.
Point parse_point(const std::string& text);

}  // namespace digicover
