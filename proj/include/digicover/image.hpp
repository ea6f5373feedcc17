#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "digicover/point.hpp"

namespace digicover {

/// The l_u relation on Z^n: distinct points are adjacent when at most `u`
/// coordinates differ by exactly one and all others agree.
struct LuAdjacency {
  int u = 1;
  int n = 1;
  friend bool operator==(const LuAdjacency&, const LuAdjacency&) = default;
};

/// Unordered point pairs; stored with first < second.
struct ExplicitAdjacency {
  std::set<std::pair<Point, Point>> edges;
  friend bool operator==(const ExplicitAdjacency&, const ExplicitAdjacency&) = default;
};

using Adjacency = std::variant<LuAdjacency, ExplicitAdjacency>;

/// Named relations of Z, Z^2 and Z^3.
inline constexpr LuAdjacency kAdj2{1, 1};
inline constexpr LuAdjacency kAdj4{1, 2};
inline constexpr LuAdjacency kAdj8{2, 2};
inline constexpr LuAdjacency kAdj6{1, 3};
inline constexpr LuAdjacency kAdj18{2, 3};
inline constexpr LuAdjacency kAdj26{3, 3};

/// Validates u and n (1 <= u <= n) and returns the relation.
LuAdjacency lu(int u, int n);

/// Builds an explicit relation, normalizing each pair so that first < second.
/// Throws InvalidImageError on a self-edge.
ExplicitAdjacency explicit_edges(const std::vector<std::pair<Point, Point>>& edges);

/// Pure adjacency test. Throws DimensionError when dimensions disagree.
bool adjacent(const Point& p, const Point& q, const Adjacency& adj);

/// A finite digital image (X, kappa).
///
/// Points are kept sorted lexicographically; the position of a point in that
/// order is its index, and every index-based accessor below refers to it.
/// The image is an immutable value: copies share one neighbor table.
class DigitalImage {
 public:
  DigitalImage();
  /// Throws DimensionError for mixed dimensions or an l_u relation whose n
  /// disagrees with the points, InvalidImageError for explicit edges that
  /// leave the point set. Duplicate points are merged.
  DigitalImage(std::vector<Point> points, Adjacency adjacency, std::string label = {});

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  /// 0 for the empty image.
  std::size_t dimension() const noexcept;
  const std::string& label() const noexcept;
  const Adjacency& adjacency() const noexcept;

  const std::vector<Point>& points() const noexcept;
  const Point& point(std::size_t index) const;
  bool contains(const Point& p) const;
  std::optional<std::size_t> find(const Point& p) const;
  /// Throws MissingPointError.
  std::size_t index_of(const Point& p) const;

  /// Sorted neighbor indices.
  std::span<const std::size_t> neighbors_of(std::size_t index) const;
  bool adjacent_at(std::size_t a, std::size_t b) const;
  std::size_t edge_count() const noexcept;
  /// Every edge once, as (smaller index, larger index), in sorted order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// BFS distances from `source`; unreachable points get nullopt.
  std::vector<std::optional<std::size_t>> distances_from(std::size_t source) const;

  /// The subset with the ambient edges among its points.
  DigitalImage induced(std::span<const std::size_t> indices, std::string label = {}) const;
  DigitalImage induced(const std::vector<Point>& subset, std::string label = {}) const;

  DigitalImage relabeled(std::string label) const;

  /// Same points and same edges. Labels are ignored.
  friend bool operator==(const DigitalImage& a, const DigitalImage& b);

 private:
  struct State;
  std::shared_ptr<const State> state_;
};

/// Points of `img` adjacent to `e`. Throws MissingPointError.
std::set<Point> neighbors(const DigitalImage& img, const Point& e);

/// Breadth-first reachability. The empty image counts as connected.
bool is_connected(const DigitalImage& img);

/// N(e, eps): points at shortest-path distance <= eps from e, plus e.
std::set<Point> neighborhood(const DigitalImage& img, const Point& e, std::size_t eps);
std::vector<std::size_t> neighborhood_indices(const DigitalImage& img, std::size_t e,
                                              std::size_t eps);

/// The abstract m-cycle: points 0..m-1 of Z with edges {i, i+1 mod m}.
/// Throws DegenerateCycleError for m < 3.
DigitalImage make_cycle_image(int m);

/// When `img` is exactly make_cycle_image(m) for some m, returns m.
std::optional<int> as_standard_cycle(const DigitalImage& img);

/// [a, b]_Z with 2-adjacency. Requires a <= b.
DigitalImage interval_image(int a, int b);

/// The box [lo_1, hi_1] x ... x [lo_n, hi_n] under l_u.
DigitalImage box_image(const std::vector<std::pair<int, int>>& ranges, int u,
                       std::string label = {});

/// SC_8^{2,4}: c_0 = (0,0), c_1 = (1,1), c_2 = (2,0), c_3 = (1,-1), in cycle order.
std::vector<Point> sc8_2_4_points();
DigitalImage sc8_2_4();
/// A 5-point simple closed 26-curve in Z^3, in cycle order.
std::vector<Point> sc26_3_5_points();
DigitalImage sc26_3_5();

}  // namespace digicover
