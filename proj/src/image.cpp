#include "digicover/image.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "digicover/errors.hpp"

namespace digicover {

LuAdjacency lu(int u, int n) {
  if (n < 1 || u < 1 || u > n) {
    throw std::invalid_argument("l_u adjacency needs 1 <= u <= n, got u=" + std::to_string(u) +
                                ", n=" + std::to_string(n));
  }
  return LuAdjacency{u, n};
}

ExplicitAdjacency explicit_edges(const std::vector<std::pair<Point, Point>>& edges) {
  ExplicitAdjacency adj;
  for (const auto& [a, b] : edges) {
    if (a == b) throw InvalidImageError("self-edge at " + to_string(a));
    if (a.dimension() != b.dimension()) {
      throw DimensionError("edge " + to_string(a) + " -- " + to_string(b) + " mixes dimensions");
    }
    adj.edges.insert(a < b ? std::pair{a, b} : std::pair{b, a});
  }
  return adj;
}

namespace {

bool lu_adjacent(const Point& p, const Point& q, const LuAdjacency& adj) {
  int differing = 0;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    const int d = std::abs(p.coords[i] - q.coords[i]);
    if (d > 1) return false;
    differing += d;
  }
  return differing >= 1 && differing <= adj.u;
}

}  // namespace

bool adjacent(const Point& p, const Point& q, const Adjacency& adj) {
  if (p.dimension() != q.dimension()) {
    throw DimensionError("cannot compare " + to_string(p) + " and " + to_string(q));
  }
  if (const auto* l = std::get_if<LuAdjacency>(&adj)) {
    if (static_cast<int>(p.dimension()) != l->n) {
      throw DimensionError("l_u relation on Z^" + std::to_string(l->n) + " applied to " +
                           to_string(p));
    }
    return lu_adjacent(p, q, *l);
  }
  const auto& edges = std::get<ExplicitAdjacency>(adj).edges;
  if (p == q) return false;
  return edges.contains(p < q ? std::pair{p, q} : std::pair{q, p});
}

struct DigitalImage::State {
  std::vector<Point> points;
  Adjacency adjacency;
  std::string label;
  std::vector<std::vector<std::size_t>> neighbors;
  std::size_t edge_count = 0;
};

DigitalImage::DigitalImage() : DigitalImage({}, ExplicitAdjacency{}, {}) {}

DigitalImage::DigitalImage(std::vector<Point> points, Adjacency adjacency, std::string label) {
  auto state = std::make_shared<State>();
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& p : points) {
    if (p.dimension() == 0) throw DimensionError("points need at least one coordinate");
    if (p.dimension() != points.front().dimension()) {
      throw DimensionError("mixed dimensions: " + to_string(points.front()) + " and " +
                           to_string(p));
    }
  }
  state->points = std::move(points);
  state->neighbors.resize(state->points.size());
  const auto& pts = state->points;
  auto locate = [&](const Point& p) -> std::optional<std::size_t> {
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    if (it == pts.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - pts.begin());
  };

  if (const auto* l = std::get_if<LuAdjacency>(&adjacency)) {
    if (l->u < 1 || l->u > l->n) throw std::invalid_argument("l_u adjacency needs 1 <= u <= n");
    if (!pts.empty() && static_cast<int>(pts.front().dimension()) != l->n) {
      throw DimensionError("l_u relation on Z^" + std::to_string(l->n) + " but points are in Z^" +
                           std::to_string(pts.front().dimension()));
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      // Sorted order means candidates with first coordinate > p_0 + 1 can stop the scan.
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (pts[j].coords[0] > pts[i].coords[0] + 1) break;
        if (lu_adjacent(pts[i], pts[j], *l)) {
          state->neighbors[i].push_back(j);
          state->neighbors[j].push_back(i);
          ++state->edge_count;
        }
      }
    }
  } else {
    for (const auto& [a, b] : std::get<ExplicitAdjacency>(adjacency).edges) {
      if (a == b) throw InvalidImageError("self-edge at " + to_string(a));
      auto ia = locate(a);
      auto ib = locate(b);
      if (!ia || !ib) {
        throw InvalidImageError("edge " + to_string(a) + " -- " + to_string(b) +
                                " has an endpoint outside the image");
      }
      state->neighbors[*ia].push_back(*ib);
      state->neighbors[*ib].push_back(*ia);
      ++state->edge_count;
    }
  }
  for (auto& list : state->neighbors) std::sort(list.begin(), list.end());
  state->adjacency = std::move(adjacency);
  state->label = std::move(label);
  state_ = std::move(state);
}

std::size_t DigitalImage::size() const noexcept { return state_->points.size(); }

std::size_t DigitalImage::dimension() const noexcept {
  return state_->points.empty() ? 0 : state_->points.front().dimension();
}

const std::string& DigitalImage::label() const noexcept { return state_->label; }
const Adjacency& DigitalImage::adjacency() const noexcept { return state_->adjacency; }
const std::vector<Point>& DigitalImage::points() const noexcept { return state_->points; }
const Point& DigitalImage::point(std::size_t index) const { return state_->points.at(index); }

std::optional<std::size_t> DigitalImage::find(const Point& p) const {
  const auto& pts = state_->points;
  auto it = std::lower_bound(pts.begin(), pts.end(), p);
  if (it == pts.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - pts.begin());
}

bool DigitalImage::contains(const Point& p) const { return find(p).has_value(); }

std::size_t DigitalImage::index_of(const Point& p) const {
  if (auto i = find(p)) return *i;
  throw MissingPointError(to_string(p) + " is not a point of " +
                          (label().empty() ? std::string("the image") : label()));
}

std::span<const std::size_t> DigitalImage::neighbors_of(std::size_t index) const {
  return state_->neighbors.at(index);
}

bool DigitalImage::adjacent_at(std::size_t a, std::size_t b) const {
  const auto& list = state_->neighbors.at(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::size_t DigitalImage::edge_count() const noexcept { return state_->edge_count; }

std::vector<std::pair<std::size_t, std::size_t>> DigitalImage::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : state_->neighbors[i]) {
      if (j > i) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::optional<std::size_t>> DigitalImage::distances_from(std::size_t source) const {
  std::vector<std::optional<std::size_t>> dist(size());
  std::deque<std::size_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : state_->neighbors[v]) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DigitalImage DigitalImage::induced(std::span<const std::size_t> indices, std::string label) const {
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Point> pts;
  pts.reserve(sorted.size());
  for (std::size_t i : sorted) pts.push_back(point(i));
  if (std::holds_alternative<LuAdjacency>(adjacency())) {
    return DigitalImage(std::move(pts), adjacency(), std::move(label));
  }
  ExplicitAdjacency sub;
  for (std::size_t a : sorted) {
    for (std::size_t b : state_->neighbors[a]) {
      if (b > a && std::binary_search(sorted.begin(), sorted.end(), b)) {
        sub.edges.emplace(point(a), point(b));
      }
    }
  }
  return DigitalImage(std::move(pts), std::move(sub), std::move(label));
}

DigitalImage DigitalImage::induced(const std::vector<Point>& subset, std::string label) const {
  std::vector<std::size_t> idx;
  idx.reserve(subset.size());
  for (const auto& p : subset) idx.push_back(index_of(p));
  return induced(idx, std::move(label));
}

DigitalImage DigitalImage::relabeled(std::string label) const {
  DigitalImage copy = *this;
  auto state = std::make_shared<State>(*state_);
  state->label = std::move(label);
  copy.state_ = std::move(state);
  return copy;
}

bool operator==(const DigitalImage& a, const DigitalImage& b) {
  if (a.state_ == b.state_) return true;
  return a.points() == b.points() && a.state_->neighbors == b.state_->neighbors;
}

std::set<Point> neighbors(const DigitalImage& img, const Point& e) {
  std::set<Point> out;
  for (std::size_t j : img.neighbors_of(img.index_of(e))) out.insert(img.point(j));
  return out;
}

bool is_connected(const DigitalImage& img) {
  if (img.empty()) return true;
  const auto dist = img.distances_from(0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

std::vector<std::size_t> neighborhood_indices(const DigitalImage& img, std::size_t e,
                                              std::size_t eps) {
  std::vector<std::size_t> out;
  const auto dist = img.distances_from(e);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] && *dist[i] <= eps) out.push_back(i);
  }
  return out;
}

std::set<Point> neighborhood(const DigitalImage& img, const Point& e, std::size_t eps) {
  std::set<Point> out;
  for (std::size_t i : neighborhood_indices(img, img.index_of(e), eps)) out.insert(img.point(i));
  return out;
}

DigitalImage make_cycle_image(int m) {
  if (m < 3) throw DegenerateCycleError("a cycle image needs m >= 3, got " + std::to_string(m));
  std::vector<Point> pts;
  ExplicitAdjacency adj;
  for (int i = 0; i < m; ++i) {
    pts.push_back(Point{i});
    const int j = (i + 1) % m;
    adj.edges.emplace(Point{std::min(i, j)}, Point{std::max(i, j)});
  }
  return DigitalImage(std::move(pts), std::move(adj), "C_" + std::to_string(m));
}

std::optional<int> as_standard_cycle(const DigitalImage& img) {
  const auto m = img.size();
  if (m < 3 || img.dimension() != 1 || img.edge_count() != m) return std::nullopt;
  if (!std::holds_alternative<ExplicitAdjacency>(img.adjacency())) return std::nullopt;
  for (std::size_t i = 0; i < m; ++i) {
    if (img.point(i).coords[0] != static_cast<int>(i)) return std::nullopt;
    if (!img.adjacent_at(i, (i + 1) % m)) return std::nullopt;
  }
  return static_cast<int>(m);
}

DigitalImage interval_image(int a, int b) {
  if (a > b) throw std::invalid_argument("interval needs a <= b");
  std::vector<Point> pts;
  for (int i = a; i <= b; ++i) pts.push_back(Point{i});
  return DigitalImage(std::move(pts), kAdj2,
                      "[" + std::to_string(a) + "," + std::to_string(b) + "]_Z");
}

DigitalImage box_image(const std::vector<std::pair<int, int>>& ranges, int u, std::string label) {
  std::vector<Point> pts{Point{}};
  for (const auto& [lo, hi] : ranges) {
    std::vector<Point> next;
    for (const auto& p : pts) {
      for (int v = lo; v <= hi; ++v) {
        Point q = p;
        q.coords.push_back(v);
        next.push_back(std::move(q));
      }
    }
    pts = std::move(next);
  }
  return DigitalImage(std::move(pts), lu(u, static_cast<int>(ranges.size())), std::move(label));
}

std::vector<Point> sc8_2_4_points() { return {{0, 0}, {1, 1}, {2, 0}, {1, -1}}; }

DigitalImage sc8_2_4() { return DigitalImage(sc8_2_4_points(), kAdj8, "SC_8^{2,4}"); }

std::vector<Point> sc26_3_5_points() {
  return {{0, 0, 1}, {0, 1, 0}, {1, 2, 0}, {2, 1, 1}, {1, 0, 2}};
}

DigitalImage sc26_3_5() { return DigitalImage(sc26_3_5_points(), kAdj26, "SC_26^{3,5}"); }

}  // namespace digicover
