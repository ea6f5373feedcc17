#include "digicover/path.hpp"

#include <algorithm>

#include "digicover/errors.hpp"

namespace digicover {

DigitalPath::DigitalPath(DigitalImage image, std::vector<Point> steps)
    : image_(std::move(image)), steps_(std::move(steps)) {
  if (steps_.empty()) throw NotAPathError(0, "a path needs at least one point");
  indices_.reserve(steps_.size());
  for (const auto& p : steps_) indices_.push_back(image_.index_of(p));
  for (std::size_t i = 0; i + 1 < indices_.size(); ++i) {
    const auto a = indices_[i];
    const auto b = indices_[i + 1];
    if (a != b && !image_.adjacent_at(a, b)) {
      throw NotAPathError(i, "steps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                 " (" + to_string(steps_[i]) + ", " + to_string(steps_[i + 1]) +
                                 ") are neither equal nor adjacent");
    }
  }
}

bool DigitalPath::is_trivial() const {
  return std::all_of(indices_.begin(), indices_.end(),
                     [&](std::size_t i) { return i == indices_.front(); });
}

DigitalPath validate_path(const DigitalImage& img, std::vector<Point> steps) {
  return DigitalPath(img, std::move(steps));
}

DigitalPath path_from_indices(const DigitalImage& img, const std::vector<std::size_t>& indices) {
  std::vector<Point> steps;
  steps.reserve(indices.size());
  for (std::size_t i : indices) steps.push_back(img.point(i));
  return DigitalPath(img, std::move(steps));
}

DigitalPath path_product(const DigitalPath& f, const DigitalPath& g) {
  if (!(f.image() == g.image())) throw EndpointMismatchError("paths live in different images");
  if (f.back() != g.front()) {
    throw EndpointMismatchError("f ends at " + to_string(f.back()) + " but g starts at " +
                                to_string(g.front()));
  }
  std::vector<Point> steps = f.steps();
  steps.insert(steps.end(), g.steps().begin() + 1, g.steps().end());
  return DigitalPath(f.image(), std::move(steps));
}

DigitalPath reverse(const DigitalPath& f) {
  std::vector<Point> steps(f.steps().rbegin(), f.steps().rend());
  return DigitalPath(f.image(), std::move(steps));
}

bool is_simple_loop(const DigitalPath& path) {
  if (!path.is_loop()) throw NotALoopError("path does not return to " + to_string(path.front()));
  const std::size_t m = path.length();
  if (m < 3) return false;
  const auto& idx = path.indices();
  const auto& img = path.image();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (idx[i] == idx[j]) return false;
      const bool consecutive = (j - i == 1) || (j - i == m - 1);
      if (img.adjacent_at(idx[i], idx[j]) != consecutive) return false;
    }
  }
  return true;
}

std::vector<Point> canonical_loop(const DigitalPath& loop) {
  if (!loop.is_loop()) throw NotALoopError("path does not return to " + to_string(loop.front()));
  const std::size_t m = loop.length();
  if (m == 0) return loop.steps();
  std::vector<Point> cycle(loop.steps().begin(), loop.steps().end() - 1);
  std::vector<Point> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<Point> cand;
      cand.reserve(m + 1);
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t at = dir == 0 ? (r + k) % m : (r + m - k) % m;
        cand.push_back(cycle[at]);
      }
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  best.push_back(best.front());
  return best;
}

namespace {

struct LoopSearch {
  const DigitalImage& img;
  std::size_t max_len;
  std::vector<std::size_t> path;
  std::vector<bool> on_path;
  std::vector<std::vector<std::size_t>> found;

  // Extends a chordless path that starts at its least vertex path[0].
  void extend() {
    const std::size_t s = path.front();
    const std::size_t last = path.back();
    for (std::size_t v : img.neighbors_of(last)) {
      if (v <= s || on_path[v]) continue;
      bool chord = false;
      for (std::size_t k = 1; k + 1 < path.size(); ++k) {
        if (img.adjacent_at(v, path[k])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      const bool closes = path.size() >= 2 && img.adjacent_at(v, s);
      if (closes) {
        // Each cycle is met in both directions; keep the one whose second
        // vertex is smaller than its last.
        if (path.size() + 1 <= max_len && path[1] < v) {
          auto cycle = path;
          cycle.push_back(v);
          found.push_back(std::move(cycle));
        }
        continue;
      }
      if (path.size() + 1 >= max_len) continue;
      path.push_back(v);
      on_path[v] = true;
      extend();
      on_path[v] = false;
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<DigitalPath> enumerate_simple_loops(const DigitalImage& img, std::size_t max_len) {
  LoopSearch search{img, max_len, {}, std::vector<bool>(img.size(), false), {}};
  if (max_len >= 3) {
    for (std::size_t s = 0; s < img.size(); ++s) {
      search.path = {s};
      search.on_path[s] = true;
      search.extend();
      search.on_path[s] = false;
    }
  }
  std::sort(search.found.begin(), search.found.end());
  std::vector<DigitalPath> loops;
  loops.reserve(search.found.size());
  for (auto& cycle : search.found) {
    cycle.push_back(cycle.front());
    loops.push_back(path_from_indices(img, cycle));
  }
  return loops;
}

}  // namespace digicover
