#pragma once

#include <cstddef>
#include <vector>

#include "digicover/image.hpp"

namespace digicover {

/// A digital path p_0, ..., p_m in an image: consecutive steps are equal or
/// adjacent. Length-0 paths (a single point) are allowed.
class DigitalPath {
 public:
  /// Validates; see validate_path.
  DigitalPath(DigitalImage image, std::vector<Point> steps);

  const DigitalImage& image() const noexcept { return image_; }
  const std::vector<Point>& steps() const noexcept { return steps_; }
  /// Index form of steps().
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

  /// Number of edge steps m.
  std::size_t length() const noexcept { return steps_.size() - 1; }
  const Point& at(std::size_t t) const { return steps_.at(t); }
  const Point& front() const { return steps_.front(); }
  const Point& back() const { return steps_.back(); }
  bool is_loop() const { return steps_.front() == steps_.back(); }
  /// Constant in t.
  bool is_trivial() const;

  friend bool operator==(const DigitalPath& a, const DigitalPath& b) {
    return a.steps_ == b.steps_ && a.image_ == b.image_;
  }

 private:
  DigitalImage image_;
  std::vector<Point> steps_;
  std::vector<std::size_t> indices_;
};

/// Throws NotAPathError (with the first bad index), MissingPointError, or
/// NotAPathError(0) for an empty sequence.
DigitalPath validate_path(const DigitalImage& img, std::vector<Point> steps);

/// Index-based variant for internal callers; assumes the indices are valid.
DigitalPath path_from_indices(const DigitalImage& img, const std::vector<std::size_t>& indices);

/// (f * g)(t) = f(t) on [0, m1], g(t - m1) on [m1, m1 + m2].
/// Throws EndpointMismatchError when f(m1) != g(0) or the images differ.
DigitalPath path_product(const DigitalPath& f, const DigitalPath& g);

/// t -> f(m - t).
DigitalPath reverse(const DigitalPath& f);

/// A loop p_0..p_m (p_0 = p_m) is simple when p_0..p_{m-1} are pairwise
/// distinct and p_i, p_j are adjacent exactly when j = i +- 1 mod m.
/// Loops with m < 3 are never simple. Throws NotALoopError.
bool is_simple_loop(const DigitalPath& path);

/// Least rotation/reflection (lexicographic on points) of a loop's vertex
/// cycle, returned as a closed step sequence. Throws NotALoopError.
std::vector<Point> canonical_loop(const DigitalPath& loop);

/// Every simple loop of length 3..max_len, one canonical representative per
/// rotation/reflection class, in lexicographic order of the representative.
std::vector<DigitalPath> enumerate_simple_loops(const DigitalImage& img, std::size_t max_len);

}  // namespace digicover
