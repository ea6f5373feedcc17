#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "digicover/map.hpp"
#include "digicover/path.hpp"
#include "digicover/verdict.hpp"

namespace digicover {

/// F : X x [0,m]_Z -> Y as m+1 rows; row t lists F(x, t) for x in X's order.
class HomotopyGrid {
 public:
  /// Throws ShapeMismatchError when a row has the wrong width, there are no
  /// rows, or a value is not in Y.
  HomotopyGrid(DigitalImage source, DigitalImage target, std::vector<std::vector<Point>> rows);

  const DigitalImage& source() const noexcept { return source_; }
  const DigitalImage& target() const noexcept { return target_; }
  std::size_t steps() const noexcept { return rows_.size() - 1; }
  const std::vector<std::vector<Point>>& rows() const noexcept { return rows_; }
  const Point& at(std::size_t x, std::size_t t) const { return rows_.at(t).at(x); }

  /// F_t as a map X -> Y.
  DigitalMap row_map(std::size_t t) const;
  /// The grid with the t axis reversed.
  HomotopyGrid reversed() const;

 private:
  DigitalImage source_;
  DigitalImage target_;
  std::vector<std::vector<Point>> rows_;
};

/// The three conditions of a digital homotopy from f to g: boundary rows, every
/// column a path in Y, every row continuous. Witness: Text naming the condition
/// plus a PointWitness where one exists. Throws ShapeMismatchError when f, g and
/// F disagree on X or Y.
Verdict is_homotopy(const HomotopyGrid& grid, const DigitalMap& f, const DigitalMap& g);

/// A path as a map [0, m]_Z -> image.
DigitalMap path_as_map(const DigitalPath& path);

/// is_homotopy plus both endpoint columns constant. Throws ShapeMismatchError
/// (different lengths or grid not over [0, m]_Z) and EndpointMismatchError.
Verdict is_path_homotopy(const HomotopyGrid& grid, const DigitalPath& f, const DigitalPath& g);

/// f = f_1 * ... * f_r and f' = F_1 * ... * F_p with F_{i_j} = f_j and every
/// other F_i a trivial loop. `embedding` holds i_1 < ... < i_r, 1-based.
struct TrivialExtensionDecomposition {
  std::vector<DigitalPath> f_factors;
  std::vector<DigitalPath> f_prime_factors;
  std::vector<std::size_t> embedding;
};

/// Certificate check of the four trivial-extension conditions. Throws
/// BadDecompositionError when the decomposition is malformed (empty factor
/// lists, an embedding of the wrong size or out of range, factors that do not
/// chain). Witness on failure: Text naming the violated condition.
Verdict is_trivial_extension(const DigitalPath& f, const DigitalPath& f_prime,
                             const TrivialExtensionDecomposition& decomposition);

/// Breadth-first search over rows (paths with f's endpoints) for an endpoint-
/// fixed homotopy with at most max_m steps. nullopt means "not found within
/// the bound", not "not homotopic". Throws SizeGuardError when the image has
/// more than `guard` points, ShapeMismatchError / EndpointMismatchError as
/// is_path_homotopy.
std::optional<HomotopyGrid> find_path_homotopy_bounded(const DigitalPath& f,
                                                       const DigitalPath& g, std::size_t max_m,
                                                       std::size_t guard = 64);

}  // namespace digicover
