#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "digicover/image.hpp"
#include "digicover/verdict.hpp"

namespace digicover {

/// A total function between two digital images, stored as an explicit table.
/// Continuity is not required at construction; it is a checked property.
class DigitalMap {
 public:
  /// `table[i]` is the codomain index of domain point i.
  DigitalMap(DigitalImage domain, DigitalImage codomain, std::vector<std::size_t> table);

  /// Throws InvalidMapError unless every domain point appears exactly once and
  /// every value lies in the codomain.
  static DigitalMap from_pairs(DigitalImage domain, DigitalImage codomain,
                               const std::vector<std::pair<Point, Point>>& pairs);
  static DigitalMap from_function(DigitalImage domain, DigitalImage codomain,
                                  const std::function<Point(const Point&)>& fn);
  static DigitalMap identity(const DigitalImage& img);

  const DigitalImage& domain() const noexcept { return domain_; }
  const DigitalImage& codomain() const noexcept { return codomain_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  std::size_t at(std::size_t domain_index) const { return table_.at(domain_index); }
  /// Throws MissingPointError.
  const Point& operator()(const Point& p) const;

  /// Preimage indices of a codomain index, sorted.
  const std::vector<std::size_t>& fiber(std::size_t codomain_index) const;
  std::vector<Point> fiber(const Point& b) const;

  std::vector<std::pair<Point, Point>> pairs() const;

  friend bool operator==(const DigitalMap& a, const DigitalMap& b) {
    return a.table_ == b.table_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_;
  }

 private:
  DigitalImage domain_;
  DigitalImage codomain_;
  std::vector<std::size_t> table_;
  std::vector<std::vector<std::size_t>> fibers_;
};

/// Edge criterion: adjacent domain points have equal or adjacent images.
/// Witness: the first failing pair (PointWitness).
Verdict is_continuous(const DigitalMap& f);

/// Witness: an unhit codomain point (PointWitness).
Verdict is_surjective(const DigitalMap& f);

/// Witness: the first colliding pair (PointWitness).
Verdict is_injective(const DigitalMap& f);

/// Continuous bijection with continuous inverse. Legs are checked in the
/// order continuity, injectivity, surjectivity, inverse continuity; the
/// witness is a MapFailure naming the first failing leg.
Verdict is_isomorphism(const DigitalMap& f);

/// The inverse of an isomorphism. Throws InvalidMapError if `f` is not bijective.
DigitalMap inverse(const DigitalMap& f);

/// Restriction between induced sub-images. Throws MissingPointError for a
/// subset point outside its image and ImageEscapesError when f(dom_subset)
/// is not contained in codom_subset.
DigitalMap restrict(const DigitalMap& f, const std::set<Point>& dom_subset,
                    const std::set<Point>& codom_subset);
DigitalMap restrict_indices(const DigitalMap& f, const std::vector<std::size_t>& dom_subset,
                            const std::vector<std::size_t>& codom_subset);

/// g o f. Throws DomainMismatchError unless f's codomain equals g's domain
/// (same points and same edges).
DigitalMap compose(const DigitalMap& g, const DigitalMap& f);

}  // namespace digicover
