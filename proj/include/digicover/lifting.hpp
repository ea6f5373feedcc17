#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "digicover/errors.hpp"
#include "digicover/map.hpp"
#include "digicover/path.hpp"
#include "digicover/verdict.hpp"

namespace digicover {

/// Lift `path` (in p's codomain) through `map`, starting at `start`.
struct LiftQuery {
  DigitalMap map;
  DigitalPath path;
  Point start;
};

/// Raised by lift_path when a query has more than one lift.
class AmbiguousLiftError : public Error {
 public:
  AmbiguousLiftError(DigitalPath first, DigitalPath second);
  const DigitalPath& first() const noexcept { return first_; }
  const DigitalPath& second() const noexcept { return second_; }

 private:
  DigitalPath first_;
  DigitalPath second_;
};

/// Every lift, by depth-first search in lexicographic order.
/// Throws StartNotInFiberError, DomainMismatchError (path outside p's codomain).
std::vector<DigitalPath> all_lifts(const LiftQuery& q);

/// The lift when exactly one exists, nullopt when none does.
/// Throws AmbiguousLiftError when there are several.
std::optional<DigitalPath> lift_path(const LiftQuery& q);

/// A (b, b', e) failure of the local path lifting criterion: b' adjacent to
/// b = p(e) but no neighbor of e lies over b'.
struct PlpViolation {
  Point base;
  Point target;
  Point start;
  friend bool operator==(const PlpViolation&, const PlpViolation&) = default;
};

/// Local uniqueness failure: either an adjacent pair with equal images
/// (points = {e, e'}) or a point with two distinct neighbors over the same
/// codomain point (points = {e, e', e''}).
struct UniquenessViolation {
  std::vector<Point> points;
  friend bool operator==(const UniquenessViolation&, const UniquenessViolation&) = default;
};

/// All local plp failures, domain order then codomain-neighbor order.
std::vector<PlpViolation> plp_violations(const DigitalMap& p);
/// All local uniqueness failures in domain order. Pairs are reported once
/// (from the smaller endpoint), triples once per center with e' < e''.
std::vector<UniquenessViolation> uniqueness_violations(const DigitalMap& p);

/// Requires p surjective and continuous (NotSurjectiveError, NotContinuousError).
/// Witness: PointWitness {b, b', e}.
Verdict has_plp(const DigitalMap& p);

/// Requires p continuous. Witness: PointWitness with the violating pair or triple.
Verdict has_unique_lifts(const DigitalMap& p);

/// plp and uniqueness together; the witness comes from the failing conjunct.
Verdict has_upl(const DigitalMap& p);

/// Default domain-size limit for the exhaustive oracles.
inline constexpr std::size_t kDefaultOracleGuard = 16;

/// Path-quantified plp: every codomain path of length <= max_len lifts from
/// every start in its fiber. Witness: PathPair {codomain path, {start}}.
/// Throws SizeGuardError when |E| > guard.
Verdict plp_oracle(const DigitalMap& p, std::size_t max_len,
                   std::size_t guard = kDefaultOracleGuard);

/// Path-quantified uniqueness: every two domain paths of length <= max_len
/// with a common start and a common projection coincide. Witness: PathPair.
Verdict uniqueness_oracle(const DigitalMap& p, std::size_t max_len,
                          std::size_t guard = kDefaultOracleGuard);

}  // namespace digicover
