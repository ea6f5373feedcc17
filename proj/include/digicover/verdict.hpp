#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "digicover/point.hpp"

namespace digicover {

/// Which leg of an isomorphism (or map-level check) failed.
enum class Leg {
  Continuity,         // points: adjacent domain pair with split images
  Injectivity,        // points: two domain points with a common image
  Surjectivity,       // points: one codomain point that is never hit
  InverseContinuity,  // points: adjacent codomain pair with non-adjacent preimages
};

const char* to_string(Leg leg);

/// One, two or three points; the meaning depends on the producing check.
struct PointWitness {
  std::vector<Point> points;
  friend bool operator==(const PointWitness&, const PointWitness&) = default;
};

struct MapFailure {
  Leg leg = Leg::Continuity;
  std::vector<Point> points;
  friend bool operator==(const MapFailure&, const MapFailure&) = default;
};

/// A restriction to N(center, r) that is not an isomorphism onto N(p(center), r).
struct LocalFailure {
  Point center;
  MapFailure failure;
  friend bool operator==(const LocalFailure&, const LocalFailure&) = default;
};

/// One violated numbered condition of the covering definition at a base point.
///
/// condition 1: `points` holds a point in exactly one of p^-1(N(b,r)) and the
///              union of sheets.
/// condition 2: `points` holds (e_i, e_j, x) with x in both sheets.
/// condition 3: `points` holds the sheet center; `restriction` says why the
///              restricted map is not an isomorphism.
struct ConditionFailure {
  int condition = 0;
  Point base;
  std::vector<Point> points;
  std::optional<MapFailure> restriction;
  friend bool operator==(const ConditionFailure&, const ConditionFailure&) = default;
};

struct Sheet {
  Point center;
  std::vector<Point> points;
  friend bool operator==(const Sheet&, const Sheet&) = default;
};

/// Evidence that the covering conditions hold at one base point.
struct SheetCertificate {
  Point base;
  std::size_t radius = 1;
  std::vector<Point> elementary_neighborhood;  // N(b, r)
  std::vector<Sheet> sheets;                   // one per fiber point, sorted by center
  friend bool operator==(const SheetCertificate&, const SheetCertificate&) = default;
};

struct PathPair {
  std::vector<Point> first;
  std::vector<Point> second;
  friend bool operator==(const PathPair&, const PathPair&) = default;
};

/// A codomain loop, a fiber point over its start, and the offending lift.
struct LoopWitness {
  std::vector<Point> loop;
  Point start;
  std::vector<Point> lift;
  friend bool operator==(const LoopWitness&, const LoopWitness&) = default;
};

using Witness = std::variant<std::monostate, PointWitness, MapFailure, LocalFailure,
                             ConditionFailure, SheetCertificate, PathPair, LoopWitness,
                             std::string>;

/// Outcome of a decision procedure. A failing verdict carries a checkable
/// counterexample; a passing one carries a certificate or nothing.
struct Verdict {
  bool holds = true;
  Witness witness;
  std::string detail;

  explicit operator bool() const noexcept { return holds; }

  static Verdict pass(Witness w = {}, std::string detail = {}) {
    return Verdict{true, std::move(w), std::move(detail)};
  }
  static Verdict fail(Witness w, std::string detail = {}) {
    return Verdict{false, std::move(w), std::move(detail)};
  }
};

}  // namespace digicover
