#include "digicover/covering.hpp"

#include <algorithm>
#include <stdexcept>

#include "digicover/errors.hpp"
#include "digicover/lifting.hpp"
#include "digicover/path.hpp"

namespace digicover {

namespace {

void require_continuous(const DigitalMap& p) {
  if (auto v = is_continuous(p); !v.holds) {
    const auto& pts = std::get<PointWitness>(v.witness).points;
    throw NotContinuousError("map is not continuous at " + to_string(pts[0]) + ", " +
                             to_string(pts[1]));
  }
}

void require_covering(const DigitalMap& p) {
  if (auto r = is_covering(p); !r.holds()) {
    throw NotACoveringError("map is not a covering: " + r.verdict.detail);
  }
}

struct Conciliator {
  std::size_t center, first, second;
};

std::vector<Conciliator> conciliator_triples(const DigitalMap& p) {
  require_continuous(p);
  std::vector<Conciliator> out;
  const auto& dom = p.domain();
  const auto& cod = p.codomain();
  for (std::size_t e = 0; e < dom.size(); ++e) {
    const auto ball = neighborhood_indices(dom, e, 1);
    bool found = false;
    for (std::size_t i = 0; i < ball.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < ball.size() && !found; ++j) {
        const auto x = ball[i];
        const auto y = ball[j];
        if (!dom.adjacent_at(x, y) && cod.adjacent_at(p.at(x), p.at(y))) {
          out.push_back({e, x, y});
          found = true;
        }
      }
    }
  }
  return out;
}

}  // namespace

std::set<Point> conciliator_points(const DigitalMap& p) {
  std::set<Point> out;
  for (const auto& c : conciliator_triples(p)) out.insert(p.domain().point(c.center));
  return out;
}

Verdict is_conciliator_free(const DigitalMap& p) {
  const auto triples = conciliator_triples(p);
  if (triples.empty()) return Verdict::pass();
  const auto& dom = p.domain();
  const auto& c = triples.front();
  return Verdict::fail(
      PointWitness{{dom.point(c.center), dom.point(c.first), dom.point(c.second)}},
      std::to_string(triples.size()) + " conciliator point(s)");
}

Verdict local_isomorphism_at(const DigitalMap& p, std::size_t e, std::size_t radius) {
  const auto ball = neighborhood_indices(p.domain(), e, radius);
  const auto target = neighborhood_indices(p.codomain(), p.at(e), radius);
  auto v = is_isomorphism(restrict_indices(p, ball, target));
  if (v.holds) return v;
  return Verdict::fail(LocalFailure{p.domain().point(e), std::get<MapFailure>(v.witness)},
                       "radius-" + std::to_string(radius) + " restriction at " +
                           to_string(p.domain().point(e)) + ": " + v.detail);
}

Verdict is_local_isomorphism(const DigitalMap& p) {
  require_continuous(p);
  for (std::size_t e = 0; e < p.domain().size(); ++e) {
    if (auto v = local_isomorphism_at(p, e, 1); !v.holds) return v;
  }
  return Verdict::pass();
}

RadiusReport is_radius_n_local_isomorphism(const DigitalMap& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("radius must be at least 1");
  require_continuous(p);
  RadiusReport report;
  report.n = n;
  for (std::size_t e = 0; e < p.domain().size(); ++e) {
    auto v = local_isomorphism_at(p, e, n);
    report.overall = report.overall && v.holds;
    report.per_point.emplace_back(p.domain().point(e), std::move(v));
  }
  return report;
}

namespace {

std::vector<Point> points_of(const DigitalImage& img, const std::vector<std::size_t>& idx) {
  std::vector<Point> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(img.point(i));
  return out;
}

CoveringResult covering_check(const DigitalMap& p, std::size_t radius) {
  CoveringResult result;
  if (auto v = is_surjective(p); !v.holds) {
    v.detail = "not surjective: " + v.detail;
    result.verdict = std::move(v);
    return result;
  }
  if (auto v = is_continuous(p); !v.holds) {
    v.detail = "not continuous: " + v.detail;
    result.verdict = std::move(v);
    return result;
  }
  const auto& dom = p.domain();
  const auto& cod = p.codomain();
  for (std::size_t b = 0; b < cod.size(); ++b) {
    const Point& base = cod.point(b);
    const auto target = neighborhood_indices(cod, b, radius);
    std::vector<char> in_target(cod.size(), 0);
    for (std::size_t t : target) in_target[t] = 1;

    const auto& fiber = p.fiber(b);
    std::vector<std::vector<std::size_t>> sheets;
    for (std::size_t e : fiber) sheets.push_back(neighborhood_indices(dom, e, radius));

    std::vector<ConditionFailure> here;
    // (1) the sheets cover exactly p^-1(N(b, r)).
    std::vector<char> in_union(dom.size(), 0);
    for (const auto& s : sheets) {
      for (std::size_t x : s) in_union[x] = 1;
    }
    for (std::size_t x = 0; x < dom.size(); ++x) {
      const bool over_target = in_target[p.at(x)] != 0;
      if (over_target != (in_union[x] != 0)) {
        here.push_back({1, base, {dom.point(x)}, std::nullopt});
      }
    }
    // (2) distinct sheets are disjoint.
    for (std::size_t i = 0; i < sheets.size(); ++i) {
      for (std::size_t j = i + 1; j < sheets.size(); ++j) {
        std::vector<std::size_t> shared;
        std::set_intersection(sheets[i].begin(), sheets[i].end(), sheets[j].begin(),
                              sheets[j].end(), std::back_inserter(shared));
        if (!shared.empty()) {
          here.push_back({2, base,
                          {dom.point(fiber[i]), dom.point(fiber[j]), dom.point(shared.front())},
                          std::nullopt});
        }
      }
    }
    // (3) each sheet is carried isomorphically onto N(b, r).
    for (std::size_t i = 0; i < sheets.size(); ++i) {
      auto v = is_isomorphism(restrict_indices(p, sheets[i], target));
      if (!v.holds) {
        here.push_back({3, base, {dom.point(fiber[i])}, std::get<MapFailure>(v.witness)});
      }
    }

    if (here.empty()) {
      SheetCertificate cert{base, radius, points_of(cod, target), {}};
      for (std::size_t i = 0; i < sheets.size(); ++i) {
        cert.sheets.push_back({dom.point(fiber[i]), points_of(dom, sheets[i])});
      }
      result.certificates.push_back(std::move(cert));
    } else {
      result.violations.insert(result.violations.end(), here.begin(), here.end());
    }
  }

  if (result.violations.empty()) {
    result.verdict = Verdict::pass();
  } else {
    const auto& first = result.violations.front();
    std::string detail = "condition (" + std::to_string(first.condition) + ") fails at base " +
                         to_string(first.base);
    if (first.restriction) {
      detail += ", center " + to_string(first.points.front()) + ", " +
                to_string(first.restriction->leg) + " leg";
    }
    result.verdict = Verdict::fail(first, std::move(detail));
  }
  return result;
}

}  // namespace

CoveringResult is_covering(const DigitalMap& p) { return covering_check(p, 1); }

CoveringResult is_radius_n_covering(const DigitalMap& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("radius must be at least 1");
  return covering_check(p, n);
}

Verdict simple_loop_lifts(const DigitalMap& p, std::size_t max_len) {
  require_covering(p);
  const auto loops = enumerate_simple_loops(p.codomain(), max_len);
  if (loops.empty()) {
    return Verdict::pass(std::string("vacuous"), "no simple loop of length <= " +
                                                     std::to_string(max_len) + " in the codomain");
  }
  for (const auto& loop : loops) {
    for (std::size_t e : p.fiber(loop.indices().front())) {
      const Point& start = p.domain().point(e);
      auto lift = lift_path(LiftQuery{p, loop, start});
      if (!lift) throw std::logic_error("covering map without a path lift");
      if (!lift->is_loop() || !is_simple_loop(*lift)) {
        return Verdict::fail(LoopWitness{loop.steps(), start, lift->steps()},
                             std::string("lift of a simple loop of length ") +
                                 std::to_string(loop.length()) + " from " + to_string(start) +
                                 (lift->is_loop() ? " is not simple" : " is not closed"));
      }
    }
  }
  return Verdict::pass(std::monostate{}, std::to_string(loops.size()) + " loop class(es) checked");
}

Verdict loop_criterion(const DigitalMap& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("radius must be at least 1");
  return simple_loop_lifts(p, 2 * n + 1);
}

Verdict closed_loop_lifts(const DigitalMap& p, std::size_t len) {
  require_covering(p);
  for (const auto& loop : enumerate_simple_loops(p.codomain(), len)) {
    if (loop.length() != len) continue;
    for (std::size_t e : p.fiber(loop.indices().front())) {
      const Point& start = p.domain().point(e);
      auto lift = lift_path(LiftQuery{p, loop, start});
      if (!lift) throw std::logic_error("covering map without a path lift");
      if (!lift->is_loop()) {
        return Verdict::fail(LoopWitness{loop.steps(), start, lift->steps()}, "lift is not closed");
      }
    }
  }
  return Verdict::pass();
}

EquivalenceReport equivalence_report(const DigitalMap& p) {
  if (auto v = is_surjective(p); !v.holds) throw NotSurjectiveError("map is not surjective");
  require_continuous(p);
  EquivalenceReport r;
  r.upl = has_upl(p).holds;
  r.conciliator_free = conciliator_triples(p).empty();
  r.local_iso = is_local_isomorphism(p).holds;
  r.covering = is_covering(p).holds();
  if (r.covering != r.local_iso) r.inconsistencies.push_back("covering != local isomorphism");
  if (r.upl && r.conciliator_free && !r.covering) {
    r.inconsistencies.push_back("u.p.l without conciliator points but not a covering");
  }
  if (r.covering && !r.upl) r.inconsistencies.push_back("covering without u.p.l");
  if (r.covering && !r.conciliator_free) r.inconsistencies.push_back("covering with conciliator points");
  r.consistent = r.inconsistencies.empty();
  return r;
}

Verdict fiber_separation_scan(const DigitalMap& p) {
  require_covering(p);
  const auto& dom = p.domain();
  for (std::size_t e = 0; e < dom.size(); ++e) {
    const auto inner = neighborhood_indices(dom, e, 1);
    const auto outer = neighborhood_indices(dom, e, 2);
    for (std::size_t a : inner) {
      for (std::size_t c : outer) {
        if (a != c && p.at(a) == p.at(c)) {
          return Verdict::fail(PointWitness{{dom.point(e), dom.point(a), dom.point(c)}},
                               "points within radius 2 share an image");
        }
      }
    }
  }
  return Verdict::pass();
}

}  // namespace digicover
