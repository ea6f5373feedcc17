#include "digicover/lifting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace digicover {

AmbiguousLiftError::AmbiguousLiftError(DigitalPath first, DigitalPath second)
    : Error("path has more than one lift from " + to_string(first.front())),
      first_(std::move(first)),
      second_(std::move(second)) {}

namespace {

std::size_t checked_start(const LiftQuery& q) {
  if (!(q.path.image() == q.map.codomain())) {
    throw DomainMismatchError("path does not live in the codomain of the map");
  }
  auto start = q.map.domain().find(q.start);
  if (!start || q.map.at(*start) != q.path.indices().front()) {
    throw StartNotInFiberError(to_string(q.start) + " is not over " + to_string(q.path.front()));
  }
  return *start;
}

// Depth-first enumeration of lifts; stops once `limit` lifts are collected.
void search_lifts(const DigitalMap& p, const std::vector<std::size_t>& target,
                  std::vector<std::size_t>& current, std::size_t limit,
                  std::vector<std::vector<std::size_t>>& out) {
  if (out.size() >= limit) return;
  const std::size_t t = current.size();
  if (t == target.size()) {
    out.push_back(current);
    return;
  }
  const std::size_t here = current.back();
  const auto& dom = p.domain();
  // Candidates in index order: the stay move sits among the neighbors.
  std::vector<std::size_t> candidates(dom.neighbors_of(here).begin(), dom.neighbors_of(here).end());
  candidates.insert(std::lower_bound(candidates.begin(), candidates.end(), here), here);
  for (std::size_t next : candidates) {
    if (p.at(next) != target[t]) continue;
    current.push_back(next);
    search_lifts(p, target, current, limit, out);
    current.pop_back();
    if (out.size() >= limit) return;
  }
}

std::vector<std::vector<std::size_t>> lifts(const LiftQuery& q, std::size_t limit) {
  const std::size_t start = checked_start(q);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current{start};
  search_lifts(q.map, q.path.indices(), current, limit, out);
  return out;
}

void require_continuous(const DigitalMap& p) {
  if (auto v = is_continuous(p); !v.holds) {
    const auto& pts = std::get<PointWitness>(v.witness).points;
    throw NotContinuousError("map is not continuous at " + to_string(pts[0]) + ", " +
                             to_string(pts[1]));
  }
}

void require_surjective(const DigitalMap& p) {
  if (auto v = is_surjective(p); !v.holds) {
    throw NotSurjectiveError("map misses " +
                             to_string(std::get<PointWitness>(v.witness).points[0]));
  }
}

}  // namespace

std::vector<DigitalPath> all_lifts(const LiftQuery& q) {
  std::vector<DigitalPath> out;
  for (const auto& idx : lifts(q, static_cast<std::size_t>(-1))) {
    out.push_back(path_from_indices(q.map.domain(), idx));
  }
  return out;
}

std::optional<DigitalPath> lift_path(const LiftQuery& q) {
  auto found = lifts(q, 2);
  if (found.empty()) return std::nullopt;
  if (found.size() > 1) {
    throw AmbiguousLiftError(path_from_indices(q.map.domain(), found[0]),
                             path_from_indices(q.map.domain(), found[1]));
  }
  return path_from_indices(q.map.domain(), found[0]);
}

std::vector<PlpViolation> plp_violations(const DigitalMap& p) {
  std::vector<PlpViolation> out;
  const auto& dom = p.domain();
  const auto& cod = p.codomain();
  for (std::size_t e = 0; e < dom.size(); ++e) {
    const std::size_t b = p.at(e);
    for (std::size_t target : cod.neighbors_of(b)) {
      bool found = false;
      for (std::size_t x : dom.neighbors_of(e)) {
        if (p.at(x) == target) {
          found = true;
          break;
        }
      }
      if (!found) out.push_back({cod.point(b), cod.point(target), dom.point(e)});
    }
  }
  return out;
}

std::vector<UniquenessViolation> uniqueness_violations(const DigitalMap& p) {
  std::vector<UniquenessViolation> out;
  const auto& dom = p.domain();
  for (std::size_t e = 0; e < dom.size(); ++e) {
    const auto nbrs = dom.neighbors_of(e);
    for (std::size_t x : nbrs) {
      if (x > e && p.at(x) == p.at(e)) out.push_back({{dom.point(e), dom.point(x)}});
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (p.at(nbrs[i]) == p.at(nbrs[j])) {
          out.push_back({{dom.point(e), dom.point(nbrs[i]), dom.point(nbrs[j])}});
        }
      }
    }
  }
  return out;
}

Verdict has_plp(const DigitalMap& p) {
  require_surjective(p);
  require_continuous(p);
  auto violations = plp_violations(p);
  if (violations.empty()) return Verdict::pass();
  const auto& v = violations.front();
  return Verdict::fail(PointWitness{{v.base, v.target, v.start}},
                       "no neighbor of " + to_string(v.start) + " lies over " + to_string(v.target));
}

Verdict has_unique_lifts(const DigitalMap& p) {
  require_continuous(p);
  auto violations = uniqueness_violations(p);
  if (violations.empty()) return Verdict::pass();
  auto& v = violations.front();
  return Verdict::fail(PointWitness{v.points}, v.points.size() == 2
                                                   ? "adjacent points share an image"
                                                   : "two neighbors of a point share an image");
}

Verdict has_upl(const DigitalMap& p) {
  if (auto v = has_plp(p); !v.holds) return v;
  return has_unique_lifts(p);
}

namespace {

void check_guard(const DigitalMap& p, std::size_t guard) {
  if (p.domain().size() > guard) {
    throw SizeGuardError("oracle refused: domain has " + std::to_string(p.domain().size()) +
                         " points, guard is " + std::to_string(guard));
  }
}

std::vector<std::size_t> closed_neighbors(const DigitalImage& img, std::size_t v) {
  std::vector<std::size_t> out(img.neighbors_of(v).begin(), img.neighbors_of(v).end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

struct PlpSearch {
  const DigitalMap& p;
  std::size_t max_len;
  std::vector<std::size_t> path;
  // (codomain point, reachable lift ends) -> most remaining steps explored.
  std::map<std::pair<std::size_t, std::vector<char>>, std::size_t> seen;

  // True when some extension of `path` of total length <= max_len has no lift
  // from the start whose reachable ends are `ends`.
  bool fails(const std::vector<char>& ends) {
    const std::size_t remaining = max_len - (path.size() - 1);
    if (remaining == 0) return false;
    auto key = std::pair{path.back(), ends};
    if (auto it = seen.find(key); it != seen.end() && it->second >= remaining) return false;
    seen[key] = remaining;
    const auto& dom = p.domain();
    for (std::size_t next : closed_neighbors(p.codomain(), path.back())) {
      std::vector<char> next_ends(dom.size(), 0);
      bool any = false;
      for (std::size_t x = 0; x < dom.size(); ++x) {
        if (!ends[x]) continue;
        for (std::size_t y : closed_neighbors(dom, x)) {
          if (p.at(y) == next) {
            next_ends[y] = 1;
            any = true;
          }
        }
      }
      path.push_back(next);
      if (!any || fails(next_ends)) return true;
      path.pop_back();
    }
    return false;
  }
};

struct UniquenessSearch {
  const DigitalMap& p;
  std::size_t max_len;
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> beta;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;

  // Extends the pair (alpha, beta), equal so far, looking for a divergence.
  bool diverges() {
    const std::size_t remaining = max_len - (alpha.size() - 1);
    if (remaining == 0) return false;
    if (!seen.emplace(alpha.back(), beta.back(), remaining).second) return false;
    const auto& dom = p.domain();
    const auto xs = closed_neighbors(dom, alpha.back());
    const auto ys = closed_neighbors(dom, beta.back());
    for (std::size_t x : xs) {
      for (std::size_t y : ys) {
        if (p.at(x) != p.at(y)) continue;
        alpha.push_back(x);
        beta.push_back(y);
        if (x != y || diverges()) return true;
        alpha.pop_back();
        beta.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

Verdict plp_oracle(const DigitalMap& p, std::size_t max_len, std::size_t guard) {
  check_guard(p, guard);
  const auto& dom = p.domain();
  const auto& cod = p.codomain();
  for (std::size_t b = 0; b < cod.size(); ++b) {
    for (std::size_t e : p.fiber(b)) {
      PlpSearch search{p, max_len, {b}, {}};
      std::vector<char> ends(dom.size(), 0);
      ends[e] = 1;
      if (search.fails(ends)) {
        std::vector<Point> codomain_path;
        for (std::size_t i : search.path) codomain_path.push_back(cod.point(i));
        return Verdict::fail(PathPair{codomain_path, {dom.point(e)}},
                             "codomain path has no lift from " + to_string(dom.point(e)));
      }
    }
  }
  return Verdict::pass();
}

Verdict uniqueness_oracle(const DigitalMap& p, std::size_t max_len, std::size_t guard) {
  check_guard(p, guard);
  const auto& dom = p.domain();
  for (std::size_t e = 0; e < dom.size(); ++e) {
    UniquenessSearch search{p, max_len, {e}, {e}, {}};
    if (search.diverges()) {
      PathPair pair;
      for (std::size_t i : search.alpha) pair.first.push_back(dom.point(i));
      for (std::size_t i : search.beta) pair.second.push_back(dom.point(i));
      return Verdict::fail(std::move(pair), "two distinct lifts with a common start");
    }
  }
  return Verdict::pass();
}

}  // namespace digicover
