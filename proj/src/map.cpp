#include "digicover/map.hpp"

#include <algorithm>

#include "digicover/errors.hpp"

namespace digicover {

DigitalMap::DigitalMap(DigitalImage domain, DigitalImage codomain, std::vector<std::size_t> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (table_.size() != domain_.size()) {
    throw InvalidMapError("table has " + std::to_string(table_.size()) + " entries for " +
                          std::to_string(domain_.size()) + " domain points");
  }
  fibers_.resize(codomain_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= codomain_.size()) {
      throw InvalidMapError("value of " + to_string(domain_.point(i)) + " is outside the codomain");
    }
    fibers_[table_[i]].push_back(i);
  }
}

DigitalMap DigitalMap::from_pairs(DigitalImage domain, DigitalImage codomain,
                                  const std::vector<std::pair<Point, Point>>& pairs) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(domain.size(), kUnset);
  for (const auto& [x, y] : pairs) {
    auto xi = domain.find(x);
    if (!xi) throw InvalidMapError(to_string(x) + " is not a domain point");
    auto yi = codomain.find(y);
    if (!yi) throw InvalidMapError(to_string(y) + " is not a codomain point");
    if (table[*xi] != kUnset) throw InvalidMapError(to_string(x) + " is mapped twice");
    table[*xi] = *yi;
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == kUnset) throw InvalidMapError(to_string(domain.point(i)) + " has no value");
  }
  return DigitalMap(std::move(domain), std::move(codomain), std::move(table));
}

DigitalMap DigitalMap::from_function(DigitalImage domain, DigitalImage codomain,
                                     const std::function<Point(const Point&)>& fn) {
  std::vector<std::size_t> table;
  table.reserve(domain.size());
  for (const auto& x : domain.points()) {
    const Point y = fn(x);
    auto yi = codomain.find(y);
    if (!yi) throw InvalidMapError(to_string(x) + " maps to " + to_string(y) + " outside the codomain");
    table.push_back(*yi);
  }
  return DigitalMap(std::move(domain), std::move(codomain), std::move(table));
}

DigitalMap DigitalMap::identity(const DigitalImage& img) {
  std::vector<std::size_t> table(img.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  return DigitalMap(img, img, std::move(table));
}

const Point& DigitalMap::operator()(const Point& p) const {
  return codomain_.point(table_[domain_.index_of(p)]);
}

const std::vector<std::size_t>& DigitalMap::fiber(std::size_t codomain_index) const {
  return fibers_.at(codomain_index);
}

std::vector<Point> DigitalMap::fiber(const Point& b) const {
  std::vector<Point> out;
  for (std::size_t i : fiber(codomain_.index_of(b))) out.push_back(domain_.point(i));
  return out;
}

std::vector<std::pair<Point, Point>> DigitalMap::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  out.reserve(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) {
    out.emplace_back(domain_.point(i), codomain_.point(table_[i]));
  }
  return out;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> continuity_failure(const DigitalMap& f) {
  const auto& dom = f.domain();
  const auto& cod = f.codomain();
  for (const auto& [a, b] : dom.edges()) {
    const auto fa = f.at(a);
    const auto fb = f.at(b);
    if (fa != fb && !cod.adjacent_at(fa, fb)) return std::pair{a, b};
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> injectivity_failure(const DigitalMap& f) {
  for (std::size_t b = 0; b < f.codomain().size(); ++b) {
    const auto& fib = f.fiber(b);
    if (fib.size() > 1) return std::pair{fib[0], fib[1]};
  }
  return std::nullopt;
}

std::optional<std::size_t> surjectivity_failure(const DigitalMap& f) {
  for (std::size_t b = 0; b < f.codomain().size(); ++b) {
    if (f.fiber(b).empty()) return b;
  }
  return std::nullopt;
}

}  // namespace

Verdict is_continuous(const DigitalMap& f) {
  if (auto bad = continuity_failure(f)) {
    const auto& d = f.domain();
    return Verdict::fail(PointWitness{{d.point(bad->first), d.point(bad->second)}},
                         "adjacent points with images neither equal nor adjacent");
  }
  return Verdict::pass();
}

Verdict is_surjective(const DigitalMap& f) {
  if (auto b = surjectivity_failure(f)) {
    return Verdict::fail(PointWitness{{f.codomain().point(*b)}}, "codomain point never hit");
  }
  return Verdict::pass();
}

Verdict is_injective(const DigitalMap& f) {
  if (auto bad = injectivity_failure(f)) {
    const auto& d = f.domain();
    return Verdict::fail(PointWitness{{d.point(bad->first), d.point(bad->second)}},
                         "two points share an image");
  }
  return Verdict::pass();
}

Verdict is_isomorphism(const DigitalMap& f) {
  const auto& d = f.domain();
  const auto& c = f.codomain();
  if (auto bad = continuity_failure(f)) {
    return Verdict::fail(MapFailure{Leg::Continuity, {d.point(bad->first), d.point(bad->second)}},
                         "not continuous");
  }
  if (auto bad = injectivity_failure(f)) {
    return Verdict::fail(MapFailure{Leg::Injectivity, {d.point(bad->first), d.point(bad->second)}},
                         "not injective");
  }
  if (auto b = surjectivity_failure(f)) {
    return Verdict::fail(MapFailure{Leg::Surjectivity, {c.point(*b)}}, "not surjective");
  }
  for (const auto& [a, b] : c.edges()) {
    const auto x = f.fiber(a).front();
    const auto y = f.fiber(b).front();
    if (!d.adjacent_at(x, y)) {
      return Verdict::fail(MapFailure{Leg::InverseContinuity, {c.point(a), c.point(b)}},
                           "inverse not continuous: preimages " + to_string(d.point(x)) +
                               " and " + to_string(d.point(y)) + " are not adjacent");
    }
  }
  return Verdict::pass();
}

DigitalMap inverse(const DigitalMap& f) {
  std::vector<std::size_t> table(f.codomain().size());
  if (f.domain().size() != f.codomain().size()) throw InvalidMapError("map is not bijective");
  for (std::size_t b = 0; b < table.size(); ++b) {
    if (f.fiber(b).size() != 1) throw InvalidMapError("map is not bijective");
    table[b] = f.fiber(b).front();
  }
  return DigitalMap(f.codomain(), f.domain(), std::move(table));
}

DigitalMap restrict_indices(const DigitalMap& f, const std::vector<std::size_t>& dom_subset,
                            const std::vector<std::size_t>& codom_subset) {
  DigitalImage sub_dom = f.domain().induced(dom_subset);
  DigitalImage sub_cod = f.codomain().induced(codom_subset);
  std::vector<std::size_t> table;
  table.reserve(sub_dom.size());
  for (const auto& x : sub_dom.points()) {
    const auto& y = f.codomain().point(f.at(f.domain().index_of(x)));
    auto yi = sub_cod.find(y);
    if (!yi) {
      throw ImageEscapesError(to_string(x) + " maps to " + to_string(y) +
                              ", outside the target subset");
    }
    table.push_back(*yi);
  }
  return DigitalMap(std::move(sub_dom), std::move(sub_cod), std::move(table));
}

DigitalMap restrict(const DigitalMap& f, const std::set<Point>& dom_subset,
                    const std::set<Point>& codom_subset) {
  std::vector<std::size_t> d;
  std::vector<std::size_t> c;
  for (const auto& p : dom_subset) d.push_back(f.domain().index_of(p));
  for (const auto& p : codom_subset) c.push_back(f.codomain().index_of(p));
  return restrict_indices(f, d, c);
}

DigitalMap compose(const DigitalMap& g, const DigitalMap& f) {
  if (!(f.codomain() == g.domain())) {
    throw DomainMismatchError("codomain of f differs from domain of g");
  }
  std::vector<std::size_t> table(f.domain().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = g.at(f.at(i));
  return DigitalMap(f.domain(), g.codomain(), std::move(table));
}

}  // namespace digicover
