#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "digicover/covering.hpp"
#include "digicover/fixtures.hpp"

namespace digicover {

namespace {

using Rng = std::mt19937_64;
using Edge = std::pair<std::size_t, std::size_t>;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<Edge> random_connected_graph(Rng& rng, std::size_t n, double extra) {
  std::vector<std::size_t> relabel(n);
  for (std::size_t i = 0; i < n; ++i) relabel[i] = i;
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::set<Edge> edges;
  auto add = [&](std::size_t a, std::size_t b) {
    a = relabel[a];
    b = relabel[b];
    edges.insert({std::min(a, b), std::max(a, b)});
  };
  for (std::size_t i = 1; i < n; ++i) add(i, pick(rng, 0, i - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (chance(rng, extra)) add(i, j);
    }
  }
  return {edges.begin(), edges.end()};
}

DigitalImage graph_image(std::size_t n, const std::vector<Edge>& edges, std::string label) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(Point{static_cast<int>(i)});
  std::vector<std::pair<Point, Point>> e;
  for (const auto& [a, b] : edges) e.emplace_back(pts[a], pts[b]);
  return DigitalImage(std::move(pts), explicit_edges(e), std::move(label));
}

// Grows a connected set of n lattice points in Z^dim under l_u.
DigitalImage random_lattice(Rng& rng, std::size_t n, int u, int dim) {
  std::vector<std::vector<int>> steps;
  std::vector<int> d(dim, -1);
  while (true) {
    int nonzero = 0;
    for (int c : d) nonzero += c != 0;
    if (nonzero >= 1 && nonzero <= u) steps.push_back(d);
    int i = 0;
    while (i < dim && d[i] == 1) d[i++] = -1;
    if (i == dim) break;
    ++d[i];
  }
  std::vector<Point> pts{Point(std::vector<int>(dim, 0))};
  std::set<Point> seen(pts.begin(), pts.end());
  while (pts.size() < n) {
    const auto& from = pts[pick(rng, 0, pts.size() - 1)];
    const auto& step = steps[pick(rng, 0, steps.size() - 1)];
    std::vector<int> c = from.coords;
    for (int i = 0; i < dim; ++i) c[i] += step[i];
    Point q(std::move(c));
    if (seen.insert(q).second) pts.push_back(std::move(q));
  }
  return DigitalImage(std::move(pts), lu(u, dim), "lattice");
}

DigitalImage random_connected_image(Rng& rng, std::size_t n) {
  switch (pick(rng, 0, 3)) {
    case 0:
      return graph_image(n, random_connected_graph(rng, n, 0.2), "graph");
    case 1:
      return random_lattice(rng, n, 1, 2);
    case 2:
      return random_lattice(rng, n, 2, 2);
    default:
      return random_lattice(rng, n, static_cast<int>(pick(rng, 1, 3)), 3);
  }
}

// Quotient of `dom` by the class labels; codomain edges join classes that
// share a domain edge, plus optional extra edges.
DigitalMap quotient(Rng& rng, const DigitalImage& dom, const std::vector<std::size_t>& label,
                    std::size_t classes, double extra) {
  std::set<Edge> edges;
  for (const auto& [a, b] : dom.edges()) {
    const auto x = label[a];
    const auto y = label[b];
    if (x != y) edges.insert({std::min(x, y), std::max(x, y)});
  }
  for (std::size_t i = 0; i < classes; ++i) {
    for (std::size_t j = i + 1; j < classes; ++j) {
      if (chance(rng, extra)) edges.insert({i, j});
    }
  }
  auto cod = graph_image(classes, {edges.begin(), edges.end()}, "quotient");
  return DigitalMap(dom, std::move(cod), label);
}

DigitalMap random_quotient(Rng& rng, const DigitalImage& dom) {
  const std::size_t n = dom.size();
  const std::size_t classes = pick(rng, 1, n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[order[i]] = i < classes ? i : pick(rng, 0, classes - 1);
  return quotient(rng, dom, label, classes, chance(rng, 0.3) ? 0.2 : 0.0);
}

// Quotient of a lattice set by coordinates modulo small periods.
DigitalMap periodic_quotient(Rng& rng, const DigitalImage& dom) {
  std::vector<int> period(dom.dimension());
  for (auto& q : period) q = static_cast<int>(pick(rng, 1, 4));
  std::map<std::vector<int>, std::size_t> ids;
  std::vector<std::size_t> label;
  for (const auto& p : dom.points()) {
    std::vector<int> key;
    for (std::size_t i = 0; i < period.size(); ++i) key.push_back(((p[i] % period[i]) + period[i]) % period[i]);
    label.push_back(ids.emplace(key, ids.size()).first->second);
  }
  return quotient(rng, dom, label, ids.size(), 0.0);
}

// Z_k voltage lift of a connected base: (b, s) ~ (b', s + v(b, b')). Keeps the
// component of (0, 0) so the total space is connected.
DigitalMap voltage_lift(Rng& rng, const DigitalImage& base, int k, bool zero_on_triangles) {
  const auto base_edges = base.edges();
  std::vector<int> voltage(base_edges.size(), 0);
  for (std::size_t e = 0; e < base_edges.size(); ++e) {
    const auto [a, b] = base_edges[e];
    bool in_triangle = false;
    for (std::size_t c : base.neighbors_of(a)) {
      if (c != b && base.adjacent_at(b, c)) in_triangle = true;
    }
    if (!(zero_on_triangles && in_triangle)) voltage[e] = static_cast<int>(pick(rng, 0, k - 1));
  }
  auto lifted = [&](std::size_t b, int s) { return Point{static_cast<int>(b), s}; };
  std::vector<Point> pts;
  std::vector<std::pair<Point, Point>> edges;
  for (std::size_t b = 0; b < base.size(); ++b) {
    for (int s = 0; s < k; ++s) pts.push_back(lifted(b, s));
  }
  for (std::size_t e = 0; e < base_edges.size(); ++e) {
    const auto [a, b] = base_edges[e];
    for (int s = 0; s < k; ++s) edges.emplace_back(lifted(a, s), lifted(b, (s + voltage[e]) % k));
  }
  DigitalImage total(pts, explicit_edges(edges), "lift");
  const auto dist = total.distances_from(0);
  std::vector<std::size_t> component;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i]) component.push_back(i);
  }
  DigitalImage dom = total.induced(component, "lift");
  std::vector<std::size_t> table;
  for (const auto& p : dom.points()) table.push_back(static_cast<std::size_t>(p[0]));
  return DigitalMap(std::move(dom), base, std::move(table));
}

}  // namespace

DigitalMap random_map(std::uint64_t seed, const RandomMapParams& params) {
  if (params.min_domain < 2 || params.max_domain < params.min_domain) {
    throw std::invalid_argument("random_map needs 2 <= min_domain <= max_domain");
  }
  Rng rng(seed);
  const std::size_t n = pick(rng, params.min_domain, params.max_domain);
  switch (pick(rng, 0, 4)) {
    case 0:
      return random_quotient(rng, graph_image(n, random_connected_graph(rng, n, 0.25), "graph"));
    case 1:
      return random_quotient(rng, random_lattice(rng, n, static_cast<int>(pick(rng, 1, 2)), 2));
    case 2:
      return periodic_quotient(rng, random_lattice(rng, n, static_cast<int>(pick(rng, 1, 2)), 2));
    default: {
      const std::size_t nb = pick(rng, 2, std::max<std::size_t>(2, params.max_domain / 2));
      const int k = static_cast<int>(pick(rng, 1, std::min<std::size_t>(3, params.max_domain / nb)));
      auto base = pick(rng, 0, 1) == 0
                      ? graph_image(nb, random_connected_graph(rng, nb, 0.3), "graph")
                      : random_lattice(rng, nb, static_cast<int>(pick(rng, 1, 2)), 2);
      auto lift = voltage_lift(rng, base, k, chance(rng, 0.5));
      if (chance(rng, 0.3)) {
        if (auto bent = perturb_map(lift, rng())) return *bent;
      }
      return lift;
    }
  }
}

DigitalMap random_function(std::uint64_t seed, std::size_t max_points) {
  if (max_points < 1) throw std::invalid_argument("random_function needs max_points >= 1");
  Rng rng(seed);
  if (max_points >= 2 && chance(rng, 0.4)) {
    return random_map(rng(), RandomMapParams{max_points, 2});
  }
  auto dom = random_connected_image(rng, pick(rng, 1, max_points));
  auto cod = random_connected_image(rng, pick(rng, 1, max_points));
  std::vector<std::size_t> table(dom.size());
  for (auto& t : table) t = pick(rng, 0, cod.size() - 1);
  return DigitalMap(std::move(dom), std::move(cod), std::move(table));
}

DigitalMap random_covering(std::uint64_t seed, const RandomCoveringParams& params) {
  if (params.max_base < 4 || params.min_base < 2 || params.min_base > params.max_base ||
      params.max_fold < 1) {
    throw std::invalid_argument("random_covering needs 2 <= min_base <= max_base, max_base >= 4, max_fold >= 1");
  }
  Rng rng(seed);
  const int k = static_cast<int>(pick(rng, 1, static_cast<std::size_t>(params.max_fold)));
  auto result = [&]() -> DigitalMap {
    switch (pick(rng, 0, 2)) {
      case 0: {
        const int m = static_cast<int>(pick(rng, std::max<std::size_t>(4, params.min_base), params.max_base));
        auto dom = make_cycle_image(k * m);
        std::vector<std::size_t> table(dom.size());
        for (std::size_t i = 0; i < table.size(); ++i) table[i] = i % static_cast<std::size_t>(m);
        return DigitalMap(std::move(dom), make_cycle_image(m), std::move(table));
      }
      case 1: {
        const std::size_t n = pick(rng, params.min_base, params.max_base);
        const double extra = std::array{0.0, 0.15, 0.3}[pick(rng, 0, 2)];
        return voltage_lift(rng, graph_image(n, random_connected_graph(rng, n, extra), "graph"), k,
                            true);
      }
      default: {
        const std::size_t n = pick(rng, params.min_base, params.max_base);
        return voltage_lift(rng, random_lattice(rng, n, static_cast<int>(pick(rng, 1, 2)), 2), k,
                            true);
      }
    }
  }();
  if (!is_covering(result).holds()) {
    throw std::logic_error("random_covering produced a non-covering for seed " + std::to_string(seed));
  }
  return result;
}

std::optional<DigitalMap> perturb_map(const DigitalMap& p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < p.domain().size(); ++i) {
    for (std::size_t c = 0; c < p.codomain().size(); ++c) {
      if (c != p.at(i)) candidates.emplace_back(i, c);
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (const auto& [i, c] : candidates) {
    auto table = p.table();
    table[i] = c;
    DigitalMap q(p.domain(), p.codomain(), std::move(table));
    if (is_surjective(q).holds && is_continuous(q).holds) return q;
  }
  return std::nullopt;
}

}  // namespace digicover
