#include "digicover/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "digicover/errors.hpp"

namespace digicover {

HomotopyGrid::HomotopyGrid(DigitalImage source, DigitalImage target,
                           std::vector<std::vector<Point>> rows)
    : source_(std::move(source)), target_(std::move(target)), rows_(std::move(rows)) {
  if (rows_.empty()) throw ShapeMismatchError("a homotopy grid needs at least one row");
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    if (rows_[t].size() != source_.size()) {
      throw ShapeMismatchError("row " + std::to_string(t) + " has " +
                               std::to_string(rows_[t].size()) + " entries, expected " +
                               std::to_string(source_.size()));
    }
    for (const auto& y : rows_[t]) {
      if (!target_.contains(y)) {
        throw ShapeMismatchError("row " + std::to_string(t) + " leaves the target at " +
                                 to_string(y));
      }
    }
  }
}

DigitalMap HomotopyGrid::row_map(std::size_t t) const {
  std::vector<std::size_t> table;
  table.reserve(source_.size());
  for (const auto& y : rows_.at(t)) table.push_back(target_.index_of(y));
  return DigitalMap(source_, target_, std::move(table));
}

HomotopyGrid HomotopyGrid::reversed() const {
  return HomotopyGrid(source_, target_, {rows_.rbegin(), rows_.rend()});
}

namespace {

bool same_row(const HomotopyGrid& grid, std::size_t t, const DigitalMap& f) {
  const auto& row = grid.rows()[t];
  for (std::size_t x = 0; x < row.size(); ++x) {
    if (row[x] != f.codomain().point(f.at(x))) return false;
  }
  return true;
}

}  // namespace

Verdict is_homotopy(const HomotopyGrid& grid, const DigitalMap& f, const DigitalMap& g) {
  for (const auto* m : {&f, &g}) {
    if (!(m->domain() == grid.source()) || !(m->codomain() == grid.target())) {
      throw ShapeMismatchError("map and grid disagree on source or target");
    }
  }
  const auto& X = grid.source();
  const auto& Y = grid.target();
  const std::size_t m = grid.steps();

  if (!same_row(grid, 0, f)) return Verdict::fail(std::string("boundary"), "row 0 differs from f");
  if (!same_row(grid, m, g)) {
    return Verdict::fail(std::string("boundary"), "row " + std::to_string(m) + " differs from g");
  }
  for (std::size_t x = 0; x < X.size(); ++x) {
    for (std::size_t t = 0; t < m; ++t) {
      const auto a = Y.index_of(grid.at(x, t));
      const auto b = Y.index_of(grid.at(x, t + 1));
      if (a != b && !Y.adjacent_at(a, b)) {
        return Verdict::fail(PointWitness{{X.point(x), grid.at(x, t), grid.at(x, t + 1)}},
                             "column of " + to_string(X.point(x)) + " jumps between t=" +
                                 std::to_string(t) + " and t=" + std::to_string(t + 1));
      }
    }
  }
  for (std::size_t t = 0; t <= m; ++t) {
    if (auto v = is_continuous(grid.row_map(t)); !v.holds) {
      v.detail = "row " + std::to_string(t) + " is not continuous";
      return v;
    }
  }
  return Verdict::pass();
}

DigitalMap path_as_map(const DigitalPath& path) {
  return DigitalMap(interval_image(0, static_cast<int>(path.length())), path.image(),
                    path.indices());
}

namespace {

void check_path_shapes(const DigitalPath& f, const DigitalPath& g) {
  if (!(f.image() == g.image())) throw ShapeMismatchError("paths live in different images");
  if (f.length() != g.length()) {
    throw ShapeMismatchError("paths have lengths " + std::to_string(f.length()) + " and " +
                             std::to_string(g.length()));
  }
  if (f.front() != g.front() || f.back() != g.back()) {
    throw EndpointMismatchError("paths do not share endpoints");
  }
}

}  // namespace

Verdict is_path_homotopy(const HomotopyGrid& grid, const DigitalPath& f, const DigitalPath& g) {
  check_path_shapes(f, g);
  if (!(grid.source() == interval_image(0, static_cast<int>(f.length())))) {
    throw ShapeMismatchError("grid is not indexed by [0, m]_Z");
  }
  auto v = is_homotopy(grid, path_as_map(f), path_as_map(g));
  if (!v.holds) return v;
  const std::size_t last = f.length();
  for (std::size_t t = 0; t <= grid.steps(); ++t) {
    for (std::size_t x : {std::size_t{0}, last}) {
      if (grid.at(x, t) != grid.at(x, 0)) {
        return Verdict::fail(PointWitness{{Point{static_cast<int>(x)}, grid.at(x, t)}},
                             "endpoint " + std::to_string(x) + " moves at t=" + std::to_string(t));
      }
    }
  }
  return Verdict::pass();
}

namespace {

DigitalPath product_of(const std::vector<DigitalPath>& factors) {
  DigitalPath out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = path_product(out, factors[i]);
  return out;
}

void check_chain(const std::vector<DigitalPath>& factors, const DigitalImage& img,
                 const char* name) {
  if (factors.empty()) throw BadDecompositionError(std::string(name) + " has no factors");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!(factors[i].image() == img)) {
      throw BadDecompositionError(std::string(name) + " factor " + std::to_string(i + 1) +
                                  " lives in another image");
    }
    if (i + 1 < factors.size() && factors[i].back() != factors[i + 1].front()) {
      throw BadDecompositionError(std::string(name) + " factors " + std::to_string(i + 1) +
                                  " and " + std::to_string(i + 2) + " do not chain");
    }
  }
}

}  // namespace

Verdict is_trivial_extension(const DigitalPath& f, const DigitalPath& f_prime,
                             const TrivialExtensionDecomposition& d) {
  check_chain(d.f_factors, f.image(), "f");
  check_chain(d.f_prime_factors, f_prime.image(), "f'");
  const std::size_t r = d.f_factors.size();
  const std::size_t p = d.f_prime_factors.size();
  if (r > p) return Verdict::fail(std::string("condition 1"), "more factors in f than in f'");
  if (d.embedding.size() != r) {
    throw BadDecompositionError("embedding lists " + std::to_string(d.embedding.size()) +
                                " indices for " + std::to_string(r) + " factors");
  }
  for (std::size_t j = 0; j < r; ++j) {
    const auto i = d.embedding[j];
    if (i < 1 || i > p || (j > 0 && d.embedding[j - 1] >= i)) {
      throw BadDecompositionError("embedding must be strictly increasing within [1, p]");
    }
  }
  if (!(product_of(d.f_factors) == f)) {
    return Verdict::fail(std::string("condition 2"), "f is not the product of its factors");
  }
  if (!(product_of(d.f_prime_factors) == f_prime)) {
    return Verdict::fail(std::string("condition 3"), "f' is not the product of its factors");
  }
  std::vector<bool> matched(p, false);
  for (std::size_t j = 0; j < r; ++j) {
    const auto i = d.embedding[j] - 1;
    matched[i] = true;
    if (!(d.f_prime_factors[i] == d.f_factors[j])) {
      return Verdict::fail(std::string("condition 4"),
                           "F_" + std::to_string(i + 1) + " differs from f_" + std::to_string(j + 1));
    }
  }
  for (std::size_t i = 0; i < p; ++i) {
    if (!matched[i] && !d.f_prime_factors[i].is_trivial()) {
      return Verdict::fail(std::string("condition 4"),
                           "unmatched factor F_" + std::to_string(i + 1) + " is not a trivial loop");
    }
  }
  return Verdict::pass();
}

namespace {

using Row = std::vector<std::size_t>;

// Rows r' with fixed endpoints, r'[i] in N[r[i]], consecutive entries equal or adjacent.
void next_rows(const DigitalImage& Y, const Row& row, Row& partial, std::vector<Row>& out) {
  const std::size_t i = partial.size();
  if (i == row.size()) {
    out.push_back(partial);
    return;
  }
  auto ok = [&](std::size_t v) {
    return i == 0 || v == partial.back() || Y.adjacent_at(v, partial.back());
  };
  if (i == 0 || i + 1 == row.size()) {
    if (ok(row[i])) {
      partial.push_back(row[i]);
      next_rows(Y, row, partial, out);
      partial.pop_back();
    }
    return;
  }
  std::vector<std::size_t> candidates{row[i]};
  for (std::size_t v : Y.neighbors_of(row[i])) candidates.push_back(v);
  for (std::size_t v : candidates) {
    if (!ok(v)) continue;
    partial.push_back(v);
    next_rows(Y, row, partial, out);
    partial.pop_back();
  }
}

}  // namespace

std::optional<HomotopyGrid> find_path_homotopy_bounded(const DigitalPath& f, const DigitalPath& g,
                                                       std::size_t max_m, std::size_t guard) {
  check_path_shapes(f, g);
  const auto& Y = f.image();
  if (Y.size() > guard) {
    throw SizeGuardError("homotopy search refused: image has " + std::to_string(Y.size()) +
                         " points, guard is " + std::to_string(guard));
  }
  const auto source = interval_image(0, static_cast<int>(f.length()));
  auto to_grid = [&](const std::vector<Row>& rows) {
    std::vector<std::vector<Point>> pts;
    for (const auto& r : rows) {
      std::vector<Point> line;
      for (std::size_t v : r) line.push_back(Y.point(v));
      pts.push_back(std::move(line));
    }
    return HomotopyGrid(source, Y, std::move(pts));
  };

  const Row start = f.indices();
  const Row goal = g.indices();
  std::map<Row, Row> parent{{start, start}};
  std::deque<std::pair<Row, std::size_t>> queue{{start, 0}};
  while (!queue.empty()) {
    auto [row, depth] = queue.front();
    queue.pop_front();
    if (row == goal) {
      std::vector<Row> rows{row};
      while (rows.back() != start) rows.push_back(parent.at(rows.back()));
      std::reverse(rows.begin(), rows.end());
      return to_grid(rows);
    }
    if (depth == max_m) continue;
    std::vector<Row> successors;
    Row partial;
    next_rows(Y, row, partial, successors);
    for (auto& next : successors) {
      if (parent.emplace(next, row).second) queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return std::nullopt;
}

}  // namespace digicover
