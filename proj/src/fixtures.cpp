#include "digicover/fixtures.hpp"

#include <charconv>
#include <stdexcept>

namespace digicover {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Fixture fixture_pr1(int width, int height) {
  if (width < 3 || height < 3 || height % 2 == 0) {
    throw std::invalid_argument("pr1 needs width >= 3 and an odd height >= 3");
  }
  const int h = height / 2;
  auto dom = box_image({{0, width - 1}, {-h, h}}, 2, "grid");
  auto cod = interval_image(0, width - 1);
  auto map = DigitalMap::from_function(dom, cod, [](const Point& p) { return Point{p[0]}; });

  ExpectedVerdicts ex;
  ex.continuous = true;
  ex.surjective = true;
  ex.plp = true;
  ex.unique_lifts = false;
  ex.upl = false;
  ex.conciliator_free = false;
  ex.local_iso = false;
  ex.covering = false;
  ex.radius2_covering = false;

  std::vector<Point> boundary;
  for (const auto& p : dom.points()) {
    if (p[1] <= -h + 1 || p[1] >= h - 1) boundary.push_back(p);
  }
  return {"pr1", std::move(map), ex,
          "Z^2 -> Z modelled on a " + std::to_string(width) + "x" + std::to_string(height) +
              " box; rows |y| >= " + std::to_string(h - 1) +
              " sit next to the cut. Every verdict is witnessed in the interior.",
          std::move(boundary)};
}

Fixture fixture_mod4_ray(int len) {
  if (len < 8 || len % 4 != 0) {
    throw std::invalid_argument("mod4-ray needs len >= 8 divisible by 4");
  }
  auto dom = interval_image(0, len);
  const auto c = sc8_2_4_points();
  auto map = DigitalMap::from_function(dom, sc8_2_4(),
                                       [&](const Point& p) { return c[mod(p[0], 4)]; });

  ExpectedVerdicts ex;
  ex.continuous = true;
  ex.surjective = true;
  ex.plp = false;
  ex.unique_lifts = true;
  ex.upl = false;
  ex.conciliator_free = true;
  ex.local_iso = false;
  ex.covering = false;
  ex.radius2_covering = false;
  return {"mod4-ray", std::move(map), ex,
          "Z+ truncated to [0," + std::to_string(len) +
              "]_Z; the right end adds a spurious plp failure (c_0, c_1, " + std::to_string(len) +
              ") and a local isomorphism failure there.",
          {Point{len - 1}, Point{len}}};
}

Fixture fixture_mod3(int len, DomainModel model) {
  if (len < 6 || len % 3 != 0) throw std::invalid_argument("mod3 needs len >= 6 divisible by 3");
  const std::vector<Point> b{{0, 0}, {1, 0}, {0, 1}};
  DigitalImage cod(b, kAdj8, "B");
  const bool line = model == DomainModel::Line;
  auto dom = line ? interval_image(0, len) : make_cycle_image(len);
  auto map = DigitalMap::from_function(dom, cod, [&](const Point& p) { return b[mod(p[0], 3)]; });

  ExpectedVerdicts ex;
  ex.continuous = true;
  ex.surjective = true;
  ex.plp = !line;
  ex.unique_lifts = true;
  ex.upl = !line;
  ex.conciliator_free = false;
  ex.local_iso = false;
  ex.covering = false;
  ex.radius2_covering = false;
  if (line) {
    return {"mod3-line", std::move(map), ex,
            "Z truncated to [0," + std::to_string(len) +
                "]_Z; both ends break plp (and so u.p.l). Interior points keep u.p.l behavior.",
            {Point{0}, Point{1}, Point{len - 1}, Point{len}}};
  }
  return {"mod3", std::move(map), ex,
          "Z modelled by C_" + std::to_string(len) +
              ", which agrees with Z on every radius-1 neighborhood.",
          {}};
}

Fixture fixture_han_example(Point origin_x, Point origin_y) {
  if (origin_x.dimension() != 2 || origin_y.dimension() != 2) {
    throw std::invalid_argument("Han example base points must be 2-dimensional");
  }
  const int x1 = origin_x[0], y1 = origin_x[1];
  const int a = origin_y[0], bb = origin_y[1];
  const std::vector<Point> q{{x1, y1},         {x1 - 1, y1 + 1}, {x1 - 2, y1 + 1}, {x1 - 3, y1},
                             {x1 - 3, y1 - 1}, {x1 - 2, y1 - 2}, {x1 - 1, y1 - 1}};
  const std::vector<Point> v{{a, bb}, {a - 1, bb + 1}, {a - 2, bb}, {a - 1, bb - 1}};
  DigitalImage X(q, kAdj8, "X");
  DigitalImage Y(v, kAdj8, "Y");
  std::vector<std::pair<Point, Point>> pairs;
  for (std::size_t i = 0; i < q.size(); ++i) pairs.emplace_back(q[i], v[i % 4]);

  ExpectedVerdicts ex;
  ex.continuous = false;
  ex.surjective = true;
  return {"han", DigitalMap::from_pairs(X, Y, pairs), ex,
          "Finite example; no truncation. Checks past continuity raise NotContinuousError.", {}};
}

Fixture fixture_cycle_cover(int k, int m) {
  if (k < 2 || m < 4) throw std::invalid_argument("cycle-cover needs k >= 2 and m >= 4");
  auto dom = make_cycle_image(k * m);
  auto cod = make_cycle_image(m);
  auto map = DigitalMap::from_function(dom, cod, [&](const Point& p) { return Point{p[0] % m}; });

  ExpectedVerdicts ex;
  ex.continuous = true;
  ex.surjective = true;
  ex.plp = true;
  ex.unique_lifts = true;
  ex.upl = true;
  ex.conciliator_free = true;
  ex.local_iso = true;
  ex.covering = true;
  // Radius 2 needs the 5-point window of C_m to be a path, i.e. m >= 6.
  ex.radius2_covering = m >= 6;
  return {"cycle-cover-" + std::to_string(k) + "-" + std::to_string(m), std::move(map), ex,
          "Z -> C_m modelled by C_" + std::to_string(k * m) + " -> C_" + std::to_string(m) + ".",
          {}};
}

Fixture fixture_wrap_sc26(int k) {
  if (k < 1) throw std::invalid_argument("wrap-sc26 needs k >= 1");
  auto dom = make_cycle_image(5 * k);
  const auto b = sc26_3_5_points();
  auto map = DigitalMap::from_function(dom, sc26_3_5(), [&](const Point& p) { return b[p[0] % 5]; });

  ExpectedVerdicts ex;
  ex.continuous = true;
  ex.surjective = true;
  ex.plp = true;
  ex.unique_lifts = true;
  ex.upl = true;
  ex.conciliator_free = true;
  ex.local_iso = true;
  ex.covering = true;
  ex.radius2_covering = k == 1;
  return {"wrap-sc26-" + std::to_string(k), std::move(map), ex,
          "Z -> SC_26^{3,5} modelled by C_" + std::to_string(5 * k) + ".", {}};
}

std::vector<std::string> fixture_names() {
  return {"pr1", "mod4-ray", "mod3", "mod3-line", "han", "cycle-cover-2-5", "wrap-sc26-2"};
}

std::vector<Fixture> example_fixtures() {
  std::vector<Fixture> out;
  for (const auto& name : fixture_names()) out.push_back(*fixture_by_name(name));
  return out;
}

std::optional<Fixture> fixture_by_name(const std::string& name) {
  if (name == "pr1") return fixture_pr1();
  if (name == "mod4-ray") return fixture_mod4_ray();
  if (name == "mod3") return fixture_mod3(9, DomainModel::Cycle);
  if (name == "mod3-line") return fixture_mod3(9, DomainModel::Line);
  if (name == "han") return fixture_han_example();
  const std::string_view view = name;
  if (view.starts_with("cycle-cover-")) {
    auto rest = view.substr(12);
    auto dash = rest.find('-');
    if (dash == std::string_view::npos) return std::nullopt;
    auto k = parse_int(rest.substr(0, dash));
    auto m = parse_int(rest.substr(dash + 1));
    if (!k || !m || *k < 2 || *m < 4 || *k > 4096 || *m > 4096 || *k * *m > 4096) {
      return std::nullopt;
    }
    return fixture_cycle_cover(*k, *m);
  }
  if (view.starts_with("wrap-sc26-")) {
    auto k = parse_int(view.substr(10));
    if (!k || *k < 1 || *k > 1000) return std::nullopt;
    return fixture_wrap_sc26(*k);
  }
  return std::nullopt;
}

}  // namespace digicover
