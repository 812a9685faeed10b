#include <doctest.h>

#include "gwt/flag.hpp"
#include "gwt/oracles.hpp"
#include "test_helpers.hpp"

using namespace gwt;
using gwt::testing::random_line;
using gwt::testing::random_line_in;

namespace {
Matrix rows_of(const Field& f, std::vector<std::vector<long>> v) {
  Matrix m;
  for (auto& r : v) {
    std::vector<Elem> row;
    for (long x : r) row.push_back(f.from_int(x));
    m.push_back(row);
  }
  return m;
}

// Same projective pointed line: rows span the same plane, same marked point.
bool same_pointed_line(const PointedLine& a, const PointedLine& b) {
  const int n = a.n();
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j)
      for (int k = 1; k <= n + 1; ++k)
        for (int l = k + 1; l <= n + 1; ++l)
          if (!(plucker(a, i, j) * plucker(b, k, l) == plucker(a, k, l) * plucker(b, i, j))) return false;
  const auto p = a.point(), q = b.point();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (!(p[i] * q[j] == p[j] * q[i])) return false;
  return true;
}
}  // namespace

TEST_CASE("chart_membership") {
  const Field f = Field::prime(101);
  const PointedLine e = PointedLine::make(rows_of(f, {{1, 0, 0}, {0, 1, 0}}), f.one(), f.zero());
  CHECK(chart_membership(e, {1, 2, 1}));
  CHECK_FALSE(chart_membership(e, {1, 2, 2}));
  for (long y1 : {0L, 1L, 5L})
    for (long y2 : {1L, 3L}) {
      const PointedLine g = PointedLine::make(rows_of(f, {{1, 0, 0}, {0, 1, 0}}), f.from_int(y1), f.from_int(y2));
      CHECK_FALSE(chart_membership(g, {1, 3, 1}));
      CHECK_FALSE(chart_membership(g, {1, 3, 2}));
    }
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const PointedLine pl = random_line(f, 3, rng);
    bool any = false;
    for (const auto& c : all_charts(3)) any = any || chart_membership(pl, c);
    CHECK(any);
  }
  CHECK_THROWS(PointedLine::make(rows_of(f, {{1, 2, 3}, {2, 4, 6}}), f.one(), f.one()));
  CHECK_THROWS(PointedLine::make(rows_of(f, {{1, 0, 0}, {0, 1, 0}}), f.zero(), f.zero()));
}

TEST_CASE("to_chart and from_chart") {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(2);
  for (int n : {2, 3, 4}) {
    for (const auto& c : all_charts(n)) {
      for (int t = 0; t < 200 / static_cast<int>(all_charts(n).size()) + 1; ++t) {
        const PointedLine pl = random_line_in(f, n, c, rng);
        const ChartPoint cp = to_chart(pl, c);
        CHECK(static_cast<int>(cp.coords().size()) == 2 * n - 1);
        CHECK(same_pointed_line(from_chart(cp), pl));
        CHECK(to_chart(from_chart(cp), c) == cp);
        // Rescaling rows, mixing rows, rescaling the point: same coordinates.
        const Elem s = testing::random_nonzero(f, rng), r = testing::random_nonzero(f, rng);
        PointedLine scaled = pl;
        for (auto& e : scaled.rows[0]) e *= s;
        scaled.y1 = scaled.y1 / s * r;
        scaled.y2 *= r;
        CHECK(to_chart(scaled, c) == cp);
        PointedLine mixed = pl;
        for (std::size_t i = 0; i < mixed.rows[0].size(); ++i) mixed.rows[1][i] += s * mixed.rows[0][i];
        mixed.y1 = pl.y1 - s * pl.y2;
        CHECK(to_chart(mixed, c) == cp);
      }
    }
  }
  const PointedLine e = PointedLine::make(rows_of(f, {{1, 0, 0}, {0, 1, 0}}), f.one(), f.one());
  const ChartPoint cp = to_chart(e, {1, 2, 2});
  CHECK(cp.grassmann[0].is_zero());
  CHECK(cp.grassmann[1].is_zero());
  CHECK(cp.fiber == f.one());
  CHECK_THROWS(to_chart(e, {1, 3, 1}));
}

TEST_CASE("coordinates on U_{(n,n+1),2} follow the quotient formulas") {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(3);
  const ChartId c{2, 3, 2};
  for (int t = 0; t < 50; ++t) {
    const PointedLine pl = random_line_in(f, 2, c, rng);
    auto x = [&](int r, int i) { return pl.rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(i - 1)]; };
    const Elem w = x(1, 2) * x(2, 3) - x(1, 3) * x(2, 2);
    const ChartPoint cp = to_chart(pl, c);
    CHECK(cp.grassmann[0] == (x(1, 1) * x(2, 3) - x(2, 1) * x(1, 3)) / w);
    CHECK(cp.grassmann[1] == (x(2, 1) * x(1, 2) - x(1, 1) * x(2, 2)) / w);
    CHECK(cp.fiber == (pl.y1 * x(1, 2) + pl.y2 * x(2, 2)) / (pl.y1 * x(1, 3) + pl.y2 * x(2, 3)));
  }
}

TEST_CASE("beta_chart and beta_pullback") {
  const Field f = Field::prime(101);
  const ChartId c2{2, 3, 2};
  auto cp = ChartPoint::from_coords(c2, {f.zero(), f.zero(), f.zero()});
  CHECK(beta_chart(cp) == std::vector<Elem>{f.zero(), f.zero()});
  cp = ChartPoint::from_coords(c2, {f.one(), f.one(), f.one()});
  CHECK(beta_chart(cp) == std::vector<Elem>{f.from_int(2), f.one()});
  const ChartId c3{3, 4, 2};
  std::vector<Elem> v{f.from_int(2), f.from_int(3), f.from_int(5), f.from_int(7), f.from_int(11)};
  cp = ChartPoint::from_coords(c3, v);
  CHECK(beta_chart(cp) == std::vector<Elem>{f.from_int(25), f.from_int(62), f.from_int(11)});
  CHECK_THROWS(beta_chart(ChartPoint::from_coords({1, 2, 1}, v)));
  // The homogeneous beta of the general path agrees on the fast-path chart.
  auto h = beta(cp);
  CHECK(h[3] == f.one());
  CHECK(std::vector<Elem>(h.begin(), h.end() - 1) == beta_chart(cp));

  const auto vars = chart_vars(2);
  CHECK(beta_pullback(MultiPoly::parse("x2", f, 3), c2) == MultiPoly::constant(f, vars, f.one()));
  CHECK(beta_pullback(MultiPoly::parse("x1", f, 3), c2) == MultiPoly::variable(f, vars, 2));
  const MultiPoly x11 = MultiPoly::variable(f, vars, 0), x21 = MultiPoly::variable(f, vars, 1),
                  u = MultiPoly::variable(f, vars, 2);
  CHECK(beta_pullback(MultiPoly::parse("x0^3 + x1^3 + x2^3", f), c2) ==
        (x11 * u + x21).pow(3) + u.pow(3) + MultiPoly::constant(f, vars, f.one()));
  CHECK_THROWS(beta_pullback(MultiPoly::parse("x0^2 + x1", f, 3), c2));

  // beta_pullback agrees with F(beta(cp)) in every chart.
  std::mt19937_64 rng(4);
  const MultiPoly F = testing::random_form(f, 4, 3, rng);
  for (const auto& c : all_charts(3)) {
    const MultiPoly pb = beta_pullback(F, c);
    for (int t = 0; t < 5; ++t) {
      const auto pl = random_line_in(f, 3, c, rng);
      const auto chp = to_chart(pl, c);
      CHECK(pb.eval(chp.coords()) == F.eval(beta(chp)));
    }
  }
}

TEST_CASE("transition_jacobian") {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(5);
  for (int n : {2, 3}) {
    const auto charts = all_charts(n);
    for (int t = 0; t < 50; ++t) {
      const PointedLine pl = random_line(f, n, rng);
      std::vector<ChartId> mine;
      for (const auto& c : charts)
        if (chart_membership(pl, c)) mine.push_back(c);
      REQUIRE(mine.size() >= 3);
      const ChartId a = mine[rng() % mine.size()], b = mine[rng() % mine.size()], c = mine[rng() % mine.size()];
      CHECK(transition_jacobian(a, a, pl) == f.one());
      CHECK(transition_jacobian(a, b, pl) == symbolic_transition_jacobian(a, b, pl));
      CHECK(transition_jacobian(a, c, pl) == transition_jacobian(a, b, pl) * transition_jacobian(b, c, pl));
      const Elem ratio = plucker(pl, a.i1, a.i2) / plucker(pl, b.i1, b.i2);
      const Elem rest = transition_jacobian(a, b, pl) / ratio.pow(n) * f.from_int((a.l + b.l) % 2 ? -1 : 1);
      CHECK(is_square(rest));
      if (n % 2 == 0 && (a.l + b.l) % 2 == 0) CHECK(is_square(transition_jacobian(a, b, pl)));
    }
  }
  const PointedLine e = PointedLine::make(rows_of(f, {{1, 0, 0}, {0, 1, 0}}), f.one(), f.zero());
  CHECK_THROWS(transition_jacobian({1, 2, 1}, {1, 3, 1}, e));
}

TEST_CASE("text formats") {
  const Field f = Field::prime(7);
  const PointedLine pl = PointedLine::parse("0 1 6 / 1 0 0 ; 1 0", f);
  CHECK(pl.n() == 2);
  CHECK(pl.point() == std::vector<Elem>{f.zero(), f.one(), f.from_int(6)});
  CHECK(PointedLine::parse(pl.to_string(), f).rows == pl.rows);
  CHECK(PointedLine::parse("0,1,6/1,0,0;1,0", f).rows == pl.rows);
  CHECK_THROWS(PointedLine::parse("0 1 6 ; 1 0", f));
  CHECK_THROWS(PointedLine::parse("0 1 6 / 1 0 ; 1 0", f));
  CHECK(ChartId::parse("I=1,3;l=2") == ChartId{1, 3, 2});
  CHECK(ChartId::parse("I=2,3;l=1").to_string() == "I=2,3;l=1");
  CHECK_THROWS(ChartId::parse("I=3,1;l=1"));
  CHECK_THROWS(ChartId::parse("I=1,2;l=3"));
  CHECK_THROWS(ChartId::parse("I=1,2;l=1x"));
}
