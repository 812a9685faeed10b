#include "gwt/flag.hpp"

#include <cctype>
#include <stdexcept>

#include "gwt/upoly.hpp"

namespace gwt {

namespace {

std::vector<std::string> split_tokens(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

const Elem& col(const PointedLine& pl, int row, int c) {
  return pl.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(c - 1)];
}

}  // namespace

PointedLine PointedLine::make(Matrix rows, Elem y1, Elem y2) {
  if (rows.size() != 2 || rows[0].size() != rows[1].size() || rows[0].size() < 2) {
    throw std::invalid_argument("pointed line needs two rows of equal length >= 2");
  }
  PointedLine pl{std::move(rows), std::move(y1), std::move(y2)};
  const Field f = pl.y1.field();
  for (const auto& r : pl.rows)
    for (const auto& e : r)
      if (!(e.field() == f)) throw std::invalid_argument("pointed line entries from different fields");
  bool rank2 = false;
  for (int i = 1; i <= pl.n() + 1 && !rank2; ++i)
    for (int j = i + 1; j <= pl.n() + 1 && !rank2; ++j) rank2 = !plucker(pl, i, j).is_zero();
  if (!rank2) throw std::invalid_argument("rows do not span a line");
  bool nonzero = false;
  for (const auto& e : pl.point()) nonzero = nonzero || !e.is_zero();
  if (!nonzero) throw std::invalid_argument("marked point is zero");
  return pl;
}

PointedLine PointedLine::parse(std::string_view text, const Field& f) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("pointed line needs ';' before y1 y2");
  const auto head = text.substr(0, semi);
  const auto slash = head.find('/');
  if (slash == std::string_view::npos) throw std::invalid_argument("pointed line needs '/' between rows");
  auto parse_row = [&](std::string_view s) {
    std::vector<Elem> r;
    for (const auto& t : split_tokens(s)) r.push_back(f.parse_element(t));
    return r;
  };
  Matrix rows{parse_row(head.substr(0, slash)), parse_row(head.substr(slash + 1))};
  auto y = parse_row(text.substr(semi + 1));
  if (y.size() != 2) throw std::invalid_argument("pointed line needs exactly two point coefficients");
  return make(std::move(rows), y[0], y[1]);
}

std::vector<Elem> PointedLine::point() const {
  std::vector<Elem> p;
  for (std::size_t i = 0; i < rows[0].size(); ++i) p.push_back(y1 * rows[0][i] + y2 * rows[1][i]);
  return p;
}

PointedLine PointedLine::embed(const Field& target) const {
  PointedLine pl = *this;
  for (auto& r : pl.rows)
    for (auto& e : r) e = gwt::embed(e, target);
  pl.y1 = gwt::embed(y1, target);
  pl.y2 = gwt::embed(y2, target);
  return pl;
}

std::string PointedLine::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < 2; ++r) {
    if (r == 1) out += " / ";
    for (std::size_t i = 0; i < rows[r].size(); ++i) out += (i ? " " : "") + rows[r][i].to_string();
  }
  return out + " ; " + y1.to_string() + " " + y2.to_string();
}

ChartId ChartId::parse(std::string_view text) {
  ChartId c;
  char extra = 0;
  const std::string s(text);
  if (std::sscanf(s.c_str(), "I=%d,%d;l=%d%c", &c.i1, &c.i2, &c.l, &extra) != 3) {
    throw std::invalid_argument("bad chart id: " + s);
  }
  if (c.i1 < 1 || c.i1 >= c.i2 || (c.l != 1 && c.l != 2)) throw std::invalid_argument("bad chart id: " + s);
  return c;
}

std::string ChartId::to_string() const {
  return "I=" + std::to_string(i1) + "," + std::to_string(i2) + ";l=" + std::to_string(l);
}

std::vector<Elem> ChartPoint::coords() const {
  std::vector<Elem> c = grassmann;
  c.push_back(fiber);
  return c;
}

ChartPoint ChartPoint::from_coords(const ChartId& c, const std::vector<Elem>& coords) {
  if (coords.size() % 2 == 0 || coords.size() < 3) throw std::invalid_argument("chart point needs 2n-1 coordinates");
  ChartPoint cp{c, std::vector<Elem>(coords.begin(), coords.end() - 1), coords.back()};
  if (c.i2 > cp.n() + 1) throw std::invalid_argument("chart does not fit the dimension");
  return cp;
}

std::vector<ChartId> all_charts(int n) {
  std::vector<ChartId> out;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j)
      for (int l = 1; l <= 2; ++l) out.push_back({i, j, l});
  return out;
}

std::vector<int> free_columns(const ChartId& c, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n + 1; ++i)
    if (i != c.i1 && i != c.i2) out.push_back(i);
  return out;
}

std::vector<std::string> chart_vars(int n) {
  std::vector<std::string> v;
  for (int j = 1; j < n; ++j) {
    v.push_back("x1_" + std::to_string(j));
    v.push_back("x2_" + std::to_string(j));
  }
  v.push_back("u");
  return v;
}

Elem plucker(const PointedLine& pl, int i, int j) {
  return col(pl, 0, i) * col(pl, 1, j) - col(pl, 0, j) * col(pl, 1, i);
}

Elem marked_coord(const PointedLine& pl, int i) { return pl.y1 * col(pl, 0, i) + pl.y2 * col(pl, 1, i); }

bool chart_membership(const PointedLine& pl, const ChartId& c) {
  if (c.i2 > pl.n() + 1) return false;
  return !plucker(pl, c.i1, c.i2).is_zero() && !marked_coord(pl, c.marked_col()).is_zero();
}

ChartPoint to_chart(const PointedLine& pl, const ChartId& c) {
  if (!chart_membership(pl, c)) throw std::domain_error("pointed line is not in chart " + c.to_string());
  const Elem w = plucker(pl, c.i1, c.i2);
  const Elem winv = w.inv();
  // R = A^{-1} M with A = M[:, I] = [[a, b], [c, d]].
  const Elem &a = col(pl, 0, c.i1), &b = col(pl, 0, c.i2), &cc = col(pl, 1, c.i1), &d = col(pl, 1, c.i2);
  ChartPoint cp;
  cp.chart = c;
  for (int j : free_columns(c, pl.n())) {
    const Elem &m0 = col(pl, 0, j), &m1 = col(pl, 1, j);
    cp.grassmann.push_back((d * m0 - b * m1) * winv);
    cp.grassmann.push_back((a * m1 - cc * m0) * winv);
  }
  cp.fiber = marked_coord(pl, c.other_col()) / marked_coord(pl, c.marked_col());
  return cp;
}

PointedLine from_chart(const ChartPoint& cp) {
  const int n = cp.n();
  const Field f = cp.fiber.field();
  Matrix rows(2, std::vector<Elem>(static_cast<std::size_t>(n + 1), f.zero()));
  rows[0][static_cast<std::size_t>(cp.chart.i1 - 1)] = f.one();
  rows[1][static_cast<std::size_t>(cp.chart.i2 - 1)] = f.one();
  const auto cols = free_columns(cp.chart, n);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    rows[0][static_cast<std::size_t>(cols[k] - 1)] = cp.grassmann[2 * k];
    rows[1][static_cast<std::size_t>(cols[k] - 1)] = cp.grassmann[2 * k + 1];
  }
  const Elem y_marked = f.one(), y_other = cp.fiber;
  return cp.chart.l == 1 ? PointedLine::make(std::move(rows), y_marked, y_other)
                         : PointedLine::make(std::move(rows), y_other, y_marked);
}

std::vector<Elem> beta_chart(const ChartPoint& cp) {
  const int n = cp.n();
  if (!(cp.chart == ChartId{n, n + 1, 2})) {
    throw std::invalid_argument("beta_chart is only defined on the chart ((n,n+1),2)");
  }
  std::vector<Elem> p;
  for (int j = 0; j + 1 < n; ++j) {
    p.push_back(cp.grassmann[static_cast<std::size_t>(2 * j)] * cp.fiber +
                cp.grassmann[static_cast<std::size_t>(2 * j + 1)]);
  }
  p.push_back(cp.fiber);
  return p;
}

std::vector<Elem> beta(const ChartPoint& cp) { return from_chart(cp).point(); }

std::vector<MultiPoly> beta_polys(const Field& f, const ChartId& c, int n) {
  const auto vars = chart_vars(n);
  const int nv = 2 * n - 1;
  const MultiPoly one = MultiPoly::constant(f, vars, f.one());
  const MultiPoly u = MultiPoly::variable(f, vars, nv - 1);
  std::vector<MultiPoly> z(static_cast<std::size_t>(n + 1), MultiPoly(f, vars));
  z[static_cast<std::size_t>(c.marked_col() - 1)] = one;
  z[static_cast<std::size_t>(c.other_col() - 1)] = u;
  // y = (1, u) for l = 1 and (u, 1) for l = 2.
  const auto cols = free_columns(c, n);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const MultiPoly x1 = MultiPoly::variable(f, vars, static_cast<int>(2 * k));
    const MultiPoly x2 = MultiPoly::variable(f, vars, static_cast<int>(2 * k + 1));
    z[static_cast<std::size_t>(cols[k] - 1)] = c.l == 1 ? x1 + u * x2 : u * x1 + x2;
  }
  return z;
}

MultiPoly beta_pullback(const MultiPoly& F, const ChartId& c) {
  if (!F.is_homogeneous()) throw std::invalid_argument("beta pullback needs a homogeneous polynomial");
  const int n = F.nvars() - 1;
  if (n < 1 || c.i2 > n + 1) throw std::invalid_argument("chart does not fit the polynomial's P^n");
  return F.compose(beta_polys(F.field(), c, n));
}

Elem transition_jacobian(const ChartId& from, const ChartId& to, const PointedLine& pl) {
  if (!chart_membership(pl, from) || !chart_membership(pl, to)) {
    throw std::domain_error("pointed line is not in both charts");
  }
  const Elem ratio = plucker(pl, from.i1, from.i2) / plucker(pl, to.i1, to.i2);
  const Elem marks = marked_coord(pl, from.marked_col()) / marked_coord(pl, to.marked_col());
  Elem v = ratio.pow(pl.n()) * marks * marks;
  return (from.l + to.l) % 2 ? -v : v;
}

}  // namespace gwt
