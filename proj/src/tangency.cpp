#include "gwt/tangency.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

#include "gwt/errors.hpp"

namespace gwt {

namespace {

int fiber_var(int n) { return 2 * n - 2; }

void require_form(const MultiPoly& F, int n) {
  if (F.nvars() != n + 1) throw std::invalid_argument("form has the wrong number of variables");
  if (F.is_zero() || !F.is_homogeneous()) throw std::invalid_argument("F must be a nonzero form");
}

int residue_degree(const ChartPoint& cp, const Field& base) {
  if (!base.is_finite()) return 1;
  int r = 1;
  for (const auto& c : cp.coords()) r = std::lcm(r, degree_over(c, base));
  return r;
}

std::vector<Elem> cross(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool proportional(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return cross(a, b) == std::vector<Elem>(3, a[0].field().zero());
}

}  // namespace

std::vector<Elem> jet_section(const MultiPoly& F, const PointedLine& pl, const ChartId& c) {
  const int n = pl.n();
  require_form(F, n);
  if (F.total_degree() < 2 * n - 1)
    throw std::invalid_argument("jet section needs degree >= 2n-1");
  if (!chart_membership(pl, c))
    throw std::invalid_argument("pointed line not in chart " + c.to_string());
  const ChartPoint cp = to_chart(pl, c);
  const auto coords = cp.coords();
  const MultiPoly P = beta_pullback(F, c);
  std::vector<Elem> out;
  for (int a = 0; a < 2 * n - 1; ++a) out.push_back(P.hasse(fiber_var(n), a).eval(coords));
  return out;
}

ContactOrder contact_order(const MultiPoly& F, const PointedLine& pl) {
  require_form(F, pl.n());
  const Field& big = pl.field();
  const auto p = pl.point();
  // Second point of the line: a row independent of p.
  std::vector<Elem> q = pl.rows[0];
  bool independent = false;
  for (const auto& row : pl.rows) {
    for (std::size_t i = 0; i < p.size() && !independent; ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (!(p[i] * row[j] - p[j] * row[i]).is_zero()) {
          independent = true;
          break;
        }
    if (independent) {
      q = row;
      break;
    }
  }
  // F(p + t q) as a polynomial in t.
  std::vector<UPoly> line;
  for (std::size_t i = 0; i < p.size(); ++i) line.push_back(UPoly(big, {p[i], q[i]}));
  UPoly h(big);
  for (const auto& [e, c] : F.terms()) {
    UPoly term = UPoly::constant(embed(c, big));
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * line[i];
    h += term;
  }
  if (h.is_zero()) return {true, 0};
  const auto jets = taylor_jets(h, big.zero(), h.degree() + 1);
  int order = 0;
  while (jets[order].is_zero()) ++order;
  return {false, order};
}

Elem jacobian_g(const MultiPoly& F, const ChartPoint& cp) {
  const int n = cp.n();
  require_form(F, n);
  const MultiPoly P = beta_pullback(F, cp.chart);
  const auto coords = cp.coords();
  const int m = 2 * n - 1;
  Matrix a(m);
  for (int r = 0; r < m; ++r) {
    const MultiPoly g = P.hasse(fiber_var(n), r);
    for (int v = 0; v < m; ++v) a[r].push_back(g.partial(v).eval(coords));
  }
  return det(std::move(a));
}

Elem wronskian(const MultiPoly& F, const ChartPoint& cp) {
  const int n = cp.n();
  require_form(F, n);
  const MultiPoly P = beta_pullback(F, cp.chart);
  const auto coords = cp.coords();
  const int m = 2 * n - 1;
  const auto grad = gradient(P);
  Matrix a(m);
  for (int r = 0; r < m; ++r)
    for (int v = 0; v < m; ++v) a[r].push_back(grad[v].hasse(fiber_var(n), r).eval(coords));
  return det(std::move(a));
}

DivisorKind divisor_kind(int d) { return d % 2 == 0 ? DivisorKind::even : DivisorKind::odd; }

bool on_orienting_divisor(const PointedLine& pl, int d) {
  if (plucker(pl, 1, 2).is_zero()) return true;
  return divisor_kind(d) == DivisorKind::odd && marked_coord(pl, 1).is_zero();
}

Elem orientation_factor(const PointedLine& pl, const ChartId& c, int d) {
  if (on_orienting_divisor(pl, d)) throw HypothesisError("orientation undefined on D");
  Elem e = plucker(pl, c.i1, c.i2) / plucker(pl, 1, 2);
  if (d % 2 != 0) e *= marked_coord(pl, c.marked_col()) / marked_coord(pl, 1);
  if (c.l == 2 && pl.n() % 2 != 0) e = -e;
  return e;
}

ChartId first_chart(const PointedLine& pl) {
  for (const auto& c : all_charts(pl.n()))
    if (chart_membership(pl, c)) return c;
  throw std::logic_error("pointed line in no chart");
}

LocalIndexReport wronskian_index(const MultiPoly& F, const PointedLine& pl) {
  const int n = pl.n();
  require_form(F, n);
  const int d = F.total_degree();
  if (d < 2 * n - 1) throw std::invalid_argument("wronskian index needs degree >= 2n-1");
  const Field& k = F.field();
  if (k.is_finite() && k.kind() != FieldKind::prime)
    throw std::invalid_argument("index needs a prime or rational base field");
  const auto co = contact_order(F, pl);
  if (!co.contained && co.order < 2 * n - 1)
    throw std::invalid_argument("not a zero of the jet section: contact order " +
                                std::to_string(co.order));
  LocalIndexReport r;
  r.pointed_line = pl;
  r.chart_used = first_chart(pl);
  r.on_divisor = on_orienting_divisor(pl, d);
  const ChartPoint cp = to_chart(pl, r.chart_used);
  r.residue_degree = residue_degree(cp, k);
  r.wronskian_value = wronskian(F, cp);
  if (r.wronskian_value.is_zero())
    throw HypothesisError(
        "degenerate zero (non-reduced): the zero must be geometrically reduced and separable");
  r.orientation = r.on_divisor ? pl.field().one() : orientation_factor(pl, r.chart_used, d);
  r.index = trace_form(r.orientation * r.wronskian_value, r.residue_degree);
  return r;
}

PointedLine tangent_pointed_line(const MultiPoly& F, const std::vector<Elem>& p) {
  require_plane_curve(F);
  const auto pt = normalize_point(p);
  std::vector<Elem> g;
  for (const auto& gi : gradient(F)) g.push_back(gi.eval(pt));
  const Field& big = pt[0].field();
  if (g == std::vector<Elem>(3, big.zero())) throw HypothesisError("singular point");
  for (int i = 0; i < 3; ++i) {
    std::vector<Elem> e(3, big.zero());
    e[i] = big.one();
    auto q = cross(g, e);
    if (q == std::vector<Elem>(3, big.zero()) || proportional(q, pt)) continue;
    return PointedLine::make({pt, q}, big.one(), big.zero());
  }
  throw std::logic_error("no second point on the tangent line");
}

TangencyCount enriched_count_n2(const MultiPoly& F, std::uint64_t seed,
                                std::optional<std::uint64_t> divisor_seed) {
  require_plane_curve(F);
  const int d = F.total_degree();
  if (d < 3) throw std::invalid_argument("enriched count needs degree >= 3");
  const Field& k = F.field();
  std::mt19937_64 rng(divisor_seed.value_or(0));
  TangencyCount out;
  out.curve = F;
  for (;;) {
    out.flexes = inflection_points(out.curve, seed);
    for (const auto& p : out.flexes)
      if (p.multiplicity > 1)
        throw HypothesisError("non-reduced inflection scheme: the curve is not general");
    out.reports.clear();
    bool collision = false;
    for (const auto& p : out.flexes) {
      auto pl = tangent_pointed_line(out.curve, p.coords);
      if (on_orienting_divisor(pl, d)) {
        collision = true;
        break;
      }
      out.reports.push_back(wronskian_index(out.curve, pl));
    }
    if (!collision) break;
    if (!divisor_seed)
      throw HypothesisError("zero lies on orienting divisor: change coordinates");
    if (++out.coordinate_changes > 64) throw InconsistencyError("divisor collisions persist");
    Matrix a;
    do {
      a.assign(3, std::vector<Elem>(3));
      for (auto& row : a)
        for (auto& x : row) x = k.from_int(static_cast<long>(rng() % k.characteristic()));
    } while (det(a).is_zero());
    out.curve = linear_change(F, a);
  }
  out.total = GWClass(k);
  for (const auto& r : out.reports) {
    out.total += r.index;
    out.rank += r.residue_degree;
  }
  return out;
}

}  // namespace gwt
