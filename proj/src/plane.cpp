#include "gwt/plane.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gwt/errors.hpp"

namespace gwt {

namespace {

bool lex_less(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly constant_in(const MultiPoly& like, long c) {
  return MultiPoly::constant(like.field(), like.vars(), like.field().from_int(c));
}

// g(x0, *, z) as a polynomial in variable `zvar`, for g involving only
// variables 0 and zvar. x0 may lie in an extension.
UPoly restrict_to(const MultiPoly& g, const Elem& x0, int zvar) {
  const Field& big = x0.field();
  std::vector<Elem> c(std::max(g.degree_in(zvar), 0) + 1, big.zero());
  for (const auto& [e, v] : g.terms()) {
    c[e[zvar]] += embed(v, big) * x0.pow(e[0]);
  }
  return UPoly(big, std::move(c));
}

Matrix random_matrix(const Field& k, std::mt19937_64& rng) {
  const std::uint64_t p = k.characteristic();
  for (;;) {
    Matrix a(3, std::vector<Elem>(3));
    for (auto& row : a)
      for (auto& x : row) x = k.from_int(static_cast<long>(rng() % p));
    if (!det(a).is_zero()) return a;
  }
}

Matrix permutation(const Field& k, int i, int j) {
  Matrix a = identity(k, 3);
  std::swap(a[i], a[j]);
  return a;
}

std::vector<Elem> apply(const Matrix& a, const std::vector<Elem>& x) {
  const Field& big = x[0].field();
  std::vector<Elem> out(3, big.zero());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += embed(a[i][j], big) * x[j];
  return out;
}

void require_prime_finite(const MultiPoly& F) {
  if (F.field().kind() != FieldKind::prime)
    throw std::invalid_argument("flex location needs a finite prime base field, got " +
                                F.field().to_string());
}

int residue_degree_of(const std::vector<Elem>& coords, const Field& base) {
  if (!base.is_finite()) return 1;
  int r = 1;
  for (const auto& c : coords) r = std::lcm(r, degree_over(c, base));
  return r;
}

std::vector<ClosedPoint> try_projection(const MultiPoly& F, const Matrix& a, bool& ok) {
  ok = false;
  const Field& k = F.field();
  const MultiPoly G = linear_change(F, a);
  const MultiPoly K = hessian(G);
  const int d = G.total_degree();
  const int e = K.total_degree();
  if (G.coeff({0, 0, d}).is_zero()) return {};
  if (K.coeff({0, 0, e}).is_zero()) return {};
  const MultiPoly one = constant_in(G, 1);
  const MultiPoly g = G.substitute(1, one);
  const MultiPoly h = K.substitute(1, one);
  const UPoly res = sylvester_resultant(g, h, 2).to_univariate(0);
  if (res.is_zero()) throw HypothesisError("F and its Hessian share a component");
  if (res.degree() != d * e) return {};
  std::vector<ClosedPoint> out;
  for (const auto& cp : closed_points_univariate(res)) {
    const Elem& x0 = cp.coords[0];
    const UPoly common = gcd(restrict_to(g, x0, 2), restrict_to(h, x0, 2));
    if (common.degree() < 1) return {};
    // Several points may share a fiber; multiplicities are only determined
    // when the fiber holds one point or every point is simple.
    const auto fiber = factor(common);
    int distinct = 0;
    for (const auto& fac : fiber) distinct += fac.poly.degree();
    int mult;
    if (fiber.size() == 1 && fiber[0].poly.degree() == 1) {
      mult = cp.multiplicity;
    } else if (distinct == common.degree() && distinct == cp.multiplicity) {
      mult = 1;
    } else {
      return {};
    }
    for (const auto& fac : fiber) {
      const int deg = cp.residue_degree * fac.poly.degree();
      const Field big = extension_of(k, deg);
      const Elem z0 = some_root(fac.poly, big);
      auto p = normalize_point(apply(a, {embed(x0, big), big.one(), z0}));
      out.push_back({deg, canonical_representative(p, k, deg), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const ClosedPoint& x, const ClosedPoint& y) {
    if (x.residue_degree != y.residue_degree) return x.residue_degree < y.residue_degree;
    return lex_less(x.coords, y.coords);
  });
  ok = true;
  return out;
}

std::vector<Elem> cross(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero_vec(const std::vector<Elem>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

int permutation_sign(int a, int b, int c) {
  int inversions = (a > b) + (a > c) + (b > c);
  return inversions % 2 == 0 ? 1 : -1;
}

// Minimal dual numbers a + b*eps with eps^2 = 0.
struct Dual {
  Elem a, b;
  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
  }
  friend Dual operator/(const Dual& x, const Dual& y) {
    const Elem inv = y.a.inv();
    return {x.a * inv, (x.b * y.a - x.a * y.b) * inv * inv};
  }
  Dual operator-() const { return {-a, -b}; }
};

// c[i][j]: Taylor coefficient of s^i t^j, i + j <= 3, with c[0][1] a unit.
// Returns (0, b1, b2, b3) for the graph t = b1 s + b2 s^2 + b3 s^3.
template <class T>
std::array<T, 4> solve_graph(const T (&c)[4][4], const T& zero) {
  std::array<T, 4> b{zero, zero, zero, zero};
  for (int k = 1; k <= 3; ++k) {
    // powers of t = sum b_m s^m, truncated at s^3
    std::array<std::array<T, 4>, 4> tp;
    for (auto& row : tp) row.fill(zero);
    tp[0][0] = c[0][1] / c[0][1];
    for (int j = 1; j <= 3; ++j)
      for (int x = 0; x <= 3; ++x)
        for (int m = 1; m + x <= 3; ++m) tp[j][x + m] = tp[j][x + m] + tp[j - 1][x] * b[m];
    T acc = zero;
    for (int i = 0; i <= k; ++i)
      for (int j = 0; i + j <= 3; ++j) {
        if (i == 0 && j == 1) continue;
        if (i == 0 && j == 0) continue;
        acc = acc + c[i][j] * tp[j][k - i];
      }
    b[k] = -(acc / c[0][1]);
  }
  return b;
}

}  // namespace

void require_plane_curve(const MultiPoly& F) {
  const std::uint32_t p = F.field().characteristic();
  if (p == 3) throw std::invalid_argument("characteristic 3 unsupported for plane curves");
  if (p == 2) throw std::invalid_argument("characteristic 2 unsupported");
  if (F.nvars() != 3) throw std::invalid_argument("plane curve needs 3 variables");
  if (F.is_zero() || !F.is_homogeneous())
    throw std::invalid_argument("plane curve must be a nonzero homogeneous form");
}

MultiPoly linear_change(const MultiPoly& F, const Matrix& a) {
  std::vector<MultiPoly> images;
  for (int i = 0; i < 3; ++i) {
    MultiPoly li(F.field(), F.vars());
    for (int j = 0; j < 3; ++j) li += MultiPoly::variable(F.field(), F.vars(), j) * a[i][j];
    images.push_back(li);
  }
  return F.compose(images);
}

std::vector<Elem> normalize_point(std::vector<Elem> p) {
  for (const auto& x : p) {
    if (x.is_zero()) continue;
    const Elem inv = x.inv();
    for (auto& y : p) y *= inv;
    return p;
  }
  throw std::invalid_argument("zero vector is not a projective point");
}

bool check_smooth(const MultiPoly& F) {
  require_plane_curve(F);
  const int d = F.total_degree();
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (d == 1) return true;
  const Field& k = F.field();
  // Move to coordinates where [0:0:1] is off the curve.
  MultiPoly G = F;
  std::mt19937_64 rng(kDefaultSeed);
  for (int attempt = 0; G.coeff({0, 0, d}).is_zero(); ++attempt) {
    if (!k.is_finite()) {
      Matrix a = identity(k, 3);
      a[2][0] = k.from_int(attempt + 1);
      a[2][1] = k.from_int(2 * attempt + 1);
      G = linear_change(F, a);
    } else {
      G = linear_change(F, random_matrix(k, rng));
    }
    if (attempt > 200) throw InconsistencyError("no coordinate change found");
  }
  std::vector<MultiPoly> polys{G};
  for (const auto& g : gradient(G))
    if (!g.is_zero()) polys.push_back(g);
  if (polys.size() == 1) return false;

  // Chart y = 1.
  const MultiPoly one = constant_in(G, 1);
  std::vector<MultiPoly> aff;
  for (const auto& g : polys) aff.push_back(g.substitute(1, one));
  UPoly h(k);
  for (std::size_t i = 1; i < aff.size(); ++i) {
    if (aff[i].is_zero()) continue;
    MultiPoly r = aff[i].degree_in(2) == 0 ? aff[i] : sylvester_resultant(aff[0], aff[i], 2);
    if (r.is_zero()) return false;  // common factor, so F is reducible
    h = gcd(h, r.to_univariate(0));
  }
  if (h.is_zero()) return false;
  if (h.degree() >= 1) {
    if (!k.is_finite()) throw std::invalid_argument("smoothness over Q needs finite field");
    for (const auto& cp : closed_points_univariate(h)) {
      UPoly g(cp.coords[0].field());
      for (const auto& a : aff) g = gcd(g, restrict_to(a, cp.coords[0], 2));
      if (g.is_zero() || g.degree() >= 1) return false;
    }
  }
  // Line y = 0, where [0:0:1] is off the curve, so x = 1.
  const MultiPoly zero = constant_in(G, 0);
  UPoly g(k);
  for (const auto& p : polys) g = gcd(g, restrict_to(p.substitute(1, zero), k.one(), 2));
  return !(g.is_zero() || g.degree() >= 1);
}

std::vector<ClosedPoint> inflection_points(const MultiPoly& F, std::uint64_t seed) {
  require_plane_curve(F);
  require_prime_finite(F);
  if (!check_smooth(F)) throw HypothesisError("curve is not smooth");
  const MultiPoly H = hessian(F);
  if (H.is_zero()) throw HypothesisError("Hessian vanishes identically");
  if (H.is_constant()) return {};
  const Field& k = F.field();
  std::mt19937_64 rng(seed);
  bool ok = false;
  auto pts = try_projection(F, identity(k, 3), ok);
  if (ok) return pts;
  pts = try_projection(F, permutation(k, 1, 2), ok);
  if (ok) return pts;
  for (int attempt = 0; attempt < 64; ++attempt) {
    pts = try_projection(F, random_matrix(k, rng), ok);
    if (ok) return pts;
  }
  throw InconsistencyError("no generic projection found for the flex scheme");
}

BranchExpansion branch_expand(const MultiPoly& F, const std::vector<Elem>& point) {
  require_plane_curve(F);
  if (point.size() != 3) throw std::invalid_argument("plane point needs 3 coordinates");
  BranchExpansion out;
  out.center = normalize_point(point);
  if (!F.eval(out.center).is_zero()) throw std::invalid_argument("point is not on the curve");
  const Field& big = point[0].field();
  out.chart = 2;
  while (out.center[out.chart].is_zero()) --out.chart;
  std::vector<Elem> q = out.center;
  const Elem inv = q[out.chart].inv();
  for (auto& x : q) x *= inv;
  std::vector<int> others;
  for (int i = 0; i < 3; ++i)
    if (i != out.chart) others.push_back(i);

  auto taylor = [&](int par, int gr, int i, int j) { return F.hasse(par, i).hasse(gr, j); };
  out.parameter = others[0];
  out.graph = others[1];
  if (taylor(out.parameter, out.graph, 0, 1).eval(q).is_zero()) {
    std::swap(out.parameter, out.graph);
    if (taylor(out.parameter, out.graph, 0, 1).eval(q).is_zero())
      throw HypothesisError("singular point: both affine partials vanish");
  }
  Elem c[4][4];
  Dual cd[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      c[i][j] = big.zero();
      cd[i][j] = {big.zero(), big.zero()};
    }
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) {
      const MultiPoly t = taylor(out.parameter, out.graph, i, j);
      c[i][j] = t.eval(q);
    }
  const Elem b1 = -c[1][0] / c[0][1];
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) {
      const MultiPoly t = taylor(out.parameter, out.graph, i, j);
      const Elem dz = t.partial(out.parameter).eval(q) + b1 * t.partial(out.graph).eval(q);
      cd[i][j] = {c[i][j], dz};
    }
  const auto b = solve_graph(c, big.zero());
  out.z0 = q[out.parameter];
  out.b = {q[out.graph], b[1], b[2], b[3]};
  const auto bd = solve_graph(cd, Dual{big.zero(), big.zero()});
  if (!(bd[1].a == b[1]) || !(bd[2].a == b[2])) throw InconsistencyError("dual branch solve");
  out.ii_derivative = bd[2].b;
  return out;
}

bool is_contact_line(const MultiPoly& F, const std::vector<Elem>& line) {
  require_plane_curve(F);
  if (line.size() != 3 || is_zero_vec(line)) throw std::invalid_argument("line needs 3 coefficients");
  const Field& k = line[0].field();
  // Two points spanning the line.
  std::vector<std::vector<Elem>> pts;
  for (int i = 0; i < 3 && pts.size() < 2; ++i) {
    std::vector<Elem> e(3, k.zero());
    e[i] = k.one();
    auto q = cross(line, e);
    if (is_zero_vec(q) || (!pts.empty() && is_zero_vec(cross(q, pts[0])))) continue;
    pts.push_back(q);
  }
  // F(s p0 + p1); the point p0 sits at s = infinity.
  std::vector<UPoly> coords;
  for (int i = 0; i < 3; ++i) coords.push_back(UPoly(k, {pts[1][i], pts[0][i]}));
  UPoly h(k);
  for (const auto& [e, c] : F.terms()) {
    UPoly term = UPoly::constant(embed(c, k));
    for (int i = 0; i < 3; ++i)
      for (int r = 0; r < e[i]; ++r) term = term * coords[i];
    h += term;
  }
  if (h.is_zero()) return false;
  if ((F.total_degree() - h.degree()) % 2 != 0) return false;
  for (const auto& fac : factor(h))
    if (fac.multiplicity % 2 != 0) return false;
  return true;
}

std::vector<std::vector<Elem>> contact_lines(const MultiPoly& F) {
  require_plane_curve(F);
  require_prime_finite(F);
  const Field& k = F.field();
  const long p = k.characteristic();
  std::vector<std::vector<Elem>> out;
  auto visit = [&](std::vector<Elem> l) {
    if (is_contact_line(F, l)) out.push_back(std::move(l));
  };
  visit({k.zero(), k.zero(), k.one()});
  for (long b = 0; b < p; ++b) visit({k.zero(), k.one(), k.from_int(b)});
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b) visit({k.one(), k.from_int(a), k.from_int(b)});
  return out;
}

FlexReport flex_index(const MultiPoly& F, const ClosedPoint& p,
                      const std::optional<std::vector<Elem>>& contact) {
  if (p.multiplicity > 1) {
    std::string pt;
    for (const auto& x : p.coords) pt += (pt.empty() ? "" : ":") + x.to_string();
    throw HypothesisError("non-general curve: hyperflex at [" + pt + "]");
  }
  FlexReport r;
  r.point = p;
  r.multiplicity = p.multiplicity;
  r.branch = branch_expand(F, p.coords);
  r.ii_value = r.branch.b[2];
  const Elem& b3 = r.branch.b[3];
  r.ii_derivative = r.branch.ii_derivative;
  if (!r.ii_value.is_zero()) throw InconsistencyError("second fundamental form nonzero at flex");
  if (b3.is_zero()) throw InconsistencyError("III vanishes at a simple flex");
  const Field& big = b3.field();
  const Elem three = big.from_int(3);
  if (!(r.ii_derivative == three * b3))
    throw InconsistencyError("Jacobian of II differs from 3 III");
  r.iii_value = b3;
  if (contact) {
    const auto& c = r.branch.center;
    Elem on_line = big.zero();
    for (int i = 0; i < 3; ++i) on_line += embed((*contact)[i], big) * c[i];
    if (on_line.is_zero()) throw HypothesisError("flex lies on the contact line");
    const int sign = permutation_sign(r.branch.chart, r.branch.parameter, r.branch.graph);
    r.iii_value = b3 * big.from_int(sign) * c[r.branch.chart] * on_line;
    r.oriented = true;
  }
  const int deg = residue_degree_of(p.coords, F.field());
  r.index = trace_form(three * r.iii_value, deg);
  return r;
}

FlexCount enriched_flex_count(const MultiPoly& F, std::uint64_t seed,
                              std::optional<std::vector<Elem>> contact) {
  FlexCount out;
  const int d = F.total_degree();
  const auto pts = inflection_points(F, seed);
  for (const auto& p : pts) {
    if (p.multiplicity > 1) flex_index(F, p);  // throws the hyperflex diagnostic
  }
  if (contact) {
    if (!is_contact_line(F, *contact)) throw std::invalid_argument("not a contact line of the curve");
  } else if (d % 2 == 0) {
    auto lines = contact_lines(F);
    if (!lines.empty()) contact = lines.front();
  }
  out.contact = contact;
  out.total = GWClass(F.field());
  out.total_iii = GWClass(F.field());
  for (const auto& p : pts) {
    auto r = flex_index(F, p, contact);
    out.total += r.index;
    out.total_iii += trace_form(r.iii_value, r.point.residue_degree);
    out.rank += r.point.residue_degree;
    out.reports.push_back(std::move(r));
  }
  out.expected_multiple = 3L * d * (d - 2) / 2;
  if (d % 2 == 0) {
    const GWClass expected = GWClass::hyperbolic(F.field(), out.expected_multiple);
    out.matches = gw_equal(out.total, expected);
    out.matches_iii = gw_equal(out.total_iii, expected);
  }
  return out;
}

bool ff_orientability(int d, bool has_theta) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  return d % 2 == 0 && has_theta;
}

}  // namespace gwt
