#include <doctest.h>

#include <set>

#include "gwt/errors.hpp"
#include "gwt/plane.hpp"
#include "test_helpers.hpp"

using namespace gwt;
using gwt::testing::random_general_curve;

namespace {

MultiPoly curve(const char* text, const Field& f) { return MultiPoly::parse(text, f, 3); }

std::vector<Elem> pt(const Field& f, long a, long b, long c) {
  return {f.from_int(a), f.from_int(b), f.from_int(c)};
}

// All points of P^2 over a finite field, normalized.
std::vector<std::vector<Elem>> projective_plane(const Field& f) {
  std::vector<std::vector<Elem>> out;
  const long q = f.order().get_si();
  out.push_back({f.zero(), f.zero(), f.one()});
  for (long b = 0; b < q; ++b) out.push_back({f.zero(), f.one(), f.element(b)});
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b) out.push_back({f.one(), f.element(a), f.element(b)});
  return out;
}

// Singular points visible over F_{p^k}, k = 1..max_k.
bool brute_smooth(const MultiPoly& F, int max_k) {
  const auto grad = gradient(F);
  for (int k = 1; k <= max_k; ++k) {
    const Field big = extension_of(F.field(), k);
    for (const auto& p : projective_plane(big)) {
      if (!F.eval(p).is_zero()) continue;
      bool sing = true;
      for (const auto& g : grad) sing = sing && g.eval(p).is_zero();
      if (sing) return false;
    }
  }
  return true;
}

// F(z0 + s, b(s)) in the branch chart, as a polynomial in s.
UPoly branch_residual(const MultiPoly& F, const BranchExpansion& br) {
  const Field big = br.b[0].field();
  std::vector<UPoly> coords(3, UPoly::constant(big.one()));
  coords[br.parameter] = UPoly(big, {br.z0, big.one()});
  coords[br.graph] = UPoly(big, {br.b[0], br.b[1], br.b[2], br.b[3]});
  UPoly out(big);
  for (const auto& [e, c] : F.terms()) {
    UPoly t = UPoly::constant(embed(c, big));
    for (int i = 0; i < 3; ++i)
      for (int r = 0; r < e[i]; ++r) t = t * coords[i];
    out += t;
  }
  return out;
}

MultiPoly random_quartic_with_degree2_flex(const Field& f, std::mt19937_64& rng) {
  while (true) {
    MultiPoly F = random_general_curve(f, 4, rng);
    for (const auto& p : inflection_points(F))
      if (p.residue_degree == 2) return F;
  }
}

std::vector<Elem> transform_line(const Matrix& a, const std::vector<Elem>& l) {
  // l(A x) has coefficients A^T l.
  std::vector<Elem> out(3, l[0].field().zero());
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) out[j] += a[i][j] * l[i];
  return out;
}

Matrix random_invertible(const Field& f, std::mt19937_64& rng) {
  while (true) {
    Matrix a(3);
    for (auto& row : a)
      for (int j = 0; j < 3; ++j) row.push_back(gwt::testing::random_elem(f, rng));
    if (!det(a).is_zero()) return a;
  }
}

}  // namespace

TEST_CASE("check_smooth examples") {
  const Field f7 = Field::prime(7);
  CHECK(check_smooth(curve("x0^3+x1^3+x2^3", f7)));
  CHECK_FALSE(check_smooth(curve("x2*x1^2-x0^3", f7)));
  CHECK_FALSE(check_smooth(curve("x0*x1*x2", f7)));
  CHECK(check_smooth(curve("x0^2+x1^2+x2^2", f7)));
  CHECK_FALSE(check_smooth(curve("x0^2+2*x0*x1+x1^2", f7)));
  CHECK_THROWS_AS(check_smooth(curve("x0^3+x1^3+x2^3", Field::prime(3))), std::invalid_argument);
  CHECK_THROWS_AS(check_smooth(MultiPoly::parse("x0^3+x1", f7, 3)), std::invalid_argument);
}

TEST_CASE("check_smooth agrees with enumeration of singular points") {
  const Field f5 = Field::prime(5);
  std::mt19937_64 rng(71);
  int singular = 0;
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly F = gwt::testing::random_form(f5, 3, 3, rng);
    if (trial % 3 == 1) {
      // force a singular point at [0:0:1]
      MultiPoly G(f5, F.vars());
      for (const auto& [e, c] : F.terms())
        if (e[2] < 2) G.add_term(e, c);
      F = G;
    } else if (trial % 3 == 2) {
      F = gwt::testing::random_form(f5, 3, 1, rng) * gwt::testing::random_form(f5, 3, 2, rng);
    }
    if (F.total_degree() != 3) continue;
    const bool expected = brute_smooth(F, 3);
    singular += !expected;
    CHECK(check_smooth(F) == expected);
  }
  CHECK(singular >= 10);
}

TEST_CASE("inflection points of the Fermat cubic over F7") {
  const Field f7 = Field::prime(7);
  const MultiPoly F = curve("x0^3+x1^3+x2^3", f7);
  const auto pts = inflection_points(F);
  // Hessian is 6xyz; enumerate F = xyz = 0.
  std::vector<std::vector<Elem>> brute;
  for (const auto& p : projective_plane(f7))
    if (F.eval(p).is_zero() && (p[0] * p[1] * p[2]).is_zero()) brute.push_back(p);
  REQUIRE(pts.size() == 9);
  REQUIRE(brute.size() == 9);
  std::set<std::vector<Elem>> found;
  for (const auto& p : pts) {
    CHECK(p.residue_degree == 1);
    CHECK(p.multiplicity == 1);
    found.insert(p.coords);
  }
  CHECK(found == std::set<std::vector<Elem>>(brute.begin(), brute.end()));
  CHECK(pts.front().coords == pt(f7, 0, 1, 3));
}

TEST_CASE("Fermat quartic over F13 has only hyperflexes") {
  const Field f13 = Field::prime(13);
  const auto pts = inflection_points(curve("x0^4+x1^4+x2^4", f13));
  int geometric = 0;
  for (const auto& p : pts) {
    CHECK(p.multiplicity == 2);
    geometric += p.residue_degree;
  }
  CHECK(geometric == 12);
  CHECK(pts.size() == 6);
  CHECK(pts.front().residue_degree == 2);
}

TEST_CASE("inflection points of random quartics match enumeration") {
  const Field f13 = Field::prime(13);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2; ++trial) {
    const MultiPoly F = random_general_curve(f13, 4, rng);
    const MultiPoly H = hessian(F);
    const auto pts = inflection_points(F);
    long total = 0;
    std::set<std::vector<Elem>> rational, quadratic;
    for (const auto& p : pts) {
      total += static_cast<long>(p.residue_degree) * p.multiplicity;
      CHECK(F.eval(p.coords).is_zero());
      CHECK(H.eval(p.coords).is_zero());
      if (p.residue_degree == 1) rational.insert(p.coords);
      if (p.residue_degree == 2) {
        for (const auto& q : frobenius_orbit(p.coords, f13, 2)) quadratic.insert(q);
      }
    }
    CHECK(total == 24);
    std::set<std::vector<Elem>> brute1, brute2;
    for (const auto& p : projective_plane(f13))
      if (F.eval(p).is_zero() && H.eval(p).is_zero()) brute1.insert(p);
    const Field f169 = extension_of(f13, 2);
    for (const auto& p : projective_plane(f169)) {
      if (!F.eval(p).is_zero() || !H.eval(p).is_zero()) continue;
      bool in_base = true;
      for (const auto& x : p) in_base = in_base && degree_over(x, f13) == 1;
      if (!in_base) brute2.insert(p);
    }
    CHECK(rational == brute1);
    CHECK(quadratic == brute2);
  }
}

TEST_CASE("inflection_points errors") {
  const Field f7 = Field::prime(7);
  CHECK_THROWS_AS(inflection_points(curve("x2*x1^2-x0^3", f7)), HypothesisError);
  CHECK_THROWS_AS(inflection_points(curve("x0^3+x1^3+x2^3", Field::rationals())),
                  std::invalid_argument);
  CHECK(inflection_points(curve("x0^2+x1^2+x2^2", f7)).empty());
}

TEST_CASE("branch_expand examples") {
  const Field f7 = Field::prime(7);
  const auto parabola = branch_expand(curve("x1*x2-x0^2", f7), pt(f7, 0, 0, 1));
  CHECK(parabola.b == std::array<Elem, 4>{f7.zero(), f7.zero(), f7.one(), f7.zero()});
  CHECK(parabola.parameter == 0);
  const auto cubic = branch_expand(curve("x1*x2^2-x0^3", f7), pt(f7, 0, 0, 1));
  CHECK(cubic.b == std::array<Elem, 4>{f7.zero(), f7.zero(), f7.zero(), f7.one()});

  // x^3 + y^3 + 1 = 0 near (0, -1): y = -(1 + x^3)^(1/3), so b3 = -1/3 = 2.
  const auto fermat = branch_expand(curve("x0^3+x1^3+x2^3", f7), pt(f7, 0, 1, -1));
  CHECK(fermat.chart == 2);
  CHECK(fermat.b[0] == f7.from_int(6));
  CHECK(fermat.b[2].is_zero());
  CHECK(fermat.b[3] == f7.from_int(2));

  CHECK_THROWS_AS(branch_expand(curve("x2*x1^2-x0^3", f7), pt(f7, 0, 0, 1)), HypothesisError);
  CHECK_THROWS_AS(branch_expand(curve("x0^3+x1^3+x2^3", f7), pt(f7, 1, 1, 1)),
                  std::invalid_argument);
}

TEST_CASE("branch expansion solves the curve to order three") {
  const Field f13 = Field::prime(13);
  std::mt19937_64 rng(5);
  const MultiPoly F = random_general_curve(f13, 4, rng);
  int checked = 0;
  for (const auto& p : projective_plane(f13)) {
    if (!F.eval(p).is_zero()) continue;
    const auto br = branch_expand(F, p);
    const UPoly r = branch_residual(F, br);
    for (int i = 0; i < 4; ++i) CHECK(r.coeff(i).is_zero());
    ++checked;
  }
  CHECK(checked > 5);
}

TEST_CASE("II vanishes exactly at the inflection points") {
  const Field f13 = Field::prime(13);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 2; ++trial) {
    const MultiPoly F = random_general_curve(f13, 4, rng);
    std::set<std::vector<Elem>> flexes;
    for (const auto& p : inflection_points(F))
      if (p.residue_degree == 1) flexes.insert(p.coords);
    for (const auto& p : projective_plane(f13)) {
      if (!F.eval(p).is_zero()) continue;
      const auto br = branch_expand(F, p);
      CHECK(br.b[2].is_zero() == (flexes.count(p) == 1));
    }
  }
}

TEST_CASE("flex_index examples") {
  const Field f7 = Field::prime(7);
  const auto r = flex_index(curve("x1*x2^2-x0^3", f7), {1, pt(f7, 0, 0, 1), 1});
  CHECK(r.iii_value == f7.one());
  CHECK(gw_equal(r.index, GWClass::unit(f7.from_int(3))));
  CHECK(invariants(r.index).disc.sign == -1);

  const MultiPoly fermat = curve("x0^3+x1^3+x2^3", f7);
  for (const auto& p : inflection_points(fermat)) {
    const auto fr = flex_index(fermat, p);
    CHECK(fr.index.rank() == 1);
    CHECK(fr.ii_value.is_zero());
    CHECK(fr.ii_derivative == f7.from_int(3) * fr.iii_value);
    CHECK(gw_equal(fr.index, GWClass::unit(f7.from_int(3) * fr.iii_value)));
  }

  const Field f13 = Field::prime(13);
  const auto hyper = inflection_points(curve("x0^4+x1^4+x2^4", f13));
  CHECK_THROWS_AS(flex_index(curve("x0^4+x1^4+x2^4", f13), hyper[0]), HypothesisError);
}

TEST_CASE("flex of residue degree two gives a rank two trace form") {
  const Field f13 = Field::prime(13);
  std::mt19937_64 rng(99);
  const MultiPoly F = random_quartic_with_degree2_flex(f13, rng);
  for (const auto& p : inflection_points(F)) {
    if (p.residue_degree != 2) continue;
    const auto r = flex_index(F, p);
    CHECK(r.index.rank() == 2);
    CHECK(r.ii_derivative == r.iii_value.field().from_int(3) * r.iii_value);
    CHECK(gw_equal(r.index, trace_form(r.iii_value.field().from_int(3) * r.iii_value, 2)));
  }
}

TEST_CASE("contact lines") {
  const Field f13 = Field::prime(13);
  // q^2 + z c: the line z = 0 meets the curve in the double conic section.
  std::mt19937_64 rng(17);
  const MultiPoly q = curve("x0^2+2*x1^2+3*x0*x1+x2^2", f13);
  MultiPoly G;
  do {
    G = q * q + curve("x2", f13) * gwt::testing::random_form(f13, 3, 3, rng);
  } while (!check_smooth(G));
  const std::vector<Elem> z = {f13.zero(), f13.zero(), f13.one()};
  CHECK(is_contact_line(G, z));
  const auto lines = contact_lines(G);
  CHECK(std::find(lines.begin(), lines.end(), z) != lines.end());
  for (const auto& l : lines) CHECK(is_contact_line(G, l));
  CHECK_FALSE(is_contact_line(curve("x0^3+x1^3+x2^3", Field::prime(7)),
                              pt(Field::prime(7), 1, 0, 0)));
}

TEST_CASE("oriented flex index is independent of coordinates") {
  const Field f13 = Field::prime(13);
  std::mt19937_64 rng(31);
  int oriented_curves = 0;
  while (oriented_curves < 2) {
    const MultiPoly F = random_general_curve(f13, 4, rng);
    const auto lines = contact_lines(F);
    if (lines.empty()) continue;
    ++oriented_curves;
    const Matrix a = random_invertible(f13, rng);
    const Matrix ainv = inverse(a);
    const MultiPoly G = linear_change(F, a);
    const auto line = transform_line(a, lines.front());
    REQUIRE(is_contact_line(G, line));
    for (const auto& p : inflection_points(F)) {
      const auto before = flex_index(F, p, lines.front());
      const Field big = p.coords[0].field();
      std::vector<Elem> q(3, big.zero());
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q[i] += embed(ainv[i][j], big) * p.coords[j];
      const ClosedPoint moved{p.residue_degree,
                              canonical_representative(normalize_point(q), f13, p.residue_degree), 1};
      const auto after = flex_index(G, moved, line);
      CHECK(before.oriented);
      CHECK(gw_equal(before.index, after.index));
    }
  }
}

TEST_CASE("enriched flex count") {
  const Field f7 = Field::prime(7);
  const auto conic = enriched_flex_count(curve("x0^2+x1^2+x2^2", f7));
  CHECK(conic.reports.empty());
  CHECK(conic.total.is_zero());
  CHECK(conic.expected_multiple == 0);
  CHECK(conic.matches == true);

  const auto fermat = enriched_flex_count(curve("x0^3+x1^3+x2^3", f7));
  CHECK(fermat.total.rank() == 9);
  CHECK(fermat.rank == 9);
  CHECK_FALSE(fermat.matches.has_value());

  const Field f13 = Field::prime(13);
  CHECK_THROWS_AS(enriched_flex_count(curve("x0^4+x1^4+x2^4", f13)), HypothesisError);

  std::mt19937_64 rng(13);
  int oriented = 0;
  while (oriented < 2) {
    const MultiPoly F = random_general_curve(f13, 4, rng);
    const auto c = enriched_flex_count(F);
    CHECK(c.total.rank() == 24);
    CHECK(c.total_iii.rank() == 24);
    if (!c.contact) continue;
    ++oriented;
    CHECK(c.matches == true);
    CHECK(c.matches_iii == true);
    CHECK(invariants(c.total).disc.sign == 1);
  }
}

TEST_CASE("ff_orientability") {
  CHECK(ff_orientability(4, true));
  CHECK_FALSE(ff_orientability(3, true));
  CHECK_FALSE(ff_orientability(4, false));
  CHECK_THROWS_AS(ff_orientability(0, true), std::invalid_argument);
}
