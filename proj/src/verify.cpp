#include "gwt/verify.hpp"

#include <random>
#include <sstream>

#include "gwt/gw.hpp"
#include "gwt/oracles.hpp"
#include "gwt/sampling.hpp"
#include "gwt/tangency.hpp"

namespace gwt {

namespace {

using namespace gwt::sampling;

struct Tally {
  VerifyResult& res;
  void check(bool ok, const std::string& what) {
    ++res.checks;
    if (ok) return;
    if (res.failures++ == 0) res.first_counterexample = what;
  }
};

int pick_n(const VerifyOptions& opt, int trial) { return opt.n ? *opt.n : 2 + trial % 2; }

void run_wronskian_jacobian(const VerifyOptions& opt, std::mt19937_64& rng, Tally& t) {
  const Field f = opt.field ? *opt.field : Field::prime(101);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const int n = pick_n(opt, trial);
    const int d = opt.degree ? *opt.degree : n + 2;
    const MultiPoly F = random_form(f, n + 1, d, rng);
    const auto charts = all_charts(n);
    const ChartId c = charts[rng() % charts.size()];
    const ChartPoint cp = to_chart(random_line_in(f, n, c, rng), c);
    Elem jac = jacobian_g(F, cp);
    if (opt.corrupt) jac = jac + f.one();
    const Elem wr = wronskian(F, cp);
    t.check(jac == wr, "F = " + F.to_string() + ", chart " + c.to_string() + ", line " +
                           from_chart(cp).to_string() + ": jacobian " + jac.to_string() +
                           " != wronskian " + wr.to_string());
  }
}

void run_transition(const VerifyOptions& opt, std::mt19937_64& rng, Tally& t) {
  const Field f = opt.field ? *opt.field : Field::prime(101);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const int n = pick_n(opt, trial);
    const auto charts = all_charts(n);
    const ChartId from = charts[rng() % charts.size()];
    const ChartId to = charts[rng() % charts.size()];
    PointedLine pl = random_line_in(f, n, from, rng);
    while (!chart_membership(pl, to)) pl = random_line_in(f, n, from, rng);
    Elem closed = transition_jacobian(from, to, pl);
    if (opt.corrupt) closed = -closed;
    const Elem symbolic = symbolic_transition_jacobian(from, to, pl);
    t.check(closed == symbolic, from.to_string() + " -> " + to.to_string() + " at " + pl.to_string() +
                                    ": closed form " + closed.to_string() + " != " + symbolic.to_string());
  }
}

MultiPoly sparse_poly(const Field& f, int nvars, int max_deg, int terms, std::mt19937_64& rng) {
  MultiPoly p(f, MultiPoly::standard_vars(nvars));
  for (int k = 0; k < terms; ++k) {
    MultiPoly::Exponents e(static_cast<std::size_t>(nvars));
    for (auto& x : e) x = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    p.add_term(e, random_elem(f, rng));
  }
  return p;
}

// Composition law, Taylor reconstruction, and D_u^(a) commuting with the
// partials in the other variables.
void run_taylor(const VerifyOptions& opt, std::mt19937_64& rng, Tally& t) {
  const std::vector<Field> fields = opt.field ? std::vector<Field>{*opt.field}
                                              : std::vector<Field>{Field::prime(3), Field::prime(5),
                                                                   Field::prime(7), Field::rationals()};
  for (int trial = 0; trial < opt.trials; ++trial) {
    const Field& f = fields[static_cast<std::size_t>(trial) % fields.size()];
    const int deg = opt.degree ? *opt.degree : static_cast<int>(rng() % 16);
    const UPoly g = random_upoly(f, deg, rng);
    const int a = static_cast<int>(rng() % 8), b = static_cast<int>(rng() % 8);
    Elem coef = f.from_mpz(binomial(a + b, a));
    if (opt.corrupt) coef = coef + f.one();
    t.check(g.hasse(a).hasse(b) == g.hasse(a + b) * coef,
            "composition fails for " + g.to_string() + " over " + f.to_string() + " at a=" +
                std::to_string(a) + ", b=" + std::to_string(b));

    const Elem c = random_elem(f, rng);
    const auto jets = taylor_jets(g, c, g.degree() + 1);
    const UPoly shift(f, {-c, f.one()});
    UPoly acc(f), power = UPoly::constant(f.one());
    for (const auto& j : jets) {
      acc += power * j;
      power = power * shift;
    }
    t.check(acc == g, "Taylor reconstruction fails for " + g.to_string() + " over " + f.to_string() +
                          " at " + c.to_string());

    const MultiPoly h = sparse_poly(f, 3, 6, 5, rng);
    const int v = static_cast<int>(rng() % 2);
    t.check(h.partial(v).hasse(2, a) == h.hasse(2, a).partial(v),
            "D^(" + std::to_string(a) + ") does not commute with d/dx" + std::to_string(v) + " on " +
                h.to_string());
  }
}

void run_gw_laws(const VerifyOptions& opt, std::mt19937_64& rng, Tally& t) {
  const Field f3 = Field::prime(3);
  const TraceForm t9 = trace_form_certified(Field::extension(f3, 2).one());
  t.check(gw_equal(t9.form, GWClass::hyperbolic(f3, 1)), "Tr <1> from F9 to F3 is not H");

  const std::vector<Field> fields =
      opt.field ? std::vector<Field>{*opt.field}
                : std::vector<Field>{Field::prime(7), Field::extension(f3, 2),
                                     Field::extension(Field::prime(5), 3), Field::rationals()};
  for (int trial = 0; trial < opt.trials; ++trial) {
    const Field& f = fields[static_cast<std::size_t>(trial) % fields.size()];
    const GWClass h = GWClass::hyperbolic(f, 1);
    const Elem a = random_nonzero(f, rng), s = random_nonzero(f, rng), u = random_nonzero(f, rng);
    const std::string at = " over " + f.to_string() + " with a = " + a.to_string();
    const GWClass lhs = opt.corrupt ? GWClass::unit(a) + GWClass::unit(a) : GWClass::unit(a) + GWClass::unit(-a);
    t.check(gw_equal(lhs, h), "<a> + <-a> != H" + at);
    t.check(gw_equal(GWClass::unit(u) * h, h), "<u> H != H over " + f.to_string() + " with u = " + u.to_string());
    t.check(gw_equal(GWClass::unit(s * s * a), GWClass::unit(a)), "<s^2 a> != <a>" + at);
    if (f.kind() == FieldKind::rational) continue;
    const TraceForm tf = trace_form_certified(a);
    const Matrix d = mat_mul(mat_mul(transpose(tf.diag.congruence), tf.gram), tf.diag.congruence);
    bool ok = !det(tf.diag.congruence).is_zero();
    for (std::size_t r = 0; r < d.size(); ++r)
      for (std::size_t c = 0; c < d.size(); ++c)
        ok = ok && d[r][c] == (r == c ? tf.diag.diagonal[r] : f.prime_field().zero());
    t.check(ok, "trace form certificate S^T G S != D" + at);
  }
}

}  // namespace

std::optional<Property> parse_property(std::string_view name) {
  if (name == "wronskian-jacobian") return Property::wronskian_jacobian;
  if (name == "transition") return Property::transition;
  if (name == "taylor") return Property::taylor;
  if (name == "gw-laws") return Property::gw_laws;
  return std::nullopt;
}

std::string to_string(Property p) {
  switch (p) {
    case Property::wronskian_jacobian: return "wronskian-jacobian";
    case Property::transition: return "transition";
    case Property::taylor: return "taylor";
    case Property::gw_laws: return "gw-laws";
  }
  return "";
}

VerifyResult verify(Property p, const VerifyOptions& opt) {
  VerifyResult res;
  res.property = p;
  res.trials = opt.trials;
  std::mt19937_64 rng(opt.seed);
  Tally t{res};
  switch (p) {
    case Property::wronskian_jacobian: run_wronskian_jacobian(opt, rng, t); break;
    case Property::transition: run_transition(opt, rng, t); break;
    case Property::taylor: run_taylor(opt, rng, t); break;
    case Property::gw_laws: run_gw_laws(opt, rng, t); break;
  }
  return res;
}

}  // namespace gwt
