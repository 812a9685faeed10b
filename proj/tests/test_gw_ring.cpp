#include <doctest.h>

#include <random>

#include "gwt/gw.hpp"
#include "gwt/upoly.hpp"

using namespace gwt;

namespace {

// Primitive solutions of a x^2 + b y^2 = z^2 modulo p^2 (odd p) or 32;
// enough precision for squarefree a, b to decide local solvability.
int hilbert_oracle(long a, long b, long p) {
  const long m = p == 2 ? 32 : p * p;
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y)
      for (long z = 0; z < m; ++z) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        long v = (a * x * x + b * y * y - z * z) % m;
        if (v == 0) return 1;
      }
  return -1;
}

Elem random_nonzero(const Field& f, std::mt19937_64& rng) {
  while (true) {
    Elem x = f.is_finite() ? f.element(rng() % f.order().get_ui())
                           : f.from_mpq(mpq_class(static_cast<long>(rng() % 61) - 30,
                                                  1 + static_cast<unsigned long>(rng() % 12)));
    if (!x.is_zero()) return x;
  }
}

GWClass random_class(const Field& f, std::mt19937_64& rng) {
  GWClass c(f);
  const int np = static_cast<int>(rng() % 4), nn = static_cast<int>(rng() % 3);
  for (int i = 0; i < np; ++i) c += GWClass::unit(random_nonzero(f, rng));
  for (int i = 0; i < nn; ++i) c -= GWClass::unit(random_nonzero(f, rng));
  return c;
}

}  // namespace

TEST_CASE("hilbert symbol agrees with a brute-force solvability oracle") {
  const std::vector<long> vals{-1, 1, 2, -2, 3, -3, 5, 6, -6, 7, 10, -15};
  for (long p : {2L, 3L, 5L, 7L}) {
    for (long a : vals)
      for (long b : vals) {
        CHECK(hilbert_symbol(a, b, p) == hilbert_oracle(a, b, p));
      }
  }
  CHECK(hilbert_symbol(-1, -1, 0) == -1);
  CHECK(hilbert_symbol(-1, 3, 0) == 1);
}

TEST_CASE("diag, add, mul, hyperbolic") {
  for (const Field& f : {Field::prime(7), Field::rationals()}) {
    const GWClass h = GWClass::diag(f, {f.one()}) + GWClass::diag(f, {-f.one()});
    CHECK(gw_equal(h, GWClass::hyperbolic(f, 1)));
    const auto inv = invariants(h);
    CHECK(inv.rank == 2);
    CHECK(inv.disc.sign == -1);
  }
  const Field q = Field::rationals();
  CHECK(gw_equal(GWClass::unit(q.from_int(3)) * GWClass::hyperbolic(q, 1), GWClass::hyperbolic(q, 1)));
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::prime(11), Field::extension(Field::prime(5), 2), q}) {
    for (int i = 0; i < 50; ++i) {
      const Elem a = random_nonzero(f, rng);
      CHECK(gw_equal(GWClass::unit(a) * GWClass::unit(a), GWClass::unit(f.one())));
    }
  }
  CHECK_THROWS(GWClass::diag(q, {q.zero()}));
  CHECK_THROWS(GWClass::hyperbolic(q, 1) + GWClass::hyperbolic(Field::prime(7), 1));
}

TEST_CASE("trace_form") {
  const Field f3 = Field::prime(3);
  const Field f9 = Field::extension(f3, 2);
  const TraceForm t = trace_form_certified(f9.one());
  CHECK(t.gram[0][0] == f3.from_int(2));
  CHECK(t.gram[0][1] == f3.zero());
  CHECK(t.gram[1][1] == f3.from_int(1));
  CHECK(gw_equal(t.form, GWClass::diag(f3, {f3.from_int(2), f3.one()})));
  CHECK(gw_equal(t.form, GWClass::hyperbolic(f3, 1)));

  const Field f7 = Field::prime(7);
  CHECK(gw_equal(trace_form(f7.from_int(3)), GWClass::unit(f7.from_int(3))));
  CHECK_THROWS(trace_form(f9.zero()));

  std::mt19937_64 rng(13);
  for (const Field& f : {Field::extension(Field::prime(7), 3), Field::extension(Field::prime(5), 4), f9}) {
    for (int i = 0; i < 20; ++i) {
      const Elem a = random_nonzero(f, rng), s = random_nonzero(f, rng);
      const TraceForm ta = trace_form_certified(a);
      CHECK(ta.form.rank() == f.degree());
      CHECK(gw_equal(trace_form(s * s * a), ta.form));
      // D = S^T G S with S invertible.
      const Matrix d = mat_mul(mat_mul(transpose(ta.diag.congruence), ta.gram), ta.diag.congruence);
      for (std::size_t r = 0; r < d.size(); ++r)
        for (std::size_t c = 0; c < d.size(); ++c)
          CHECK(d[r][c] == (r == c ? ta.diag.diagonal[r] : f.prime_field().zero()));
      CHECK_FALSE(det(ta.diag.congruence).is_zero());
    }
  }
  // Subfield traces: an element of F_{7^2} inside F_{7^6}.
  const Field f76 = Field::extension(Field::prime(7), 6);
  const Field f72 = Field::extension(Field::prime(7), 2);
  for (long i = 1; i < 49; i += 5) {
    const Elem x = f72.element(i);
    CHECK(gw_equal(trace_form(embed(x, f76), 2), trace_form(x)));
  }
}

TEST_CASE("invariants") {
  const Field f7 = Field::prime(7);
  auto inv = invariants(GWClass::hyperbolic(f7, 1));
  CHECK(inv.rank == 2);
  CHECK(inv.disc.sign == -1);
  inv = invariants(GWClass::hyperbolic(Field::prime(13), 12));
  CHECK(inv.rank == 24);
  CHECK(inv.disc.sign == 1);
  const Field q = Field::rationals();
  inv = invariants(GWClass::diag(q, {q.one(), q.one(), q.one()}));
  CHECK(inv.rank == 3);
  CHECK(*inv.signature == 3);
  CHECK(inv.disc.squarefree == 1);
  for (const auto& [p, s] : inv.hasse) CHECK(s == 1);
}

TEST_CASE("gw_equal") {
  const Field f3 = Field::prime(3), f5 = Field::prime(5);
  CHECK(gw_equal(GWClass::diag(f3, {f3.from_int(2), f3.one()}), GWClass::hyperbolic(f3, 1)));
  CHECK_FALSE(gw_equal(GWClass::diag(f3, {f3.one(), f3.one()}), GWClass::hyperbolic(f3, 1)));
  CHECK(gw_equal(GWClass::diag(f5, {f5.one(), f5.one()}), GWClass::hyperbolic(f5, 1)));
  const Field q = Field::rationals();
  CHECK(gw_equal(GWClass::diag(q, {q.one(), q.one()}), GWClass::diag(q, {q.from_int(2), q.from_int(2)})));
  CHECK_FALSE(gw_equal(GWClass::diag(q, {q.one(), q.one()}), GWClass::diag(q, {q.from_int(3), q.from_int(3)})));
  CHECK_FALSE(gw_equal(GWClass::diag(q, {q.one()}), GWClass::diag(q, {q.from_int(-1)})));
  CHECK_THROWS(gw_equal(GWClass::hyperbolic(f3, 1), GWClass::hyperbolic(f5, 1)));
}

TEST_CASE("ring laws and hyperbolic identities") {
  std::mt19937_64 rng(19);
  for (const Field& f : {Field::prime(7), Field::extension(Field::prime(3), 2), Field::rationals()}) {
    const GWClass h = GWClass::hyperbolic(f, 1), one = GWClass::unit(f.one());
    for (int i = 0; i < 30; ++i) {
      const GWClass a = random_class(f, rng), b = random_class(f, rng), c = random_class(f, rng);
      CHECK(gw_equal((a + b) + c, a + (b + c)));
      CHECK(gw_equal(a + b, b + a));
      CHECK(gw_equal(a * b, b * a));
      CHECK(gw_equal((a * b) * c, a * (b * c)));
      CHECK(gw_equal(a * (b + c), a * b + a * c));
      CHECK(gw_equal(one * a, a));
      CHECK(gw_equal(a - a, GWClass(f)));
      const Elem u = random_nonzero(f, rng);
      CHECK(gw_equal(GWClass::unit(u) + GWClass::unit(-u), h));
      CHECK(gw_equal(GWClass::unit(u) * h, h));
    }
  }
}
