#include <doctest.h>

#include <random>

#include "gwt/integer.hpp"
#include "gwt/kernels.hpp"
#include "gwt/orientability.hpp"

using namespace gwt;

namespace {

// Triple loop with exact binomials and both parities of d.
std::vector<ScanTuple> brute_scan(long max_r, long max_m, long max_n) {
  std::vector<ScanTuple> out;
  for (long r = 1; r <= max_r; ++r)
    for (long m = 1; m <= max_m; ++m)
      for (long n = r + 1; n <= max_n; ++n) {
        const mpz_class R = binomial(r + m - 1, m - 1);
        const mpz_class B = binomial(r + m - 1, m - 2);
        if (R != r * (n - r) + n) continue;
        if (mpz_class(B - n) % 2 != 0) continue;
        bool ok[2];
        for (int d = 0; d < 2; ++d) ok[d] = mpz_class(d * R - (r + 1) * (B - 1)) % 2 == 0;
        if (!ok[0] && !ok[1]) continue;
        const DParity p = ok[0] && ok[1] ? DParity::any : (ok[0] ? DParity::even : DParity::odd);
        out.push_back({r, m, n, p});
      }
  return out;
}

}  // namespace

TEST_CASE("rank_Em") {
  for (long m = 1; m < 10; ++m) CHECK(rank_Em(1, m) == m);
  CHECK(rank_Em(3, 5) == 35);
  for (long r = 1; r < 30; ++r)
    for (long m = 1; m < 30; ++m) CHECK(rank_Em(r, m) == binomial(r + m - 1, m - 1));
  // r = 1: rank equals dim = 2n - 1 exactly when m = 2n - 1
  for (long n = 2; n < 20; ++n)
    for (long m = 1; m < 60; ++m) CHECK((rank_Em(1, m) == 2 * n - 1) == (m == 2 * n - 1));
  CHECK_THROWS_AS(rank_Em(0, 3), std::invalid_argument);
}

TEST_CASE("det_exponents") {
  for (long d = 1; d < 6; ++d)
    for (long r = 1; r < 5; ++r) {
      const auto [a, b] = det_exponents(d, r, 1);
      CHECK(a == d);
      CHECK(b == 0);
    }
  for (long n = 2; n < 12; ++n)
    for (long d = 1; d < 10; ++d) {
      const long m = 2 * n - 1;
      const auto [a, b] = twisted_exponents(d, 1, m, n);
      CHECK(a == d * (2 * n - 1) - 4 * n * n + 6 * n - 4);
      CHECK(b == 2 * n * n - 4 * n + 1);
      // the trivializing exponents N = m(d-m+1) and M = m(m-1)/2
      const auto [a0, b0] = det_exponents(d, 1, m);
      CHECK(a0 == m * (d - m + 1));
      CHECK(b0 == m * (m - 1) / 2);
    }
  // linear in d with slope C(r+m-1, m-1)
  for (long r = 1; r < 8; ++r)
    for (long m = 1; m < 8; ++m) {
      const auto e1 = det_exponents(1, r, m);
      const auto e2 = det_exponents(2, r, m);
      const auto e7 = det_exponents(7, r, m);
      CHECK(e2.first - e1.first == binomial(r + m - 1, m - 1));
      CHECK(e7.first - e1.first == 6 * binomial(r + m - 1, m - 1));
      CHECK(e1.second == e7.second);
    }
}

TEST_CASE("check_conditions") {
  const auto even = check_conditions(4, 3, 5, 11);
  CHECK(even.rank_ok);
  CHECK(even.parity_phi == DParity::even);
  CHECK(even.parity_g);
  CHECK(even.orientable());
  const auto odd = check_conditions(5, 3, 5, 11);
  CHECK(odd.rank_ok);
  CHECK_FALSE(odd.phi_ok);
  CHECK_FALSE(odd.orientable());
  for (long n = 2; n < 40; ++n)
    for (long d = 1; d < 8; ++d) {
      const auto rep = check_conditions(d, 1, 2 * n - 1, n);
      CHECK(rep.rank_ok);
      CHECK_FALSE(rep.orientable());
    }
  CHECK_FALSE(check_conditions(4, 3, 5, 12).rank_ok);
  CHECK_THROWS_AS(check_conditions(4, 3, 5, 3), std::invalid_argument);
}

TEST_CASE("binomial parity by carries matches exact binomials") {
  std::mt19937_64 rng(5);
  std::vector<std::int64_t> ns, ks;
  for (int i = 0; i < 10000; ++i) {
    const long a = static_cast<long>(rng() % 400);
    ns.push_back(a);
    ks.push_back(static_cast<long>(rng() % 402) - 1);
  }
  for (auto isa : {kernels::Isa::scalar, kernels::Isa::avx2}) {
    if (!kernels::isa_available(isa)) continue;
    kernels::set_isa(isa);
    std::vector<std::uint8_t> out(ns.size());
    kernels::binomial_parity(ns, ks, out);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const bool exact = mpz_odd_p(binomial(ns[i], ks[i]).get_mpz_t()) != 0;
      REQUIRE((out[i] != 0) == exact);
      REQUIRE(binomial_is_odd(ns[i], ks[i]) == exact);
    }
  }
  kernels::set_isa(kernels::isa_available(kernels::Isa::avx2) ? kernels::Isa::avx2 : kernels::Isa::scalar);
}

TEST_CASE("scan") {
  CHECK(scan(4, 4, 4).empty());
  CHECK(scan(12, 12, 12) == std::vector<ScanTuple>{{3, 5, 11, DParity::even}});
  CHECK(scan(5000, 5000, 12) == std::vector<ScanTuple>{{3, 5, 11, DParity::even}});
  for (long b : {4L, 12L, 30L}) CHECK(scan(b, b, b) == brute_scan(b, b, b));
  CHECK(scan(20, 60, 500) == brute_scan(20, 60, 500));
  const auto full = scan(5000, 5000, 5000);
  const std::vector<ScanTuple> expected{
      {3, 5, 11, DParity::even}, {3, 21, 445, DParity::even}, {3, 37, 2287, DParity::even}};
  CHECK(full == expected);
  for (int jobs : {2, 3, 8}) CHECK(scan(5000, 5000, 5000, jobs) == full);
  CHECK_THROWS_AS(scan(0, 5, 5), std::invalid_argument);
}

TEST_CASE("hyperbolic_euler") {
  const Field f = Field::prime(13);
  const GWClass e = hyperbolic_euler(f, 24);
  CHECK(e.rank() == 24);
  CHECK(gw_equal(e, GWClass::hyperbolic(f, 12)));
  CHECK(hyperbolic_euler(f, 0).is_zero());
  CHECK_THROWS_AS(hyperbolic_euler(f, 7), std::invalid_argument);
  CHECK_THROWS_AS(hyperbolic_euler(f, -2), std::invalid_argument);
}
