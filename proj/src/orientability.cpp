#include "gwt/orientability.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "gwt/integer.hpp"
#include "gwt/kernels.hpp"

namespace gwt {

namespace {

DParity phi_constraint(bool r_odd_binom, bool b_odd, long r) {
  const bool rhs_odd = ((r + 1) % 2 != 0) && !b_odd;
  if (r_odd_binom) return rhs_odd ? DParity::odd : DParity::even;
  return rhs_odd ? DParity::none : DParity::any;
}

bool admits(DParity p, long d) {
  switch (p) {
    case DParity::even: return d % 2 == 0;
    case DParity::odd: return d % 2 != 0;
    case DParity::any: return true;
    case DParity::none: return false;
  }
  return false;
}

struct Candidate {
  long r, m, n;
};

// Pairs (r, m) whose rank condition has an integral solution r < n <= max_n.
// For fixed r the binomial C(r+m-1, m-1) grows with m, so the walk stops as
// soon as it passes the largest admissible value.
void rank_candidates(long r, long max_m, long max_n, std::vector<Candidate>& out) {
  const std::int64_t cap = static_cast<std::int64_t>(max_n) * (r + 1) - static_cast<std::int64_t>(r) * r;
  if (cap <= r) return;
  std::int64_t R = 1;  // C(r+m-1, m-1) at m = 1
  for (long m = 1; m <= max_m; ++m) {
    if (m > 1) R = R * (r + m - 1) / (m - 1);
    if (R > cap) break;
    const std::int64_t num = R + static_cast<std::int64_t>(r) * r;
    if (num % (r + 1) != 0) continue;
    const long n = static_cast<long>(num / (r + 1));
    if (n > r && n <= max_n) out.push_back({r, m, n});
  }
}

std::vector<ScanTuple> check_batch(const std::vector<Candidate>& cs) {
  const std::size_t len = cs.size();
  std::vector<std::int64_t> top(2 * len), bottom(2 * len);
  for (std::size_t i = 0; i < len; ++i) {
    top[2 * i] = top[2 * i + 1] = cs[i].r + cs[i].m - 1;
    bottom[2 * i] = cs[i].m - 1;
    bottom[2 * i + 1] = cs[i].m - 2;
  }
  std::vector<std::uint8_t> odd(2 * len);
  kernels::binomial_parity(top, bottom, odd);
  std::vector<ScanTuple> out;
  for (std::size_t i = 0; i < len; ++i) {
    const bool b_odd = odd[2 * i + 1] != 0;
    if (b_odd != (cs[i].n % 2 != 0)) continue;
    const DParity p = phi_constraint(odd[2 * i] != 0, b_odd, cs[i].r);
    if (p == DParity::none) continue;
    out.push_back({cs[i].r, cs[i].m, cs[i].n, p});
  }
  return out;
}

}  // namespace

std::string to_string(DParity p) {
  switch (p) {
    case DParity::even: return "even";
    case DParity::odd: return "odd";
    case DParity::any: return "any";
    case DParity::none: return "none";
  }
  return "none";
}

mpz_class rank_Em(long r, long m) {
  if (r < 1 || m < 1) throw std::invalid_argument("rank_Em: need r >= 1 and m >= 1");
  return binomial(r + m - 1, r);
}

std::pair<mpz_class, mpz_class> det_exponents(long d, long r, long m) {
  if (d < 1 || r < 1 || m < 1) throw std::invalid_argument("det_exponents: need d, r, m >= 1");
  const mpz_class b = binomial(r + m - 1, m - 2);
  return {mpz_class(d) * binomial(r + m - 1, m - 1) - mpz_class(r + 1) * b, b};
}

std::pair<mpz_class, mpz_class> twisted_exponents(long d, long r, long m, long n) {
  auto [a, b] = det_exponents(d, r, m);
  return {a - (r + 1), b - n};
}

OrientabilityReport check_conditions(long d, long r, long m, long n) {
  if (r < 1 || r >= n) throw std::invalid_argument("check_conditions: need 1 <= r < n");
  OrientabilityReport rep;
  rep.d = d;
  rep.r = r;
  rep.m = m;
  rep.n = n;
  rep.rank_ok = binomial(r + m - 1, m - 1) == mpz_class(r * (n - r) + n);
  const bool b_odd = binomial_is_odd(r + m - 1, m - 2);
  rep.parity_phi = phi_constraint(binomial_is_odd(r + m - 1, m - 1), b_odd, r);
  rep.phi_ok = admits(rep.parity_phi, d);
  rep.parity_g = b_odd == (n % 2 != 0);
  rep.det_exponents = det_exponents(d, r, m);
  return rep;
}

std::vector<ScanTuple> scan(long max_r, long max_m, long max_n, int jobs) {
  if (max_r < 1 || max_m < 1 || max_n < 1) throw std::invalid_argument("scan: bounds must be >= 1");
  if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<int>(std::min<long>(jobs, max_r));
  std::vector<std::vector<ScanTuple>> parts(jobs);
  auto work = [&](int j) {
    std::vector<Candidate> cs;
    for (long r = 1 + j; r <= max_r; r += jobs) rank_candidates(r, max_m, max_n, cs);
    parts[j] = check_batch(cs);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  std::vector<ScanTuple> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

GWClass hyperbolic_euler(const Field& f, const mpz_class& ctop) {
  if (ctop < 0 || mpz_odd_p(ctop.get_mpz_t()))
    throw std::invalid_argument("hyperbolic_euler: c_top must be even and nonnegative");
  const mpz_class half = ctop / 2;
  if (!half.fits_slong_p()) throw std::invalid_argument("hyperbolic_euler: c_top too large");
  return GWClass::hyperbolic(f, half.get_si());
}

}  // namespace gwt
