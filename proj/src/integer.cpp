#include "gwt/integer.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace gwt {
namespace {

constexpr std::uint32_t kSieveLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kSieveLimit; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

// Exponent of each prime in |n|.
std::map<mpz_class, int> factor(const mpz_class& n) {
  if (n == 0) throw std::invalid_argument("cannot factor zero");
  mpz_class m = abs(n);
  std::map<mpz_class, int> out;
  for (std::uint32_t p : small_primes()) {
    if (m == 1) break;
    if (mpz_class(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++out[mpz_class(p)];
    }
  }
  if (m == 1) return out;
  // Every prime divisor of m exceeds the sieve limit (or m is prime).
  if (mpz_probab_prime_p(m.get_mpz_t(), 40) > 0) {
    ++out[m];
    return out;
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_class r = sqrt(m);
    if (mpz_probab_prime_p(r.get_mpz_t(), 40) > 0) {
      out[r] += 2;
      return out;
    }
  }
  throw std::runtime_error("integer too hard to factor: " + n.get_str());
}

}  // namespace

mpz_class binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

bool binomial_is_odd(long a, long b) {
  if (b < 0 || a < 0 || b > a) return false;
  return (b & (a - b)) == 0;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z{std::to_string(n)};
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

std::vector<mpz_class> prime_factors(const mpz_class& n) {
  std::vector<mpz_class> out;
  for (const auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

mpz_class squarefree_part(const mpz_class& n) {
  mpz_class r = sgn(n) < 0 ? -1 : 1;
  for (const auto& [p, e] : factor(n)) {
    if (e % 2 == 1) r *= p;
  }
  return r;
}

int valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  mpz_class m = n;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace gwt
