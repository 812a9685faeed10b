#pragma once
// Integer helpers on top of GMP.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace gwt {

// Binomial coefficient with C(a, b) = 0 for b < 0 or b > a.
mpz_class binomial(long a, long b);
// Parity of C(a, b) by carry counting (Lucas), never forming the binomial.
bool binomial_is_odd(long a, long b);

bool is_prime(std::uint64_t n);

// Distinct prime divisors of |n| (n != 0), ascending. Trial division by
// primes below 10^6, then the cofactor must be 1, prime, or a prime square;
// anything else throws std::runtime_error.
std::vector<mpz_class> prime_factors(const mpz_class& n);
// Signed squarefree part of a nonzero integer, same factoring limits.
mpz_class squarefree_part(const mpz_class& n);
// p-adic valuation of a nonzero integer.
int valuation(const mpz_class& n, const mpz_class& p);

}  // namespace gwt
