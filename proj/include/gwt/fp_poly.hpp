#pragma once
// Dense univariate polynomials over a prime field F_p, stored low degree
// first as reduced residues. The empty vector is the zero polynomial.
// These back the extension-field arithmetic.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace gwt::fp {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for zero
Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly scale(const Poly& a, std::uint32_t s, std::uint32_t p);
// Remainder modulo a monic polynomial.
Poly rem_monic(Poly a, const Poly& monic, std::uint32_t p);
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);  // monic
// Inverse of a modulo m; throws std::domain_error if not invertible.
Poly inverse_mod(const Poly& a, const Poly& m, std::uint32_t p);
Poly powmod(Poly base, const mpz_class& e, const Poly& monic, std::uint32_t p);
// No factor of degree <= deg/2, checked via gcd(t^{p^i} - t, f).
bool is_irreducible(const Poly& monic, std::uint32_t p);

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint32_t p);

}  // namespace gwt::fp
