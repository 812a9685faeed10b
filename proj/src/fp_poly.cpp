#include "gwt/fp_poly.hpp"

#include <stdexcept>
#include <utility>

#include "gwt/kernels.hpp"

namespace gwt::fp {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t v = (i < a.size() ? a[i] : 0);
    v += (i < b.size() ? b[i] : 0);
    r[i] = static_cast<std::uint32_t>(v % p);
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t v = (i < a.size() ? a[i] : 0);
    v += p - (i < b.size() ? b[i] : 0);
    r[i] = static_cast<std::uint32_t>(v % p);
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  kernels::convolve_mod(a, b, r, p);
  trim(r);
  return r;
}

Poly scale(const Poly& a, std::uint32_t s, std::uint32_t p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = static_cast<std::uint32_t>(std::uint64_t{a[i]} * s % p);
  }
  trim(r);
  return r;
}

std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("division by zero in F_p");
  std::int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    const std::int64_t q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Poly rem_monic(Poly a, const Poly& monic, std::uint32_t p) {
  const int dm = degree(monic);
  trim(a);
  for (int i = degree(a); i >= dm; --i) {
    const std::uint64_t c = a[i];
    if (c == 0) continue;
    const std::uint64_t neg = p - c;
    for (int j = 0; j < dm; ++j) {
      a[i - dm + j] =
          static_cast<std::uint32_t>((a[i - dm + j] + neg * monic[j]) % p);
    }
    a[i] = 0;
  }
  trim(a);
  return a;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r, std::uint32_t p) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  r = a;
  trim(r);
  const int db = degree(b);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  for (int i = degree(r); i >= db; --i) {
    const std::uint64_t c = std::uint64_t{r[i]} * lead_inv % p;
    if (c == 0) continue;
    q[i - db] = static_cast<std::uint32_t>(c);
    const std::uint64_t neg = p - c;
    for (int j = 0; j <= db; ++j) {
      r[i - db + j] = static_cast<std::uint32_t>((r[i - db + j] + neg * b[j]) % p);
    }
  }
  trim(q);
  trim(r);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, q, r, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(a, inv_mod(a.back(), p), p);
  return a;
}

Poly inverse_mod(const Poly& a, const Poly& m, std::uint32_t p) {
  Poly r0 = m, r1 = a;
  trim(r1);
  r1 = rem_monic(r1, m, p);
  Poly s0, s1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r, p);
    Poly s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r0) != 0) throw std::domain_error("element is not invertible");
  return scale(s0, inv_mod(r0[0], p), p);
}

Poly powmod(Poly base, const mpz_class& e, const Poly& monic, std::uint32_t p) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  base = rem_monic(std::move(base), monic, p);
  Poly result{1};
  result = rem_monic(result, monic, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem_monic(mul(result, result, p), monic, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) {
      result = rem_monic(mul(result, base, p), monic, p);
    }
  }
  return result;
}

bool is_irreducible(const Poly& monic, std::uint32_t p) {
  const int n = degree(monic);
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly t{0, 1};
  Poly power = t;  // t^{p^i} mod f
  const mpz_class pz{static_cast<unsigned long>(p)};
  for (int i = 1; i <= n / 2; ++i) {
    power = powmod(power, pz, monic, p);
    const Poly g = gcd(monic, sub(power, t, p), p);
    if (degree(g) > 0) return false;
  }
  return true;
}

}  // namespace gwt::fp
