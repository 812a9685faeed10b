#pragma once
// Dense univariate polynomials over a Field, and factorization over finite
// fields (squarefree, distinct-degree, equal-degree) into closed points.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gwt/field.hpp"

namespace gwt {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Field f) : f_(f) {}
  UPoly(Field f, std::vector<Elem> coeffs);  // low degree first

  static UPoly constant(const Elem& c);
  static UPoly x(const Field& f);
  // c * x^k
  static UPoly monomial(const Elem& c, int k);

  const Field& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  // Coefficient of x^i (zero beyond the degree).
  Elem coeff(int i) const;
  const Elem& lead() const { return c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  Elem eval(const Elem& x) const;
  UPoly monic() const;
  UPoly derivative() const;
  // D^(a) x^n = C(n, a) x^(n-a)
  UPoly hasse(int a) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Elem& s);
  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.f_ == b.f_ && a.c_ == b.c_;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Field f_;
  std::vector<Elem> c_;
};

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly operator%(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);  // quotient, remainder dropped
UPoly gcd(UPoly a, UPoly b);                      // monic, 0 if both zero
UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& mod);
// Composition f(g).
UPoly compose(const UPoly& f, const UPoly& g);

// Image of x in `target`: the identity, the prime-field lift, or the
// embedding F_{p^e} -> F_{p^(ek)} sending the generator to the smallest
// root of its modulus.
Elem embed(const Elem& x, const Field& target);
UPoly embed(const UPoly& f, const Field& target);

// Hasse-Taylor coefficients (D^(0) f(c), ..., D^(m-1) f(c)).
std::vector<Elem> taylor_jets(const UPoly& f, const Elem& c, int m);

struct Factor {
  UPoly poly;  // monic irreducible
  int multiplicity = 0;
};
// Monic irreducible factorization over a finite field, sorted by degree,
// then multiplicity, then coefficients.
std::vector<Factor> factor(const UPoly& f);
std::vector<Factor> squarefree_factorization(const UPoly& f);
// Pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<UPoly, int>> distinct_degree_factorization(const UPoly& f);
// Splits a squarefree product of degree-d irreducibles.
std::vector<UPoly> equal_degree_factorization(const UPoly& f, int d);

// All roots of f inside `target` (coefficients embedded), ascending.
std::vector<Elem> roots_in(const UPoly& f, const Field& target);
// One root of an irreducible f inside `target` (which must contain it).
Elem some_root(const UPoly& f, const Field& target);

// Smallest j >= 1 with x^{q^j} == x, where q is the order of `base`.
int degree_over(const Elem& x, const Field& base);
// The canonical extension of the prime field of degree deg(base)*k.
Field extension_of(const Field& base, int k);

struct ClosedPoint {
  int residue_degree = 1;        // over the base field
  std::vector<Elem> coords;      // in extension_of(base, residue_degree)
  int multiplicity = 1;
};
// The Frobenius orbit of a tuple, normalized: q-power conjugates of coords.
std::vector<std::vector<Elem>> frobenius_orbit(const std::vector<Elem>& coords,
                                               const Field& base, int degree);
// Lexicographically smallest member of the orbit.
std::vector<Elem> canonical_representative(const std::vector<Elem>& coords,
                                           const Field& base, int degree);

std::vector<ClosedPoint> closed_points_univariate(const UPoly& f);

}  // namespace gwt
