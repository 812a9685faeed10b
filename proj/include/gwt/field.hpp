#pragma once
// Exact fields: F_p (p odd prime), F_{p^e} with a canonical modulus, and Q.
//
// Field is a cheap handle to an interned, immutable descriptor, so two
// handles for the same (p, e) compare equal by identity. Elem is a value
// type; arithmetic between elements of different fields throws.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "gwt/integer.hpp"

namespace gwt {

class Elem;

enum class FieldKind { prime, extension, rational };

struct FieldData;

class Field {
 public:
  Field() = default;

  static Field prime(std::uint64_t p);
  static Field extension(const Field& base, int degree);
  static Field rationals();
  // `gf(p)`, `gf(p^e)` or `rational`; lowercase, no whitespace.
  static Field parse(std::string_view spec);

  FieldKind kind() const;
  bool is_finite() const { return kind() != FieldKind::rational; }
  bool valid() const { return data_ != nullptr; }
  std::uint32_t characteristic() const;  // 0 for Q
  int degree() const;                    // over the prime field; 1 for Q
  mpz_class order() const;               // q = p^e; throws for Q
  Field prime_field() const;
  // Monic modulus over F_p, low degree first (size degree()+1).
  std::span<const std::uint32_t> modulus() const;
  std::string to_string() const;

  Elem zero() const;
  Elem one() const;
  Elem from_int(long v) const;
  Elem from_mpz(const mpz_class& v) const;
  Elem from_mpq(const mpq_class& v) const;  // Q only, or finite if den invertible
  Elem from_residue(std::vector<std::uint32_t> coeffs) const;
  Elem generator() const;  // class of t in F_p[t]/(modulus); finite only
  // Enumeration of a finite field in canonical order (index < q).
  Elem element(const mpz_class& index) const;
  // First non-square in canonical order; finite only.
  const Elem& nonsquare() const;
  Elem parse_element(std::string_view text) const;

  const FieldData* data() const { return data_; }
  friend bool operator==(const Field& a, const Field& b) {
    return a.data_ == b.data_;
  }

 private:
  friend class Elem;
  explicit Field(const FieldData* d) : data_(d) {}
  const FieldData* data_ = nullptr;
};

class Elem {
 public:
  using Residue = boost::container::small_vector<std::uint32_t, 2>;

  Elem() = default;

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Elem operator-() const;
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);
  Elem& operator/=(const Elem& o);
  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(Elem a, const Elem& b) { return a *= b; }
  friend Elem operator/(Elem a, const Elem& b) { return a /= b; }
  Elem inv() const;
  Elem pow(const mpz_class& e) const;  // negative exponents invert
  Elem pow(long e) const { return pow(mpz_class(e)); }

  friend bool operator==(const Elem& a, const Elem& b);
  // Canonical total order (finite: as base-p integers; Q: by value).
  friend std::strong_ordering compare(const Elem& a, const Elem& b);
  friend bool operator<(const Elem& a, const Elem& b) {
    return compare(a, b) == std::strong_ordering::less;
  }

  // Residue coefficients, low degree first, length == field degree.
  std::span<const std::uint32_t> residue() const { return {r_.data(), r_.size()}; }
  const mpq_class& rational() const { return q_; }
  std::string to_string() const;

 private:
  friend class Field;
  void require_same(const Elem& o) const;

  const FieldData* f_ = nullptr;
  Residue r_;
  mpq_class q_;
};

// x^p. Throws for rational input.
Elem frobenius(const Elem& x);
// x + x^p + ... + x^{p^{e-1}}, returned in the prime field.
Elem trace_to_base(const Elem& x);
// Product of all Galois conjugates, returned in the prime field.
Elem norm_to_base(const Elem& x);
// Smallest j >= 1 with x^{p^j} == x.
int element_degree(const Elem& x);
// Image of an element of the prime field inside `target` (same char).
Elem lift(const Elem& x, const Field& target);
// The element of F_p equal to x, if x lies in the prime subfield.
Elem to_prime_field(const Elem& x);

// Square class of a nonzero element: finite fields give +1/-1 in `sign`;
// over Q `squarefree` holds the signed squarefree representative.
struct SquareClass {
  int sign = 0;
  mpz_class squarefree;
  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.sign == b.sign && a.squarefree == b.squarefree;
  }
};
SquareClass square_class(const Elem& x);
bool is_square(const Elem& x);
// Canonical representative of the class of x (1 or the canonical
// non-square; the squarefree integer over Q).
Elem square_class_representative(const Elem& x);

}  // namespace gwt
