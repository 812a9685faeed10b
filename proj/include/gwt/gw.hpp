#pragma once
// Grothendieck-Witt ring arithmetic over F_q (q odd) and Q.
//
// A class is stored as a formal difference of diagonal forms whose entries
// are square-class representatives (1 or the canonical non-square over
// F_q, squarefree integers over Q). Entries shared by both parts cancel.
// Equality is decided through classification invariants only.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwt/field.hpp"
#include "gwt/linalg.hpp"

namespace gwt {

class GWClass {
 public:
  GWClass() = default;
  explicit GWClass(Field f) : f_(f) {}

  static GWClass diag(const Field& f, const std::vector<Elem>& entries);
  static GWClass unit(const Elem& a);  // <a>
  static GWClass hyperbolic(const Field& f, long n);

  const Field& field() const { return f_; }
  const std::vector<Elem>& positive() const { return pos_; }
  const std::vector<Elem>& negative() const { return neg_; }
  long rank() const {
    return static_cast<long>(pos_.size()) - static_cast<long>(neg_.size());
  }
  bool is_zero() const { return pos_.empty() && neg_.empty(); }

  GWClass operator-() const;
  GWClass& operator+=(const GWClass& o);
  GWClass& operator-=(const GWClass& o);
  friend GWClass operator+(GWClass a, const GWClass& b) { return a += b; }
  friend GWClass operator-(GWClass a, const GWClass& b) { return a -= b; }
  friend GWClass operator*(const GWClass& a, const GWClass& b);
  friend GWClass operator*(long k, const GWClass& a);

  // "<1> + <3> - <2>", or "0".
  std::string to_string() const;

 private:
  void require_same(const GWClass& o) const;
  void normalize();
  Field f_;
  std::vector<Elem> pos_, neg_;
};

struct GWInvariants {
  long rank = 0;
  // Determinant of the net form modulo squares: +1/-1 over F_q, the
  // signed squarefree integer over Q.
  SquareClass disc;
  std::optional<long> signature;  // Q only
  // Hasse symbols of the genuine form P + <-N> (Q only); key 0 is the real
  // place. The class equals that form minus hyperbolic_offset copies of H.
  std::map<mpz_class, int> hasse;
  long hyperbolic_offset = 0;
};

GWInvariants invariants(const GWClass& c);
bool gw_equal(const GWClass& a, const GWClass& b);

// Hilbert symbol (a, b)_p of nonzero integers; p == 0 is the real place.
int hilbert_symbol(const mpz_class& a, const mpz_class& b, const mpz_class& p);

struct Diagonalization {
  Matrix congruence;            // S, invertible
  std::vector<Elem> diagonal;   // D = S^T G S
};
// Symmetric congruence diagonalization of a Gram matrix (char != 2).
Diagonalization diagonalize(const Matrix& gram);

struct TraceForm {
  GWClass form;
  Matrix gram;
  Diagonalization diag;
};
// Trace form (x, y) -> Tr(a x y) from the subfield of degree `degree` of
// a's field down to the prime field (degree 0 means the whole field), on
// a power basis. Over Q only degree 1 is possible and gives <a>.
TraceForm trace_form_certified(const Elem& a, int degree = 0);
GWClass trace_form(const Elem& a, int degree = 0);

}  // namespace gwt
