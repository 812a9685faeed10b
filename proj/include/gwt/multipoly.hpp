#pragma once
// Sparse multivariate polynomials over a Field, with named variables.

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "gwt/field.hpp"
#include "gwt/upoly.hpp"

namespace gwt {

class MultiPoly {
 public:
  using Exponents = boost::container::small_vector<int, 6>;
  using Terms = std::map<Exponents, Elem>;

  MultiPoly() = default;
  MultiPoly(Field f, std::vector<std::string> vars);

  static MultiPoly constant(const Field& f, const std::vector<std::string>& vars,
                            const Elem& c);
  static MultiPoly variable(const Field& f, const std::vector<std::string>& vars,
                            int i);
  // Grammar: integer coefficients, variables x0..xN, '^' powers, optional
  // '*', '+'/'-' between terms; whitespace ignored. The ring gets
  // max(nvars, highest index + 1) variables.
  static MultiPoly parse(std::string_view text, const Field& f, int nvars = 0);
  // Names x0, ..., x{n-1}.
  static std::vector<std::string> standard_vars(int n);

  const Field& field() const { return f_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;  // -1 for zero
  int degree_in(int v) const;
  bool is_homogeneous() const;
  Elem coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Elem& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Elem& s);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.f_ == b.f_ && a.vars_.size() == b.vars_.size() && a.terms_ == b.terms_;
  }
  MultiPoly pow(int k) const;

  MultiPoly partial(int v) const;
  MultiPoly hasse(int v, int a) const;
  // Replace variable v by g (same ring).
  MultiPoly substitute(int v, const MultiPoly& g) const;
  // Replace each variable i by images[i]; the result lives in their ring.
  MultiPoly compose(const std::vector<MultiPoly>& images) const;
  // Evaluate at a point; coordinates may lie in an extension of the
  // coefficient field (coefficients are embedded).
  Elem eval(std::span<const Elem> point) const;
  // Coefficients of v^0, v^1, ... as polynomials in the same ring.
  std::vector<MultiPoly> coefficients_in(int v) const;
  // Polynomial involving at most variable v, as a UPoly.
  UPoly to_univariate(int v) const;
  static MultiPoly from_univariate(const UPoly& u, const Field& f,
                                   const std::vector<std::string>& vars, int v);
  MultiPoly embed(const Field& target) const;
  MultiPoly with_field(const Field& target) const { return embed(target); }

  std::string to_string() const;

 private:
  void require_same(const MultiPoly& o) const;
  Field f_;
  std::vector<std::string> vars_;
  Terms terms_;
};

std::vector<MultiPoly> gradient(const MultiPoly& f);
// Exact quotient a / b; throws std::domain_error if b does not divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
// Fraction-free determinant of a square matrix of polynomials.
MultiPoly det_bareiss(std::vector<std::vector<MultiPoly>> m);
MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, int v);
// Determinant of the 3x3 matrix of second partials.
MultiPoly hessian(const MultiPoly& f);

}  // namespace gwt
