#pragma once
// Independent reference computations used by the tests and `verify`.

#include <vector>

#include "gwt/flag.hpp"
#include "gwt/multipoly.hpp"

namespace gwt {

// num / den, never simplified; derivatives by the quotient rule.
struct RationalFunction {
  MultiPoly num, den;

  static RationalFunction poly(const MultiPoly& p);
  RationalFunction derivative(int v) const;
  Elem eval(std::span<const Elem> point) const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
};

// phi_to o phi_from^{-1} as rational functions of chart_vars(n).
std::vector<RationalFunction> chart_transition_map(const Field& f, const ChartId& from,
                                                   const ChartId& to, int n);
// Determinant of the symbolic Jacobian of the transition map, evaluated at
// the coordinates of pl in `from`.
Elem symbolic_transition_jacobian(const ChartId& from, const ChartId& to, const PointedLine& pl);

}  // namespace gwt
