#pragma once
// The flag variety of pointed lines in P^n: standard charts U_{I,l}, their
// coordinates, the projection beta to P^n and the transition Jacobian.
// Column indices and l are 1-based throughout, as in the chart names.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "gwt/field.hpp"
#include "gwt/linalg.hpp"
#include "gwt/multipoly.hpp"

namespace gwt {

struct PointedLine {
  Matrix rows;  // 2 x (n+1)
  Elem y1, y2;

  // Validates rank 2 and a nonzero marked point.
  static PointedLine make(Matrix rows, Elem y1, Elem y2);
  // "a b c / d e f ; y1 y2"; entries separated by commas or blanks.
  static PointedLine parse(std::string_view text, const Field& f);

  int n() const { return static_cast<int>(rows[0].size()) - 1; }
  Field field() const { return y1.field(); }
  std::vector<Elem> point() const;  // y1*row1 + y2*row2
  PointedLine embed(const Field& target) const;
  std::string to_string() const;
};

struct ChartId {
  int i1 = 1, i2 = 2, l = 1;
  static ChartId parse(std::string_view text);  // "I=i1,i2;l=1|2"
  std::string to_string() const;
  int marked_col() const { return l == 1 ? i1 : i2; }
  int other_col() const { return l == 1 ? i2 : i1; }
  friend auto operator<=>(const ChartId&, const ChartId&) = default;
};

struct ChartPoint {
  ChartId chart;
  // x_{1,1}, x_{2,1}, x_{1,2}, x_{2,2}, ... over the columns not in I,
  // ascending; 2(n-1) entries.
  std::vector<Elem> grassmann;
  Elem fiber;  // y_{l'} / y_l in the reduced basis

  int n() const { return static_cast<int>(grassmann.size()) / 2 + 1; }
  std::vector<Elem> coords() const;  // grassmann then fiber: 2n-1 entries
  static ChartPoint from_coords(const ChartId& c, const std::vector<Elem>& coords);
  friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

std::vector<ChartId> all_charts(int n);
// Columns of P^n outside I, ascending (1-based).
std::vector<int> free_columns(const ChartId& c, int n);
// Names x1_j, x2_j, ..., u of the chart coordinates.
std::vector<std::string> chart_vars(int n);

Elem plucker(const PointedLine& pl, int i, int j);
Elem marked_coord(const PointedLine& pl, int i);
bool chart_membership(const PointedLine& pl, const ChartId& c);
ChartPoint to_chart(const PointedLine& pl, const ChartId& c);
// Row-reduced representative: identity in columns I, y_l = 1, y_{l'} = fiber.
PointedLine from_chart(const ChartPoint& cp);
// Affine point (x_{1,1}u + x_{2,1}, ..., x_{1,n-1}u + x_{2,n-1}, u) in the
// patch z_{n+1} = 1; only for the chart ((n, n+1), 2).
std::vector<Elem> beta_chart(const ChartPoint& cp);
// Homogeneous marked point of any chart point.
std::vector<Elem> beta(const ChartPoint& cp);
// The homogeneous coordinates of beta as polynomials in chart_vars(n).
std::vector<MultiPoly> beta_polys(const Field& f, const ChartId& c, int n);
// F(beta) in chart_vars(n); F homogeneous in n+1 variables.
MultiPoly beta_pullback(const MultiPoly& F, const ChartId& c);
// (-1)^{l+m} (w_I / w_J)^n (marked_{i_l} / marked_{j_m})^2.
Elem transition_jacobian(const ChartId& from, const ChartId& to, const PointedLine& pl);

}  // namespace gwt
