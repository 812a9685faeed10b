#include "gwt/oracles.hpp"

#include <stdexcept>

#include "gwt/linalg.hpp"

namespace gwt {

RationalFunction RationalFunction::poly(const MultiPoly& p) {
  return {p, MultiPoly::constant(p.field(), p.vars(), p.field().one())};
}

RationalFunction RationalFunction::derivative(int v) const {
  return {num.partial(v) * den - num * den.partial(v), den * den};
}

Elem RationalFunction::eval(std::span<const Elem> point) const {
  const Elem d = den.eval(point);
  if (d.is_zero()) throw std::domain_error("rational function pole");
  return num.eval(point) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.num, a.den * b.den};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.den, a.den * b.num};
}

std::vector<RationalFunction> chart_transition_map(const Field& f, const ChartId& from,
                                                   const ChartId& to, int n) {
  const auto vars = chart_vars(n);
  const int u_idx = 2 * n - 1 - 1;
  auto var = [&](int i) { return RationalFunction::poly(MultiPoly::variable(f, vars, i)); };
  auto cst = [&](long c) { return RationalFunction::poly(MultiPoly::constant(f, vars, f.from_int(c))); };
  // The row-reduced matrix and point coefficients of a point of `from`.
  std::vector<std::vector<RationalFunction>> m(2, std::vector<RationalFunction>(static_cast<std::size_t>(n + 1), cst(0)));
  m[0][static_cast<std::size_t>(from.i1 - 1)] = cst(1);
  m[1][static_cast<std::size_t>(from.i2 - 1)] = cst(1);
  const auto cols = free_columns(from, n);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    m[0][static_cast<std::size_t>(cols[k] - 1)] = var(static_cast<int>(2 * k));
    m[1][static_cast<std::size_t>(cols[k] - 1)] = var(static_cast<int>(2 * k + 1));
  }
  const RationalFunction y1 = from.l == 1 ? cst(1) : var(u_idx);
  const RationalFunction y2 = from.l == 1 ? var(u_idx) : cst(1);
  auto at = [&](int r, int c) { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]; };
  // Coordinates of `to`: R = A^{-1} M with A = M[:, J].
  const auto a = at(0, to.i1), b = at(0, to.i2), c = at(1, to.i1), d = at(1, to.i2);
  const RationalFunction w = a * d - b * c;
  std::vector<RationalFunction> out;
  for (int j : free_columns(to, n)) {
    out.push_back((d * at(0, j) - b * at(1, j)) / w);
    out.push_back((a * at(1, j) - c * at(0, j)) / w);
  }
  auto marked = [&](int i) { return y1 * at(0, i) + y2 * at(1, i); };
  out.push_back(marked(to.other_col()) / marked(to.marked_col()));
  return out;
}

Elem symbolic_transition_jacobian(const ChartId& from, const ChartId& to, const PointedLine& pl) {
  const int n = pl.n();
  const Field f = pl.field();
  if (!chart_membership(pl, from) || !chart_membership(pl, to)) {
    throw std::domain_error("pointed line is not in both charts");
  }
  const auto map = chart_transition_map(f, from, to, n);
  const auto pt = to_chart(pl, from).coords();
  Matrix jac;
  for (const auto& comp : map) {
    std::vector<Elem> row;
    for (int v = 0; v < 2 * n - 1; ++v) row.push_back(comp.derivative(v).eval(pt));
    jac.push_back(std::move(row));
  }
  return det(std::move(jac));
}

}  // namespace gwt
