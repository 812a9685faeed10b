#pragma once
// Seeded random objects for property checks: used by `verify`, the
// acceptance suite and the unit tests.

#include <random>

#include "gwt/flag.hpp"
#include "gwt/multipoly.hpp"
#include "gwt/plane.hpp"
#include "gwt/upoly.hpp"

namespace gwt::sampling {

inline Elem random_elem(const Field& f, std::mt19937_64& rng) {
  if (f.is_finite()) return f.element(rng() % f.order().get_ui());
  return f.from_mpq(mpq_class(static_cast<long>(rng() % 11) - 5, 1 + static_cast<unsigned long>(rng() % 3)));
}

inline Elem random_nonzero(const Field& f, std::mt19937_64& rng) {
  while (true) {
    Elem x = random_elem(f, rng);
    if (!x.is_zero()) return x;
  }
}

inline PointedLine random_line(const Field& f, int n, std::mt19937_64& rng) {
  while (true) {
    Matrix rows(2);
    for (auto& r : rows)
      for (int i = 0; i <= n; ++i) r.push_back(random_elem(f, rng));
    try {
      return PointedLine::make(rows, random_elem(f, rng), random_elem(f, rng));
    } catch (const std::invalid_argument&) {
    }
  }
}

inline PointedLine random_line_in(const Field& f, int n, const ChartId& c, std::mt19937_64& rng) {
  while (true) {
    PointedLine pl = random_line(f, n, rng);
    if (chart_membership(pl, c)) return pl;
  }
}

// Random homogeneous form of degree d in n+1 variables, all monomials.
inline MultiPoly random_form(const Field& f, int nvars, int d, std::mt19937_64& rng) {
  MultiPoly p(f, MultiPoly::standard_vars(nvars));
  MultiPoly::Exponents e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      p.add_term(e, random_elem(f, rng));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return p;
}

// Random smooth plane curve of degree d whose flexes are all simple.
inline MultiPoly random_general_curve(const Field& f, int d, std::mt19937_64& rng) {
  while (true) {
    MultiPoly F = random_form(f, 3, d, rng);
    if (F.total_degree() != d || !check_smooth(F)) continue;
    bool simple = true;
    for (const auto& p : inflection_points(F)) simple = simple && p.multiplicity == 1;
    if (simple) return F;
  }
}

inline UPoly random_upoly(const Field& f, int deg, std::mt19937_64& rng) {
  std::vector<Elem> c;
  for (int i = 0; i <= deg; ++i) c.push_back(random_elem(f, rng));
  return UPoly(f, std::move(c));
}

}  // namespace gwt::sampling
