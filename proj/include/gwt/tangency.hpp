#pragma once
// The jet section of E_{2n-1} over pointed lines, contact orders, the
// Hasse-Wronskian local index and the enriched count of flex lines.

#include <cstdint>
#include <optional>
#include <vector>

#include "gwt/flag.hpp"
#include "gwt/gw.hpp"
#include "gwt/plane.hpp"

namespace gwt {

// (D^(0), ..., D^(2n-2)) of beta*F in u at the chart point of pl.
std::vector<Elem> jet_section(const MultiPoly& F, const PointedLine& pl, const ChartId& c);

struct ContactOrder {
  bool contained = false;
  int order = 0;  // meaningless when contained
};
ContactOrder contact_order(const MultiPoly& F, const PointedLine& pl);

// det of the partials of the jet map with respect to the chart coordinates.
Elem jacobian_g(const MultiPoly& F, const ChartPoint& cp);
// det of the matrix with rows D^(a)_u of the chart gradient of beta*F.
Elem wronskian(const MultiPoly& F, const ChartPoint& cp);

enum class DivisorKind { even, odd };  // V(w12) or V(w12 * z1)
DivisorKind divisor_kind(int d);
bool on_orienting_divisor(const PointedLine& pl, int d);
// Unit relating the chart trivialization to the relative orientation:
// (-1)^{(l-1)n} (w_I / w_12) (z_{i_l} / z_1)^{d mod 2}. Defined off D.
Elem orientation_factor(const PointedLine& pl, const ChartId& c, int d);

struct LocalIndexReport {
  PointedLine pointed_line;
  int residue_degree = 1;
  Elem wronskian_value;     // in chart_used
  Elem orientation;         // orientation_factor, 1 on D
  GWClass index;            // Tr <orientation * wronskian_value>
  ChartId chart_used;
  bool on_divisor = false;
};
// Smallest chart containing pl.
ChartId first_chart(const PointedLine& pl);
LocalIndexReport wronskian_index(const MultiPoly& F, const PointedLine& pl);

// Tangent line at a smooth plane point, marked at the point.
PointedLine tangent_pointed_line(const MultiPoly& F, const std::vector<Elem>& p);

struct TangencyCount {
  MultiPoly curve;  // after any divisor-avoiding coordinate change
  int coordinate_changes = 0;
  std::vector<ClosedPoint> flexes;
  std::vector<LocalIndexReport> reports;
  GWClass total;
  long rank = 0;
};
// With divisor_seed set, collisions with D are resolved by seeded random
// coordinate changes; otherwise they raise HypothesisError.
TangencyCount enriched_count_n2(const MultiPoly& F, std::uint64_t seed = kDefaultSeed,
                                std::optional<std::uint64_t> divisor_seed = std::nullopt);

}  // namespace gwt
