#pragma once
// Plane curves: smoothness, inflection points, branch expansions and the
// enriched flex count.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gwt/gw.hpp"
#include "gwt/linalg.hpp"
#include "gwt/multipoly.hpp"
#include "gwt/upoly.hpp"

namespace gwt {

inline constexpr std::uint64_t kDefaultSeed = 20240229;

// F(A x) for a 3x3 matrix A over F's field.
MultiPoly linear_change(const MultiPoly& F, const Matrix& a);
// Homogeneous point scaled so its first nonzero coordinate is 1.
std::vector<Elem> normalize_point(std::vector<Elem> p);

// Rejects characteristic 2 and 3, non-homogeneous input and degree < 1.
bool check_smooth(const MultiPoly& F);

// Closed points of V(F, Hess F) with intersection multiplicities, sorted by
// residue degree then representative. coords are normalized homogeneous
// coordinates in extension_of(base, residue_degree). Finite prime base
// fields only.
std::vector<ClosedPoint> inflection_points(const MultiPoly& F, std::uint64_t seed = kDefaultSeed);

struct BranchExpansion {
  std::vector<Elem> center;  // normalized homogeneous coordinates
  int chart = 2;             // coordinate set to 1
  int parameter = 0;         // homogeneous index of the local parameter z
  int graph = 1;             // homogeneous index of the graph coordinate b
  // b(z) = b0 + b1 (z - z0) + b2 (z - z0)^2 + b3 (z - z0)^3 + ...
  std::array<Elem, 4> b;
  Elem z0;
  // d(b2)/dz at z0, from the expansion recentered at a moved point.
  Elem ii_derivative;
};
BranchExpansion branch_expand(const MultiPoly& F, const std::vector<Elem>& point);

// Lines meeting the curve with even multiplicity at every intersection
// point (bitangents of a quartic), normalized so the first nonzero
// coefficient is 1, in lexicographic order. Finite prime fields only.
std::vector<std::vector<Elem>> contact_lines(const MultiPoly& F);
bool is_contact_line(const MultiPoly& F, const std::vector<Elem>& line);

struct FlexReport {
  ClosedPoint point;
  BranchExpansion branch;
  Elem ii_value;   // b2
  // Coefficient of III in a trivialization compatible with the relative
  // orientation given by a contact line: b3 * sgn(chart, z, b) * z_c(p) *
  // line(p). Without a contact line this is b3 of the branch chart.
  Elem iii_value;
  // d(b2)/dz along the branch, recomputed at the moved point over dual
  // numbers; equals 3 * b3 at a flex.
  Elem ii_derivative;
  GWClass index;   // Tr <3 III>
  int multiplicity = 1;
  bool oriented = false;
};
FlexReport flex_index(const MultiPoly& F, const ClosedPoint& p,
                      const std::optional<std::vector<Elem>>& contact = std::nullopt);

struct FlexCount {
  std::vector<FlexReport> reports;
  GWClass total;      // sum of Tr <3 III(p)>
  GWClass total_iii;  // sum of Tr <III(p)>
  long rank = 0;
  long expected_multiple = 0;         // 3d(d-2)/2
  // Contact line used to orient; searched for when d is even and none is
  // given.
  std::optional<std::vector<Elem>> contact;
  std::optional<bool> matches;        // d even only
  std::optional<bool> matches_iii;
};
FlexCount enriched_flex_count(const MultiPoly& F, std::uint64_t seed = kDefaultSeed,
                              std::optional<std::vector<Elem>> contact = std::nullopt);

bool ff_orientability(int d, bool has_theta);

// Requires char != 2, 3, three variables and homogeneity.
void require_plane_curve(const MultiPoly& F);

}  // namespace gwt
