#pragma once

#include <array>
#include <utility>
#include <vector>

#include "boroczky/boroczky.hpp"
#include "boroczky/fatpoints.hpp"
#include "boroczky/symmetry.hpp"

namespace boroczky {

/// Q(s,t) with s^3 + 2 = 0 and t^2 + t + 1 = 0; contains the coordinates of
/// all 36 points of E[6] on the Fermat cubic.
Field fermat_field();

FieldElement fermat_eval(const ProjPoint& p);
bool on_fermat_curve(const ProjPoint& p);

/// A point of x^3 + y^3 + z^3 = 0; construction checks the equation.
struct CurvePoint {
  ProjPoint point;
  static CurvePoint from(ProjPoint p);
  bool operator==(const CurvePoint& o) const { return point == o.point; }
};

/// Tangent at a curve point: gradient line with coefficients (x^2, y^2, z^2).
ProjLine fermat_tangent(const CurvePoint& p);

/// Third intersection of the chord through p and q (tangent when p = q) with
/// the cubic, multiplicity-aware: the binary cubic restricted to the line is
/// deflated by its two known roots, leaving a linear factor. A flex tangent
/// returns the point itself.
CurvePoint third_intersection(const CurvePoint& p, const CurvePoint& q);

/// Chord-tangent group law with flex identity O = [1:-1:0].
CurvePoint flex_identity();
CurvePoint ec_add(const CurvePoint& p, const CurvePoint& q);
CurvePoint ec_neg(const CurvePoint& p);

/// grid(i, j) = i*alpha + j*beta with alpha = [1:s:1], beta = [s:1:t].
/// generate_E6 rebuilds the table from the group law and certifies every
/// cell against the embedded reference operation table; a mismatch is a hard
/// failure naming the cell. Also asserts 6*alpha = 6*beta = O and that all
/// 36 entries are pairwise distinct.
class TorsionTable {
 public:
  const CurvePoint& at(int i, int j) const;  // indices taken mod 6
  const Field& field() const { return field_; }

 private:
  friend TorsionTable generate_E6();
  Field field_;
  std::vector<CurvePoint> cells_;  // row-major, 36 entries
};

TorsionTable generate_E6();

struct EllipticConfig {
  Field field;
  TorsionTable table;
  std::vector<ProjLine> raw_lines;                 // 36, L(i,j) row-major
  std::vector<std::pair<int, int>> tangent_labels; // (i,j) where L(i,j) is tangent
  std::vector<ProjLine> lines;                     // 18 after projective dedupe
  IncidenceReport incidence;
};

/// L(i,j) joins grid(i,j) and grid(3-2i, 3-2j) (mod 6), tangent when the
/// endpoints coincide. Dedupe happens only at the incidence step. The
/// incidence statistics are certified: 18 unique lines, 57 points of
/// multiplicity >= 2, 48 of multiplicity exactly 3, none higher, and no
/// triple point on the curve.
EllipticConfig build_elliptic_config();

/// The six coordinate permutations of P^2 as matrix group elements
/// (is_reflection marks odd permutations).
std::vector<GroupElement> s3_coordinate_group(const Field& field);

/// Orbit decomposition of a coordinate-permutation-closed point set.
std::vector<Orbit> s3_orbits(const std::vector<ProjPoint>& points, const Field& field);

struct EllipticContainment {
  ContainmentWitness witness;
  bool no_planar_match = false;  // n(n-3)/6 + 1 = 48 has no integer solution
};

/// Containment data for I_{E6}: the product of the 18 unique lines against
/// (I^(3))_18 and (I^2)_18, plus the planar-count cross-check.
EllipticContainment elliptic_containment(const EllipticConfig& cfg);

}  // namespace boroczky
