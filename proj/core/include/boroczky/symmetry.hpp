#pragma once

#include <array>
#include <string>
#include <vector>

#include "boroczky/boroczky.hpp"
#include "boroczky/polynomial.hpp"
#include "boroczky/projective.hpp"

namespace boroczky {

using Matrix3 = std::array<std::array<FieldElement, 3>, 3>;

Matrix3 matrix_product(const Matrix3& a, const Matrix3& b);
Matrix3 matrix_inverse(const Matrix3& m);

struct GroupElement {
  Matrix3 matrix;
  bool is_reflection = false;
  std::string name;
};

/// sqrt(3) = zeta_12 + zeta_12^{-1}; needs a cyclotomic field of order
/// divisible by 12.
FieldElement sqrt3(const Field& field);

/// The six elements of the dihedral action on the plane (rotations by 0,
/// 2pi/3, 4pi/3 and three reflections), bottom row (0,0,1). Order is fixed:
/// r0, r1, r2, s0, s1, s2.
std::vector<GroupElement> dihedral_group(const Field& field);

ProjPoint act(const GroupElement& g, const ProjPoint& p);

/// (g.f)(x) = f(g^{-1} x); vanishing sets transform covariantly.
Form act_on_form(const GroupElement& g, const Form& f);

struct Orbit {
  std::vector<ProjPoint> points;  // sorted by key
  std::size_t size() const { return points.size(); }
  const ProjPoint& representative() const { return points.front(); }
};

/// Partition of a closed point set into orbits (deterministic order: size
/// ascending, then representative key). Throws InvalidInput naming the
/// escaping point when the set is not closed under the group.
std::vector<Orbit> orbit_decompose(const std::vector<ProjPoint>& points,
                                   const std::vector<GroupElement>& group);

struct OrbitProfile {
  std::map<std::size_t, int> by_size;
  int count(std::size_t size) const {
    auto it = by_size.find(size);
    return it == by_size.end() ? 0 : it->second;
  }
};
OrbitProfile orbit_profile(const std::vector<Orbit>& orbits);

/// Closed-form orbit counts for 3 | n:
///   O3 = floor((n-1)/2) - 1,   O6 = n(n-3)/36 - floor((n-1)/2)/2 + 1/2.
/// Both evaluate to integers whenever 3 | n.
struct OrbitCounts {
  long o3 = 0;
  long o6 = 0;
};
OrbitCounts orbit_count_formulas(int n);

/// u = x^2 + y^2, v = x(x - sqrt(3)y)(x + sqrt(3)y) = x^3 - 3xy^2,
/// p = y(y - sqrt(3)x)(y + sqrt(3)x) = y^3 - 3x^2y.
struct InvariantForms {
  Form u, v, p;
};
InvariantForms invariant_forms(const Field& field);

/// Image [z(p) : u(p) : v(p)] in P(1,2,3), normalized to first coordinate 1
/// via the weighted scaling. Affine points only.
struct WeightedPoint {
  FieldElement z, u, v;
};
WeightedPoint phi_map(const ProjPoint& p, const InvariantForms& forms);

/// The complete intersection cutting out a size-6 orbit: (u - r^2 z^2,
/// v - gamma z^3). Verifies vanishing on the whole orbit.
struct Orbit6Ideal {
  FieldElement r2, gamma;
};
Orbit6Ideal orbit6_ideal(const Orbit& o, const InvariantForms& forms);

struct SkewCheck {
  bool is_skew = false;           // g.f = +-f for all g
  bool alternating_sign = false;  // sign -1 exactly on reflections
};
SkewCheck skew_invariant_check(const Form& f, const std::vector<GroupElement>& group);

/// Hilbert function of k[z,u,v] with weights (1,2,3):
/// floor(d^2/12 + d/2 + 1). Cross-checked against the enumeration oracle on
/// every call.
long weighted_hilbert(long d);
long weighted_hilbert_bruteforce(long d);

/// d+3 for the smallest d with floor(d^2/12 + d/2) >= (n-6)^2/36; requires
/// 6 | n, n >= 12. Sandwiches alpha(I_n) via n/3 <= alpha <= d+3.
int degree_bound(int n);

/// Empirical check whether the rotation by pi/3 also stabilizes the triple
/// points; reported, never asserted.
bool rotation_pi3_stabilizes(const Configuration& c, const IncidenceReport& report);

}  // namespace boroczky
