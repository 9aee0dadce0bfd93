#include "boroczky/symmetry.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "boroczky/errors.hpp"

namespace boroczky {

Matrix3 matrix_product(const Matrix3& a, const Matrix3& b) {
  const Field& f = a[0][0].owner();
  Matrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FieldElement acc = f->zero();
      for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
      out[i][j] = std::move(acc);
    }
  return out;
}

Matrix3 matrix_inverse(const Matrix3& m) {
  FieldElement det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det.is_zero()) throw InvalidInput("matrix is singular");
  FieldElement inv_det = det.inverse();
  Matrix3 adj;
  adj[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  adj[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  adj[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  adj[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  adj[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  adj[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  adj[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  adj[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  adj[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) adj[i][j] = adj[i][j] * inv_det;
  return adj;
}

FieldElement sqrt3(const Field& field) {
  unsigned long m = field->cyclotomic_order();
  if (m == 0 || m % 12 != 0)
    throw InvalidInput("sqrt(3) needs a cyclotomic field of order divisible by 12");
  long step = static_cast<long>(m / 12);
  return field->zeta(step) + field->zeta(-step);
}

std::vector<GroupElement> dihedral_group(const Field& field) {
  const FieldElement zero = field->zero();
  const FieldElement one = field->one();
  const FieldElement half = field->element(Rat(1, 2));
  const FieldElement r3_half = sqrt3(field) * Rat(1, 2);

  // rotation by 2pi/3 and the x-axis reflection
  Matrix3 rot{{{-half, -r3_half, zero}, {r3_half, -half, zero}, {zero, zero, one}}};
  Matrix3 refl{{{one, zero, zero}, {zero, -one, zero}, {zero, zero, one}}};
  Matrix3 id{{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}};

  std::vector<GroupElement> g;
  g.push_back({id, false, "r0"});
  g.push_back({rot, false, "r1"});
  g.push_back({matrix_product(rot, rot), false, "r2"});
  g.push_back({refl, true, "s0"});
  g.push_back({matrix_product(rot, refl), true, "s1"});
  g.push_back({matrix_product(g[2].matrix, refl), true, "s2"});
  return g;
}

ProjPoint act(const GroupElement& g, const ProjPoint& p) {
  const Field& f = p.coords[0].owner();
  Triple out{f->zero(), f->zero(), f->zero()};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (g.matrix[i][j].is_zero() || p.coords[j].is_zero()) continue;
      out[i] += g.matrix[i][j] * p.coords[j];
    }
  return ProjPoint::from(std::move(out));
}

Form act_on_form(const GroupElement& g, const Form& f) {
  return f.substitute(matrix_inverse(g.matrix));
}

std::vector<Orbit> orbit_decompose(const std::vector<ProjPoint>& points,
                                   const std::vector<GroupElement>& group) {
  std::unordered_map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < points.size(); ++i) index_of.emplace(points[i].key(), i);

  std::vector<bool> used(points.size(), false);
  std::vector<Orbit> orbits;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (used[i]) continue;
    std::unordered_set<std::string> seen;
    Orbit orbit;
    for (const GroupElement& g : group) {
      ProjPoint image = act(g, points[i]);
      std::string key = image.key();
      auto it = index_of.find(key);
      if (it == index_of.end())
        throw InvalidInput("point set is not closed under the action: " + points[i].key() +
                           " escapes to " + key);
      if (seen.insert(key).second) {
        used[it->second] = true;
        orbit.points.push_back(points[it->second]);
      }
    }
    std::sort(orbit.points.begin(), orbit.points.end(),
              [](const ProjPoint& a, const ProjPoint& b) { return a.key() < b.key(); });
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.representative().key() < b.representative().key();
  });
  return orbits;
}

OrbitProfile orbit_profile(const std::vector<Orbit>& orbits) {
  OrbitProfile p;
  for (const Orbit& o : orbits) ++p.by_size[o.size()];
  return p;
}

OrbitCounts orbit_count_formulas(int n) {
  if (n < 3 || n % 3 != 0) throw InvalidInput("orbit formulas need 3 | n, n >= 3");
  const long half_floor = (n - 1) / 2;
  Rat o6 = Rat(static_cast<long>(n) * (n - 3)) / 36 - Rat(half_floor) / 2 + Rat(1, 2);
  if (o6.get_den() != 1) throw InvariantViolation("orbit-count formula is not integral");
  return OrbitCounts{half_floor - 1, o6.get_num().get_si()};
}

InvariantForms invariant_forms(const Field& field) {
  const FieldElement one = field->one();
  Form u = Form::monomial(field, 2, 0, 0, one) + Form::monomial(field, 0, 2, 0, one);
  Form v = Form::monomial(field, 3, 0, 0, one) +
           Form::monomial(field, 1, 2, 0, field->element(-3));
  Form p = Form::monomial(field, 0, 3, 0, one) +
           Form::monomial(field, 2, 1, 0, field->element(-3));
  return InvariantForms{std::move(u), std::move(v), std::move(p)};
}

WeightedPoint phi_map(const ProjPoint& p, const InvariantForms& forms) {
  const Field& f = p.coords[0].owner();
  const FieldElement& z = p.coords[2];
  if (z.is_zero()) throw InvalidInput("phi_map is defined on affine points only");
  FieldElement u = forms.u.eval(p.coords);
  FieldElement v = forms.v.eval(p.coords);
  FieldElement zi = z.inverse();
  FieldElement zi2 = zi * zi;
  return WeightedPoint{f->one(), u * zi2, v * zi2 * zi};
}

Orbit6Ideal orbit6_ideal(const Orbit& o, const InvariantForms& forms) {
  if (o.size() != 6) throw InvalidInput("orbit6_ideal needs an orbit of size 6");
  const Field& f = o.representative().coords[0].owner();
  WeightedPoint w = phi_map(o.representative(), forms);
  Orbit6Ideal ideal{w.u, w.v};

  // u - r^2 z^2 and v - gamma z^3 must vanish on the whole orbit
  Form circle = forms.u - Form::monomial(f, 0, 0, 2, ideal.r2);
  Form cubic = forms.v - Form::monomial(f, 0, 0, 3, ideal.gamma);
  for (const ProjPoint& p : o.points)
    if (!circle.eval(p.coords).is_zero() || !cubic.eval(p.coords).is_zero())
      throw InvariantViolation("orbit ideal generators fail to vanish on the orbit");
  return ideal;
}

SkewCheck skew_invariant_check(const Form& f, const std::vector<GroupElement>& group) {
  SkewCheck result{true, true};
  for (const GroupElement& g : group) {
    Form image = act_on_form(g, f);
    int sign;
    if (image == f) sign = 1;
    else if (image == -f) sign = -1;
    else return SkewCheck{false, false};
    if (sign != (g.is_reflection ? -1 : 1)) result.alternating_sign = false;
  }
  return result;
}

long weighted_hilbert_bruteforce(long d) {
  long count = 0;
  for (long c = 0; 3 * c <= d; ++c)
    for (long b = 0; 2 * b + 3 * c <= d; ++b) ++count;  // a is determined
  return count;
}

long weighted_hilbert(long d) {
  if (d < 0) throw InvalidInput("degree must be >= 0");
  long value = (d * d + 6 * d) / 12 + 1;
  if (value != weighted_hilbert_bruteforce(d))
    throw InvariantViolation("weighted Hilbert formula disagrees with enumeration");
  return value;
}

int degree_bound(int n) {
  if (n < 12 || n % 6 != 0) throw InvalidInput("degree bound needs 6 | n, n >= 12");
  const long target = static_cast<long>(n - 6) * (n - 6) / 36;
  for (long d = 0;; ++d)
    if ((d * d + 6 * d) / 12 >= target) return static_cast<int>(d) + 3;
}

bool rotation_pi3_stabilizes(const Configuration& c, const IncidenceReport& report) {
  const Field& f = c.field;
  const FieldElement half = f->element(Rat(1, 2));
  const FieldElement r3_half = sqrt3(f) * Rat(1, 2);
  GroupElement t1{{{{half, -r3_half, f->zero()},
                    {r3_half, half, f->zero()},
                    {f->zero(), f->zero(), f->one()}}},
                  false,
                  "pi3"};
  std::unordered_set<std::string> keys;
  for (const PointRecord& rec : report.triple_points()) keys.insert(rec.point.key());
  for (const PointRecord& rec : report.triple_points())
    if (!keys.contains(act(t1, rec.point).key())) return false;
  return true;
}

}  // namespace boroczky
