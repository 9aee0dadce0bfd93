#include "boroczky/elliptic.hpp"

#include <cmath>

#include "boroczky/errors.hpp"

namespace boroczky {

namespace {

// Operation table for E[6] on x^3+y^3+z^3 = 0: cell (i,j) = i*alpha + j*beta,
// alpha = [1:s:1], beta = [s:1:t]. Reference data, certified in generate_E6.
constexpr const char* kTorsionRef[6][6][3] = {
    {{"-1", "1", "0"}, {"s", "1", "t"}, {"-1", "0", "t"},
     {"t^2", "t^2", "s"}, {"0", "1", "-t"}, {"1", "s", "t"}},
    {{"1", "s", "1"}, {"t^2", "1", "s"}, {"s", "t^2", "t"},
     {"t", "s", "t"}, {"t", "t^2", "s"}, {"s", "1", "t^2"}},
    {{"0", "1", "-1"}, {"t", "s", "1"}, {"-t", "1", "0"},
     {"s", "t^2", "t^2"}, {"-1", "0", "t^2"}, {"t", "1", "s"}},
    {{"1", "1", "s"}, {"s", "t^2", "1"}, {"t", "s", "t^2"},
     {"t", "t", "s"}, {"s", "t", "t^2"}, {"t^2", "s", "1"}},
    {{"-1", "0", "1"}, {"1", "t", "s"}, {"0", "1", "-t^2"},
     {"t^2", "s", "t^2"}, {"-t^2", "1", "0"}, {"s", "t", "1"}},
    {{"s", "1", "1"}, {"1", "s", "t^2"}, {"t^2", "t", "s"},
     {"s", "t", "t"}, {"t^2", "s", "t"}, {"1", "t^2", "s"}}};

ProjPoint parse_point(const Field& f, const char* const coords[3]) {
  return ProjPoint::from({f->parse(coords[0]), f->parse(coords[1]), f->parse(coords[2])});
}

}  // namespace

Field fermat_field() {
  static Field instance = [] {
    FieldSpec::Generator s{"s", {Rat(2), Rat(0), Rat(0), Rat(1)}, {-std::cbrt(2.0), 0.0}};
    FieldSpec::Generator t{"t", {Rat(1), Rat(1), Rat(1)}, {-0.5, std::sqrt(3.0) / 2.0}};
    return FieldSpec::tower({std::move(s), std::move(t)});
  }();
  return instance;
}

FieldElement fermat_eval(const ProjPoint& p) {
  return p.coords[0].pow(3) + p.coords[1].pow(3) + p.coords[2].pow(3);
}

bool on_fermat_curve(const ProjPoint& p) { return fermat_eval(p).is_zero(); }

CurvePoint CurvePoint::from(ProjPoint p) {
  if (!on_fermat_curve(p)) throw InvalidInput("point is not on x^3 + y^3 + z^3 = 0");
  return CurvePoint{std::move(p)};
}

ProjLine fermat_tangent(const CurvePoint& p) {
  return ProjLine::from({p.point.coords[0] * p.point.coords[0],
                         p.point.coords[1] * p.point.coords[1],
                         p.point.coords[2] * p.point.coords[2]});
}

namespace {

// a point of the line distinct from `avoid`: one of the meets with the
// coordinate lines
ProjPoint second_point_on_line(const ProjLine& l, const ProjPoint& avoid) {
  const Field& f = l.coeffs[0].owner();
  const FieldElement& a = l.coeffs[0];
  const FieldElement& b = l.coeffs[1];
  const FieldElement& c = l.coeffs[2];
  const Triple candidates[3] = {{b, -a, f->zero()}, {c, f->zero(), -a}, {f->zero(), c, -b}};
  for (const Triple& cand : candidates) {
    if (cand[0].is_zero() && cand[1].is_zero() && cand[2].is_zero()) continue;
    ProjPoint p = ProjPoint::from(cand);
    if (p != avoid) return p;
  }
  throw InvariantViolation("line has no second coordinate-axis point");
}

FieldElement restriction_c21(const ProjPoint& p, const ProjPoint& q) {
  // coefficient of u^2 w in F(u p + w q) over the Fermat cubic
  const Field& f = p.coords[0].owner();
  FieldElement acc = f->zero();
  for (int i = 0; i < 3; ++i) acc += p.coords[i] * p.coords[i] * q.coords[i];
  return acc * Rat(3);
}

ProjPoint combine(const FieldElement& cu, const ProjPoint& p, const FieldElement& cw,
                  const ProjPoint& q) {
  Triple out;
  for (int i = 0; i < 3; ++i) out[i] = cu * p.coords[i] + cw * q.coords[i];
  return ProjPoint::from(std::move(out));
}

}  // namespace

CurvePoint third_intersection(const CurvePoint& p, const CurvePoint& q) {
  if (p.point == q.point) {
    ProjLine tangent = fermat_tangent(p);
    ProjPoint q2 = second_point_on_line(tangent, p.point);
    // restriction has a double root at p: c30 = 0 (on curve), c21 = 0
    // (tangency); remaining factor c12 u + c03 w
    FieldElement c21 = restriction_c21(p.point, q2);
    if (!c21.is_zero()) throw InvariantViolation("tangent restriction is not a double root");
    FieldElement c12 = restriction_c21(q2, p.point);
    if (c12.is_zero()) return p;  // flex: the tangent meets with multiplicity 3
    FieldElement c03 = fermat_eval(q2);
    return CurvePoint::from(combine(c03, p.point, -c12, q2));
  }
  // F(u p + w q) = u w (c21 u + c12 w); third root (u, w) = (c12, -c21)
  FieldElement c21 = restriction_c21(p.point, q.point);
  FieldElement c12 = restriction_c21(q.point, p.point);
  return CurvePoint::from(combine(c12, p.point, -c21, q.point));
}

CurvePoint flex_identity() {
  const Field& f = fermat_field();
  return CurvePoint{ProjPoint::from({f->one(), f->element(-1), f->zero()})};
}

CurvePoint ec_add(const CurvePoint& p, const CurvePoint& q) {
  return third_intersection(flex_identity(), third_intersection(p, q));
}

CurvePoint ec_neg(const CurvePoint& p) { return third_intersection(p, flex_identity()); }

const CurvePoint& TorsionTable::at(int i, int j) const {
  const int ii = ((i % 6) + 6) % 6;
  const int jj = ((j % 6) + 6) % 6;
  return cells_[static_cast<std::size_t>(ii) * 6 + jj];
}

TorsionTable generate_E6() {
  TorsionTable table;
  table.field_ = fermat_field();
  const Field& f = table.field_;

  CurvePoint alpha = CurvePoint::from(ProjPoint::from({f->one(), f->generator(0), f->one()}));
  CurvePoint beta =
      CurvePoint::from(ProjPoint::from({f->generator(0), f->one(), f->generator(1)}));

  std::vector<CurvePoint> alpha_row{flex_identity()};
  for (int i = 1; i < 6; ++i) alpha_row.push_back(ec_add(alpha_row.back(), alpha));
  table.cells_.reserve(36);
  for (int i = 0; i < 6; ++i) {
    table.cells_.push_back(alpha_row[i]);
    for (int j = 1; j < 6; ++j) table.cells_.push_back(ec_add(table.cells_.back(), beta));
  }

  // certification against the reference table, cell by cell
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      ProjPoint expect = parse_point(f, kTorsionRef[i][j]);
      if (table.at(i, j).point != expect)
        throw InvariantViolation("torsion table mismatch at cell (" + std::to_string(i) + "," +
                                 std::to_string(j) + "): computed " + table.at(i, j).point.key() +
                                 ", reference " + expect.key());
    }
  if (!(ec_add(table.at(5, 0), alpha) == flex_identity()) ||
      !(ec_add(table.at(0, 5), beta) == flex_identity()))
    throw InvariantViolation("alpha or beta does not have order 6");

  std::vector<ProjPoint> pts;
  for (const CurvePoint& c : table.cells_) pts.push_back(c.point);
  if (dedupe_projective(pts).size() != 36)
    throw InvariantViolation("torsion table entries are not pairwise distinct");
  return table;
}

EllipticConfig build_elliptic_config() {
  EllipticConfig cfg;
  cfg.table = generate_E6();
  cfg.field = cfg.table.field();

  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const CurvePoint& p1 = cfg.table.at(i, j);
      const CurvePoint& p2 = cfg.table.at(3 - 2 * i, 3 - 2 * j);
      if (p1 == p2) {
        cfg.raw_lines.push_back(fermat_tangent(p1));
        cfg.tangent_labels.emplace_back(i, j);
      } else {
        cfg.raw_lines.push_back(line_through(p1.point, p2.point));
      }
    }

  cfg.lines = dedupe_projective(cfg.raw_lines);
  if (cfg.lines.size() != 18)
    throw InvariantViolation("expected 18 unique lines, got " + std::to_string(cfg.lines.size()));

  cfg.incidence = incidence_report(cfg.lines, /*planar=*/false);
  const int at_least_2 = cfg.incidence.count_at_least(2);
  const int triples = cfg.incidence.count(3);
  const int at_least_4 = cfg.incidence.count_at_least(4);
  if (at_least_2 != 57 || triples != 48 || at_least_4 != 0)
    throw InvariantViolation("incidence statistics mismatch: >=2: " + std::to_string(at_least_2) +
                             ", =3: " + std::to_string(triples) +
                             ", >=4: " + std::to_string(at_least_4));
  for (const PointRecord& rec : cfg.incidence.triple_points())
    if (on_fermat_curve(rec.point))
      throw InvariantViolation("triple point on the curve: " + rec.point.key());
  return cfg;
}

std::vector<GroupElement> s3_coordinate_group(const Field& field) {
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  const bool odd[6] = {false, false, false, true, true, true};
  std::vector<GroupElement> out;
  for (int k = 0; k < 6; ++k) {
    Matrix3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = perms[k][i] == j ? field->one() : field->zero();
    out.push_back({std::move(m), odd[k], "perm" + std::to_string(k)});
  }
  return out;
}

std::vector<Orbit> s3_orbits(const std::vector<ProjPoint>& points, const Field& field) {
  return orbit_decompose(points, s3_coordinate_group(field));
}

EllipticContainment elliptic_containment(const EllipticConfig& cfg) {
  EllipticContainment out;
  FatPointScheme scheme =
      FatPointScheme::from_points(cfg.field, cfg.incidence.triple_point_list());
  out.witness = containment_witness(scheme, cfg.lines, /*check_symbolic_dim=*/true);

  out.no_planar_match = true;
  for (int n = 3; n <= 100; ++n)
    if (triple_count_formula(n) == 48) out.no_planar_match = false;
  return out;
}

}  // namespace boroczky
