#include "boroczky/fatpoints.hpp"
#include "boroczky/symmetry.hpp"

#include <algorithm>

#include "boroczky/errors.hpp"

namespace boroczky {

FatPointScheme FatPointScheme::from_points(Field field, std::vector<ProjPoint> pts) {
  return FatPointScheme{std::move(field), dedupe_projective(pts)};
}

FatPointScheme FatPointScheme::triple_points(const Configuration& c,
                                             const IncidenceReport& report) {
  return from_points(c.field, report.triple_point_list());
}

namespace {

Rat falling_factorial(int n, int k) {
  long acc = 1;
  for (int t = 0; t < k; ++t) acc *= n - t;
  return Rat(acc);
}

}  // namespace

ExactMatrix interpolation_matrix(const FatPointScheme& s, int m, int d) {
  if (m < 1) throw InvalidInput("multiplicity must be >= 1");
  if (d < 0) throw InvalidInput("degree must be >= 0");
  const Field& f = s.field;
  const std::size_t cols = Form::basis_size(d);
  const std::size_t rows_per_point = static_cast<std::size_t>(m) * (m + 1) / 2;
  ExactMatrix mat(f, s.points.size() * rows_per_point, cols);

  std::size_t row = 0;
  for (const ProjPoint& p : s.points) {
    // chart = first nonzero coordinate (canonically 1); affine coordinates
    // are the remaining two in index order
    int chart = 0;
    while (p.coords[chart].is_zero()) ++chart;
    const int ai = chart == 0 ? 1 : 0;
    const int bi = chart == 2 ? 1 : 2;

    std::vector<FieldElement> pow_a{f->one()}, pow_b{f->one()};
    for (int t = 1; t <= d; ++t) {
      pow_a.push_back(pow_a.back() * p.coords[ai]);
      pow_b.push_back(pow_b.back() * p.coords[bi]);
    }

    for (int order = 0; order < m; ++order) {
      for (int i = order; i >= 0; --i) {
        const int j = order - i;
        for (std::size_t col = 0; col < cols; ++col) {
          auto e = Form::mono_exponents(d, col);
          const int ea = e[ai], eb = e[bi];
          if (ea < i || eb < j) continue;
          Rat coeff = falling_factorial(ea, i) * falling_factorial(eb, j);
          if (sgn(coeff) == 0) continue;
          mat.at(row, col) = (pow_a[ea - i] * pow_b[eb - j]) * coeff;
        }
        ++row;
      }
    }
  }
  return mat;
}

GradedPiece symbolic_piece(const FatPointScheme& s, int m, int d) {
  GradedPiece piece;
  piece.degree = d;
  piece.multiplicity = m;
  for (auto& vec : nullspace(interpolation_matrix(s, m, d)))
    piece.basis.push_back(Form::from_coefficients(s.field, d, std::move(vec)));
  return piece;
}

int symbolic_piece_dim(const FatPointScheme& s, int m, int d) {
  ExactMatrix mat = interpolation_matrix(s, m, d);
  return static_cast<int>(mat.cols() - rank(std::move(mat)));
}

int alpha(const FatPointScheme& s, int m) {
  if (m < 1) throw InvalidInput("multiplicity must be >= 1");
  if (s.points.empty()) throw InvalidInput("scheme has no points");
  const long bound = static_cast<long>(m) * static_cast<long>(s.points.size());
  for (int d = m; d <= bound; ++d)
    if (symbolic_piece_dim(s, m, d) > 0) return d;
  throw InvariantViolation("alpha exceeded the m * |points| bound");
}

Rat waldschmidt_estimate(const FatPointScheme& s, int m_max) {
  if (m_max < 1) throw InvalidInput("m_max must be >= 1");
  Rat best;
  bool first = true;
  for (int m = 1; m <= m_max; ++m) {
    Rat ratio = Rat(alpha(s, m)) / m;
    if (first || ratio < best) {
      best = ratio;
      first = false;
    }
  }
  return best;
}

IdealSummary minimal_generators(const FatPointScheme& s, int d_max) {
  if (d_max < 1) throw InvalidInput("d_max must be >= 1");
  IdealSummary out;
  out.point_count = static_cast<long>(s.points.size());
  out.hilbert[0] = 0;

  const Field& f = s.field;
  bool prev_stable = false;
  for (int d = 1; d <= d_max; ++d) {
    GradedPiece piece = symbolic_piece(s, 1, d);
    out.hilbert[d] = piece.dim();
    if (out.alpha == 0 && piece.dim() > 0) out.alpha = d;

    SpanEchelon lifted(f, Form::basis_size(d));
    if (auto it = out.ideal_basis.find(d - 1); it != out.ideal_basis.end()) {
      for (int var = 0; var < 3; ++var) {
        Form x = Form::monomial(f, var == 0 ? 1 : 0, var == 1 ? 1 : 0, var == 2 ? 1 : 0, f->one());
        for (const Form& g : it->second) lifted.add((x * g).coefficients());
      }
    }
    std::vector<Form> fresh;
    for (const Form& g : piece.basis)
      if (lifted.add(g.coefficients())) fresh.push_back(g);
    for (std::size_t i = 0; i < fresh.size(); ++i) out.generator_degrees.push_back(d);
    if (!fresh.empty()) out.new_generators[d] = std::move(fresh);
    out.ideal_basis[d] = std::move(piece.basis);
    out.computed_through = d;

    const long expected = static_cast<long>(Form::basis_size(d)) - out.point_count;
    const bool stable = out.alpha > 0 && expected >= 0 && out.hilbert[d] == expected &&
                        out.new_generators.find(d) == out.new_generators.end();
    if (stable && prev_stable) {
      out.complete = true;
      break;
    }
    prev_stable = stable;
  }
  return out;
}

bool PowerSpan::contains(const Form& f) const {
  if (f.degree() != degree) throw InvalidInput("degree mismatch in power-span membership");
  return span.contains(f.coefficients());
}

PowerSpan power_piece(const FatPointScheme& s, int k, int d, const IdealSummary& gens) {
  if (k < 1) throw InvalidInput("power must be >= 1");
  if (gens.alpha == 0) throw ComputationError("generator summary has no generators");
  const int needed = d - (k - 1) * gens.alpha;
  if (!gens.complete && gens.computed_through < needed)
    throw ComputationError("generators incomplete below degree " + std::to_string(needed) +
                           "; membership verdicts would be unreliable");

  const Field& f = s.field;
  PowerSpan out{k, d, SpanEchelon(f, Form::basis_size(d))};

  std::vector<const Form*> flat;
  std::vector<int> flat_deg;
  for (const auto& [deg, forms] : gens.new_generators)
    for (const Form& g : forms) {
      flat.push_back(&g);
      flat_deg.push_back(deg);
    }

  // multisets of k generators with total degree <= d, lexicographic order
  auto rec = [&](auto&& self, std::size_t start, int k_left, int total, Form acc) -> void {
    if (k_left == 0) {
      const int rest = d - total;
      for (std::size_t col = 0; col < Form::basis_size(rest); ++col) {
        auto [a, b, c] = Form::mono_exponents(rest, col);
        out.span.add((Form::monomial(f, a, b, c, f->one()) * acc).coefficients());
      }
      return;
    }
    for (std::size_t i = start; i < flat.size(); ++i) {
      if (total + flat_deg[i] * k_left > d) continue;
      self(self, i, k_left - 1, total + flat_deg[i], acc * (*flat[i]));
    }
  };
  rec(rec, 0, k, 0, Form::monomial(f, 0, 0, 0, f->one()));
  return out;
}

ContainmentWitness containment_witness(const FatPointScheme& s, const std::vector<ProjLine>& lines,
                                       bool check_symbolic_dim) {
  ContainmentWitness w;
  Form product = product_of_lines(s.field, lines);
  w.degree = product.degree();

  // all partials of order <= 2 vanish at every point <=> order-3 vanishing
  std::vector<Form> partials{product};
  for (int v = 0; v < 3; ++v) partials.push_back(product.partial(v));
  for (int v = 0; v < 3; ++v)
    for (int u = v; u < 3; ++u) partials.push_back(product.partial(v).partial(u));
  w.product_in_symbolic3 = true;
  for (const ProjPoint& p : s.points)
    for (const Form& g : partials)
      if (!g.eval(p.coords).is_zero()) {
        w.product_in_symbolic3 = false;
        break;
      }

  if (!w.product_in_symbolic3) {
    w.verdict = "INAPPLICABLE";
    return w;
  }

  const int a = alpha(s, 1);
  IdealSummary gens = minimal_generators(s, w.degree - a);
  PowerSpan square = power_piece(s, 2, w.degree, gens);
  w.product_in_square = square.contains(product);
  w.verdict = w.product_in_square ? "NOT_REFUTED" : "NOT_CONTAINED";

  if (check_symbolic_dim) w.dim_symbolic_slice = symbolic_piece_dim(s, 3, w.degree);
  return w;
}

ContainmentSweep containment_up_to_degree(const FatPointScheme& s, int upto) {
  ContainmentSweep sweep;
  sweep.upto = upto;
  const int a = alpha(s, 1);
  IdealSummary gens;
  bool have_gens = false;

  for (int d = 0; d <= upto; ++d) {
    GradedPiece symbolic = symbolic_piece(s, 3, d);
    sweep.checked_dims.push_back(symbolic.dim());
    if (symbolic.dim() == 0) continue;  // nothing to contain
    if (!have_gens) {
      gens = minimal_generators(s, std::max(upto - a, a));
      have_gens = true;
    }
    PowerSpan square = power_piece(s, 2, d, gens);
    for (const Form& g : symbolic.basis)
      if (!square.contains(g)) {
        sweep.first_failure = d;
        return sweep;
      }
  }
  return sweep;
}

bool unique_form_check(const Configuration& c) {
  if (c.n < 12 || c.n % 6 != 0) throw InvalidInput("unique-form check needs 6 | n, n >= 12");
  IncidenceReport report = incidence_report(c);
  FatPointScheme s = FatPointScheme::triple_points(c, report);
  GradedPiece piece = symbolic_piece(s, 3, c.n);
  if (piece.dim() != 1) return false;
  Form product = product_of_lines(c.field, c.lines);
  if (!piece.basis[0].proportional_to(product)) return false;
  SkewCheck skew = skew_invariant_check(product, dihedral_group(c.field));
  return skew.is_skew && skew.alternating_sign;
}

}  // namespace boroczky
