#pragma once

#include <map>
#include <string>
#include <vector>

#include "boroczky/boroczky.hpp"
#include "boroczky/matrix.hpp"
#include "boroczky/polynomial.hpp"

namespace boroczky {

/// A finite set of distinct points; vanishing multiplicities are supplied per
/// query, so one scheme carries I, I^(m) and the power computations.
struct FatPointScheme {
  Field field;
  std::vector<ProjPoint> points;

  static FatPointScheme from_points(Field field, std::vector<ProjPoint> pts);
  static FatPointScheme triple_points(const Configuration& c, const IncidenceReport& report);
};

struct GradedPiece {
  int degree = 0;
  int multiplicity = 1;
  std::vector<Form> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Vanishing-order conditions: for every point, all chart derivatives of
/// order < m (m(m+1)/2 rows per point); columns are the degree-d monomials.
/// The chart is the first nonzero coordinate, which canonical scaling pins
/// to 1, so dehomogenizing a monomial just drops that exponent.
ExactMatrix interpolation_matrix(const FatPointScheme& s, int m, int d);

/// Basis of the degree-d slice of I^(m) as the kernel of the evaluation map.
GradedPiece symbolic_piece(const FatPointScheme& s, int m, int d);
int symbolic_piece_dim(const FatPointScheme& s, int m, int d);

/// Least d with a nonzero form vanishing to order m at every point.
/// Ascending search from d = m; terminates by d = m * |points|.
int alpha(const FatPointScheme& s, int m);

/// min over 1 <= m <= m_max of alpha(s, m)/m, exact.
Rat waldschmidt_estimate(const FatPointScheme& s, int m_max);

struct IdealSummary {
  std::map<int, int> hilbert;          // d -> dim I_d
  int alpha = 0;                       // least d with dim I_d > 0
  std::vector<int> generator_degrees;  // ascending multiset
  std::map<int, std::vector<Form>> ideal_basis;
  std::map<int, std::vector<Form>> new_generators;
  bool complete = false;  // two consecutive stable degrees reached
  int computed_through = 0;
  long point_count = 0;
};

/// Degree-by-degree minimal generator computation. New generators in degree d
/// span I_d over (x,y,z) * I_{d-1}. Stops once the completeness heuristic
/// fires (zero new generators in two consecutive degrees while the Hilbert
/// function sits on its polynomial) or at d_max, whichever is first.
IdealSummary minimal_generators(const FatPointScheme& s, int d_max);

/// Degree-d slice of I^k, spanned by monomial multiples of k-fold products
/// of minimal generators. Errors when generators are not known up to degree
/// d - (k-1)*alpha, which would risk a false non-membership verdict.
struct PowerSpan {
  int k = 1;
  int degree = 0;
  SpanEchelon span;
  int dim() const { return static_cast<int>(span.rank()); }
  bool contains(const Form& f) const;
};
PowerSpan power_piece(const FatPointScheme& s, int k, int d, const IdealSummary& gens);

struct ContainmentWitness {
  int degree = 0;                 // degree of the product of lines
  bool product_in_symbolic3 = false;
  bool product_in_square = false;
  int dim_symbolic_slice = -1;    // dim (I^(3))_degree when requested, else -1
  std::string verdict;            // NOT_CONTAINED | NOT_REFUTED | INAPPLICABLE
};

/// The witness computation: F = product of the given lines, checked against
/// (I^(3))_deg by direct differentiation and against (I^2)_deg by span
/// membership.
ContainmentWitness containment_witness(const FatPointScheme& s, const std::vector<ProjLine>& lines,
                                       bool check_symbolic_dim = false);

struct ContainmentSweep {
  int upto = 0;
  int first_failure = -1;  // -1: (I^(3))_d <= (I^2)_d held for every d <= upto
  std::vector<int> checked_dims;
  bool holds() const { return first_failure < 0; }
};

/// Subspace comparison (I^(3))_d vs (I^2)_d for every d <= upto. Not a proof
/// of containment, only of the finite slices checked.
ContainmentSweep containment_up_to_degree(const FatPointScheme& s, int upto);

/// dim (I^(3))_n = 1, the basis vector is proportional to the product of the
/// configuration lines, and that product is skew-invariant with the
/// alternating sign. Requires 6 | n, n >= 12.
bool unique_form_check(const Configuration& c);

}  // namespace boroczky
