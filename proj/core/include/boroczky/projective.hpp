#pragma once

#include <array>
#include <string>
#include <vector>

#include "boroczky/field.hpp"

namespace boroczky {

using Triple = std::array<FieldElement, 3>;

/// Scales so the first nonzero coordinate becomes 1. Throws on (0,0,0).
Triple canonicalize(Triple v);

/// A point of P^2 stored in canonical scaling; equality is exact equality of
/// the canonical coordinates.
struct ProjPoint {
  Triple coords;

  static ProjPoint from(Triple raw) { return ProjPoint{canonicalize(std::move(raw))}; }
  bool operator==(const ProjPoint& o) const { return coords == o.coords; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  /// "x|y|z" over the canonical serialization; usable as a hash/sort key.
  std::string key() const;
  bool at_infinity() const { return coords[2].is_zero(); }
};

/// A line of P^2 via its dual coordinates, same canonical scaling.
struct ProjLine {
  Triple coeffs;

  static ProjLine from(Triple raw) { return ProjLine{canonicalize(std::move(raw))}; }
  bool operator==(const ProjLine& o) const { return coeffs == o.coeffs; }
  bool operator!=(const ProjLine& o) const { return !(*this == o); }
  std::string key() const;
};

FieldElement incidence_value(const ProjPoint& p, const ProjLine& l);
bool incident(const ProjPoint& p, const ProjLine& l);

/// Line through two distinct points (cross product). Throws InvalidInput on
/// p = q; tangent constructions must be handled by the caller.
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

/// Intersection of two distinct lines (dual cross product). Throws
/// InvalidInput on equal lines rather than returning a zero sentinel.
ProjPoint meet(const ProjLine& l1, const ProjLine& l2);

/// Whether three pairwise distinct lines share a point: det of the 3x3
/// coefficient matrix vanishes. Throws InvalidInput on a repeated line.
bool concurrent(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3);

/// Order-preserving dedupe under scalar equivalence (first occurrence kept).
std::vector<ProjPoint> dedupe_projective(const std::vector<ProjPoint>& items);
std::vector<ProjLine> dedupe_projective(const std::vector<ProjLine>& items);

}  // namespace boroczky
