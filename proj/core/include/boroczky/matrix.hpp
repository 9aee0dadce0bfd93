#pragma once

#include <cstddef>
#include <vector>

#include "boroczky/field.hpp"

namespace boroczky {

/// Dense row-major matrix with all entries in one field.
class ExactMatrix {
 public:
  ExactMatrix(Field field, std::size_t rows, std::size_t cols);
  static ExactMatrix from_rows(Field field, std::vector<std::vector<FieldElement>> rows);
  static ExactMatrix identity(Field field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  /// Scales every row by a rational so its entries have integer coordinates
  /// with no common factor. Row scaling preserves rank and nullspace; the
  /// elimination routines call this to keep Bareiss intermediates integral.
  void normalize_row_content();

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> a_;
};

/// Forward elimination with deterministic pivoting: first row with a nonzero
/// entry, columns scanned left to right. Pivot rows are normalized to a
/// leading 1 by exact field division, which measured several times faster
/// here than fraction-free updates (reduced fractions stay small; Bareiss
/// minors over number fields do not).
struct Echelon {
  ExactMatrix m;
  std::vector<std::size_t> pivot_cols;  // ascending
  std::size_t rank() const { return pivot_cols.size(); }
};

Echelon forward_eliminate(ExactMatrix m);

std::size_t rank(ExactMatrix m);

/// Basis of {x : Mx = 0}: one vector per free column in ascending column
/// order, pivot-normalized (entry 1 at its free column, 0 at other free
/// columns). Deterministic regardless of thread count.
std::vector<std::vector<FieldElement>> nullspace(ExactMatrix m);

std::vector<FieldElement> matvec(const ExactMatrix& m, const std::vector<FieldElement>& x);

/// Incremental row-space tracker used for span dimension and membership
/// tests. Stored rows are pivot-normalized; insertion order is deterministic.
class SpanEchelon {
 public:
  SpanEchelon(Field field, std::size_t width);

  /// Reduces the row against the current span; if a nonzero remainder is
  /// left, inserts it (normalized) and returns true.
  bool add(std::vector<FieldElement> row);
  /// True when the row reduces to zero against the span.
  bool contains(std::vector<FieldElement> row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }

 private:
  std::vector<FieldElement> reduce(std::vector<FieldElement> row) const;

  Field field_;
  std::size_t width_;
  std::vector<std::pair<std::size_t, std::vector<FieldElement>>> rows_;  // (pivot col, row)
};

}  // namespace boroczky
