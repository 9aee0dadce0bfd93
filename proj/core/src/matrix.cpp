#include "boroczky/matrix.hpp"

#include <algorithm>
#include <utility>

#include "boroczky/errors.hpp"

namespace boroczky {

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  a_.assign(rows_ * cols_, field_->zero());
}

ExactMatrix ExactMatrix::from_rows(Field field, std::vector<std::vector<FieldElement>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  ExactMatrix m(std::move(field), r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InvalidInput("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

ExactMatrix ExactMatrix::identity(Field field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

void ExactMatrix::normalize_row_content() {
  for (std::size_t i = 0; i < rows_; ++i) {
    Int den_lcm = 1;
    Int num_gcd = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      for (const Rat& q : at(i, j).coords()) {
        if (sgn(q) == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
      }
    }
    if (num_gcd == 0) continue;  // zero row
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (scale == 1) continue;
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = at(i, j) * scale;
  }
}

Echelon forward_eliminate(ExactMatrix m) {
  m.normalize_row_content();
  const std::size_t rows = m.rows(), cols = m.cols();
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m.at(pr, c).is_zero()) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(pr, j));

    // normalize the pivot row to leading 1, then clear the column below
    if (!m.at(r, c).is_one()) {
      FieldElement inv = m.at(r, c).inverse();
      for (std::size_t j = c + 1; j < cols; ++j)
        if (!m.at(r, j).is_zero()) m.at(r, j) = m.at(r, j) * inv;
      m.at(r, c) = f->one();
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m.at(i, c).is_zero()) continue;
      FieldElement lead = std::move(m.at(i, c));
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (m.at(r, j).is_zero()) continue;
        m.at(i, j) -= lead * m.at(r, j);
      }
      m.at(i, c) = f->zero();
    }
    pivots.push_back(c);
    ++r;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(ExactMatrix m) { return forward_eliminate(std::move(m)).rank(); }

std::vector<std::vector<FieldElement>> nullspace(ExactMatrix m) {
  const std::size_t cols = m.cols();
  const Field f = m.field();
  Echelon e = forward_eliminate(std::move(m));
  const std::size_t r = e.rank();

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<FieldElement> v(cols, f->zero());
    v[fc] = f->one();
    // back-substitute through the echelon rows above the free column
    for (std::size_t k = r; k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      if (pc > fc) continue;
      FieldElement acc = f->zero();
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (v[j].is_zero() || e.m.at(k, j).is_zero()) continue;
        acc += e.m.at(k, j) * v[j];
      }
      if (!acc.is_zero()) v[pc] = -(acc / e.m.at(k, pc));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FieldElement> matvec(const ExactMatrix& m, const std::vector<FieldElement>& x) {
  if (x.size() != m.cols()) throw InvalidInput("matvec dimension mismatch");
  std::vector<FieldElement> out(m.rows(), m.field()->zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero() || x[j].is_zero()) continue;
      out[i] += m.at(i, j) * x[j];
    }
  return out;
}

SpanEchelon::SpanEchelon(Field field, std::size_t width)
    : field_(std::move(field)), width_(width) {}

std::vector<FieldElement> SpanEchelon::reduce(std::vector<FieldElement> row) const {
  if (row.size() != width_) throw InvalidInput("row width mismatch");
  for (const auto& [pc, stored] : rows_) {
    if (row[pc].is_zero()) continue;
    FieldElement factor = row[pc];
    for (std::size_t j = pc; j < width_; ++j) {
      if (stored[j].is_zero()) continue;
      row[j] -= factor * stored[j];
    }
  }
  return row;
}

bool SpanEchelon::add(std::vector<FieldElement> row) {
  row = reduce(std::move(row));
  std::size_t pc = 0;
  while (pc < width_ && row[pc].is_zero()) ++pc;
  if (pc == width_) return false;
  FieldElement inv = row[pc].inverse();
  for (std::size_t j = pc; j < width_; ++j)
    if (!row[j].is_zero()) row[j] = row[j] * inv;
  auto at = std::lower_bound(rows_.begin(), rows_.end(), pc,
                             [](const auto& a, std::size_t c) { return a.first < c; });
  rows_.insert(at, {pc, std::move(row)});
  return true;
}

bool SpanEchelon::contains(std::vector<FieldElement> row) const {
  row = reduce(std::move(row));
  for (const FieldElement& v : row)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace boroczky
