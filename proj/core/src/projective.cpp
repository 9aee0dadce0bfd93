#include "boroczky/projective.hpp"

#include <unordered_set>

#include "boroczky/errors.hpp"

namespace boroczky {

Triple canonicalize(Triple v) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i].is_zero()) continue;
    if (!v[i].is_one()) {
      FieldElement inv = v[i].inverse();
      for (std::size_t j = i + 1; j < 3; ++j)
        if (!v[j].is_zero()) v[j] = v[j] * inv;
      v[i] = v[i].owner()->one();
    }
    return v;
  }
  throw InvalidInput("projective triple must not be zero");
}

std::string ProjPoint::key() const {
  return coords[0].to_string() + "|" + coords[1].to_string() + "|" + coords[2].to_string();
}

std::string ProjLine::key() const {
  return coeffs[0].to_string() + "|" + coeffs[1].to_string() + "|" + coeffs[2].to_string();
}

FieldElement incidence_value(const ProjPoint& p, const ProjLine& l) {
  FieldElement acc = p.coords[0].owner()->zero();
  for (std::size_t i = 0; i < 3; ++i) {
    if (p.coords[i].is_zero() || l.coeffs[i].is_zero()) continue;
    acc += p.coords[i] * l.coeffs[i];
  }
  return acc;
}

bool incident(const ProjPoint& p, const ProjLine& l) { return incidence_value(p, l).is_zero(); }

namespace {

Triple cross(const Triple& a, const Triple& b) {
  return Triple{a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw InvalidInput("line_through requires two distinct points");
  return ProjLine::from(cross(p.coords, q.coords));
}

ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) throw InvalidInput("meet requires two distinct lines");
  return ProjPoint::from(cross(l1.coeffs, l2.coeffs));
}

bool concurrent(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3) {
  if (l1 == l2 || l1 == l3 || l2 == l3)
    throw InvalidInput("concurrent requires pairwise distinct lines");
  Triple c = cross(l1.coeffs, l2.coeffs);
  FieldElement det = c[0] * l3.coeffs[0] + c[1] * l3.coeffs[1] + c[2] * l3.coeffs[2];
  return det.is_zero();
}

namespace {

template <typename T>
std::vector<T> dedupe_impl(const std::vector<T>& items) {
  std::vector<T> out;
  std::unordered_set<std::string> seen;
  out.reserve(items.size());
  for (const T& item : items)
    if (seen.insert(item.key()).second) out.push_back(item);
  return out;
}

}  // namespace

std::vector<ProjPoint> dedupe_projective(const std::vector<ProjPoint>& items) {
  return dedupe_impl(items);
}

std::vector<ProjLine> dedupe_projective(const std::vector<ProjLine>& items) {
  return dedupe_impl(items);
}

}  // namespace boroczky
