#pragma once

#include <array>
#include <map>
#include <vector>

#include "boroczky/projective.hpp"

namespace boroczky {

/// The planar configuration L_n: n lines joining prescribed pairs of 2n-th
/// roots of unity, realized exactly over Q(zeta_M) with M = lcm(12, 2n).
/// With P_r = zeta_{2n}^r in the z = 1 chart, line j joins P_{2j} and
/// P_{n-4j} (indices mod 2n); when the two indices coincide the line is the
/// tangent to the unit circle at that point.
struct Configuration {
  int n = 0;
  Field field;
  std::vector<ProjLine> lines;            // index j = 0..n-1
  std::vector<ProjPoint> circle_points;   // P_r, r = 0..2n-1
  std::vector<int> tangent_indices;       // ascending
};

Configuration build_config(int n);

/// floor(n(n-3)/6) + 1
long triple_count_formula(int n);

/// Indices of tangent lines when 6 | n: {n/6, n/2, 5n/6}; empty otherwise
/// unless the modular equation 6j = n (mod 2n) happens to have solutions.
std::vector<int> tangent_index_formula(int n);

struct PointRecord {
  ProjPoint point;
  std::vector<int> lines;  // ascending indices of incident configuration lines
  int multiplicity() const { return static_cast<int>(lines.size()); }
};

struct IncidenceReport {
  // multiplicity -> records sorted by point key
  std::map<int, std::vector<PointRecord>> points_by_multiplicity;
  // planar configurations must not have multiplicity >= 4; offenders are
  // listed here as well, never silently dropped
  std::vector<PointRecord> anomalies;

  const std::vector<PointRecord>& triple_points() const;
  int count(int multiplicity) const;
  int count_at_least(int multiplicity) const;
  std::vector<ProjPoint> triple_point_list() const;
};

/// All pairwise meets of the given (pairwise distinct) lines, deduped and
/// classified by exact incidence count. A point's incident-line set is the
/// union of the index pairs that met there, which is exact because every
/// pair of lines through the point is enumerated.
IncidenceReport incidence_report(const std::vector<ProjLine>& lines, bool planar);
IncidenceReport incidence_report(const Configuration& c);

struct ConcurrencySurvey {
  long triples_checked = 0;
  std::vector<std::array<int, 3>> mismatches;
  bool matches() const { return mismatches.empty(); }
};

/// Compares geometric concurrency of every distinct triple {i,j,k} against
/// the index criterion n | i+j+k. Works for any n and reports mismatches.
ConcurrencySurvey survey_concurrency(const Configuration& c);

/// The clean verdict for even n (the labeling the criterion is stated in).
/// Odd n is an unsupported input here; use survey_concurrency to explore it.
bool verify_concurrency_criterion(const Configuration& c);

/// Number of triple points on line i.
int points_on_line(const Configuration& c, const IncidenceReport& report, int line_index);

/// Case formula for even n >= 8: n/2 - 1 for i in {0,1}, odd i, and
/// i in {n/3, 2n/3}; n/2 - 2 for other even i >= 2.
int expected_points_on_line(int n, int line_index);

}  // namespace boroczky
