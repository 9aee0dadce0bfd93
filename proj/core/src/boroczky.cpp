#include "boroczky/boroczky.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <set>

#include "boroczky/errors.hpp"
#include "boroczky/parallel.hpp"

namespace boroczky {

Configuration build_config(int n) {
  if (n < 3) throw InvalidInput("configuration needs n >= 3");
  const long two_n = 2L * n;
  const long m = std::lcm(12L, two_n);
  Configuration c;
  c.n = n;
  c.field = FieldSpec::cyclotomic(static_cast<unsigned long>(m));
  const Field& f = c.field;

  const long step = m / two_n;
  const FieldElement i_unit = f->zeta(m / 4);
  const FieldElement minus_i_half = (-i_unit) * Rat(1, 2);

  c.circle_points.reserve(two_n);
  for (long r = 0; r < two_n; ++r) {
    FieldElement zr = f->zeta(r * step);
    FieldElement zr_conj = f->zeta(-r * step);
    FieldElement x = (zr + zr_conj) * Rat(1, 2);
    FieldElement y = (zr - zr_conj) * minus_i_half;
    c.circle_points.push_back(ProjPoint::from({std::move(x), std::move(y), f->one()}));
  }

  c.lines.reserve(n);
  for (int j = 0; j < n; ++j) {
    const long a = (2L * j) % two_n;
    const long b = (((static_cast<long>(n) - 4L * j) % two_n) + two_n) % two_n;
    if (a == b) {
      // tangent to x^2 + y^2 - z^2 at P_a: gradient line (x_a, y_a, -z_a)
      const ProjPoint& p = c.circle_points[a];
      c.lines.push_back(ProjLine::from({p.coords[0], p.coords[1], -p.coords[2]}));
      c.tangent_indices.push_back(j);
    } else {
      c.lines.push_back(line_through(c.circle_points[a], c.circle_points[b]));
    }
  }

  if (dedupe_projective(c.lines).size() != static_cast<std::size_t>(n))
    throw InvariantViolation("construction produced coincident lines");
  return c;
}

long triple_count_formula(int n) {
  if (n < 3) throw InvalidInput("triple count needs n >= 3");
  const long nn = n;
  long prod = nn * (nn - 3);
  return prod >= 0 ? prod / 6 + 1 : 0;
}

std::vector<int> tangent_index_formula(int n) {
  // solutions of 6j = n (mod 2n) in [0, n)
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if ((6L * j - n) % (2L * n) == 0) out.push_back(j);
  return out;
}

const std::vector<PointRecord>& IncidenceReport::triple_points() const {
  static const std::vector<PointRecord> empty;
  auto it = points_by_multiplicity.find(3);
  return it == points_by_multiplicity.end() ? empty : it->second;
}

int IncidenceReport::count(int multiplicity) const {
  auto it = points_by_multiplicity.find(multiplicity);
  return it == points_by_multiplicity.end() ? 0 : static_cast<int>(it->second.size());
}

int IncidenceReport::count_at_least(int multiplicity) const {
  int total = 0;
  for (const auto& [mult, records] : points_by_multiplicity)
    if (mult >= multiplicity) total += static_cast<int>(records.size());
  return total;
}

std::vector<ProjPoint> IncidenceReport::triple_point_list() const {
  std::vector<ProjPoint> out;
  for (const PointRecord& rec : triple_points()) out.push_back(rec.point);
  return out;
}

IncidenceReport incidence_report(const std::vector<ProjLine>& lines, bool planar) {
  struct Entry {
    ProjPoint point;
    std::set<int> incident;
  };
  const int n = static_cast<int>(lines.size());
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  // meets computed independently per pair, merged in pair order
  std::vector<ProjPoint> meets(pairs.size());
  parallel_for(pairs.size(),
               [&](std::size_t k) { meets[k] = meet(lines[pairs[k].first], lines[pairs[k].second]); });

  std::unordered_map<std::string, Entry> by_key;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    std::string key = meets[k].key();
    auto [it, fresh] = by_key.try_emplace(std::move(key), Entry{std::move(meets[k]), {}});
    it->second.incident.insert(pairs[k].first);
    it->second.incident.insert(pairs[k].second);
  }

  IncidenceReport report;
  for (auto& [key, entry] : by_key) {
    PointRecord rec{std::move(entry.point),
                    std::vector<int>(entry.incident.begin(), entry.incident.end())};
    report.points_by_multiplicity[rec.multiplicity()].push_back(std::move(rec));
  }
  for (auto& [mult, records] : report.points_by_multiplicity) {
    std::sort(records.begin(), records.end(),
              [](const PointRecord& a, const PointRecord& b) { return a.point.key() < b.point.key(); });
    if (planar && mult >= 4)
      report.anomalies.insert(report.anomalies.end(), records.begin(), records.end());
  }
  return report;
}

IncidenceReport incidence_report(const Configuration& c) {
  return incidence_report(c.lines, /*planar=*/true);
}

ConcurrencySurvey survey_concurrency(const Configuration& c) {
  ConcurrencySurvey s;
  const int n = c.n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const bool geometric = concurrent(c.lines[i], c.lines[j], c.lines[k]);
        const bool criterion = (i + j + k) % n == 0;
        ++s.triples_checked;
        if (geometric != criterion) s.mismatches.push_back({i, j, k});
      }
  return s;
}

bool verify_concurrency_criterion(const Configuration& c) {
  if (c.n % 2 != 0)
    throw InvalidInput("the index criterion is stated for even n; use survey_concurrency");
  return survey_concurrency(c).matches();
}

int points_on_line(const Configuration& c, const IncidenceReport& report, int line_index) {
  if (line_index < 0 || line_index >= c.n) throw InvalidInput("line index out of range");
  int count = 0;
  for (const PointRecord& rec : report.triple_points())
    if (std::binary_search(rec.lines.begin(), rec.lines.end(), line_index)) ++count;
  return count;
}

int expected_points_on_line(int n, int line_index) {
  if (n < 8 || n % 2 != 0) throw InvalidInput("case formula needs even n >= 8");
  if (line_index < 0 || line_index >= n) throw InvalidInput("line index out of range");
  const int i = line_index;
  if (i == 0 || i == 1 || i % 2 == 1) return n / 2 - 1;
  if (3 * i == n || 3 * i == 2 * n) return n / 2 - 1;
  return n / 2 - 2;
}

}  // namespace boroczky
