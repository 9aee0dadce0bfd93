#include "boroczky/report.hpp"

#include <json.hpp>

#include "boroczky/errors.hpp"

namespace boroczky {

namespace {

using json = nlohmann::ordered_json;

json point_json(const ProjPoint& p) {
  return json{{"coords",
               {p.coords[0].to_string(), p.coords[1].to_string(), p.coords[2].to_string()}}};
}

json line_json(const ProjLine& l, std::optional<int> index = std::nullopt) {
  json out;
  if (index) out["index"] = *index;
  out["coeffs"] = {l.coeffs[0].to_string(), l.coeffs[1].to_string(), l.coeffs[2].to_string()};
  return out;
}

json incidence_points_json(const IncidenceReport& rep) {
  json points = json::array();
  for (const auto& [mult, records] : rep.points_by_multiplicity)
    for (const PointRecord& rec : records) {
      json entry = point_json(rec.point);
      entry["multiplicity"] = mult;
      entry["lines"] = rec.lines;
      points.push_back(std::move(entry));
    }
  return points;
}

}  // namespace

OrbitsResult compute_orbits(const Configuration& c, const IncidenceReport& rep) {
  OrbitsResult out;
  out.n = c.n;
  if (c.n % 3 != 0)
    throw InvalidInput("orbit analysis needs 3 | n (the action does not close otherwise)");
  out.orbits = orbit_decompose(rep.triple_point_list(), dihedral_group(c.field));
  out.geometric = orbit_profile(out.orbits);
  out.formula_applicable = true;
  out.formula = orbit_count_formulas(c.n);
  out.match = out.geometric.count(3) == out.formula.o3 && out.geometric.count(6) == out.formula.o6;
  out.identity_holds =
      1 + 3 * out.formula.o3 + 6 * out.formula.o6 == triple_count_formula(c.n);
  out.rotation_pi3 = rotation_pi3_stabilizes(c, rep);
  return out;
}

std::string json_build_report(const Configuration& c, const IncidenceReport& rep) {
  json out;
  out["n"] = c.n;
  out["field"] = {{"m", c.field->cyclotomic_order()}};
  json lines = json::array();
  for (std::size_t j = 0; j < c.lines.size(); ++j)
    lines.push_back(line_json(c.lines[j], static_cast<int>(j)));
  out["lines"] = std::move(lines);
  out["points"] = incidence_points_json(rep);
  out["counts"] = {{"triple", rep.count(3)}, {"double", rep.count(2)}};
  out["tangent_indices"] = c.tangent_indices;
  json anomalies = json::array();
  for (const PointRecord& rec : rep.anomalies) {
    json entry = point_json(rec.point);
    entry["multiplicity"] = rec.multiplicity();
    entry["lines"] = rec.lines;
    anomalies.push_back(std::move(entry));
  }
  out["anomalies"] = std::move(anomalies);
  return out.dump(2);
}

std::string json_orbits_report(const Configuration& c, const IncidenceReport& rep,
                               const OrbitsResult& result) {
  json out;
  out["n"] = c.n;
  json orbits = json::array();
  for (const Orbit& o : result.orbits) {
    json entry;
    entry["size"] = o.size();
    entry["representative"] = point_json(o.representative());
    json pts = json::array();
    for (const ProjPoint& p : o.points) pts.push_back(point_json(p));
    entry["points"] = std::move(pts);
    orbits.push_back(std::move(entry));
  }
  out["orbits"] = std::move(orbits);
  out["formula"] = {{"O3", result.formula.o3}, {"O6", result.formula.o6}};
  out["geometric"] = {{"O1", result.geometric.count(1)},
                      {"O3", result.geometric.count(3)},
                      {"O6", result.geometric.count(6)}};
  out["match"] = result.match;
  out["identity_holds"] = result.identity_holds;
  out["rotation_pi3_stabilizes"] = result.rotation_pi3;
  out["triple_count"] = rep.count(3);
  return out.dump(2);
}

std::string json_alpha_report(const std::string& scheme, int m, int value) {
  json out;
  out["scheme"] = scheme;
  out["alpha"] = {{"m", m}, {"value", value}};
  return out.dump(2);
}

std::string json_mingens_report(const std::string& scheme, const IdealSummary& gens) {
  json out;
  out["scheme"] = scheme;
  out["alpha"] = gens.alpha;
  out["generators"] = gens.generator_degrees;
  out["complete"] = gens.complete;
  out["computed_through"] = gens.computed_through;
  json hilbert;
  for (const auto& [d, dim] : gens.hilbert) hilbert[std::to_string(d)] = dim;
  out["hilbert"] = std::move(hilbert);
  return out.dump(2);
}

std::string json_witness_report(const std::string& scheme, const ContainmentWitness& w) {
  json out;
  out["scheme"] = scheme;
  json witness;
  witness["degree"] = w.degree;
  witness["in_symbolic3"] = w.product_in_symbolic3;
  witness["in_square"] = w.product_in_square;
  witness["verdict"] = w.verdict;
  if (w.dim_symbolic_slice >= 0) witness["dim_symbolic_slice"] = w.dim_symbolic_slice;
  out["witness"] = std::move(witness);
  return out.dump(2);
}

std::string json_contain_report(const std::string& scheme, const ContainmentSweep& sweep) {
  json out;
  out["scheme"] = scheme;
  out["upto"] = sweep.upto;
  out["holds"] = sweep.holds();
  if (sweep.holds())
    out["first_failure"] = nullptr;
  else
    out["first_failure"] = sweep.first_failure;
  out["symbolic3_dims"] = sweep.checked_dims;
  return out.dump(2);
}

std::string json_elliptic_report(const EllipticConfig& cfg,
                                 const std::optional<EllipticContainment>& containment,
                                 std::optional<bool> exhaustive_associativity) {
  json out;
  out["curve"] = "x^3 + y^3 + z^3";
  out["field"] = {{"generators", {"s", "t"}}, {"relations", {"s^3+2", "t^2+t+1"}}};

  json table = json::array();
  for (int i = 0; i < 6; ++i) {
    json row = json::array();
    for (int j = 0; j < 6; ++j) row.push_back(point_json(cfg.table.at(i, j).point));
    table.push_back(std::move(row));
  }
  out["torsion_table"] = std::move(table);

  json lines = json::array();
  for (std::size_t k = 0; k < cfg.lines.size(); ++k)
    lines.push_back(line_json(cfg.lines[k], static_cast<int>(k)));
  out["lines"] = std::move(lines);
  json tangents = json::array();
  for (auto [i, j] : cfg.tangent_labels) tangents.push_back({i, j});
  out["tangent_labels"] = std::move(tangents);

  out["points"] = incidence_points_json(cfg.incidence);
  out["counts"] = {{"at_least_2", cfg.incidence.count_at_least(2)},
                   {"triple", cfg.incidence.count(3)},
                   {"double", cfg.incidence.count(2)},
                   {"at_least_4", cfg.incidence.count_at_least(4)}};

  auto orbits = s3_orbits(cfg.incidence.triple_point_list(), cfg.field);
  OrbitProfile profile = orbit_profile(orbits);
  json s3;
  for (const auto& [size, count] : profile.by_size) s3[std::to_string(size)] = count;
  out["s3_profile"] = std::move(s3);

  if (containment) {
    json c;
    c["witness"] = {{"degree", containment->witness.degree},
                    {"in_symbolic3", containment->witness.product_in_symbolic3},
                    {"in_square", containment->witness.product_in_square},
                    {"verdict", containment->witness.verdict},
                    {"dim_symbolic_slice", containment->witness.dim_symbolic_slice}};
    c["no_planar_match"] = containment->no_planar_match;
    out["containment"] = std::move(c);
  }
  if (exhaustive_associativity) out["exhaustive_associativity"] = *exhaustive_associativity;
  return out.dump(2);
}

std::string json_sweep_report(int n_from, int n_to) {
  if (n_from < 3 || n_to < n_from) throw InvalidInput("sweep needs 3 <= n-from <= n-to");
  json out;
  out["from"] = n_from;
  out["to"] = n_to;
  json entries = json::array();
  for (int n = n_from; n <= n_to; ++n) {
    Configuration c = build_config(n);
    IncidenceReport rep = incidence_report(c);
    json entry;
    entry["n"] = n;
    entry["field_m"] = c.field->cyclotomic_order();
    entry["triple_geometric"] = rep.count(3);
    entry["triple_formula"] = triple_count_formula(n);
    entry["count_match"] = rep.count(3) == triple_count_formula(n);
    entry["double"] = rep.count(2);
    entry["tangent_indices"] = c.tangent_indices;
    entry["anomalies"] = rep.anomalies.size();

    ConcurrencySurvey survey = survey_concurrency(c);
    entry["concurrency"] = {{"triples", survey.triples_checked},
                            {"criterion_matches", survey.matches()},
                            {"mismatches", survey.mismatches.size()},
                            {"asserted", n % 2 == 0}};

    if (n % 2 == 0 && n >= 8) {
      bool per_line_ok = true;
      for (int i = 0; i < n; ++i)
        per_line_ok = per_line_ok && points_on_line(c, rep, i) == expected_points_on_line(n, i);
      entry["per_line_counts_match"] = per_line_ok;
    }

    if (n % 3 == 0) {
      OrbitsResult orbits = compute_orbits(c, rep);
      entry["orbits"] = {{"O1", orbits.geometric.count(1)},
                         {"O3", orbits.geometric.count(3)},
                         {"O6", orbits.geometric.count(6)},
                         {"formula_O3", orbits.formula.o3},
                         {"formula_O6", orbits.formula.o6},
                         {"match", orbits.match},
                         {"asserted", n % 6 == 0}};
    }
    entries.push_back(std::move(entry));
  }
  out["entries"] = std::move(entries);
  return out.dump(2);
}

}  // namespace boroczky
