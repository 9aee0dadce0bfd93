#pragma once

#include <optional>
#include <string>

#include "boroczky/boroczky.hpp"
#include "boroczky/elliptic.hpp"
#include "boroczky/fatpoints.hpp"
#include "boroczky/symmetry.hpp"

namespace boroczky {

/// Orbit analysis of the triple points: geometric profile vs the closed-form
/// counts. The formulas apply when 3 | n; they are asserted (match flag)
/// only when 6 | n, and reported otherwise.
struct OrbitsResult {
  int n = 0;
  std::vector<Orbit> orbits;
  OrbitProfile geometric;
  bool formula_applicable = false;
  OrbitCounts formula;
  bool match = false;
  bool identity_holds = false;  // 1 + 3*O3 + 6*O6 = |B_n|
  bool rotation_pi3 = false;
};
OrbitsResult compute_orbits(const Configuration& c, const IncidenceReport& rep);

// All report builders return deterministic JSON text: fixed key order,
// arrays sorted by canonical keys, field elements in canonical form.
std::string json_build_report(const Configuration& c, const IncidenceReport& rep);
std::string json_orbits_report(const Configuration& c, const IncidenceReport& rep,
                               const OrbitsResult& orbits);
std::string json_alpha_report(const std::string& scheme, int m, int value);
std::string json_mingens_report(const std::string& scheme, const IdealSummary& gens);
std::string json_witness_report(const std::string& scheme, const ContainmentWitness& w);
std::string json_contain_report(const std::string& scheme, const ContainmentSweep& sweep);
std::string json_elliptic_report(const EllipticConfig& cfg,
                                 const std::optional<EllipticContainment>& containment,
                                 std::optional<bool> exhaustive_associativity);
std::string json_sweep_report(int n_from, int n_to);

}  // namespace boroczky
