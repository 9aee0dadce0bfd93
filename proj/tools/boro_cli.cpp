// boro: exact computations on Boroczky line configurations and their
// triple-point ideals. JSON reports, SVG figures, containment verdicts.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "boroczky/elliptic.hpp"
#include "boroczky/errors.hpp"
#include "boroczky/fatpoints.hpp"
#include "boroczky/parallel.hpp"
#include "boroczky/render.hpp"
#include "boroczky/report.hpp"

namespace {

using namespace boroczky;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content << std::endl;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ComputationError("cannot open output file: " + path);
  out << content;
}

std::string scheme_name(int n) { return "boroczky:" + std::to_string(n); }

// the big-field gate: degree-12 extensions and below run unconditionally
void check_field_budget(int n, bool big) {
  const unsigned long m = std::lcm(12L, 2L * n);
  if (!big && euler_phi(m) > 12)
    throw InvalidInput("n = " + std::to_string(n) + " needs a degree-" +
                       std::to_string(euler_phi(m)) +
                       " coefficient field; pass --big to attempt it without runtime guarantees");
}

FatPointScheme triple_scheme(int n, Configuration* out_c = nullptr,
                             IncidenceReport* out_rep = nullptr) {
  Configuration c = build_config(n);
  IncidenceReport rep = incidence_report(c);
  if (!rep.anomalies.empty())
    throw InvariantViolation("planar configuration has a point of multiplicity >= 4");
  FatPointScheme s = FatPointScheme::triple_points(c, rep);
  if (out_c) *out_c = std::move(c);
  if (out_rep) *out_rep = std::move(rep);
  return s;
}

// exhaustive associativity over all 36^3 triples (--check-table)
bool exhaustive_associativity(const TorsionTable& table) {
  std::vector<CurvePoint> pts;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) pts.push_back(table.at(i, j));
  for (const CurvePoint& a : pts)
    for (const CurvePoint& b : pts) {
      CurvePoint ab = ec_add(a, b);
      for (const CurvePoint& c : pts)
        if (!(ec_add(ab, c) == ec_add(a, ec_add(b, c)))) return false;
    }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Boroczky configuration toolkit"};
  app.require_subcommand(1);

  std::string out_path = "-";
  std::string format = "json";
  unsigned threads = 1;
  bool big = false;
  app.add_option("--out", out_path, "output path ('-' = stdout)")->capture_default_str();
  app.add_option("--format", format, "json|svg (render emits svg)")
      ->check(CLI::IsMember({"json", "svg"}));
  app.add_option("--threads", threads, "worker threads for the incidence sweeps");
  app.add_flag("--big", big, "allow coefficient fields beyond degree 12 (no runtime guarantees)");

  int n = 12, m = 1, dmax = 8, upto = 12;
  int n_from = 3, n_to = 12;
  double radius = 2.2;
  bool check_table = false;

  auto* cmd_build = app.add_subcommand("build", "construct L_n and classify intersections");
  cmd_build->add_option("--n", n, "number of lines")->required();

  auto* cmd_orbits = app.add_subcommand("orbits", "orbit decomposition of the triple points");
  cmd_orbits->add_option("--n", n, "number of lines (3 | n)")->required();

  auto* cmd_alpha = app.add_subcommand("alpha", "least degree in the m-th symbolic power");
  cmd_alpha->add_option("--n", n, "number of lines")->required();
  cmd_alpha->add_option("--m", m, "symbolic power")->required();

  auto* cmd_mingens = app.add_subcommand("mingens", "minimal generator degrees of I_n");
  cmd_mingens->add_option("--n", n, "number of lines")->required();
  cmd_mingens->add_option("--dmax", dmax, "degree cap")->required();

  auto* cmd_witness = app.add_subcommand("witness", "product-of-lines containment witness");
  cmd_witness->add_option("--n", n, "number of lines")->required();

  auto* cmd_contain = app.add_subcommand("contain", "slicewise (I^(3))_d vs (I^2)_d comparison");
  cmd_contain->add_option("--n", n, "number of lines")->required();
  cmd_contain->add_option("--upto", upto, "largest degree to check")->required();

  auto* cmd_elliptic = app.add_subcommand("elliptic", "the E[6] configuration on x^3+y^3+z^3");
  cmd_elliptic->add_option("--report", out_path, "output path (alias for --out)");
  cmd_elliptic->add_flag("--check-table", check_table,
                         "also run the exhaustive 36^3 associativity check");

  auto* cmd_render = app.add_subcommand("render", "SVG figure of a configuration");
  cmd_render->add_option("--n", n, "number of lines")->required();
  cmd_render->add_option("--radius", radius, "viewport half-width")->capture_default_str();

  auto* cmd_sweep = app.add_subcommand("sweep", "batch counts over a range of n");
  cmd_sweep->add_option("--n-from", n_from, "first n")->required();
  cmd_sweep->add_option("--n-to", n_to, "last n")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
    set_thread_count(threads);

    if (cmd_build->parsed()) {
      Configuration c = build_config(n);
      IncidenceReport rep = incidence_report(c);
      write_output(out_path, json_build_report(c, rep));
      if (!rep.anomalies.empty())
        throw InvariantViolation("planar configuration has a point of multiplicity >= 4");
    } else if (cmd_orbits->parsed()) {
      Configuration c = build_config(n);
      IncidenceReport rep = incidence_report(c);
      OrbitsResult orbits = compute_orbits(c, rep);
      write_output(out_path, json_orbits_report(c, rep, orbits));
      if (n % 6 == 0 && (!orbits.match || !orbits.identity_holds))
        throw InvariantViolation("orbit formulas disagree with geometry for 6 | n");
    } else if (cmd_alpha->parsed()) {
      check_field_budget(n, big);
      FatPointScheme s = triple_scheme(n);
      write_output(out_path, json_alpha_report(scheme_name(n), m, alpha(s, m)));
    } else if (cmd_mingens->parsed()) {
      check_field_budget(n, big);
      FatPointScheme s = triple_scheme(n);
      write_output(out_path, json_mingens_report(scheme_name(n), minimal_generators(s, dmax)));
    } else if (cmd_witness->parsed()) {
      check_field_budget(n, big);
      Configuration c;
      FatPointScheme s = triple_scheme(n, &c);
      ContainmentWitness w = containment_witness(s, c.lines);
      write_output(out_path, json_witness_report(scheme_name(n), w));
    } else if (cmd_contain->parsed()) {
      check_field_budget(n, big);
      FatPointScheme s = triple_scheme(n);
      write_output(out_path, json_contain_report(scheme_name(n), containment_up_to_degree(s, upto)));
    } else if (cmd_elliptic->parsed()) {
      EllipticConfig cfg = build_elliptic_config();
      std::optional<bool> assoc;
      if (check_table) assoc = exhaustive_associativity(cfg.table);
      EllipticContainment containment = elliptic_containment(cfg);
      write_output(out_path, json_elliptic_report(cfg, containment, assoc));
      if (containment.witness.verdict != "NOT_CONTAINED" || !containment.no_planar_match ||
          (assoc && !*assoc))
        throw InvariantViolation("elliptic containment data disagrees with the published values");
    } else if (cmd_render->parsed()) {
      Configuration c = build_config(n);
      IncidenceReport rep = incidence_report(c);
      RenderStyle style;
      style.viewport_radius = radius;
      write_output(out_path, render_svg(c, rep, style));
    } else if (cmd_sweep->parsed()) {
      write_output(out_path, json_sweep_report(n_from, n_to));
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InvalidInput& e) {
    std::cerr << "{\"error\":\"usage\",\"message\":\"" << e.what() << "\"}" << std::endl;
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "{\"error\":\"assertion\",\"message\":\"" << e.what() << "\"}" << std::endl;
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"computation\",\"message\":\"" << e.what() << "\"}" << std::endl;
    return 3;
  }
}
