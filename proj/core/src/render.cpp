#include "boroczky/render.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <unordered_map>

#include "boroczky/errors.hpp"
#include "boroczky/symmetry.hpp"

namespace boroczky {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct Mapper {
  double radius;
  int size;
  double sx(double x) const { return (x + radius) / (2 * radius) * size; }
  double sy(double y) const { return (radius - y) / (2 * radius) * size; }
};

// segment of a x + b y + c = 0 inside [-R, R]^2, if any
std::optional<std::array<double, 4>> clip_line(double a, double b, double c, double r) {
  std::vector<std::pair<double, double>> hits;
  auto push = [&](double x, double y) {
    for (auto& [hx, hy] : hits)
      if (std::abs(hx - x) < 1e-9 && std::abs(hy - y) < 1e-9) return;
    hits.emplace_back(x, y);
  };
  const double eps = 1e-12;
  if (std::abs(b) > eps) {
    for (double x : {-r, r}) {
      double y = -(a * x + c) / b;
      if (y >= -r - 1e-9 && y <= r + 1e-9) push(x, y);
    }
  }
  if (std::abs(a) > eps) {
    for (double y : {-r, r}) {
      double x = -(b * y + c) / a;
      if (x >= -r - 1e-9 && x <= r + 1e-9) push(x, y);
    }
  }
  if (hits.size() < 2) return std::nullopt;
  return std::array<double, 4>{hits[0].first, hits[0].second, hits[1].first, hits[1].second};
}

}  // namespace

std::string render_svg(const Configuration& c, const IncidenceReport& rep,
                       const RenderStyle& style) {
  const Mapper map{style.viewport_radius, style.size_px};
  const double r = style.viewport_radius;

  // orbit-size coloring when the action closes on the triple points
  std::unordered_map<std::string, std::size_t> orbit_size;
  if (style.color_by_orbit && c.n % 3 == 0) {
    auto orbits = orbit_decompose(rep.triple_point_list(), dihedral_group(c.field));
    for (const Orbit& o : orbits)
      for (const ProjPoint& p : o.points) orbit_size[p.key()] = o.size();
  }
  auto color_of = [&](const std::string& key) -> const char* {
    auto it = orbit_size.find(key);
    if (it == orbit_size.end()) return "#222222";
    switch (it->second) {
      case 1: return "#000000";
      case 3: return "#1f77b4";
      case 6: return "#d62728";
      default: return "#222222";
    }
  };

  bool dotted[64] = {};
  if (c.n % 3 == 0 && c.n < 64) {
    dotted[0] = true;
    dotted[c.n / 3] = true;
    dotted[2 * c.n / 3] = true;
  }

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.size_px) +
         "\" height=\"" + std::to_string(style.size_px) + "\" viewBox=\"0 0 " +
         std::to_string(style.size_px) + " " + std::to_string(style.size_px) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<circle cx=\"" + fmt(map.sx(0)) + "\" cy=\"" + fmt(map.sy(0)) + "\" r=\"" +
         fmt(style.size_px / (2 * r)) +
         "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

  for (std::size_t j = 0; j < c.lines.size(); ++j) {
    const Triple& l = c.lines[j].coeffs;
    // the canonical scaling may be complex even for a real line; multiplying
    // by the conjugate of the largest coefficient lands on a real multiple
    std::complex<double> v[3] = {l[0].embed(), l[1].embed(), l[2].embed()};
    int k = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(v[i]) > std::abs(v[k])) k = i;
    std::complex<double> scale = std::conj(v[k]);
    double a = (v[0] * scale).real(), b = (v[1] * scale).real(), cc = (v[2] * scale).real();
    auto seg = clip_line(a, b, cc, r);
    if (!seg) continue;
    svg += "<line x1=\"" + fmt(map.sx((*seg)[0])) + "\" y1=\"" + fmt(map.sy((*seg)[1])) +
           "\" x2=\"" + fmt(map.sx((*seg)[2])) + "\" y2=\"" + fmt(map.sy((*seg)[3])) +
           "\" stroke=\"#333333\" stroke-width=\"1.2\"";
    if (j < 64 && dotted[j]) svg += " stroke-dasharray=\"6 4\"";
    svg += "/>\n";
  }

  for (const PointRecord& rec : rep.triple_points()) {
    if (rec.point.at_infinity()) continue;
    // points beyond the viewport are still emitted; the viewBox clips them
    std::complex<double> z = rec.point.coords[2].embed();
    double px = (rec.point.coords[0].embed() / z).real();
    double py = (rec.point.coords[1].embed() / z).real();
    svg += "<circle cx=\"" + fmt(map.sx(px)) + "\" cy=\"" + fmt(map.sy(py)) +
           "\" r=\"4\" fill=\"" + color_of(rec.point.key()) + "\"/>\n";
  }

  svg += "<text x=\"10\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">n = " +
         std::to_string(c.n) + ", triple points: " + std::to_string(rep.count(3)) + "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace boroczky
