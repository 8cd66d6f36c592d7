#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string_view>
#include <system_error>
#include <vector>

#include <fmt/format.h>

#include "bmdist/errors.hpp"
#include "bmdist/evengon.hpp"
#include "bmdist/hexagon.hpp"
#include "bmdist/polygon_io.hpp"
#include "json.hpp"
#include "report.hpp"

namespace bmdist::app {

std::optional<int> regular_order(const std::string& spec) {
  if (spec.size() < 2 || spec[0] != 'P') return std::nullopt;
  int n = 0;
  const auto [end, ec] = std::from_chars(spec.data() + 1, spec.data() + spec.size(), n);
  if (ec != std::errc{} || end != spec.data() + spec.size()) return std::nullopt;
  return n;
}

CentralPolygon load_polygon(const std::string& spec) {
  if (const auto n = regular_order(spec)) return regular_polygon(*n);
  return read_polygon_file(spec);
}

void cmd_gen(int n, std::ostream& out) { out << format_polygon(regular_polygon(n)); }

namespace {

std::string point_text(const Vec2& p) { return format_number(p.x) + "," + format_number(p.y); }

struct KnownValue {
  double value;
  bool exact;
};

// Closed-form value for regular polygons, where one is known.
std::optional<KnownValue> known_value(const std::string& spec) {
  const auto n = regular_order(spec);
  if (!n) return std::nullopt;
  if (*n == 4) return KnownValue{1.0, true};
  if (*n == 6) return KnownValue{1.5, true};
  const auto v = evengon::theorem2_value(*n);
  return KnownValue{v.value, v.kind == evengon::Kind::exact};
}

}  // namespace

void cmd_distance(const std::string& spec, const OracleOptions& options, bool json, std::ostream& out) {
  const CentralPolygon c = load_polygon(spec);
  const BMResult r = bm_distance(c, options);
  const auto known = known_value(spec);

  if (json) {
    nlohmann::json record = {{"polygon", spec},
                             {"vertices", c.size()},
                             {"lambda", std::stod(format_number(r.lambda))},
                             {"u", point_text(r.parallelogram.u())},
                             {"v", point_text(r.parallelogram.v())},
                             {"t_u", std::stod(format_number(r.t_u))},
                             {"t_v", std::stod(format_number(r.t_v))},
                             {"grid", r.grid_resolution},
                             {"refined", r.refined},
                             {"grid_lambda", std::stod(format_number(r.grid_lambda))}};
    std::vector<std::string> contacts;
    for (const auto& x : r.contacts) contacts.push_back(point_text(x));
    record["contacts"] = contacts;
    if (known) {
      record["claimed"] = std::stod(format_number(known->value));
      record["claim_kind"] = known->exact ? "exact" : "upper_bound";
      record["gap"] = std::stod(format_number(known->value - r.lambda));
      if (!known->exact) record["note"] = "conjecture support";
    }
    out << record.dump() << '\n';
    return;
  }

  out << "polygon: " << spec << '\n';
  out << "vertices: " << c.size() << '\n';
  out << "lambda: " << format_number(r.lambda) << '\n';
  out << "u: " << point_text(r.parallelogram.u()) << '\n';
  out << "v: " << point_text(r.parallelogram.v()) << '\n';
  out << "t_u: " << format_number(r.t_u) << '\n';
  out << "t_v: " << format_number(r.t_v) << '\n';
  out << "contacts: " << r.contacts.size() << '\n';
  for (const auto& x : r.contacts) out << "contact: " << point_text(x) << '\n';
  out << "grid: " << r.grid_resolution << '\n';
  out << "refined: " << (r.refined ? "true" : "false") << '\n';
  out << "grid_lambda: " << format_number(r.grid_lambda) << '\n';
  if (known) {
    out << "claimed: " << format_number(known->value) << '\n';
    out << "claim_kind: " << (known->exact ? "exact" : "upper_bound") << '\n';
    out << "gap: " << format_number(known->value - r.lambda) << '\n';
    if (!known->exact) out << "note: conjecture support\n";
  }
}

void cmd_curve(CurveTarget target, int j, int samples, std::ostream& out) {
  if (samples < 2) throw DomainError("curve: samples must be >= 2");
  if (target == CurveTarget::beta && j < 1) throw DomainError("curve: j must be >= 1");

  const double hi = target == CurveTarget::hexagon ? hexagon::hex_regime_boundary() : evengon::beta_max_b(j);
  const CentralPolygon c = regular_polygon(target == CurveTarget::hexagon ? 6 : 8 * j);

  out << "b,h,h_geometric\n";
  for (int i = 0; i < samples; ++i) {
    const double b = i == samples - 1 ? hi : hi * i / (samples - 1);
    double h = 0.0;
    double geometric = 0.0;
    if (target == CurveTarget::hexagon) {
      const auto fp = hexagon::hex_build(b);
      h = fp.h;
      geometric = circum_ratio(fp.parallelogram, c);
    } else {
      h = evengon::beta_h(j, b);
      geometric = circum_ratio(evengon::beta_square(j, b), c);
    }
    out << format_real(b) << ',' << format_real(h) << ',' << format_real(geometric) << '\n';
  }
}

namespace {

std::string fixed6(double x) {
  std::string s = fmt::format("{:.6f}", x);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string svg_points(const std::vector<Vec2>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += fixed6(pts[i].x) + "," + fixed6(pts[i].y);
  }
  return s;
}

struct Scene {
  Parallelogram inscribed;
  double lambda;
};

// Panels sit side by side, each a square of side 2 * half centred on the
// origin of its own frame. Shapes are drawn in polygon coordinates inside a
// y-flipped group; labels stay outside it.
void render_panel(std::ostream& out, const CentralPolygon& c, const Scene& scene, int index, double half) {
  const auto& p = scene.inscribed;
  const auto corners = p.vertices();
  const auto outer_corners = p.scaled(scene.lambda).vertices();
  const std::vector<Vec2> body(c.vertices().begin(), c.vertices().end());
  const std::string stroke = fixed6(half / 100);

  out << "  <g transform=\"translate(" << fixed6(2 * half * index) << ",0)\">\n";
  out << "    <g transform=\"scale(1,-1)\">\n";
  out << "      <polygon class=\"body\" points=\"" << svg_points(body) << "\" fill=\"#dde8f3\" stroke=\"#1f4e79\" stroke-width=\""
      << stroke << "\"/>\n";
  out << "      <polygon class=\"inscribed\" points=\"" << svg_points({corners.begin(), corners.end()})
      << "\" fill=\"none\" stroke=\"#b22222\" stroke-width=\"" << stroke << "\"/>\n";
  out << "      <polygon class=\"circumscribed\" points=\"" << svg_points({outer_corners.begin(), outer_corners.end()})
      << "\" fill=\"none\" stroke=\"#b22222\" stroke-width=\"" << stroke << "\" stroke-dasharray=\""
      << fixed6(4 * half / 100) << "\"/>\n";
  for (const auto& x : body) {
    if (std::abs(gauge(p, x) - scene.lambda) > 1e-9) continue;
    out << "      <circle class=\"contact\" cx=\"" << fixed6(x.x) << "\" cy=\"" << fixed6(x.y) << "\" r=\""
        << fixed6(2 * half / 100) << "\" fill=\"#2e7d32\"/>\n";
  }
  out << "    </g>\n";
  out << "    <text x=\"" << fixed6(-0.95 * half) << "\" y=\"" << fixed6(0.95 * half) << "\" font-size=\""
      << fixed6(half / 14) << "\">lambda = " << format_number(scene.lambda) << "</text>\n";
  out << "  </g>\n";
}

}  // namespace

void cmd_render(const std::string& spec, const std::string& b, const OracleOptions& options, std::ostream& out) {
  const CentralPolygon c = load_polygon(spec);
  std::vector<Scene> scenes;
  if (b == "optimal") {
    const BMResult r = bm_distance(c, options);
    for (const auto& rep : argmin_orbit(c, r, 1e-4, options)) scenes.push_back({rep, circum_ratio(rep, c)});
  } else {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(b.data(), b.data() + b.size(), value);
    if (ec != std::errc{} || end != b.data() + b.size()) throw DomainError("render: --b must be a number or \"optimal\"");
    const auto n = regular_order(spec);
    if (n == 6) {
      const auto fp = hexagon::hex_build(value);
      scenes.push_back({fp.parallelogram, circum_ratio(fp.parallelogram, c)});
    } else if (n && *n % 8 == 0) {
      const auto sq = evengon::beta_square(*n / 8, value);
      scenes.push_back({sq, circum_ratio(sq, c)});
    } else {
      throw DomainError("render: a numeric --b needs P6 or P<8j>");
    }
  }

  double extent = 0.0;
  for (const auto& v : c.vertices()) extent = std::max({extent, std::abs(v.x), std::abs(v.y)});
  for (const auto& s : scenes) {
    for (const auto& v : s.inscribed.scaled(s.lambda).vertices()) extent = std::max({extent, std::abs(v.x), std::abs(v.y)});
  }
  const double half = 1.15 * extent;
  const double panels = static_cast<double>(std::max<std::size_t>(scenes.size(), 1));

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fixed6(-half) << " " << fixed6(-half)
      << " " << fixed6(2 * half * panels) << " " << fixed6(2 * half) << "\" width=\"" << fixed6(400 * panels)
      << "\" height=\"400.000000\">\n";
  for (std::size_t i = 0; i < scenes.size(); ++i) render_panel(out, c, scenes[i], static_cast<int>(i), half);
  out << "</svg>\n";
}

}  // namespace bmdist::app
