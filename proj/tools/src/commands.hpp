#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "bmdist/oracle.hpp"
#include "bmdist/polygon.hpp"

namespace bmdist::app {

// "P<n>" names the regular n-gon; anything else is a polygon file path.
std::optional<int> regular_order(const std::string& spec);
CentralPolygon load_polygon(const std::string& spec);

void cmd_gen(int n, std::ostream& out);

// Prints the distance record; key: value lines, or one JSON object.
void cmd_distance(const std::string& spec, const OracleOptions& options, bool json, std::ostream& out);

enum class CurveTarget { hexagon, beta };

// CSV "b,h,h_geometric" over the curve's domain.
void cmd_curve(CurveTarget target, int j, int samples, std::ostream& out);

// b is a number or "optimal".
void cmd_render(const std::string& spec, const std::string& b, const OracleOptions& options, std::ostream& out);

}  // namespace bmdist::app
