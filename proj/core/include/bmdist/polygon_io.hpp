#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bmdist/polygon.hpp"

namespace bmdist {

// Polygon text format: one vertex per line as "x,y" (decimal), the full
// counterclockwise vertex list. Blank lines and lines starting with '#' are
// ignored. Parsing applies the CentralPolygon invariants (InvalidPolygon) and
// reports malformed lines as DomainError with the line number.
CentralPolygon parse_polygon(std::string_view text);
std::string format_polygon(const CentralPolygon& c);

CentralPolygon read_polygon_file(const std::filesystem::path& path);
void write_polygon_file(const CentralPolygon& c, const std::filesystem::path& path);

// Shortest decimal string that round-trips to the same double; -0 prints as 0.
std::string format_real(double x);

}  // namespace bmdist
