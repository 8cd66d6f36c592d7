#include "bmdist/polygon_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "bmdist/errors.hpp"

namespace bmdist {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view field, std::size_t line_no) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw DomainError("polygon line " + std::to_string(line_no) + ": cannot parse number '" + std::string(field) +
                      "'");
  }
  return value;
}

}  // namespace

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

CentralPolygon parse_polygon(std::string_view text) {
  std::vector<Vec2> vertices;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw DomainError("polygon line " + std::to_string(line_no) + ": expected \"x,y\", got '" + std::string(line) +
                        "'");
    }
    vertices.push_back({parse_real(line.substr(0, comma), line_no), parse_real(line.substr(comma + 1), line_no)});
  }
  return CentralPolygon::from_vertices(std::move(vertices));
}

std::string format_polygon(const CentralPolygon& c) {
  std::string out;
  for (const auto& v : c.vertices()) out += format_real(v.x) + "," + format_real(v.y) + "\n";
  return out;
}

CentralPolygon read_polygon_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open polygon file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polygon(buf.str());
}

void write_polygon_file(const CentralPolygon& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write polygon file " + path.string());
  out << format_polygon(c);
  if (!out) throw DomainError("write failed for " + path.string());
}

}  // namespace bmdist
