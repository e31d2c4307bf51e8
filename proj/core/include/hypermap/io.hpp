// Plain-text serialization: CSV with round-trip reals and a minimal SVG
// builder on the unit square.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypermap/map.hpp"

namespace hypermap::io {

/// 17 significant digits ("%.17g"); infinities as "inf" / "-inf", NaN as "nan".
std::string format_real(double v);

using Param = std::pair<std::string, std::string>;

/// "# hypermap <version> <command> key=value ..." followed by a newline.
void write_header_comment(std::ostream& out, std::string_view command,
                          const std::vector<Param>& params);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& columns);

  void row(std::initializer_list<std::string> cells);
  void row(const std::vector<std::string>& cells);

  static std::string cell(double v) { return format_real(v); }
  static std::string cell(std::int64_t v) { return std::to_string(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(bool v) { return v ? "true" : "false"; }
  static std::string cell(std::string_view v) { return std::string(v); }
  static std::string cell(const char* v) { return v; }

 private:
  std::ostream& out_;
  std::size_t width_;
};

/// SVG in a "0 0 1 1" viewBox. Callers pass unit-square coordinates with y
/// pointing up; the builder flips them. Stroke widths and dash lengths are in
/// pixels of the nominal size and converted to viewBox units.
class SvgDocument {
 public:
  explicit SvgDocument(int size_px = 800, std::string title = {});

  /// Filled horizontal band y0 <= y <= y1.
  void band(double y0, double y1, std::string_view fill, double opacity = 0.25);
  void polyline(const std::vector<Vec2>& pts, std::string_view stroke, double width_px = 1.0);
  void line(Vec2 a, Vec2 b, std::string_view stroke, double width_px = 1.0,
            std::string_view dash = {});
  void circle(Vec2 c, double r, std::string_view fill);
  void text(Vec2 at, std::string_view s, double size = 0.025, std::string_view fill = "#000");

  std::string str() const;
  void write(std::ostream& out) const { out << str(); }

 private:
  std::string stroke_units(double px) const;
  std::string dash_units(std::string_view dash) const;

  int size_px_;
  std::string title_;
  std::ostringstream body_;
};

/// Escapes &, <, >, " for inclusion in XML text or attributes.
std::string xml_escape(std::string_view s);

}  // namespace hypermap::io
