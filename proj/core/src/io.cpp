#include "hypermap/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hypermap/version.hpp"

namespace hypermap::io {

namespace {

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_header_comment(std::ostream& out, std::string_view command,
                          const std::vector<Param>& params) {
  out << "# hypermap " << kVersion << ' ' << command;
  for (const auto& [key, value] : params) out << ' ' << key << '=' << value;
  out << '\n';
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& columns)
    : out_(out), width_(columns.size()) {
  row(columns);
}

void CsvWriter::row(std::initializer_list<std::string> cells) {
  row(std::vector<std::string>(cells));
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) {
    throw std::logic_error("CsvWriter: row has " + std::to_string(cells.size()) +
                           " cells, expected " + std::to_string(width_));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

std::string xml_escape(std::string_view s) {
  std::string r;
  r.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': r += "&amp;"; break;
      case '<': r += "&lt;"; break;
      case '>': r += "&gt;"; break;
      case '"': r += "&quot;"; break;
      default: r += c;
    }
  }
  return r;
}

std::string SvgDocument::stroke_units(double px) const { return coord(px / size_px_); }

// Dash lengths are given in pixels like the stroke widths.
std::string SvgDocument::dash_units(std::string_view dash) const {
  std::istringstream in{std::string(dash)};
  std::string out;
  double v = 0.0;
  while (in >> v) {
    if (!out.empty()) out += ' ';
    out += coord(v / size_px_);
  }
  return out;
}

SvgDocument::SvgDocument(int size_px, std::string title)
    : size_px_(size_px), title_(std::move(title)) {}

void SvgDocument::band(double y0, double y1, std::string_view fill, double opacity) {
  const double lo = std::min(y0, y1), hi = std::max(y0, y1);
  body_ << "<rect x=\"0\" y=\"" << coord(1.0 - hi) << "\" width=\"1\" height=\"" << coord(hi - lo)
        << "\" fill=\"" << fill << "\" fill-opacity=\"" << opacity << "\"/>\n";
}

void SvgDocument::polyline(const std::vector<Vec2>& pts, std::string_view stroke,
                           double width_px) {
  if (pts.size() < 2) return;
  body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
        << stroke_units(width_px) << "\" stroke-linejoin=\"round\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) body_ << ' ';
    body_ << coord(pts[i].x) << ',' << coord(1.0 - pts[i].y);
  }
  body_ << "\"/>\n";
}

void SvgDocument::line(Vec2 a, Vec2 b, std::string_view stroke, double width_px,
                       std::string_view dash) {
  body_ << "<line x1=\"" << coord(a.x) << "\" y1=\"" << coord(1.0 - a.y) << "\" x2=\""
        << coord(b.x) << "\" y2=\"" << coord(1.0 - b.y) << "\" stroke=\"" << stroke
        << "\" stroke-width=\"" << stroke_units(width_px) << '"';
  if (!dash.empty()) body_ << " stroke-dasharray=\"" << dash_units(dash) << '"';
  body_ << "/>\n";
}

void SvgDocument::circle(Vec2 c, double r, std::string_view fill) {
  body_ << "<circle cx=\"" << coord(c.x) << "\" cy=\"" << coord(1.0 - c.y) << "\" r=\"" << r
        << "\" fill=\"" << fill << "\"/>\n";
}

void SvgDocument::text(Vec2 at, std::string_view s, double size, std::string_view fill) {
  body_ << "<text x=\"" << coord(at.x) << "\" y=\"" << coord(1.0 - at.y) << "\" font-size=\""
        << size << "\" fill=\"" << fill << "\" font-family=\"sans-serif\">" << xml_escape(s)
        << "</text>\n";
}

std::string SvgDocument::str() const {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px_ << "\" height=\""
      << size_px_ << "\" viewBox=\"0 0 1 1\">\n";
  if (!title_.empty()) out << "<title>" << xml_escape(title_) << "</title>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"#fff\" stroke=\"#000\" "
         "stroke-width=\"" << stroke_units(1.0) << "\"/>\n"
      << body_.str() << "</svg>\n";
  return out.str();
}

}  // namespace hypermap::io
