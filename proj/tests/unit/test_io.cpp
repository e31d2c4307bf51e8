#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "gen.hpp"
#include "hypermap/io.hpp"
#include "hypermap/version.hpp"

using namespace hypermap;
using hypermap::testing::Gen;

TEST_CASE("format_real") {
  CHECK(io::format_real(0.0) == "0");
  CHECK(io::format_real(0.5) == "0.5");
  CHECK(io::format_real(0.1) == "0.10000000000000001");
  CHECK(io::format_real(-2.0) == "-2");
  CHECK(io::format_real(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(io::format_real(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(io::format_real(std::nan("")) == "nan");
}

TEST_CASE("property: format_real round-trips doubles") {
  Gen g(601);
  for (int i = 0; i < 20000; ++i) {
    const double v = std::ldexp(g.uniform(-1.0, 1.0), static_cast<int>(g.integer(-300, 300)));
    REQUIRE(std::strtod(io::format_real(v).c_str(), nullptr) == v);
  }
  const double tiny = std::numeric_limits<double>::denorm_min();
  CHECK(std::strtod(io::format_real(tiny).c_str(), nullptr) == tiny);
}

TEST_CASE("header comment") {
  std::ostringstream out;
  io::write_header_comment(out, "field", {{"k", "3"}, {"grid", "8"}});
  CHECK(out.str() == std::string("# hypermap ") + kVersion + " field k=3 grid=8\n");
}

TEST_CASE("CsvWriter") {
  std::ostringstream out;
  io::CsvWriter csv(out, {"a", "b"});
  csv.row({io::CsvWriter::cell(1), io::CsvWriter::cell(0.25)});
  csv.row(std::vector<std::string>{io::CsvWriter::cell(true), io::CsvWriter::cell("x")});
  CHECK(out.str() == "a,b\n1,0.25\ntrue,x\n");
  CHECK_THROWS_AS(csv.row({"only"}), std::logic_error);
  CHECK_THROWS_AS(csv.row({"1", "2", "3"}), std::logic_error);
  CHECK(io::CsvWriter::cell(std::int64_t{-7}) == "-7");
  CHECK(io::CsvWriter::cell(false) == "false");
}

TEST_CASE("xml_escape") {
  CHECK(io::xml_escape("a<b>&\"c\"") == "a&lt;b&gt;&amp;&quot;c&quot;");
  CHECK(io::xml_escape("plain") == "plain");
}

TEST_CASE("SvgDocument") {
  io::SvgDocument svg(800, "k < 2");
  svg.polyline({{0.0, 0.0}, {0.5, 0.25}}, "#000", 1.0);
  svg.band(0.2, 0.3, "#f00");
  svg.text({0.1, 0.9}, "P1 & P2");
  const std::string s = svg.str();
  CHECK(s.rfind("<?xml", 0) == 0);
  CHECK(s.find("viewBox=\"0 0 1 1\"") != std::string::npos);
  CHECK(s.find("<title>k &lt; 2</title>") != std::string::npos);
  // y is flipped: (0.5, 0.25) lands at svg y = 0.75.
  CHECK(s.find("points=\"0.000000,1.000000 0.500000,0.750000\"") != std::string::npos);
  // The band [0.2, 0.3] starts at svg y = 0.7.
  CHECK(s.find("y=\"0.700000\" width=\"1\" height=\"0.100000\"") != std::string::npos);
  CHECK(s.find("P1 &amp; P2") != std::string::npos);
  CHECK(s.find("fill=\"none\"") != std::string::npos);
  CHECK(s.size() > 0);
  CHECK(s.substr(s.size() - 7) == "</svg>\n");
}

TEST_CASE("SvgDocument converts pixel strokes to viewBox units") {
  io::SvgDocument svg(500);
  svg.line({0.0, 0.0}, {1.0, 1.0}, "#000", 2.0, "10 5");
  const std::string s = svg.str();
  CHECK(s.find("stroke-width=\"0.004000\"") != std::string::npos);
  CHECK(s.find("stroke-dasharray=\"0.020000 0.010000\"") != std::string::npos);
}

TEST_CASE("polyline with a single point is dropped") {
  io::SvgDocument svg;
  svg.polyline({{0.5, 0.5}}, "#000");
  CHECK(svg.str().find("<polyline") == std::string::npos);
}
