#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperbolic/developing.hpp"
#include "hyperbolic/equations.hpp"
#include "hyperbolic/holonomy.hpp"
#include "hyperbolic/solver.hpp"
#include "hyperbolic/wirtinger.hpp"

namespace hyperbolic {

struct TriangulationSummary {
  int tetrahedra;
  int edges;
  int cusps;
};

TriangulationSummary summarize(const Triangulation& t);

/// Product-form check of one equation at a shape assignment.
struct EquationCheck {
  std::string source;
  std::complex<double> product;
  double arg_sum;
};

std::vector<EquationCheck> check_equations(const EquationSystem& sys, const ShapeAssignment& s);

/// Reference coordinates for some tetrahedra, one row per tetrahedron.
struct CoordinateTable {
  struct Row {
    int tet;
    std::array<Point, 4> coords;
  };
  std::vector<Row> rows;
};

/// Format: lines `<tet> <p0> <p1> <p2> <p3>`, points as in parse_point.
CoordinateTable parse_coordinate_table(std::string_view text);

struct TableRowCheck {
  int tet;
  double coord_deviation;  // max over vertices; infinite if inf is unmatched
  double shape_deviation;  // |cross-ratio of the reference row - solved shape|
};

std::vector<TableRowCheck> compare_table(const CoordinateTable& table, const DevelopingMap& dm,
                                         const ShapeAssignment& s);

struct PipelineReport {
  std::optional<TriangulationSummary> summary;
  std::optional<SolveReport> solve;
  std::optional<std::vector<EquationCheck>> equations;
  std::optional<double> volume;
  std::optional<DevelopingMap> developing;
  std::optional<HolonomyReport> holonomy;
  std::optional<Presentation> presentation;
  std::optional<Presentation> reduced;
  std::optional<std::vector<TableRowCheck>> table;
};

/// Sum of tetrahedron volumes. Throws GeometryError on a non-geometric shape.
double total_volume(const ShapeAssignment& s);

/// Fixed-point "<re><+|-><im>i"; a value that rounds to zero prints unsigned.
std::string format_complex(std::complex<double> c, int precision);
std::string format_real(double x, int precision);
/// format_complex, or "inf".
std::string format_point(const Point& p, int precision);

/// Accepts "inf", "a", "bi", "a+bi", "a-bi", "i", "-i" (no spaces).
/// Throws ParseError (column relative to the text) on anything else.
std::complex<double> parse_complex(std::string_view text);
Point parse_point(std::string_view text);

/// Line-oriented `section.key = value` document.
std::string render(const PipelineReport& r, int precision = 9);

}  // namespace hyperbolic
