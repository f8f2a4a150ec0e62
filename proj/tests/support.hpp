#pragma once

#include <array>
#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperbolic/equations.hpp"
#include "hyperbolic/moebius.hpp"
#include "hyperbolic/solver.hpp"
#include "hyperbolic/triangulation.hpp"

namespace testing {

using hyperbolic::Point;
using cd = std::complex<double>;

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Loaded {
  hyperbolic::Triangulation t;
  std::vector<hyperbolic::CuspCurve> curves;
  hyperbolic::EquationSystem sys;
};

inline Loaded load(const std::string& stem) {
  auto t = hyperbolic::parse_triangulation(read_fixture(stem + ".tri"));
  auto curves = hyperbolic::parse_cusp_curves(read_fixture(stem + ".curves"), t);
  auto sys = hyperbolic::build_system(t, curves);
  return {std::move(t), std::move(curves), std::move(sys)};
}

/// Exponent matrix of a corner product such as "z0 w1 v6" or "z4 / v5".
inline Eigen::MatrixX3i corner_product(const std::string& text, int n_tets) {
  Eigen::MatrixX3i e = Eigen::MatrixX3i::Zero(n_tets, 3);
  std::istringstream in(text);
  std::string tok;
  int sign = 1;
  while (in >> tok) {
    if (tok == "/") {
      sign = -1;
      continue;
    }
    const int col = tok[0] == 'z' ? 0 : tok[0] == 'v' ? 1 : 2;
    e(std::stoi(tok.substr(1)), col) += sign;
  }
  return e;
}

// Reference data for the Borromean rings complement.
namespace borromean {

inline const cd kHalf(0.5, 0.5), kOnePlusI(1.0, 1.0), kI(0.0, 1.0);

inline std::array<cd, 8> solution() {
  return {kHalf, kOnePlusI, kOnePlusI, kI, kOnePlusI, kHalf, kI, kHalf};
}

inline hyperbolic::ShapeAssignment solution_assignment() {
  Eigen::VectorXcd z(8);
  const auto s = solution();
  for (int k = 0; k < 8; ++k) z(k) = s[k];
  return hyperbolic::ShapeAssignment(z);
}

/// Seven edge products as published; two carry a misprinted corner.
inline const std::vector<std::string> kPrintedEdgeProducts{
    "z0 w1 z2 w3 z4 z5 v6 v7", "v4 w5 z6 w7",          "w0 v1 v2 z3",
    "v0 z1 w2 v3 w4 v5 w5 z7", "v1 v2 v6 w6 z7 v7",    "z0 z3 z4 w4 z5 v5",
    "z0 v0 z2 w2 w5 w7"};

/// The same list with the two misprints corrected (w5 -> w6 in the fourth,
/// z0 -> w0 in the sixth).
inline const std::vector<std::string> kEdgeProducts{
    "z0 w1 z2 w3 z4 z5 v6 v7", "v4 w5 z6 w7",          "w0 v1 v2 z3",
    "v0 z1 w2 v3 w4 v5 w6 z7", "v1 v2 v6 w6 z7 v7",    "w0 z3 z4 w4 z5 v5",
    "z0 v0 z2 w2 w5 w7"};

/// Cusp equations, numerator / denominator, two per cusp in cusp order.
inline const std::vector<std::string> kCuspProducts{
    "z4 / v5",          "w4 w1 v7 v0 / v3 w6 z2 z5", "w0 v2 / w1 v6 z4 w3",
    "z1 w6 z7 w2 / z5 z0 w3 z4", "w5 v4 / z7 w2 z1 w6", "v6 z4 w3 w1 / v0 v5 z7 w2"};

struct TableRow {
  int tet;
  std::array<Point, 4> coords;
};

inline std::vector<TableRow> table() {
  const Point inf = Point::infinity();
  return {{3, {cd(0, 0), inf, cd(0, 1), cd(1, 0)}},  {1, {cd(-1, 0), inf, cd(0, 1), cd(0, 0)}},
          {2, {cd(0, -1), inf, cd(-1, 0), cd(0, 0)}}, {0, {cd(0, -1), inf, cd(0, 0), cd(1, 0)}},
          {4, {cd(0, 1), cd(1, 0), inf, cd(1, 2)}},   {6, {cd(1, 2), cd(1, 0), inf, cd(2, 1)}},
          {7, {cd(1, 1), cd(1, 0), cd(1, 2), cd(2, 1)}}, {5, {cd(1, 1), cd(1, 2), cd(1, 0), cd(0, 1)}}};
}

struct PairingRef {
  std::string name;
  int tet;
  int face;
  std::string label;
  hyperbolic::Moebius::Matrix matrix;  // as published, not normalized
};

inline hyperbolic::Moebius::Matrix mat(cd a, cd b, cd c, cd d) {
  hyperbolic::Moebius::Matrix m;
  m << a, b, c, d;
  return m;
}

inline std::vector<PairingRef> pairings() {
  return {
      {"g34", 3, 1, "3(023)->4(203)", mat(cd(0, 2), 1.0, 1.0, 0.0)},
      {"g05", 0, 2, "0(013)->5(302)", mat(cd(1, 1), -1.0, 1.0, cd(-1, 1))},
      {"t05", 0, 1, "0(023)->5(301)", mat(cd(1, -2), cd(1, 1), cd(-1, -1), 1.0)},
      {"g16", 1, 3, "1(012)->6(123)", mat(1.0, 2.0, 0.0, 1.0)},
      {"t16", 1, 1, "1(023)->6(032)", mat(cd(2, 2), 1.0, 1.0, 0.0)},
      {"g27", 2, 3, "2(012)->7(301)", mat(2.0, cd(3, 1), cd(1, -1), 2.0)},
      {"t27", 2, 1, "2(023)->7(320)", mat(cd(3, -3), 2.0, cd(0, -2), cd(1, -1))},
  };
}

}  // namespace borromean

}  // namespace testing
