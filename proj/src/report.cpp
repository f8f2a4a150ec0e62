#include "hyperbolic/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "hyperbolic/error.hpp"
#include "line_reader.hpp"

namespace hyperbolic {

namespace {

double parse_real(std::string_view text, int column) {
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
    ++column;
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(1, column, "malformed number '" + std::string(text) + "'");
  return value;
}

// Picks the representative of +-M whose first significant entry points
// into the right half-plane (or up the imaginary axis).
Moebius::Matrix canonical_sign(const Moebius& m) {
  Moebius::Matrix a = m.matrix();
  const double scale = a.cwiseAbs().maxCoeff();
  for (int k = 0; k < 4; ++k) {
    const std::complex<double> x = a(k / 2, k % 2);
    if (std::abs(x) <= 1e-12 * scale) continue;
    const bool negate = std::abs(x.real()) > 1e-12 * scale ? x.real() < 0 : x.imag() < 0;
    if (negate) a = -a;
    break;
  }
  return a;
}

class Writer {
 public:
  explicit Writer(int precision) : precision_(precision) {}

  void line(const std::string& key, const std::string& value) { out_ << key << " = " << value << '\n'; }
  void real(const std::string& key, double x) { line(key, format_real(x, precision_)); }
  void complex(const std::string& key, std::complex<double> c) {
    line(key, format_complex(c, precision_));
  }
  void point(const std::string& key, const Point& p) { line(key, format_point(p, precision_)); }
  void matrix(const std::string& prefix, const Moebius& m) {
    const auto a = canonical_sign(m);
    complex(prefix + ".a", a(0, 0));
    complex(prefix + ".b", a(0, 1));
    complex(prefix + ".c", a(1, 0));
    complex(prefix + ".d", a(1, 1));
  }
  void presentation(const std::string& prefix, const Presentation& p) {
    std::string gens;
    for (const auto& g : p.generators) gens += (gens.empty() ? "" : " ") + g;
    line(prefix + ".generators", gens);
    for (std::size_t k = 0; k < p.relators.size(); ++k)
      line(prefix + ".relator." + std::to_string(k), p.relators[k].to_string());
    const AbelianInvariants inv = abelianization(p);
    line(prefix + ".abelian.rank", std::to_string(inv.free_rank));
    std::string torsion;
    for (long long d : inv.torsion) torsion += (torsion.empty() ? "" : " ") + std::to_string(d);
    line(prefix + ".abelian.torsion", torsion.empty() ? "none" : torsion);
  }

  std::string str() const { return out_.str(); }

 private:
  int precision_;
  std::ostringstream out_;
};

}  // namespace

TriangulationSummary summarize(const Triangulation& t) {
  return {t.size(), static_cast<int>(edge_classes(t).size()),
          static_cast<int>(cusp_classes(t).size())};
}

std::vector<EquationCheck> check_equations(const EquationSystem& sys, const ShapeAssignment& s) {
  std::vector<EquationCheck> out;
  for (const GluingEquation& eq : sys.equations)
    out.push_back({eq.source, holonomy_invariant(eq, s), argument_sum(eq, s)});
  return out;
}

CoordinateTable parse_coordinate_table(std::string_view text) {
  CoordinateTable table;
  for (const detail::Line& line : detail::split_lines(text)) {
    detail::expect_count(line, 5, "<tet> <p0> <p1> <p2> <p3>");
    CoordinateTable::Row row{detail::parse_int(line, 0, "tetrahedron"), {}};
    for (int k = 0; k < 4; ++k) {
      const detail::Token& tok = line.tokens[k + 1];
      try {
        row.coords[k] = parse_point(tok.text);
      } catch (const ParseError& e) {
        throw ParseError(line.number, tok.column + e.column() - 1, e.message());
      }
    }
    table.rows.push_back(row);
  }
  return table;
}

std::vector<TableRowCheck> compare_table(const CoordinateTable& table, const DevelopingMap& dm,
                                         const ShapeAssignment& s) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<TableRowCheck> out;
  for (const auto& row : table.rows) {
    if (row.tet < 0 || row.tet >= static_cast<int>(dm.tetrahedra.size()))
      throw ValidationError("table row for missing tet " + std::to_string(row.tet));
    TableRowCheck check{row.tet, 0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
      const Point& want = row.coords[k];
      const Point& got = dm.tetrahedra[row.tet].coords[k];
      if (want.is_infinite() || got.is_infinite()) {
        if (want.is_infinite() != got.is_infinite()) check.coord_deviation = kInf;
      } else {
        check.coord_deviation = std::max(check.coord_deviation, std::abs(want.value() - got.value()));
      }
    }
    try {
      check.shape_deviation = std::abs(tetra_shape_from_vertices(row.coords) - s.z(row.tet));
    } catch (const GeometryError&) {
      check.shape_deviation = kInf;
    }
    out.push_back(check);
  }
  return out;
}

double total_volume(const ShapeAssignment& s) {
  double sum = 0.0;
  for (Eigen::Index t = 0; t < s.size(); ++t) sum += tet_volume(s[t]);
  return sum;
}

std::string format_real(double x, int precision) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  std::array<char, 512> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*f", precision, x);
  std::string s(buf.data());
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_complex(std::complex<double> c, int precision) {
  std::string re = format_real(c.real(), precision);
  std::string im = format_real(c.imag(), precision);
  if (im.front() == '-') return re + im + "i";
  return re + "+" + im + "i";
}

std::string format_point(const Point& p, int precision) {
  return p.is_infinite() ? "inf" : format_complex(p.value(), precision);
}

std::complex<double> parse_complex(std::string_view text) {
  if (text.empty()) throw ParseError(1, 1, "empty complex number");
  if (text.back() != 'i') return {parse_real(text, 1), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  const std::string_view re_text = split == std::string_view::npos ? "" : body.substr(0, split);
  const std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);
  const int im_column = static_cast<int>(re_text.size()) + 1;
  double im = 0.0;
  if (im_text.empty() || im_text == "+") im = 1.0;
  else if (im_text == "-") im = -1.0;
  else if (im_text.front() == '-') im = -parse_real(im_text.substr(1), im_column + 1);
  else im = parse_real(im_text, im_column);
  const double re = re_text.empty() ? 0.0 : parse_real(re_text, 1);
  return {re, im};
}

Point parse_point(std::string_view text) {
  if (text == "inf") return Point::infinity();
  return Point(parse_complex(text));
}

std::string render(const PipelineReport& r, int precision) {
  Writer w(precision);
  if (r.summary) {
    w.line("tetrahedra", std::to_string(r.summary->tetrahedra));
    w.line("edges", std::to_string(r.summary->edges));
    w.line("cusps", std::to_string(r.summary->cusps));
  }
  if (r.solve) {
    w.line("solve.iterations", std::to_string(r.solve->iterations));
    w.real("solve.residual", r.solve->final_residual);
    w.line("solve.geometric", r.solve->geometric ? "true" : "false");
    for (Eigen::Index t = 0; t < r.solve->shapes.size(); ++t)
      w.complex("shape." + std::to_string(t), r.solve->shapes.z(t));
  }
  if (r.equations) {
    for (std::size_t k = 0; k < r.equations->size(); ++k) {
      const EquationCheck& eq = (*r.equations)[k];
      const std::string key = "equation." + std::to_string(k);
      w.line(key + ".source", eq.source);
      w.complex(key + ".product", eq.product);
      w.real(key + ".arg", eq.arg_sum);
    }
  }
  if (r.volume) w.real("volume", *r.volume);
  if (r.developing) {
    std::string order;
    for (int t : r.developing->order) order += (order.empty() ? "" : " ") + std::to_string(t);
    w.line("develop.anchor", std::to_string(r.developing->anchor));
    w.line("develop.order", order);
    for (int t : r.developing->order)
      for (int v = 0; v < 4; ++v)
        w.point("coord." + std::to_string(t) + "." + std::to_string(v),
                r.developing->tetrahedra[t].coords[v]);
  }
  if (r.table) {
    for (const TableRowCheck& row : *r.table) {
      const std::string key = "table." + std::to_string(row.tet);
      w.real(key + ".coord_deviation", row.coord_deviation);
      w.real(key + ".shape_deviation", row.shape_deviation);
    }
  }
  if (r.holonomy) {
    for (const FacePairing& p : r.holonomy->pairings) {
      const std::string key = "pairing." + std::to_string(p.tet) + "-" + std::to_string(p.other_tet) +
                              "." + std::to_string(p.face);
      w.line(key, p.label());
      w.matrix(key, p.map);
    }
    for (const auto& g : r.holonomy->generators) {
      w.line("generator." + g.name, g.label);
      w.matrix("generator." + g.name, g.map);
    }
    for (const auto& m : r.holonomy->meridians) {
      const std::string key = "meridian." + std::to_string(m.cusp);
      w.line(key + ".word", m.word.to_string());
      w.complex(key + ".trace", canonical_sign(m.map).trace());
    }
    for (std::size_t k = 0; k < r.holonomy->relations.size(); ++k) {
      const std::string key = "relation." + std::to_string(k);
      w.line(key + ".word", r.holonomy->relations[k].word.to_string());
      w.real(key + ".residual", r.holonomy->relations[k].residual);
    }
  }
  if (r.presentation) w.presentation("presentation", *r.presentation);
  if (r.reduced) w.presentation("reduced", *r.reduced);
  return w.str();
}

}  // namespace hyperbolic
