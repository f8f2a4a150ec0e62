#include "hyperbolic/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "hyperbolic/error.hpp"
#include "line_reader.hpp"

namespace hyperbolic {

namespace {

std::string face_name(int tet, int face) {
  return "tet " + std::to_string(tet) + " face " + std::to_string(face);
}

// The two vertices of {0,1,2,3} not in {a, b}, ascending.
std::array<int, 2> complement(int a, int b) {
  std::array<int, 2> out{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != a && v != b) out[k++] = v;
  return out;
}

}  // namespace

std::optional<Permutation> Permutation::from_images(std::array<int, 4> images) {
  std::array<bool, 4> seen{};
  for (int x : images) {
    if (x < 0 || x > 3 || seen[x]) return std::nullopt;
    seen[x] = true;
  }
  Permutation p;
  for (int i = 0; i < 4; ++i) p.images_[i] = static_cast<std::uint8_t>(images[i]);
  return p;
}

std::optional<Permutation> Permutation::parse(std::string_view digits) {
  if (digits.size() != 4) return std::nullopt;
  std::array<int, 4> images{};
  for (int i = 0; i < 4; ++i) {
    if (digits[i] < '0' || digits[i] > '9') return std::nullopt;
    images[i] = digits[i] - '0';
  }
  return from_images(images);
}

Permutation Permutation::inverse() const {
  Permutation p;
  for (int i = 0; i < 4; ++i) p.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  Permutation p;
  for (int i = 0; i < 4; ++i) p.images_[i] = images_[other.images_[i]];
  return p;
}

int Permutation::sign() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (images_[i] > images_[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::string Permutation::to_string() const {
  std::string s(4, '0');
  for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + images_[i]);
  return s;
}

Triangulation Triangulation::from_pairings(int n_tets, std::span<const Pairing> pairings,
                                           std::vector<std::string> labels) {
  if (n_tets <= 0) throw ValidationError("triangulation needs at least one tetrahedron");
  if (!labels.empty() && static_cast<int>(labels.size()) != n_tets)
    throw ValidationError("label count does not match tetrahedron count");

  Triangulation t;
  t.gluings_.assign(n_tets, {});
  t.labels_ = std::move(labels);

  auto where = [](const Pairing& p) {
    return p.source_line > 0 ? "line " + std::to_string(p.source_line) + ": " : std::string();
  };
  auto assign = [&](const Pairing& p, int tet, int face, FaceGluing g) {
    FaceGluing& slot = t.gluings_[tet][face];
    if (slot.tet >= 0 && (slot.tet != g.tet || slot.face != g.face || slot.perm != g.perm))
      throw ValidationError(where(p) + "non-involutive gluing: " + face_name(tet, face) +
                            " is glued to both " + face_name(slot.tet, slot.face) + " and " +
                            face_name(g.tet, g.face));
    slot = g;
  };

  for (const Pairing& p : pairings) {
    for (auto [tet, face] : {std::pair{p.tet, p.face}, std::pair{p.other_tet, p.other_face}}) {
      if (tet < 0 || tet >= n_tets)
        throw ValidationError(where(p) + "tetrahedron index " + std::to_string(tet) + " out of range");
      if (face < 0 || face > 3)
        throw ValidationError(where(p) + "face index " + std::to_string(face) + " out of range");
    }
    if (p.tet == p.other_tet && p.face == p.other_face)
      throw ValidationError(where(p) + face_name(p.tet, p.face) + " is glued to itself");
    if (p.perm[p.face] != p.other_face)
      throw ValidationError(where(p) + "permutation " + p.perm.to_string() + " does not carry " +
                            face_name(p.tet, p.face) + " onto " +
                            face_name(p.other_tet, p.other_face));
    assign(p, p.tet, p.face, {p.other_tet, p.other_face, p.perm});
    assign(p, p.other_tet, p.other_face, {p.tet, p.face, p.perm.inverse()});
  }

  for (int tet = 0; tet < n_tets; ++tet)
    for (int face = 0; face < 4; ++face)
      if (t.gluings_[tet][face].tet < 0) throw ValidationError("unglued face: " + face_name(tet, face));
  return t;
}

std::vector<Triangulation::Pairing> Triangulation::pairings() const {
  std::vector<Pairing> out;
  for (int tet = 0; tet < size(); ++tet)
    for (int face = 0; face < 4; ++face) {
      const FaceGluing& g = gluings_[tet][face];
      if (std::pair{tet, face} <= std::pair{g.tet, g.face})
        out.push_back({tet, face, g.tet, g.face, g.perm, 0});
    }
  return out;
}

Triangulation parse_triangulation(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, 0, "empty triangulation file");

  const detail::Line& header = lines.front();
  if (header.tokens[0].text != "tetrahedra")
    throw ParseError(header.number, header.tokens[0].column, "expected 'tetrahedra <N>' header");
  detail::expect_count(header, 2, "tetrahedra <N>");
  const int n = detail::parse_int(header, 1, "tetrahedron count");
  if (n <= 0) throw ParseError(header.number, header.tokens[1].column, "tetrahedron count must be positive");

  std::vector<Triangulation::Pairing> pairings;
  std::vector<std::string> labels;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const detail::Line& line = lines[k];
    const std::string_view keyword = line.tokens[0].text;
    if (keyword == "glue") {
      detail::expect_count(line, 6, "glue <A> <f> <B> <g> <p0p1p2p3>");
      Triangulation::Pairing p{};
      p.tet = detail::parse_int(line, 1, "tetrahedron");
      p.face = detail::parse_int(line, 2, "face");
      p.other_tet = detail::parse_int(line, 3, "tetrahedron");
      p.other_face = detail::parse_int(line, 4, "face");
      const auto perm = Permutation::parse(line.tokens[5].text);
      if (!perm)
        throw ParseError(line.number, line.tokens[5].column,
                         "'" + std::string(line.tokens[5].text) + "' is not a permutation of 0123");
      p.perm = *perm;
      p.source_line = line.number;
      pairings.push_back(p);
    } else if (keyword == "label") {
      detail::expect_count(line, 3, "label <tet> <name>");
      const int tet = detail::parse_int(line, 1, "tetrahedron");
      if (tet < 0 || tet >= n)
        throw ParseError(line.number, line.tokens[1].column, "tetrahedron index out of range");
      if (labels.empty()) labels.resize(n);
      labels[tet] = std::string(line.tokens[2].text);
    } else {
      throw ParseError(line.number, line.tokens[0].column,
                       "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  return Triangulation::from_pairings(n, pairings, std::move(labels));
}

std::string to_text(const Triangulation& t) {
  std::ostringstream out;
  out << "tetrahedra " << t.size() << '\n';
  for (std::size_t i = 0; i < t.labels().size(); ++i)
    if (!t.labels()[i].empty()) out << "label " << i << ' ' << t.labels()[i] << '\n';
  for (const auto& p : t.pairings())
    out << "glue " << p.tet << ' ' << p.face << ' ' << p.other_tet << ' ' << p.other_face << ' '
        << p.perm.to_string() << '\n';
  return out.str();
}

std::vector<EdgeClass> edge_classes(const Triangulation& t) {
  const int n = t.size();
  std::vector<std::array<bool, 6>> seen(n);
  constexpr std::array<std::array<int, 2>, 6> kEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  auto edge_index = [](int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == 0) return b - 1;
    return a + b;  // 12 -> 3, 13 -> 4, 23 -> 5
  };

  std::vector<EdgeClass> classes;
  for (int tet0 = 0; tet0 < n; ++tet0) {
    for (int e = 0; e < 6; ++e) {
      if (seen[tet0][e]) continue;
      EdgeClass cls;
      int tet = tet0;
      int a = kEdges[e][0], b = kEdges[e][1];
      int exit = complement(a, b)[0];
      const int closing_face = complement(a, b)[1];
      for (;;) {
        seen[tet][edge_index(a, b)] = true;
        cls.members.push_back(
            {tet, {std::min(a, b), std::max(a, b)}, corner_of_edge(a, b), exit});
        const FaceGluing& g = t.neighbor(tet, exit);
        const int na = g.perm[a], nb = g.perm[b];
        const auto others = complement(na, nb);
        const int entry = g.face;
        tet = g.tet;
        a = na;
        b = nb;
        if (tet == tet0 && edge_index(a, b) == e) {
          if (entry != closing_face)
            throw ValidationError("edge cycle through tet " + std::to_string(tet0) +
                                  " returns with reversed orientation");
          break;
        }
        if (seen[tet][edge_index(a, b)] ||
            static_cast<int>(cls.members.size()) > 6 * n)
          throw ValidationError("non-closing edge cycle through tet " + std::to_string(tet0));
        exit = others[0] == entry ? others[1] : others[0];
      }
      classes.push_back(std::move(cls));
    }
  }
  return classes;
}

std::vector<std::array<int, 4>> cusp_index(const Triangulation& t) {
  const int n = t.size();
  std::vector<std::array<int, 4>> index(n, {-1, -1, -1, -1});
  int next = 0;
  for (int tet0 = 0; tet0 < n; ++tet0)
    for (int v0 = 0; v0 < 4; ++v0) {
      if (index[tet0][v0] >= 0) continue;
      std::deque<TetVertex> queue{{tet0, v0}};
      index[tet0][v0] = next;
      while (!queue.empty()) {
        const auto [tet, v] = queue.front();
        queue.pop_front();
        for (int face = 0; face < 4; ++face) {
          if (face == v) continue;
          const FaceGluing& g = t.neighbor(tet, face);
          const int w = g.perm[v];
          if (index[g.tet][w] < 0) {
            index[g.tet][w] = next;
            queue.push_back({g.tet, w});
          }
        }
      }
      ++next;
    }
  return index;
}

std::vector<CuspClass> cusp_classes(const Triangulation& t) {
  const auto index = cusp_index(t);
  std::vector<CuspClass> cusps;
  for (int tet = 0; tet < t.size(); ++tet)
    for (int v = 0; v < 4; ++v) {
      const int c = index[tet][v];
      if (c >= static_cast<int>(cusps.size())) cusps.push_back({c, {}});
      cusps[c].members.push_back({tet, v});
    }
  return cusps;
}

std::vector<CuspCurve> parse_cusp_curves(std::string_view text, const Triangulation& t) {
  const auto index = cusp_index(t);
  int n_cusps = 0;
  for (const auto& row : index)
    for (int c : row) n_cusps = std::max(n_cusps, c + 1);
  std::vector<CuspCurve> curves;
  int curve_line = 0;
  auto finish = [&] {
    if (!curves.empty() && curves.back().steps.empty())
      throw ParseError(curve_line, 0, "curve '" + curves.back().name + "' has no steps");
  };

  for (const detail::Line& line : detail::split_lines(text)) {
    const std::string_view keyword = line.tokens[0].text;
    if (keyword == "curve") {
      finish();
      detail::expect_count(line, 3, "curve <cusp> <name>");
      const int cusp = detail::parse_int(line, 1, "cusp");
      if (cusp < 0 || cusp >= n_cusps)
        throw ParseError(line.number, line.tokens[1].column,
                         "cusp " + std::to_string(cusp) + " does not exist");
      curves.push_back({cusp, std::string(line.tokens[2].text), {}});
      curve_line = line.number;
    } else if (keyword == "step") {
      if (curves.empty()) throw ParseError(line.number, line.tokens[0].column, "step before any curve");
      detail::expect_count(line, 5, "step <tet> <vertex> <z|v|w> <+|->");
      CurveStep step{};
      step.tet = detail::parse_int(line, 1, "tetrahedron");
      step.vertex = detail::parse_int(line, 2, "vertex");
      if (step.tet < 0 || step.tet >= t.size())
        throw ParseError(line.number, line.tokens[1].column, "tetrahedron index out of range");
      if (step.vertex < 0 || step.vertex > 3)
        throw ParseError(line.number, line.tokens[2].column, "vertex index out of range");
      const std::string_view corner = line.tokens[3].text;
      if (corner == "z") step.corner = Corner::z;
      else if (corner == "v") step.corner = Corner::v;
      else if (corner == "w") step.corner = Corner::w;
      else
        throw ParseError(line.number, line.tokens[3].column,
                         "unknown corner tag '" + std::string(corner) + "'");
      const std::string_view eps = line.tokens[4].text;
      if (eps == "+") step.sign = 1;
      else if (eps == "-") step.sign = -1;
      else
        throw ParseError(line.number, line.tokens[4].column,
                         "expected sign + or -, got '" + std::string(eps) + "'");
      CuspCurve& curve = curves.back();
      if (index[step.tet][step.vertex] != curve.cusp)
        throw ParseError(line.number, line.tokens[2].column,
                         "vertex " + std::to_string(step.vertex) + " of tet " +
                             std::to_string(step.tet) + " lies in cusp " +
                             std::to_string(index[step.tet][step.vertex]) + ", not cusp " +
                             std::to_string(curve.cusp));
      curve.steps.push_back(step);
    } else {
      throw ParseError(line.number, line.tokens[0].column,
                       "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  finish();
  return curves;
}

std::string to_text(std::span<const CuspCurve> curves) {
  std::ostringstream out;
  for (const CuspCurve& c : curves) {
    out << "curve " << c.cusp << ' ' << c.name << '\n';
    for (const CurveStep& s : c.steps)
      out << "  step " << s.tet << ' ' << s.vertex << ' ' << corner_tag(s.corner) << ' '
          << (s.sign > 0 ? '+' : '-') << '\n';
  }
  return out.str();
}

}  // namespace hyperbolic
