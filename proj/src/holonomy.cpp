#include "hyperbolic/holonomy.hpp"

#include "hyperbolic/error.hpp"
#include "line_reader.hpp"

namespace hyperbolic {

std::string FacePairing::label() const {
  std::string s = std::to_string(tet) + "(";
  for (int v : source) s += static_cast<char>('0' + v);
  s += ")->" + std::to_string(other_tet) + "(";
  for (int v : target) s += static_cast<char>('0' + v);
  return s + ")";
}

FacePairing face_pairing(const Triangulation& t, const DevelopingMap& dm, int tet, int face) {
  const FaceGluing& g = t.neighbor(tet, face);
  FacePairing p{tet, face, g.tet, g.face, {}, {}, {}};
  std::array<Point, 3> src, dst;
  int k = 0;
  for (int v = 0; v < 4; ++v) {
    if (v == face) continue;
    p.source[k] = v;
    p.target[k] = g.perm[v];
    src[k] = dm.tetrahedra[tet].coords[v];
    dst[k] = dm.tetrahedra[g.tet].coords[g.perm[v]];
    ++k;
  }
  p.map = hyperbolic::face_pairing(src, dst);
  return p;
}

std::vector<FacePairing> face_pairings(const Triangulation& t, const DevelopingMap& dm) {
  std::vector<FacePairing> out;
  for (const auto& pr : t.pairings()) out.push_back(face_pairing(t, dm, pr.tet, pr.face));
  return out;
}

Moebius evaluate(const GroupWord& w, const MoebiusAssignment& assignment) {
  Moebius m;
  for (const Letter& l : w.letters()) {
    const auto it = assignment.find(l.name);
    if (it == assignment.end()) throw ValidationError("unassigned letter '" + l.name + "'");
    m = m * (l.exponent > 0 ? it->second : it->second.inverse());
  }
  return m;
}

std::vector<double> verify_relations(std::span<const GroupWord> words,
                                     const MoebiusAssignment& assignment) {
  std::vector<double> out;
  out.reserve(words.size());
  for (const GroupWord& w : words) out.push_back(distance_from_identity(evaluate(w, assignment)));
  return out;
}

HolonomyWords parse_holonomy_words(std::string_view text, const Triangulation& t) {
  const int n_cusps = static_cast<int>(cusp_classes(t).size());
  HolonomyWords out;

  // Word text runs from the given token to the end of the line.
  auto word_from = [](const detail::Line& line, std::size_t first) {
    if (first >= line.tokens.size()) throw ParseError(line.number, 0, "missing word");
    const detail::Token& start = line.tokens[first];
    const detail::Token& last = line.tokens.back();
    const std::string_view span(start.text.data(),
                                static_cast<std::size_t>(last.text.data() + last.text.size() -
                                                         start.text.data()));
    try {
      return GroupWord::parse(span);
    } catch (const ParseError& e) {
      throw ParseError(line.number, start.column + e.column() - 1, e.message());
    }
  };

  for (const detail::Line& line : detail::split_lines(text)) {
    const std::string_view keyword = line.tokens[0].text;
    if (keyword == "pairing") {
      detail::expect_count(line, 4, "pairing <name> <tet> <face>");
      HolonomyWords::Named named{std::string(line.tokens[1].text),
                                 detail::parse_int(line, 2, "tetrahedron"),
                                 detail::parse_int(line, 3, "face")};
      if (named.tet < 0 || named.tet >= t.size())
        throw ParseError(line.number, line.tokens[2].column, "tetrahedron index out of range");
      if (named.face < 0 || named.face > 3)
        throw ParseError(line.number, line.tokens[3].column, "face index out of range");
      for (const auto& existing : out.pairings)
        if (existing.name == named.name)
          throw ParseError(line.number, line.tokens[1].column,
                           "pairing '" + named.name + "' defined twice");
      out.pairings.push_back(std::move(named));
    } else if (keyword == "meridian") {
      const int cusp = detail::parse_int(line, 1, "cusp");
      if (cusp < 0 || cusp >= n_cusps)
        throw ParseError(line.number, line.tokens[1].column,
                         "cusp " + std::to_string(cusp) + " does not exist");
      out.meridians.push_back({cusp, word_from(line, 2)});
    } else if (keyword == "relation") {
      out.relations.push_back(word_from(line, 1));
    } else {
      throw ParseError(line.number, line.tokens[0].column,
                       "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  return out;
}

HolonomyReport holonomy(const Triangulation& t, const DevelopingMap& dm,
                        const HolonomyWords& words) {
  HolonomyReport report;
  report.pairings = face_pairings(t, dm);

  MoebiusAssignment assignment;
  for (const auto& named : words.pairings) {
    const FacePairing p = face_pairing(t, dm, named.tet, named.face);
    assignment[named.name] = p.map;
    report.generators.push_back({named.name, p.label(), p.map});
  }
  for (const auto& m : words.meridians)
    report.meridians.push_back({m.cusp, m.word, evaluate(m.word, assignment)});
  const auto residuals = verify_relations(words.relations, assignment);
  for (std::size_t k = 0; k < residuals.size(); ++k)
    report.relations.push_back({words.relations[k], residuals[k]});
  return report;
}

}  // namespace hyperbolic
