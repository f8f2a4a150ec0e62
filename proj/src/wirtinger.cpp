#include "hyperbolic/wirtinger.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "hyperbolic/error.hpp"
#include "line_reader.hpp"

namespace hyperbolic {

CrossingList parse_link(std::string_view text) {
  CrossingList cl;
  bool have_arcs = false;
  for (const detail::Line& line : detail::split_lines(text)) {
    const std::string_view keyword = line.tokens[0].text;
    if (keyword == "arcs") {
      if (have_arcs) throw ParseError(line.number, line.tokens[0].column, "arcs declared twice");
      if (line.tokens.size() < 2) throw ParseError(line.number, 0, "no arcs declared");
      std::set<std::string_view> seen;
      for (std::size_t k = 1; k < line.tokens.size(); ++k) {
        if (!seen.insert(line.tokens[k].text).second)
          throw ParseError(line.number, line.tokens[k].column,
                           "arc '" + std::string(line.tokens[k].text) + "' declared twice");
        cl.arcs.emplace_back(line.tokens[k].text);
      }
      have_arcs = true;
    } else if (keyword == "crossing") {
      if (!have_arcs)
        throw ParseError(line.number, line.tokens[0].column, "crossing before arcs declaration");
      detail::expect_count(line, 5, "crossing <+|-> <over> <under-in> <under-out>");
      Crossing c;
      const std::string_view sign = line.tokens[1].text;
      if (sign == "+") c.sign = 1;
      else if (sign == "-") c.sign = -1;
      else
        throw ParseError(line.number, line.tokens[1].column,
                         "expected crossing sign + or -, got '" + std::string(sign) + "'");
      for (std::size_t k = 2; k < 5; ++k)
        if (std::find(cl.arcs.begin(), cl.arcs.end(), line.tokens[k].text) == cl.arcs.end())
          throw ParseError(line.number, line.tokens[k].column,
                           "undeclared arc '" + std::string(line.tokens[k].text) + "'");
      c.over = line.tokens[2].text;
      c.under_in = line.tokens[3].text;
      c.under_out = line.tokens[4].text;
      cl.crossings.push_back(std::move(c));
    } else {
      throw ParseError(line.number, line.tokens[0].column,
                       "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!have_arcs) throw ParseError(1, 0, "missing arcs declaration");
  return cl;
}

Presentation wirtinger_presentation(const CrossingList& cl) {
  Presentation p;
  p.generators = cl.arcs;
  for (const Crossing& c : cl.crossings) {
    for (const std::string* arc : {&c.over, &c.under_in, &c.under_out})
      if (std::find(cl.arcs.begin(), cl.arcs.end(), *arc) == cl.arcs.end())
        throw ValidationError("crossing references undeclared arc '" + *arc + "'");
    const GroupWord a = GroupWord::generator(c.over);
    const GroupWord b = GroupWord::generator(c.under_in);
    const GroupWord out = GroupWord::generator(c.under_out);
    p.relators.push_back(c.sign > 0 ? out * a.inverse() * b.inverse() * a
                                    : out * a * b.inverse() * a.inverse());
  }
  return p;
}

Presentation eliminate_generator(const Presentation& p, std::string_view g, const GroupWord& defn) {
  if (std::find(p.generators.begin(), p.generators.end(), g) == p.generators.end())
    throw ValidationError("'" + std::string(g) + "' is not a generator");
  if (defn.contains(g))
    throw ValidationError("definition of '" + std::string(g) + "' uses '" + std::string(g) + "'");

  const GroupWord defining = GroupWord::generator(std::string(g)) * defn.inverse();
  std::size_t drop = p.relators.size();
  for (std::size_t k = 0; k < p.relators.size(); ++k)
    if (cyclically_equivalent(p.relators[k], defining, true)) {
      drop = k;
      break;
    }
  if (drop == p.relators.size())
    throw ValidationError("no relator expresses '" + std::string(g) + "' as " + defn.to_string());

  Presentation out;
  for (const std::string& name : p.generators)
    if (name != g) out.generators.push_back(name);
  const std::map<std::string, GroupWord> images{{std::string(g), defn}};
  for (std::size_t k = 0; k < p.relators.size(); ++k)
    if (k != drop) out.relators.push_back(substitute(p.relators[k], images));
  return out;
}

AbelianInvariants abelianization(const Presentation& p) {
  const std::size_t rows = p.relators.size();
  const std::size_t cols = p.generators.size();
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = exponent_sum(p.relators[i], p.generators[j]);

  // Smith normal form by repeated pivoting on the smallest entry.
  std::vector<long long> diagonal;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi == rows || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const long long q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const long long q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        clean = clean && m[t][j] == 0;
      }
      if (!clean) continue;

      // The pivot must divide the rest of the block; fold an offending row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            divides = false;
          }
      if (divides) break;
    }
    if (m[t][t] == 0) break;
    diagonal.push_back(std::llabs(m[t][t]));
  }

  AbelianInvariants inv;
  inv.free_rank = static_cast<int>(cols - diagonal.size());
  for (long long d : diagonal)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

}  // namespace hyperbolic
