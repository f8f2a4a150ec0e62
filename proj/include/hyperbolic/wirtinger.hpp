#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperbolic/group_word.hpp"

namespace hyperbolic {

struct Crossing {
  int sign;  // +1 or -1
  std::string over;
  std::string under_in;
  std::string under_out;
};

struct CrossingList {
  std::vector<std::string> arcs;
  std::vector<Crossing> crossings;
};

/// Format: `arcs <name>...` then `crossing <+|-> <over> <under-in> <under-out>`.
CrossingList parse_link(std::string_view text);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;
};

/// One generator per arc. With over-arc a, incoming b and outgoing c, a
/// positive crossing gives c a^-1 b^-1 a and a negative one c a b^-1 a^-1.
/// Throws ValidationError on an undeclared arc.
Presentation wirtinger_presentation(const CrossingList& cl);

/// Removes generator g, substituting defn for it everywhere. The relator
/// that defines g (cyclically equivalent to g defn^-1, up to inversion) is
/// dropped. Throws ValidationError if no relator defines g or defn uses g.
Presentation eliminate_generator(const Presentation& p, std::string_view g, const GroupWord& defn);

/// Abelian invariants of the presented group: free rank and the torsion
/// coefficients (> 1) in divisibility order.
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<long long> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelianization(const Presentation& p);

}  // namespace hyperbolic
