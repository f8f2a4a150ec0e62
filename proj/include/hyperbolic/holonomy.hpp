#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperbolic/developing.hpp"
#include "hyperbolic/group_word.hpp"
#include "hyperbolic/moebius.hpp"
#include "hyperbolic/triangulation.hpp"

namespace hyperbolic {

/// Moebius map carrying one face of a developed tetrahedron onto the face it
/// is glued to.
struct FacePairing {
  int tet;
  int face;
  int other_tet;
  int other_face;
  std::array<int, 3> source;  // vertices of `face`, ascending
  std::array<int, 3> target;  // their images under the gluing
  Moebius map;

  /// Arrow notation, e.g. "3(023)->4(203)".
  std::string label() const;
};

FacePairing face_pairing(const Triangulation& t, const DevelopingMap& dm, int tet, int face);

/// One pairing per glued face pair, from the smaller (tet, face) side.
std::vector<FacePairing> face_pairings(const Triangulation& t, const DevelopingMap& dm);

using MoebiusAssignment = std::map<std::string, Moebius>;

/// Product of the assigned maps. Throws ValidationError on an unassigned
/// letter.
Moebius evaluate(const GroupWord& w, const MoebiusAssignment& assignment);

/// Per word, the max-abs entry distance of its value from +I or -I,
/// whichever is nearer.
std::vector<double> verify_relations(std::span<const GroupWord> words,
                                     const MoebiusAssignment& assignment);

/// Names for face pairings plus the words to evaluate with them.
///
/// Format:
///   pairing <name> <tet> <face>
///   meridian <cusp> <word>
///   relation <word>
struct HolonomyWords {
  struct Named {
    std::string name;
    int tet;
    int face;
  };
  struct Meridian {
    int cusp;
    GroupWord word;
  };
  std::vector<Named> pairings;
  std::vector<Meridian> meridians;
  std::vector<GroupWord> relations;
};

HolonomyWords parse_holonomy_words(std::string_view text, const Triangulation& t);

struct HolonomyReport {
  struct Generator {
    std::string name;
    std::string label;
    Moebius map;
  };
  struct MeridianValue {
    int cusp;
    GroupWord word;
    Moebius map;
  };
  struct RelationValue {
    GroupWord word;
    double residual;
  };
  std::vector<FacePairing> pairings;
  std::vector<Generator> generators;
  std::vector<MeridianValue> meridians;
  std::vector<RelationValue> relations;
};

HolonomyReport holonomy(const Triangulation& t, const DevelopingMap& dm,
                        const HolonomyWords& words);

}  // namespace hyperbolic
