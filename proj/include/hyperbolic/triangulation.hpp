#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperbolic/shapes.hpp"

namespace hyperbolic {

/// Bijection of the tetrahedron vertices {0,1,2,3}, stored as the image list.
class Permutation {
 public:
  constexpr Permutation() : images_{0, 1, 2, 3} {}

  /// Returns nullopt unless `images` is a bijection of {0,1,2,3}.
  static std::optional<Permutation> from_images(std::array<int, 4> images);
  /// Four digits, e.g. "2103".
  static std::optional<Permutation> parse(std::string_view digits);

  constexpr int operator[](int v) const { return images_[v]; }
  Permutation inverse() const;
  /// (this * other)(v) = this(other(v)).
  Permutation operator*(const Permutation& other) const;
  bool is_identity() const { return *this == Permutation(); }
  /// +1 for even, -1 for odd.
  int sign() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::array<std::uint8_t, 4> images_;
};

/// Target of one face of a tetrahedron: face `face` of `tet`, reached
/// through `perm` (vertex i of the source goes to vertex perm[i]).
struct FaceGluing {
  int tet = -1;
  int face = -1;
  Permutation perm;
};

/// Ideal triangulation: tetrahedra with faces (indexed by opposite vertex)
/// glued in pairs. Immutable once constructed.
class Triangulation {
 public:
  struct Pairing {
    int tet;
    int face;
    int other_tet;
    int other_face;
    Permutation perm;
    int source_line = 0;  // for diagnostics; 0 when not from a file
  };

  /// Validates and builds. Each pairing implies its reverse. Throws
  /// ValidationError on an unglued face, a face glued twice inconsistently
  /// (non-involutive gluing), a face glued to itself, or a permutation that
  /// does not carry face to face.
  static Triangulation from_pairings(int n_tets, std::span<const Pairing> pairings,
                                     std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(gluings_.size()); }
  const FaceGluing& neighbor(int tet, int face) const { return gluings_[tet][face]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// One pairing per glued face pair, listed from the lexicographically
  /// smaller (tet, face) side.
  std::vector<Pairing> pairings() const;

 private:
  std::vector<std::array<FaceGluing, 4>> gluings_;
  std::vector<std::string> labels_;
};

Triangulation parse_triangulation(std::string_view text);
std::string to_text(const Triangulation& t);

struct TetVertex {
  int tet;
  int vertex;
  friend auto operator<=>(const TetVertex&, const TetVertex&) = default;
};

struct EdgeMember {
  int tet;
  std::array<int, 2> edge;  // ascending vertex pair
  Corner corner;
  int exit_face;  // face crossed to reach the next member of the cycle
};

/// Edge orbit as a closed cycle; members[i] and members[i+1] share a face.
struct EdgeClass {
  std::vector<EdgeMember> members;
};

struct CuspClass {
  int index;
  std::vector<TetVertex> members;  // sorted
};

/// Edge cycles in canonical order: first unvisited (tet, edge) in
/// lexicographic order starts each cycle, and it leaves through the face of
/// the smaller vertex not on the edge.
std::vector<EdgeClass> edge_classes(const Triangulation& t);
/// Vertex orbits, numbered by their smallest member.
std::vector<CuspClass> cusp_classes(const Triangulation& t);
/// Cusp index of every (tet, vertex), as [tet][vertex].
std::vector<std::array<int, 4>> cusp_index(const Triangulation& t);

struct CurveStep {
  int tet;
  int vertex;
  Corner corner;
  int sign;  // +1 when the corner is on the left of the curve
};

/// Closed curve on a cusp torus, recorded as the corners it cuts.
struct CuspCurve {
  int cusp;
  std::string name;
  std::vector<CurveStep> steps;
};

/// Format:
///   curve <cusp> <name>
///     step <tet> <vertex> <z|v|w> <+|->
std::vector<CuspCurve> parse_cusp_curves(std::string_view text, const Triangulation& t);
std::string to_text(std::span<const CuspCurve> curves);

}  // namespace hyperbolic
