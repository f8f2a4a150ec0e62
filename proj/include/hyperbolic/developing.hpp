#pragma once

#include <array>
#include <vector>

#include "hyperbolic/extended_complex.hpp"
#include "hyperbolic/shapes.hpp"
#include "hyperbolic/triangulation.hpp"

namespace hyperbolic {

/// Ideal vertices of one tetrahedron on the boundary of upper half-space.
struct DevelopedTetrahedron {
  std::array<Point, 4> coords;
};

struct TreeEdge {
  int tet;   // already placed
  int face;  // face crossed to reach the child
  int child;
};

struct DevelopingMap {
  int anchor = 0;
  std::vector<DevelopedTetrahedron> tetrahedra;  // indexed by tet
  std::vector<int> order;                        // breadth-first placement order
  std::vector<TreeEdge> tree;                    // spanning tree of the face graph
};

/// (0, inf, z, 1) for the shape z of `tet`. Throws GeometryError unless
/// Im z > 0.
DevelopedTetrahedron normalize_anchor(int tet, const ShapeAssignment& s);

/// Places the tetrahedron glued to face `face` of `tet`, given the placement
/// of `tet`: the three shared vertices are copied through the gluing and the
/// fourth follows from the neighbour's shape.
DevelopedTetrahedron place_neighbor(const Triangulation& t, const ShapeAssignment& s, int tet,
                                    int face, const DevelopedTetrahedron& placed);

/// Breadth-first development from `anchor`, faces visited in index order.
/// Afterwards each edge class is walked once around its edge; if the walk
/// does not return to the starting coordinates within tol the shapes do not
/// solve the edge equations and GeometryError is thrown.
DevelopingMap develop(const Triangulation& t, const ShapeAssignment& s, int anchor,
                      double tol = 1e-9);

}  // namespace hyperbolic
