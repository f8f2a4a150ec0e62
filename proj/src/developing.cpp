#include "hyperbolic/developing.hpp"

#include <deque>

#include "hyperbolic/error.hpp"
#include "hyperbolic/moebius.hpp"

namespace hyperbolic {

namespace {

std::array<Point, 4> normal_position(std::complex<double> z) {
  return {Point(0.0), Point::infinity(), Point(z), Point(1.0)};
}

}  // namespace

DevelopedTetrahedron normalize_anchor(int tet, const ShapeAssignment& s) {
  if (tet < 0 || tet >= s.size())
    throw GeometryError("anchor tet " + std::to_string(tet) + " out of range");
  if (!(s.z(tet).imag() > 0.0))
    throw GeometryError("anchor tet " + std::to_string(tet) + " has a non-geometric shape");
  return {normal_position(s.z(tet))};
}

DevelopedTetrahedron place_neighbor(const Triangulation& t, const ShapeAssignment& s, int tet,
                                    int face, const DevelopedTetrahedron& placed) {
  const FaceGluing& g = t.neighbor(tet, face);
  const auto normal = normal_position(s.z(g.tet));

  DevelopedTetrahedron out;
  std::array<Point, 3> src, dst;
  int k = 0;
  for (int v = 0; v < 4; ++v) {
    if (v == face) continue;
    const int image = g.perm[v];
    out.coords[image] = placed.coords[v];
    src[k] = normal[image];
    dst[k] = placed.coords[v];
    ++k;
  }
  out.coords[g.face] = face_pairing(src, dst)(normal[g.face]);
  return out;
}

DevelopingMap develop(const Triangulation& t, const ShapeAssignment& s, int anchor, double tol) {
  if (s.size() != t.size()) throw GeometryError("shape count does not match tetrahedron count");
  if (!s.geometric()) throw GeometryError("cannot develop non-geometric shapes");

  DevelopingMap dm;
  dm.anchor = anchor;
  dm.tetrahedra.resize(t.size());
  std::vector<bool> placed(t.size(), false);

  dm.tetrahedra[anchor] = normalize_anchor(anchor, s);
  placed[anchor] = true;
  dm.order.push_back(anchor);
  std::deque<int> queue{anchor};
  while (!queue.empty()) {
    const int tet = queue.front();
    queue.pop_front();
    for (int face = 0; face < 4; ++face) {
      const int next = t.neighbor(tet, face).tet;
      if (placed[next]) continue;
      dm.tetrahedra[next] = place_neighbor(t, s, tet, face, dm.tetrahedra[tet]);
      placed[next] = true;
      dm.order.push_back(next);
      dm.tree.push_back({tet, face, next});
      queue.push_back(next);
    }
  }
  for (int tet = 0; tet < t.size(); ++tet)
    if (!placed[tet])
      throw GeometryError("tet " + std::to_string(tet) + " is not connected to the anchor");

  for (const EdgeClass& cls : edge_classes(t)) {
    const int start = cls.members.front().tet;
    DevelopedTetrahedron current = dm.tetrahedra[start];
    for (const EdgeMember& m : cls.members) current = place_neighbor(t, s, m.tet, m.exit_face, current);
    for (int v = 0; v < 4; ++v)
      if (!approx_equal(current.coords[v], dm.tetrahedra[start].coords[v], tol))
        throw GeometryError("inconsistent propagation around the edge class through tet " +
                            std::to_string(start));
  }
  return dm;
}

}  // namespace hyperbolic
