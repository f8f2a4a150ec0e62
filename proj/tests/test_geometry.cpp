#include <doctest.h>

#include <numbers>

#include "hyperbolic/developing.hpp"
#include "hyperbolic/error.hpp"
#include "hyperbolic/holonomy.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace hyperbolic;
using testing::cd;

namespace {

bool near(const Point& a, const Point& b, double tol = 1e-9) { return approx_equal(a, b, tol); }

DevelopingMap borromean_map(int anchor = 3) {
  const auto bor = testing::load("borromean");
  return develop(bor.t, testing::borromean::solution_assignment(), anchor);
}

}  // namespace

TEST_CASE("Moebius action") {
  const Moebius m(2.0, 1.0, 0.0, 1.0);  // z -> 2z + 1, rescaled
  CHECK(near(m(Point(cd(1, 1))), Point(cd(3, 2))));
  CHECK(m(Point::infinity()).is_infinite());
  CHECK(std::abs(m.matrix().determinant() - 1.0) < 1e-14);

  const Moebius inv(0.0, 1.0, 1.0, 0.0);  // z -> 1/z
  CHECK(inv(Point(0.0)).is_infinite());
  CHECK(near(inv(Point::infinity()), Point(0.0)));
  CHECK(near(inv(Point(cd(0, 2))), Point(cd(0, -0.5))));

  const Moebius g(cd(1, 1), 2.0, 3.0, cd(0, -1));
  CHECK(distance_from_identity(g * g.inverse()) < 1e-14);
  CHECK(g(Point(-g.d() / g.c())).is_infinite());
  CHECK(near(g(Point::infinity()), Point(g.a() / g.c())));

  CHECK_THROWS_AS(Moebius(1.0, 2.0, 2.0, 4.0), GeometryError);
}

TEST_CASE("Moebius composition is a homomorphism") {
  CHECK(testing::moebius_homomorphism_error(2000, 17) < 1e-9);
}

TEST_CASE("PSL distance ignores sign") {
  const Moebius g(cd(1, 1), 2.0, 3.0, cd(0, -1));
  Moebius::Matrix neg = -g.matrix();
  CHECK(psl_distance(g, Moebius(neg)) < 1e-15);
  CHECK(psl_equal(g, g, 0.0));
}

TEST_CASE("triple maps") {
  const std::array<Point, 3> src{Point(cd(1, 2)), Point(0.0), Point::infinity()};
  const std::array<Point, 3> dst{Point(cd(-1, 0)), Point(cd(3, 1)), Point(cd(0, 1))};
  const auto m = face_pairing(src, dst);
  for (int k = 0; k < 3; ++k) CHECK(near(m(src[k]), dst[k]));
  const auto n = triple_to_normal(src[0], src[1], src[2]);
  CHECK(n(src[0]).is_infinite());
  CHECK(near(n(src[1]), Point(0.0)));
  CHECK(near(n(src[2]), Point(1.0)));
  CHECK_THROWS_AS(triple_to_normal(src[0], src[0], src[2]), GeometryError);
}

TEST_CASE("anchor normalization") {
  const auto s = testing::borromean::solution_assignment();
  const auto d = normalize_anchor(3, s);
  CHECK(near(d.coords[0], Point(0.0)));
  CHECK(d.coords[1].is_infinite());
  CHECK(near(d.coords[2], Point(cd(0, 1))));
  CHECK(near(d.coords[3], Point(1.0)));
  CHECK_THROWS_AS(normalize_anchor(8, s), GeometryError);
}

TEST_CASE("development reproduces the reference table") {
  const auto dm = borromean_map(3);
  CHECK(dm.order.front() == 3);
  CHECK(dm.order.size() == 8);
  CHECK(dm.tree.size() == 7);
  for (const auto& row : testing::borromean::table())
    for (int v = 0; v < 4; ++v) {
      CAPTURE(row.tet);
      CAPTURE(v);
      CHECK(near(dm.tetrahedra[row.tet].coords[v], row.coords[v]));
    }
}

TEST_CASE("developed tetrahedra have their shapes") {
  const auto s = testing::borromean::solution_assignment();
  for (int anchor = 0; anchor < 8; ++anchor) {
    const auto dm = borromean_map(anchor);
    for (int t = 0; t < 8; ++t)
      CHECK(std::abs(tetra_shape_from_vertices(dm.tetrahedra[t].coords) - s.z(t)) < 1e-9);
  }
}

TEST_CASE("tree gluings carry shared vertices") {
  const auto bor = testing::load("borromean");
  const auto dm = borromean_map(0);
  for (const auto& e : dm.tree) {
    const auto& g = bor.t.neighbor(e.tet, e.face);
    CHECK(g.tet == e.child);
    for (int v = 0; v < 4; ++v) {
      if (v == e.face) continue;
      CHECK(near(dm.tetrahedra[e.tet].coords[v], dm.tetrahedra[e.child].coords[g.perm[v]]));
    }
  }
}

TEST_CASE("place_neighbor agrees with a direct cross-ratio") {
  const auto bor = testing::load("borromean");
  const auto s = testing::borromean::solution_assignment();
  const auto anchor = normalize_anchor(3, s);
  for (int f = 0; f < 4; ++f) {
    const auto& g = bor.t.neighbor(3, f);
    const auto placed = place_neighbor(bor.t, s, 3, f, anchor);
    CHECK(std::abs(tetra_shape_from_vertices(placed.coords) - s.z(g.tet)) < 1e-9);
  }
}

TEST_CASE("wrong shapes fail the propagation check") {
  const auto bor = testing::load("borromean");
  const auto bad = ShapeAssignment::uniform(8, cd(0, 1));
  CHECK_THROWS_WITH_AS(develop(bor.t, bad, 0), doctest::Contains("inconsistent propagation"), GeometryError);
  CHECK_THROWS_AS(develop(bor.t, ShapeAssignment::uniform(8, cd(0, -1)), 0), GeometryError);
}

TEST_CASE("figure-eight development") {
  const auto fig = testing::load("figure8");
  const auto s = ShapeAssignment::uniform(2, std::polar(1.0, std::numbers::pi / 3));
  const auto dm = develop(fig.t, s, 0);
  CHECK(dm.order == std::vector<int>{0, 1});
}

TEST_CASE("face pairings match the reference matrices") {
  const auto bor = testing::load("borromean");
  const auto dm = borromean_map(3);
  for (const auto& ref : testing::borromean::pairings()) {
    CAPTURE(ref.name);
    const auto fp = face_pairing(bor.t, dm, ref.tet, ref.face);
    CHECK(fp.label() == ref.label);
    CHECK(psl_distance(fp.map, Moebius(ref.matrix)) < 1e-9);
  }
}

TEST_CASE("face pairings send faces onto glued faces") {
  const auto bor = testing::load("borromean");
  const auto dm = borromean_map(3);
  const auto all = face_pairings(bor.t, dm);
  CHECK(all.size() == 16);
  for (const auto& fp : all)
    for (int k = 0; k < 3; ++k)
      CHECK(near(fp.map(dm.tetrahedra[fp.tet].coords[fp.source[k]]),
                 dm.tetrahedra[fp.other_tet].coords[fp.target[k]]));
}

TEST_CASE("holonomy relations and meridians") {
  const auto bor = testing::load("borromean");
  const auto dm = borromean_map(3);
  const auto words = parse_holonomy_words(testing::read_fixture("borromean.words"), bor.t);
  CHECK(words.pairings.size() == 7);
  CHECK(words.meridians.size() == 3);
  CHECK(words.relations.size() == 3);
  const auto rep = holonomy(bor.t, dm, words);
  for (const auto& rel : rep.relations) CHECK(rel.residual < 1e-9);
  for (const auto& m : rep.meridians) {
    // Parabolic: trace +-2, not the identity.
    CHECK(std::abs(std::abs(m.map.a() + m.map.d()) - 2.0) < 1e-9);
    CHECK(distance_from_identity(m.map) > 0.5);
  }
  // The meridian word of cusp 0 is the single pairing g34.
  CHECK(psl_distance(rep.meridians[0].map, Moebius(testing::borromean::mat(cd(0, 2), 1.0, 1.0, 0.0))) < 1e-9);
}

TEST_CASE("relations evaluated from the reference matrices") {
  MoebiusAssignment refs;
  for (const auto& p : testing::borromean::pairings()) refs.emplace(p.name, Moebius(p.matrix));
  const auto words = parse_holonomy_words(testing::read_fixture("borromean.words"),
                                          testing::load("borromean").t);
  for (double r : verify_relations(words.relations, refs)) CHECK(r < 1e-12);
  CHECK_THROWS_WITH_AS(evaluate(GroupWord::parse("g34 q"), refs), doctest::Contains("unassigned"),
                       ValidationError);
}

TEST_CASE("holonomy word file errors") {
  const auto t = testing::load("borromean").t;
  CHECK_THROWS_AS(parse_holonomy_words("pairing g 9 1\n", t), ParseError);
  CHECK_THROWS_AS(parse_holonomy_words("pairing g 0 7\n", t), ParseError);
  CHECK_THROWS_AS(parse_holonomy_words("frobnicate\n", t), ParseError);
  try {
    parse_holonomy_words("pairing a 0 1\nrelation a a^-\n", t);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("pairing product identity") {
  const auto bor = testing::load("borromean");
  const auto dm = borromean_map(3);
  const auto g16 = face_pairing(bor.t, dm, 1, 3).map;
  const auto g27 = face_pairing(bor.t, dm, 2, 3).map;
  const auto g05 = face_pairing(bor.t, dm, 0, 2).map;
  CHECK(psl_distance(g16 * g27.inverse(), g05.inverse()) < 1e-9);
}
