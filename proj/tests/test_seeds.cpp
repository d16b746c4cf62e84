#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polycut/catalog.hpp"
#include "polycut/seeds.hpp"
#include "polycut/verify.hpp"

using namespace polycut;

namespace {

void check_unit_edges(const Polyhedron &p, double tol) {
  for (const Edge &e : p.edges()) CHECK(edge_length(p, e) == doctest::Approx(1.0).epsilon(tol));
}

void check_circumsphere(const Polyhedron &p) {
  const double r = norm(p.vertices().front());
  for (const Vec3 &v : p.vertices()) CHECK(norm(v) == doctest::Approx(r).epsilon(1e-14));
}

}  // namespace

TEST_CASE("tetrahedron") {
  const Polyhedron t = tetrahedron();
  CHECK(t.num_vertices() == 4);
  CHECK(t.num_faces() == 4);
  check_unit_edges(t, 1e-15);
  check_circumsphere(t);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      CHECK(dihedral_between(t.planes()[i].normal, t.planes()[j].normal) ==
            doctest::Approx(std::acos(1.0 / 3.0)).epsilon(1e-14));
    }
    // Outward normals are the odd-sign diagonals.
    const Vec3 n = t.planes()[i].normal * std::sqrt(3.0);
    CHECK(std::abs(n.x * n.y * n.z + 1.0) < 1e-12);
  }
}

TEST_CASE("octahedron in T") {
  const EmbeddedSeed o = octahedron_in_T();
  CHECK(signature(o.solid) == Signature{6, 12, 8, {{3, 8}}});
  check_unit_edges(o.solid, 1e-15);
  check_circumsphere(o.solid);
  CHECK(k_face_embedding(o.solid, o.host).k == 4);
  CHECK(shared_face_normals(o.solid, o.host) == 4);
  for (const Edge &e : o.solid.edges()) {
    CHECK(dihedral_between(o.solid.planes()[e.left].normal, o.solid.planes()[e.right].normal) ==
          doctest::Approx(std::acos(-1.0 / 3.0)).epsilon(1e-14));
  }
  // Vertices sit at the host's edge midpoints.
  for (const Edge &e : o.host.edges()) {
    const Vec3 mid = (o.host.vertices()[e.a] + o.host.vertices()[e.b]) * 0.5;
    bool found = false;
    for (const Vec3 &v : o.solid.vertices()) found = found || distance(v, mid) < 1e-15;
    CHECK(found);
  }
}

TEST_CASE("icosahedron in T") {
  for (Chirality c : {Chirality::Left, Chirality::Right}) {
    const EmbeddedSeed i = icosahedron_in_T(c);
    CHECK(signature(i.solid) == Signature{12, 30, 20, {{3, 20}}});
    CHECK(edge_spread(i.solid) < 1e-12);
    check_unit_edges(i.solid, 1e-12);
    check_circumsphere(i.solid);
    CHECK(k_face_embedding(i.solid, i.host).k == 4);

    // Brute-force dihedral from constructed normals.
    const Edge &e = i.solid.edges().front();
    const double dihedral = dihedral_between(i.solid.planes()[e.left].normal, i.solid.planes()[e.right].normal);
    CHECK(dihedral == doctest::Approx(std::acos(-std::sqrt(5.0) / 3.0)).epsilon(1e-13));
    CHECK(dihedral == doctest::Approx(2.411865).epsilon(1e-6));

    // Eight faces lie in the planes of the octahedron of circumradius phi^2/2.
    const double octa_offset = kGolden * kGolden / 2.0 / std::sqrt(3.0);
    int in_octa = 0;
    for (const Plane &pl : i.solid.planes()) {
      const Vec3 n = pl.normal * std::sqrt(3.0);
      if (std::abs(std::abs(n.x) - 1) < 1e-12 && std::abs(std::abs(n.y) - 1) < 1e-12 &&
          std::abs(pl.offset - octa_offset) < 1e-12) {
        ++in_octa;
      }
    }
    CHECK(in_octa == 8);
  }
  // The icosahedron is achiral, so both placements are the same solid.
  CHECK(congruent(icosahedron_in_T(Chirality::Left).solid, icosahedron_in_T(Chirality::Right).solid));
}

TEST_CASE("embedded seeds lie inside their host") {
  for (const EmbeddedSeed &s : {octahedron_in_T(), icosahedron_in_T()}) {
    CHECK(contains(s.host, s.solid));
    for (const Vec3 &v : s.solid.vertices()) {
      for (const Plane &pl : s.host.planes()) CHECK(pl.signed_distance(v) <= 1e-12);
    }
  }
}

TEST_CASE("cube, dodecahedron, prisms, antiprisms") {
  SUBCASE("prism(4) is a unit cube") {
    const Polyhedron p = prism(4);
    CHECK(signature(p).face_census == std::map<int, int>{{4, 6}});
    CHECK(congruent(p, cube()));
    check_unit_edges(p, 1e-14);
  }
  SUBCASE("antiprism(3) is congruent to the octahedron") {
    CHECK(congruent(antiprism(3), octahedron_in_T().solid));
  }
  SUBCASE("prism(6)") {
    const Polyhedron p = prism(6);
    CHECK(p.num_vertices() == 12);
    CHECK(p.num_faces() == 8);
    CHECK(is_uniform(p));
  }
  SUBCASE("dodecahedron") {
    const Polyhedron d = dodecahedron();
    CHECK(signature(d) == Signature{20, 30, 12, {{5, 12}}});
    check_unit_edges(d, 1e-14);
  }
  SUBCASE("n < 3 is rejected") {
    CHECK_THROWS(prism(2));
    CHECK_THROWS(antiprism(2));
  }
}

TEST_CASE("every seed is uniform and circumscribed about the origin") {
  std::vector<Polyhedron> seeds = {tetrahedron(), cube(), octahedron_in_T().solid, dodecahedron(),
                                   icosahedron_in_T().solid};
  for (int n = 3; n <= 12; ++n) {
    seeds.push_back(prism(n));
    seeds.push_back(antiprism(n));
  }
  for (const Polyhedron &p : seeds) {
    CHECK(is_uniform(p));
    check_circumsphere(p);
    CHECK(check_invariants(p).empty());
  }
}
