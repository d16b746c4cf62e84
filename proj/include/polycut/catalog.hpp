#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polycut/geom.hpp"
#include "polycut/seeds.hpp"

namespace polycut {

struct SolidName {
  enum class Kind { T, C, O, D, I, tT, tC, tO, tD, tI, CO, ID, eO, eI, tCO, tID, sC, sD, Prism, Antiprism };
  Kind kind = Kind::T;
  int n = 0;  // Prism / Antiprism only

  std::string str() const;
  bool embeds_in_tetrahedron() const;  // O, I and the thirteen Archimedean solids
  bool operator==(const SolidName &) const = default;
};

// Accepts "tCO", "P6", "A12", ... Throws InvalidName.
SolidName parse_solid_name(std::string_view text);

// O, I, then the thirteen Archimedean solids.
std::vector<SolidName> embeddable_solids();

struct Signature {
  int vertices = 0, edges = 0, faces = 0;
  std::map<int, int> face_census;  // polygon size -> count

  bool operator==(const Signature &) const = default;
};

Signature signature(const Polyhedron &p);
std::string to_string(const Signature &s);

// Frozen expectation for every name.
Signature expected_signature(const SolidName &name);

// The unit-edge regular tetrahedron every embeddable solid is built inside.
Polyhedron host_tetrahedron();

// Embeddable solids come back inside host_tetrahedron(); C, D, prisms and
// antiprisms are unit-edge and origin-centered.
Polyhedron build(const SolidName &name);

// Vertex-truncation depths that pass beyond the edge midpoint.
double truncated_cube_depth();         // (2 + sqrt2) / (3 + 2 sqrt2)
double truncated_dodecahedron_depth();  // (2 + phi) / (3 + 2 phi)

}  // namespace polycut
