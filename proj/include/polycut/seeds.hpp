#pragma once

#include <string>

#include "polycut/geom.hpp"

namespace polycut {

enum class Chirality { Left, Right };

// A seed together with the regular tetrahedron it is 4-face embedded in.
// Both are centered at the origin with the tetrahedron's faces pointing along
// (-1,-1,-1), (-1,1,1), (1,-1,1), (1,1,-1).
struct EmbeddedSeed {
  Polyhedron solid;
  Polyhedron host;
};

struct SeedName {
  enum class Kind { T, C, O, D, I, Prism, Antiprism };
  Kind kind = Kind::T;
  int n = 0;  // sides of the base polygon, prisms and antiprisms only

  std::string str() const;
};

inline constexpr double kGolden = 1.6180339887498948482;

// Regular tetrahedron with vertices along (1,1,1), (1,-1,-1), (-1,1,-1),
// (-1,-1,1).
Polyhedron tetrahedron(double edge = 1.0);

// Unit-edge octahedron at the edge midpoints of a tetrahedron of edge 2.
EmbeddedSeed octahedron_in_T();

// Unit-edge icosahedron with its vertices on the octahedron's edges, each
// edge split in golden ratio. Left puts (0, a, b), a < b, and its cyclic
// shifts at the vertices; Right is the mirror image.
EmbeddedSeed icosahedron_in_T(Chirality chirality = Chirality::Left);

Polyhedron cube();
Polyhedron dodecahedron();
Polyhedron prism(int n);
Polyhedron antiprism(int n);

Polyhedron build_seed(const SeedName &name);

}  // namespace polycut
