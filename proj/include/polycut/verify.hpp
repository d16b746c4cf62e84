#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycut/geom.hpp"

namespace polycut {

struct Regularity {
  double edge_deviation = 0.0;   // max |side - mean side| over all faces
  double angle_deviation = 0.0;  // max |interior angle - (n-2)pi/n|, radians
};

Regularity face_regularity(const Polyhedron &p);

// Longest edge minus shortest edge.
double edge_spread(const Polyhedron &p);

// Orthogonal map about the vertex centroids taking vertex `from` of `a` to
// vertex `to` of `b` and the vertex set of `a` onto that of `b`, if any.
// Candidates come from local frames: vertex direction plus one incident edge,
// both handedness.
std::optional<Mat3> find_isometry(const Polyhedron &a, int from, const Polyhedron &b, int to,
                                  double tol);

bool vertex_transitive(const Polyhedron &p, const Tolerance &tol = {});

// Same shape and size up to a rigid motion (reflections allowed).
bool congruent(const Polyhedron &a, const Polyhedron &b, const Tolerance &tol = {});

bool is_uniform(const Polyhedron &p, const Tolerance &tol = {});

struct EmbeddingResult {
  int k = 0;                   // faces of the inner solid lying in faces of the outer one
  bool extra_contact = false;  // some other vertex also touches the outer boundary
};

// Throws NotContained or NotProperSubset.
EmbeddingResult k_face_embedding(const Polyhedron &inner, const Polyhedron &outer,
                                 const Tolerance &tol = {});

// Sorted, deduplicated at the given tolerance.
struct AngleSet {
  std::vector<double> angles;
};

// Dihedral angle over every unordered face pair; antiparallel pairs are
// reported as pi.
AngleSet face_pair_angles(const Polyhedron &p, double tol = Tolerance{}.verify);

// Smallest achievable max |n_i . n_j + 1/3| over 4-subsets of face normals.
double tetrahedral_quadruple_margin(const Polyhedron &p);

bool has_tetrahedral_quadruple(const Polyhedron &p, double tol = Tolerance{}.verify);

int shared_face_normals(const Polyhedron &a, const Polyhedron &b, double tol = Tolerance{}.verify);

// Every vertex of b inside every face halfspace of a.
bool contains(const Polyhedron &a, const Polyhedron &b, double tol = Tolerance{}.coplanar);

struct VerifyReport {
  std::string solid_name;
  bool is_uniform = false;
  double max_edge_spread = 0.0;
  Regularity irregularity;
  std::optional<int> embedding_k;
  bool extra_contact = false;
  std::optional<bool> tetrahedral_quadruple;
  double quadruple_margin = 0.0;
  bool signature_ok = true;
  AngleSet dihedral_spectrum;
  std::string note;
  bool pass = false;
};

// Report for a solid that is expected to embed 4-face in `host`.
VerifyReport verify_embedding(const std::string &name, const Polyhedron &p, const Polyhedron &host,
                              const Tolerance &tol = {});

// Forward direction for O, I and the Archimedean builds, converse for C, D,
// prisms and antiprisms with 3 <= n <= nmax. Rows follow catalog order.
std::vector<VerifyReport> main_theorem_check(int nmax, const Tolerance &tol = {});

}  // namespace polycut
