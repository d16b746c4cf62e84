#pragma once

#include <array>
#include <vector>

#include "polycut/geom.hpp"
#include "polycut/seeds.hpp"

namespace polycut {

// Cut depths in units of the seed's edge length. r1 is the distance along
// each edge from a vertex to its cutting plane; r2 is the in-face
// perpendicular distance from an edge to its cutting line.
struct TruncationParams {
  double r1 = 0.0;
  double r2 = 0.0;

  bool valid() const { return r1 > 0.0 && r1 < 1.0 && r2 >= 0.0 && r2 < 0.5; }
};

// Edge lengths left behind on a triangular face after simultaneous cuts:
// l1 is shared with a vertex-cut face, l2 with an edge-cut face, and l3 is
// the edge-cut face's other side.
struct DerivedLengths {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
};

enum class VeMode { Expand, Omnitruncate };

struct SnubSpec {
  double alpha_deg = 90.0;  // interior angle of the polygon at a cut vertex
  double ratio = 0.0;       // longer:shorter split of every face edge
  Chirality chirality = Chirality::Left;
};

// The cubic r^3 - r^2 - r - 1 + 2 cos(alpha) whose root is the snub ratio.
double snub_cubic(double ratio, double alpha_deg);

// Root of snub_cubic in (1, 3).
double snub_ratio(double alpha_deg);

SnubSpec make_snub_spec(double alpha_deg, Chirality chirality = Chirality::Left);

// Plane perpendicular to vertex v's position vector through the points at
// fraction `alpha` along its incident edges.
Plane vertex_cut_plane(const Polyhedron &p, int v, double alpha);

// Points at fraction `alpha` along every edge incident to v.
std::vector<Vec3> vertex_cut_points(const Polyhedron &p, int v, double alpha);

Polyhedron vertex_truncate(const Polyhedron &p, double alpha, const Tolerance &tol = {});

// Plane through the two lines, one in each face adjacent to `edge`, running
// parallel to the edge at in-face distance `depth` (absolute length).
Plane edge_cut_plane(const Polyhedron &p, const Edge &edge, double depth);

// When `expect_regular` is set the output must have regular faces, otherwise
// InconsistentParams is thrown.
Polyhedron vertex_edge_truncate(const Polyhedron &p, const TruncationParams &params,
                                const Tolerance &tol = {}, bool expect_regular = false);

DerivedLengths derived_lengths(const TruncationParams &params, double dihedral);

// Expand: l1 = 0 and l2 = l3. Omnitruncate: l1 = l2 = l3.
TruncationParams solve_ve_params(double dihedral, VeMode mode);

// The rotated triangle cut out of each triangular face by the three cevians
// from the split points, in face order.
std::vector<std::array<Vec3, 3>> skew_triangles(const Polyhedron &p, double ratio, Chirality chirality);

Polyhedron skew_truncate(const Polyhedron &p, const SnubSpec &spec, const Tolerance &tol = {});

}  // namespace polycut
