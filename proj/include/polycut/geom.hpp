#pragma once

#include <span>
#include <string>
#include <vector>

#include "polycut/errors.hpp"
#include "polycut/tolerance.hpp"
#include "polycut/vec3.hpp"

namespace polycut {

// Halfspace {x : dot(normal, x) <= offset}. The normal is unit length and
// points out of the kept region.
struct Plane {
  Vec3 normal;
  double offset = 0.0;

  static Plane through(const Vec3 &unit_normal, const Vec3 &point) {
    return {unit_normal, dot(unit_normal, point)};
  }

  double signed_distance(const Vec3 &p) const { return dot(normal, p) - offset; }
};

using Face = std::vector<int>;

struct Edge {
  int a = 0, b = 0;  // a < b
  int left = -1;     // face traversing a -> b
  int right = -1;    // face traversing b -> a
};

// Convex solid. Faces are counterclockwise seen from outside and carry their
// outward supporting planes. Produced by canonicalize(); the constructor
// trusts its inputs.
class Polyhedron {
 public:
  Polyhedron() = default;
  Polyhedron(std::vector<Vec3> vertices, std::vector<Face> faces, std::vector<Plane> planes);

  const std::vector<Vec3> &vertices() const { return vertices_; }
  const std::vector<Face> &faces() const { return faces_; }
  const std::vector<Plane> &planes() const { return planes_; }
  const std::vector<Edge> &edges() const { return edges_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  // Vertices adjacent to v, in no particular order.
  std::vector<int> neighbors(int v) const;

  // True when every undirected edge was seen exactly once in each direction.
  bool closed() const { return closed_; }

 private:
  std::vector<Vec3> vertices_;
  std::vector<Face> faces_;
  std::vector<Plane> planes_;
  std::vector<Edge> edges_;
  bool closed_ = false;
};

// Welds vertices, merges coplanar faces, drops collinear and unused vertices,
// orients faces outward and re-fits every plane by least squares. Raw faces
// may be given in any vertex order.
Polyhedron canonicalize(std::span<const Vec3> vertices, std::span<const Face> raw_faces,
                        const Tolerance &tol = {});

// p intersected with the halfspace h.
Polyhedron clip(const Polyhedron &p, const Plane &h, const Tolerance &tol = {});

// Interior dihedral angle between faces with outward normals n1, n2:
// pi - arccos(n1 . n2).
double dihedral_between(const Vec3 &n1, const Vec3 &n2);

// Common distance from the vertex centroid to the edge midpoints.
double midsphere_radius(const Polyhedron &p, const Tolerance &tol = {});

double volume(const Polyhedron &p);
Vec3 centroid(const Polyhedron &p);
double face_area(const Polyhedron &p, int face);
double edge_length(const Polyhedron &p, const Edge &e);

// Empty string if p satisfies the structural invariants; otherwise the first
// violation found.
std::string check_invariants(const Polyhedron &p, const Tolerance &tol = {});

// Image of p under x -> m * x + shift. Orientation-reversing m reverses face
// winding so faces stay counterclockwise from outside.
Polyhedron transformed(const Polyhedron &p, const Mat3 &m, const Vec3 &shift = {});
Polyhedron scaled(const Polyhedron &p, double factor);

// Polyhedron from counterclockwise faces, planes fitted per face. No welding
// or validation.
Polyhedron assemble(std::vector<Vec3> vertices, std::vector<Face> faces);

// Least-squares plane through points, normal sign unspecified.
Plane fit_plane(std::span<const Vec3> points);

}  // namespace polycut
