#include "polycut/seeds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polycut {

namespace {

// Faces of the hull of a small point set by testing every vertex triple.
// Only used for the fixed seed coordinates.
Polyhedron hull_of(const std::vector<Vec3> &pts) {
  const Tolerance tol;
  std::vector<Face> raw;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Vec3 normal = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (norm(normal) < 1e-9) continue;
        const Plane pl = Plane::through(normalized(normal), pts[i]);
        bool below = false, above = false;
        Face face;
        for (int m = 0; m < n; ++m) {
          const double s = pl.signed_distance(pts[m]);
          if (s > tol.coplanar) above = true;
          else if (s < -tol.coplanar) below = true;
          else face.push_back(m);
        }
        if (!(above && below)) raw.push_back(std::move(face));
      }
    }
  }
  return canonicalize(pts, raw, tol);
}

std::vector<Vec3> cyclic_shifts(const std::vector<Vec3> &pts) {
  std::vector<Vec3> out;
  for (const Vec3 &p : pts) {
    out.push_back(p);
    out.push_back({p.z, p.x, p.y});
    out.push_back({p.y, p.z, p.x});
  }
  return out;
}

std::vector<Vec3> sign_patterns(double a, double b) {
  return {{0, a, b}, {0, -a, b}, {0, a, -b}, {0, -a, -b}};
}

}  // namespace

std::string SeedName::str() const {
  switch (kind) {
    case Kind::T: return "T";
    case Kind::C: return "C";
    case Kind::O: return "O";
    case Kind::D: return "D";
    case Kind::I: return "I";
    case Kind::Prism: return "P" + std::to_string(n);
    case Kind::Antiprism: return "A" + std::to_string(n);
  }
  return "?";
}

Polyhedron tetrahedron(double edge) {
  const double s = edge / (2.0 * std::numbers::sqrt2);
  const std::vector<Vec3> vs = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
  const std::vector<Face> faces = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  return canonicalize(vs, faces);
}

EmbeddedSeed octahedron_in_T() {
  const double r = 1.0 / std::numbers::sqrt2;
  std::vector<Vec3> vs = {{r, 0, 0}, {-r, 0, 0}, {0, r, 0}, {0, -r, 0}, {0, 0, r}, {0, 0, -r}};
  return {hull_of(vs), tetrahedron(2.0)};
}

EmbeddedSeed icosahedron_in_T(Chirality chirality) {
  // On the octahedron of circumradius 1 the golden split lands at (0, 1/phi^2, 1/phi);
  // the icosahedron there has edge 2/phi^2, so scale everything by phi^2/2.
  const double phi2 = kGolden * kGolden;
  const double scale = phi2 / 2.0;
  double a = scale / phi2;
  double b = scale / kGolden;
  if (chirality == Chirality::Right) std::swap(a, b);
  return {hull_of(cyclic_shifts(sign_patterns(a, b))), tetrahedron(phi2 * std::numbers::sqrt2)};
}

Polyhedron cube() {
  std::vector<Vec3> vs;
  for (int i = 0; i < 8; ++i) {
    vs.push_back({(i & 1) ? 0.5 : -0.5, (i & 2) ? 0.5 : -0.5, (i & 4) ? 0.5 : -0.5});
  }
  return hull_of(vs);
}

Polyhedron dodecahedron() {
  // (+-1,+-1,+-1) and cyclic shifts of (0, +-1/phi, +-phi) have edge 2/phi.
  const double s = kGolden / 2.0;
  std::vector<Vec3> vs = cyclic_shifts(sign_patterns(s / kGolden, s * kGolden));
  for (int i = 0; i < 8; ++i) {
    vs.push_back({(i & 1) ? s : -s, (i & 2) ? s : -s, (i & 4) ? s : -s});
  }
  return hull_of(vs);
}

Polyhedron prism(int n) {
  if (n < 3) throw std::invalid_argument("prism needs n >= 3");
  const double radius = 0.5 / std::sin(std::numbers::pi / n);
  std::vector<Vec3> vs;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * i / n;
    vs.push_back({radius * std::cos(t), radius * std::sin(t), -0.5});
  }
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * i / n;
    vs.push_back({radius * std::cos(t), radius * std::sin(t), 0.5});
  }
  std::vector<Face> faces(2);
  for (int i = 0; i < n; ++i) {
    faces[0].push_back(i);
    faces[1].push_back(n + i);
    faces.push_back({i, (i + 1) % n, n + (i + 1) % n, n + i});
  }
  return canonicalize(vs, faces);
}

Polyhedron antiprism(int n) {
  if (n < 3) throw std::invalid_argument("antiprism needs n >= 3");
  const double step = std::numbers::pi / n;
  const double radius = 0.5 / std::sin(step);
  // Height that makes the side triangles equilateral with unit edge.
  const double horizontal2 = 2.0 * radius * radius * (1.0 - std::cos(step));
  const double half = 0.5 * std::sqrt(1.0 - horizontal2);
  std::vector<Vec3> vs;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * step * i;
    vs.push_back({radius * std::cos(t), radius * std::sin(t), -half});
  }
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * step * i + step;
    vs.push_back({radius * std::cos(t), radius * std::sin(t), half});
  }
  std::vector<Face> faces(2);
  for (int i = 0; i < n; ++i) {
    const int next = (i + 1) % n;
    faces[0].push_back(i);
    faces[1].push_back(n + i);
    faces.push_back({i, next, n + i});
    faces.push_back({next, n + next, n + i});
  }
  return canonicalize(vs, faces);
}

Polyhedron build_seed(const SeedName &name) {
  switch (name.kind) {
    case SeedName::Kind::T: return tetrahedron();
    case SeedName::Kind::C: return cube();
    case SeedName::Kind::O: return octahedron_in_T().solid;
    case SeedName::Kind::D: return dodecahedron();
    case SeedName::Kind::I: return icosahedron_in_T().solid;
    case SeedName::Kind::Prism: return prism(name.n);
    case SeedName::Kind::Antiprism: return antiprism(name.n);
  }
  throw std::invalid_argument("unknown seed");
}

}  // namespace polycut
