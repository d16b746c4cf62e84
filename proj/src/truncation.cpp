#include "polycut/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polycut/verify.hpp"

namespace polycut {

namespace {

double mean_edge_length(const Polyhedron &p) {
  double sum = 0.0;
  for (const Edge &e : p.edges()) sum += edge_length(p, e);
  return sum / static_cast<double>(p.num_edges());
}

Polyhedron clip_all(Polyhedron p, const std::vector<Plane> &planes, const Tolerance &tol) {
  for (const Plane &h : planes) p = clip(p, h, tol);
  return p;
}

Vec3 face_centroid(const Polyhedron &p, int f) {
  Vec3 c;
  for (int id : p.faces()[f]) c += p.vertices()[id];
  return c / static_cast<double>(p.faces()[f].size());
}

// Intersection of two coplanar lines a + s*da and b + t*db.
Vec3 intersect_lines(const Vec3 &a, const Vec3 &da, const Vec3 &b, const Vec3 &db) {
  const Vec3 n = cross(da, db);
  const double s = dot(cross(b - a, db), n) / dot(n, n);
  return a + da * s;
}

}  // namespace

double snub_cubic(double ratio, double alpha_deg) {
  const double c = 2.0 * std::cos(alpha_deg * std::numbers::pi / 180.0);
  return ((ratio - 1.0) * ratio - 1.0) * ratio - 1.0 + c;
}

double snub_ratio(double alpha_deg) {
  double lo = 1.0, hi = 3.0;
  double f_lo = snub_cubic(lo, alpha_deg);
  const double f_hi = snub_cubic(hi, alpha_deg);
  if (!(f_lo < 0.0 && f_hi > 0.0) && !(f_lo > 0.0 && f_hi < 0.0)) {
    throw GeometryError(ErrorKind::NoRootInBracket, "snub cubic has no sign change on (1, 3)");
  }
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = snub_cubic(mid, alpha_deg);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  double r = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    const double f = snub_cubic(r, alpha_deg);
    const double df = (3.0 * r - 2.0) * r - 1.0;
    if (f == 0.0 || df == 0.0) break;
    r -= f / df;
  }
  return r;
}

SnubSpec make_snub_spec(double alpha_deg, Chirality chirality) {
  return {alpha_deg, snub_ratio(alpha_deg), chirality};
}

std::vector<Vec3> vertex_cut_points(const Polyhedron &p, int v, double alpha) {
  const Vec3 &apex = p.vertices()[v];
  std::vector<Vec3> pts;
  for (int w : p.neighbors(v)) pts.push_back(apex + (p.vertices()[w] - apex) * alpha);
  return pts;
}

Plane vertex_cut_plane(const Polyhedron &p, int v, double alpha) {
  const Vec3 normal = normalized(p.vertices()[v]);
  double offset = 0.0;
  const std::vector<Vec3> pts = vertex_cut_points(p, v, alpha);
  for (const Vec3 &q : pts) offset += dot(normal, q);
  return {normal, offset / static_cast<double>(pts.size())};
}

Polyhedron vertex_truncate(const Polyhedron &p, double alpha, const Tolerance &tol) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw GeometryError(ErrorKind::DepthOutOfRange, "vertex truncation depth must lie in (0, 1)");
  }
  std::vector<Plane> planes;
  for (int v = 0; v < static_cast<int>(p.num_vertices()); ++v) planes.push_back(vertex_cut_plane(p, v, alpha));
  return clip_all(p, planes, tol);
}

Plane edge_cut_plane(const Polyhedron &p, const Edge &edge, double depth) {
  const Vec3 &a = p.vertices()[edge.a];
  const Vec3 &b = p.vertices()[edge.b];
  const Vec3 dir = normalized(b - a);
  const Vec3 mid = (a + b) * 0.5;

  std::array<Vec3, 2> inner;
  Vec3 normal_sum;
  int slot = 0;
  for (int f : {edge.left, edge.right}) {
    const Vec3 &n = p.planes()[f].normal;
    Vec3 inward = cross(n, dir);
    if (dot(inward, face_centroid(p, f) - mid) < 0.0) inward = -inward;
    double reach = 0.0;
    for (int id : p.faces()[f]) reach = std::max(reach, dot(p.vertices()[id] - a, inward));
    if (depth < 0.0 || depth >= reach) {
      throw GeometryError(ErrorKind::DepthOutOfRange, "edge cut line leaves the face");
    }
    inner[slot++] = mid + inward * depth;
    normal_sum += n;
  }

  const Vec3 across = inner[1] - inner[0];
  Vec3 normal = norm(across) > 1e-12 ? normalized(cross(dir, across)) : normalized(normal_sum);
  if (dot(normal, normal_sum) < 0.0) normal = -normal;
  return Plane::through(normal, inner[0]);
}

Polyhedron vertex_edge_truncate(const Polyhedron &p, const TruncationParams &params, const Tolerance &tol,
                                bool expect_regular) {
  if (!params.valid()) {
    throw GeometryError(ErrorKind::DepthOutOfRange, "need r1 in (0, 1) and r2 in [0, 1/2)");
  }
  const double depth = params.r2 * mean_edge_length(p);
  std::vector<Plane> planes;
  for (int v = 0; v < static_cast<int>(p.num_vertices()); ++v) planes.push_back(vertex_cut_plane(p, v, params.r1));
  for (const Edge &e : p.edges()) planes.push_back(edge_cut_plane(p, e, depth));
  Polyhedron out = clip_all(p, planes, tol);
  if (expect_regular) {
    const Regularity reg = face_regularity(out);
    if (reg.edge_deviation > tol.verify || reg.angle_deviation > tol.verify) {
      throw GeometryError(ErrorKind::InconsistentParams, "cut faces are not regular");
    }
  }
  return out;
}

DerivedLengths derived_lengths(const TruncationParams &params, double dihedral) {
  const double sqrt3 = std::numbers::sqrt3;
  return {
      params.r1 - 4.0 / sqrt3 * params.r2,
      1.0 - 2.0 * params.r1 + 2.0 / sqrt3 * params.r2,
      params.r2 * std::numbers::sqrt2 * std::sqrt(1.0 - std::cos(dihedral)),
  };
}

TruncationParams solve_ve_params(double dihedral, VeMode mode) {
  const double sqrt3 = std::numbers::sqrt3;
  // l3 = chord * r2
  const double chord = std::numbers::sqrt2 * std::sqrt(1.0 - std::cos(dihedral));
  // Rows of a 2x2 system in (r1, r2).
  double a11, a12, b1, a21, a22, b2;
  if (mode == VeMode::Omnitruncate) {
    // l1 = l2:  3 r1 - 2 sqrt3 r2 = 1;  l1 = l3:  r1 - (4/sqrt3 + chord) r2 = 0
    a11 = 3.0, a12 = -2.0 * sqrt3, b1 = 1.0;
    a21 = 1.0, a22 = -(4.0 / sqrt3 + chord), b2 = 0.0;
  } else {
    // l1 = 0:  r1 - (4/sqrt3) r2 = 0;  l2 = l3:  2 r1 + (chord - 2/sqrt3) r2 = 1
    a11 = 1.0, a12 = -4.0 / sqrt3, b1 = 0.0;
    a21 = 2.0, a22 = chord - 2.0 / sqrt3, b2 = 1.0;
  }
  const double det = a11 * a22 - a12 * a21;
  if (std::abs(det) < 1e-12) throw GeometryError(ErrorKind::SingularSystem, "truncation system is singular");
  return {(b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det};
}

std::vector<std::array<Vec3, 3>> skew_triangles(const Polyhedron &p, double ratio, Chirality chirality) {
  const double t = ratio / (1.0 + ratio);
  std::vector<std::array<Vec3, 3>> out;
  for (const Face &face : p.faces()) {
    if (face.size() != 3) throw GeometryError(ErrorKind::DepthOutOfRange, "skew truncation needs triangular faces");
    std::array<Vec3, 3> c{p.vertices()[face[0]], p.vertices()[face[1]], p.vertices()[face[2]]};
    if (chirality == Chirality::Right) std::swap(c[1], c[2]);
    // Split point on edge c[i] -> c[i+1], joined to the opposite corner c[i+2].
    std::array<Vec3, 3> from, dir;
    for (int i = 0; i < 3; ++i) {
      const Vec3 split = c[i] + (c[(i + 1) % 3] - c[i]) * t;
      from[i] = c[(i + 2) % 3];
      dir[i] = split - from[i];
    }
    std::array<Vec3, 3> tri;
    for (int i = 0; i < 3; ++i) {
      tri[i] = intersect_lines(from[i], dir[i], from[(i + 1) % 3], dir[(i + 1) % 3]);
    }
    out.push_back(tri);
  }
  return out;
}

Polyhedron skew_truncate(const Polyhedron &p, const SnubSpec &spec, const Tolerance &tol) {
  const auto tris = skew_triangles(p, spec.ratio, spec.chirality);
  std::vector<Vec3> all;
  for (const auto &tri : tris) all.insert(all.end(), tri.begin(), tri.end());
  const Vec3 center = centroid(p);

  auto supporting = [&](const Plane &h) {
    return std::all_of(all.begin(), all.end(), [&](const Vec3 &q) { return h.signed_distance(q) <= tol.coplanar; });
  };

  std::vector<Plane> planes;
  auto add_unique = [&](const Plane &h) {
    for (const Plane &g : planes) {
      if (norm(g.normal - h.normal) <= tol.coplanar && std::abs(g.offset - h.offset) <= tol.coplanar) return;
    }
    planes.push_back(h);
  };

  // One vertex plane per original vertex, through the nearest rotated-triangle
  // corner in each face around it.
  for (int v = 0; v < static_cast<int>(p.num_vertices()); ++v) {
    const Vec3 &apex = p.vertices()[v];
    std::vector<Vec3> ring;
    for (std::size_t f = 0; f < p.num_faces(); ++f) {
      const Face &face = p.faces()[f];
      if (std::find(face.begin(), face.end(), v) == face.end()) continue;
      const auto &tri = tris[f];
      ring.push_back(*std::min_element(tri.begin(), tri.end(), [&](const Vec3 &x, const Vec3 &y) {
        return distance(x, apex) < distance(y, apex);
      }));
    }
    Plane h = fit_plane(ring);
    if (dot(h.normal, apex - center) < 0.0) h = {-h.normal, -h.offset};
    for (const Vec3 &q : ring) {
      if (std::abs(h.signed_distance(q)) > tol.coplanar) {
        throw GeometryError(ErrorKind::NonUniformResult, "vertex ring of rotated triangles is not planar");
      }
    }
    add_unique(h);
  }

  // Edge planes: a side of the rotated triangle on one face with a corner of
  // the rotated triangle across the edge. Of the candidates, keep those that
  // support every rotated triangle.
  for (const Edge &e : p.edges()) {
    const Vec3 mid = (p.vertices()[e.a] + p.vertices()[e.b]) * 0.5;
    for (auto [near, far] : {std::pair{e.left, e.right}, std::pair{e.right, e.left}}) {
      const auto &side = tris[near];
      const auto &across = tris[far];
      for (int i = 0; i < 3; ++i) {
        for (const Vec3 &corner : across) {
          const Vec3 n = cross(side[(i + 1) % 3] - side[i], corner - side[i]);
          if (norm(n) < tol.coplanar) continue;
          Plane h = Plane::through(normalized(n), side[i]);
          if (dot(h.normal, mid - center) < 0.0) h = {-h.normal, -h.offset};
          if (supporting(h)) add_unique(h);
        }
      }
    }
  }

  Polyhedron out = clip_all(p, planes, tol);
  if (!is_uniform(out, tol)) {
    throw GeometryError(ErrorKind::NonUniformResult, "skew truncation did not produce a uniform solid");
  }
  return out;
}

}  // namespace polycut
