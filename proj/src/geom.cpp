#include "polycut/geom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include <Eigen/Eigenvalues>

namespace polycut {

Polyhedron::Polyhedron(std::vector<Vec3> vertices, std::vector<Face> faces, std::vector<Plane> planes)
    : vertices_(std::move(vertices)), faces_(std::move(faces)), planes_(std::move(planes)) {
  std::map<std::pair<int, int>, Edge> by_key;
  bool ok = true;
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
    const Face &face = faces_[f];
    for (std::size_t i = 0; i < face.size(); ++i) {
      const int a = face[i];
      const int b = face[(i + 1) % face.size()];
      auto key = std::minmax(a, b);
      Edge &e = by_key[{key.first, key.second}];
      e.a = key.first;
      e.b = key.second;
      int &slot = a < b ? e.left : e.right;
      if (slot != -1) ok = false;
      slot = f;
    }
  }
  edges_.reserve(by_key.size());
  for (const auto &[key, e] : by_key) {
    if (e.left == -1 || e.right == -1) ok = false;
    edges_.push_back(e);
  }
  closed_ = ok && !faces_.empty();
}

std::vector<int> Polyhedron::neighbors(int v) const {
  std::vector<int> out;
  for (const Edge &e : edges_) {
    if (e.a == v) out.push_back(e.b);
    else if (e.b == v) out.push_back(e.a);
  }
  return out;
}

Plane fit_plane(std::span<const Vec3> points) {
  Vec3 c;
  for (const Vec3 &p : points) c += p;
  c = c / static_cast<double>(points.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const Vec3 &p : points) {
    const Eigen::Vector3d d(p.x - c.x, p.y - c.y, p.z - c.z);
    cov += d * d.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(cov);
  const Eigen::Vector3d n = solver.eigenvectors().col(0);  // smallest eigenvalue
  const Vec3 normal = normalized(Vec3{n.x(), n.y(), n.z()});
  return Plane::through(normal, c);
}

namespace {

// Newell's vector: twice the area vector of a polygon given in cyclic order.
Vec3 newell(std::span<const Vec3> vertices, const Face &face) {
  Vec3 sum;
  for (std::size_t i = 0; i < face.size(); ++i) {
    sum += cross(vertices[face[i]], vertices[face[(i + 1) % face.size()]]);
  }
  return sum;
}

double cross2(double ox, double oy, double ax, double ay, double bx, double by) {
  return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

// Strict convex hull of coplanar points, counterclockwise about `normal`.
// Points within `slack` of a hull edge are dropped.
Face planar_hull(std::span<const Vec3> vertices, const std::vector<int> &ids, const Vec3 &normal,
                 double slack) {
  if (ids.size() < 3) return {};
  const Vec3 seed = std::abs(normal.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 u = normalized(cross(seed, normal));
  const Vec3 v = cross(normal, u);
  struct P2 { double x, y; int id; };
  std::vector<P2> pts;
  pts.reserve(ids.size());
  for (int id : ids) pts.push_back({dot(vertices[id], u), dot(vertices[id], v), id});
  std::sort(pts.begin(), pts.end(), [](const P2 &a, const P2 &b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });

  auto keep_turn = [&](const P2 &o, const P2 &a, const P2 &b) {
    const double span = std::hypot(b.x - o.x, b.y - o.y);
    return cross2(o.x, o.y, a.x, a.y, b.x, b.y) > slack * span;
  };

  std::vector<P2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const P2 &p : pts) {
    while (k >= 2 && !keep_turn(hull[k - 2], hull[k - 1], p)) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && !keep_turn(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  if (k < 4) return {};  // last point repeats the first
  Face out;
  for (std::size_t i = 0; i + 1 < k; ++i) out.push_back(hull[i].id);
  return out;
}

}  // namespace

Polyhedron canonicalize(std::span<const Vec3> vertices, std::span<const Face> raw_faces,
                        const Tolerance &tol) {
  // Weld in index order; the first point of a cluster is its representative.
  std::vector<int> rep(vertices.size());
  std::vector<int> reps;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    rep[i] = i;
    for (int r : reps) {
      if (distance(vertices[i], vertices[r]) <= tol.weld) {
        rep[i] = r;
        break;
      }
    }
    if (rep[i] == i) reps.push_back(i);
  }

  struct Candidate { Plane plane; std::vector<int> ids; };
  std::vector<Candidate> candidates;
  std::vector<bool> used(vertices.size(), false);
  for (const Face &raw : raw_faces) {
    std::vector<int> ids;
    for (int id : raw) {
      const int r = rep.at(id);
      if (std::find(ids.begin(), ids.end(), r) == ids.end()) ids.push_back(r);
    }
    if (ids.size() < 3) continue;
    std::vector<Vec3> pts;
    for (int id : ids) pts.push_back(vertices[id]);
    Plane plane = fit_plane(pts);
    // Slivers: the largest triangle spanned by the face must have real area.
    double area2 = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        area2 = std::max(area2, std::abs(dot(plane.normal, cross(pts[i] - pts[0], pts[j] - pts[0]))));
      }
    }
    if (area2 <= tol.coplanar) continue;
    for (int id : ids) used[id] = true;
    candidates.push_back({plane, std::move(ids)});
  }

  Vec3 interior;
  int count = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (used[i]) {
      interior += vertices[i];
      ++count;
    }
  }
  if (count < 4 || candidates.size() < 4) {
    throw GeometryError(ErrorKind::DegenerateResult, "fewer than four faces survive");
  }
  interior = interior / count;

  // Orient outward, then merge candidates lying on one supporting plane.
  std::vector<Plane> groups;
  for (Candidate &c : candidates) {
    if (c.plane.signed_distance(interior) > 0.0) c.plane = {-c.plane.normal, -c.plane.offset};
    const bool known = std::any_of(groups.begin(), groups.end(), [&](const Plane &g) {
      return norm(g.normal - c.plane.normal) <= tol.coplanar &&
             std::abs(g.offset - c.plane.offset) <= tol.coplanar;
    });
    if (!known) groups.push_back(c.plane);
  }

  std::vector<int> used_ids;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (used[i]) used_ids.push_back(i);
  }

  std::vector<Face> hulls;
  std::vector<Plane> hull_planes;
  for (const Plane &g : groups) {
    std::vector<int> on;
    for (int id : used_ids) {
      if (std::abs(g.signed_distance(vertices[id])) <= tol.coplanar) on.push_back(id);
    }
    Face face = planar_hull(vertices, on, g.normal, tol.coplanar);
    if (face.size() < 3) continue;
    hulls.push_back(std::move(face));
    hull_planes.push_back(g);
  }

  // Compact vertex indices in original order.
  std::vector<int> remap(vertices.size(), -1);
  for (const Face &f : hulls) {
    for (int id : f) remap[id] = 0;
  }
  std::vector<Vec3> out_vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (remap[i] == 0) {
      remap[i] = static_cast<int>(out_vertices.size());
      out_vertices.push_back(vertices[i]);
    }
  }

  std::vector<Face> out_faces;
  std::vector<Plane> out_planes;
  for (std::size_t f = 0; f < hulls.size(); ++f) {
    Face face;
    std::vector<Vec3> pts;
    for (int id : hulls[f]) {
      face.push_back(remap[id]);
      pts.push_back(vertices[id]);
    }
    Plane plane = fit_plane(pts);
    if (dot(plane.normal, hull_planes[f].normal) < 0.0) plane = {-plane.normal, -plane.offset};
    out_faces.push_back(std::move(face));
    out_planes.push_back(plane);
  }

  for (const Plane &plane : out_planes) {
    for (const Vec3 &v : out_vertices) {
      if (plane.signed_distance(v) > tol.coplanar) {
        throw GeometryError(ErrorKind::NonConvexInput, "vertex outside a face plane");
      }
    }
  }

  Polyhedron result(std::move(out_vertices), std::move(out_faces), std::move(out_planes));
  if (!result.closed()) {
    throw GeometryError(ErrorKind::DegenerateResult, "face cycles do not close into a surface");
  }
  return result;
}

Polyhedron clip(const Polyhedron &p, const Plane &h, const Tolerance &tol) {
  enum Side { Inside, On, Outside };
  const auto &vs = p.vertices();
  std::vector<double> dist(vs.size());
  std::vector<Side> side(vs.size());
  bool any_in = false, any_on = false, any_out = false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    dist[i] = h.signed_distance(vs[i]);
    side[i] = dist[i] > tol.coplanar ? Outside : (dist[i] < -tol.coplanar ? Inside : On);
    any_in |= side[i] == Inside;
    any_on |= side[i] == On;
    any_out |= side[i] == Outside;
  }
  if (!any_out) return p;
  if (!any_in) {
    if (any_on) throw GeometryError(ErrorKind::DegenerateResult, "halfspace meets the solid in a lower-dimensional set");
    throw GeometryError(ErrorKind::EmptyResult, "halfspace excludes the whole solid");
  }

  std::vector<Vec3> out(vs.begin(), vs.end());
  std::map<std::pair<int, int>, int> crossing;
  auto cut = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    auto [it, inserted] = crossing.try_emplace({a, b}, static_cast<int>(out.size()));
    if (inserted) {
      const double t = dist[a] / (dist[a] - dist[b]);
      out.push_back(vs[a] + (vs[b] - vs[a]) * t);
    }
    return it->second;
  };

  std::vector<Face> faces;
  Face cap;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (side[i] == On) cap.push_back(static_cast<int>(i));
  }
  for (const Face &face : p.faces()) {
    Face kept;
    for (std::size_t i = 0; i < face.size(); ++i) {
      const int a = face[i];
      const int b = face[(i + 1) % face.size()];
      if (side[a] != Outside) kept.push_back(a);
      if ((side[a] == Inside && side[b] == Outside) || (side[a] == Outside && side[b] == Inside)) {
        const int c = cut(a, b);
        kept.push_back(c);
      }
    }
    if (kept.size() >= 3) faces.push_back(std::move(kept));
  }
  for (const auto &[key, id] : crossing) cap.push_back(id);
  faces.push_back(std::move(cap));
  return canonicalize(out, faces, tol);
}

double dihedral_between(const Vec3 &n1, const Vec3 &n2) {
  const double c = std::clamp(dot(n1, n2), -1.0, 1.0);
  return std::numbers::pi - std::acos(c);
}

Vec3 centroid(const Polyhedron &p) {
  Vec3 c;
  for (const Vec3 &v : p.vertices()) c += v;
  return c / static_cast<double>(p.num_vertices());
}

double edge_length(const Polyhedron &p, const Edge &e) {
  return distance(p.vertices()[e.a], p.vertices()[e.b]);
}

double midsphere_radius(const Polyhedron &p, const Tolerance &tol) {
  const Vec3 c = centroid(p);
  double lo = 1e300, hi = -1e300, sum = 0.0;
  for (const Edge &e : p.edges()) {
    const double r = distance((p.vertices()[e.a] + p.vertices()[e.b]) * 0.5, c);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    sum += r;
  }
  if (hi - lo > tol.verify) {
    throw GeometryError(ErrorKind::NotMidscribed, "edge midpoints are not equidistant from the centroid");
  }
  return sum / static_cast<double>(p.num_edges());
}

double volume(const Polyhedron &p) {
  double six_v = 0.0;
  const auto &vs = p.vertices();
  for (const Face &f : p.faces()) {
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
      six_v += dot(vs[f[0]], cross(vs[f[i]], vs[f[i + 1]]));
    }
  }
  return six_v / 6.0;
}

double face_area(const Polyhedron &p, int face) {
  return 0.5 * norm(newell(p.vertices(), p.faces()[face]));
}

std::string check_invariants(const Polyhedron &p, const Tolerance &tol) {
  const auto &vs = p.vertices();
  for (const Vec3 &v : vs) {
    if (!v.finite()) return "non-finite coordinate";
  }
  if (!p.closed()) return "some edge is not shared by exactly two faces";
  const long euler = static_cast<long>(p.num_vertices()) - static_cast<long>(p.num_edges()) +
                     static_cast<long>(p.num_faces());
  if (euler != 2) return "Euler characteristic is " + std::to_string(euler);
  for (std::size_t f = 0; f < p.num_faces(); ++f) {
    const Plane &pl = p.planes()[f];
    if (std::abs(norm(pl.normal) - 1.0) > tol.coplanar) return "face normal not unit";
    for (int id : p.faces()[f]) {
      if (std::abs(pl.signed_distance(vs[id])) > tol.coplanar) return "face vertex off its plane";
    }
    for (const Vec3 &v : vs) {
      if (pl.signed_distance(v) > tol.coplanar) return "not convex";
    }
    if (dot(newell(vs, p.faces()[f]), pl.normal) <= 0.0) return "face not counterclockwise from outside";
    for (std::size_t g = f + 1; g < p.num_faces(); ++g) {
      const Plane &q = p.planes()[g];
      if (norm(q.normal - pl.normal) <= tol.coplanar && std::abs(q.offset - pl.offset) <= tol.coplanar) {
        return "two faces share a plane";
      }
    }
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (distance(vs[i], vs[j]) <= tol.weld) return "vertices closer than the weld distance";
    }
  }
  return {};
}

Polyhedron transformed(const Polyhedron &p, const Mat3 &m, const Vec3 &shift) {
  std::vector<Vec3> vs;
  vs.reserve(p.num_vertices());
  for (const Vec3 &v : p.vertices()) vs.push_back(m * v + shift);
  const bool flip = m.determinant() < 0.0;
  std::vector<Face> faces = p.faces();
  if (flip) {
    for (Face &f : faces) std::reverse(f.begin(), f.end());
  }
  return assemble(std::move(vs), std::move(faces));
}

Polyhedron assemble(std::vector<Vec3> vertices, std::vector<Face> faces) {
  std::vector<Plane> planes;
  planes.reserve(faces.size());
  for (const Face &f : faces) {
    std::vector<Vec3> pts;
    for (int id : f) pts.push_back(vertices[id]);
    Plane pl = fit_plane(pts);
    if (dot(pl.normal, newell(vertices, f)) < 0.0) pl = {-pl.normal, -pl.offset};
    planes.push_back(pl);
  }
  return Polyhedron(std::move(vertices), std::move(faces), std::move(planes));
}

Polyhedron scaled(const Polyhedron &p, double factor) {
  Mat3 m;
  m.rows = {Vec3{factor, 0, 0}, Vec3{0, factor, 0}, Vec3{0, 0, factor}};
  return transformed(p, m);
}

}  // namespace polycut
