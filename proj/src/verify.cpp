#include "polycut/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "polycut/catalog.hpp"

namespace polycut {

namespace {

// Converse solids must miss the tetrahedral normal condition by more than this.
constexpr double kConverseMargin = 1e-6;

Mat3 frame(const Vec3 &radial, const Vec3 &along_edge, bool mirrored) {
  const Vec3 z = normalized(radial);
  const Vec3 x = normalized(along_edge - z * dot(along_edge, z));
  Vec3 y = cross(z, x);
  if (mirrored) y = -y;
  return Mat3::from_columns(x, y, z);
}

bool maps_onto(const Polyhedron &a, const Vec3 &ca, const Polyhedron &b, const Vec3 &cb, const Mat3 &r,
               double tol) {
  std::vector<bool> hit(b.num_vertices(), false);
  for (const Vec3 &q : a.vertices()) {
    const Vec3 image = r * (q - ca) + cb;
    bool found = false;
    for (std::size_t j = 0; j < b.num_vertices(); ++j) {
      if (!hit[j] && distance(image, b.vertices()[j]) <= tol) {
        hit[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

Regularity face_regularity(const Polyhedron &p) {
  Regularity r;
  const auto &vs = p.vertices();
  for (const Face &f : p.faces()) {
    const std::size_t n = f.size();
    const double ideal = std::numbers::pi * static_cast<double>(n - 2) / static_cast<double>(n);
    std::vector<double> sides(n);
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sides[i] = distance(vs[f[i]], vs[f[(i + 1) % n]]);
      mean += sides[i];
    }
    mean /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      r.edge_deviation = std::max(r.edge_deviation, std::abs(sides[i] - mean));
      const Vec3 &prev = vs[f[(i + n - 1) % n]];
      const Vec3 &cur = vs[f[i]];
      const Vec3 &next = vs[f[(i + 1) % n]];
      const double c = dot(normalized(prev - cur), normalized(next - cur));
      const double angle = std::acos(std::clamp(c, -1.0, 1.0));
      r.angle_deviation = std::max(r.angle_deviation, std::abs(angle - ideal));
    }
  }
  return r;
}

double edge_spread(const Polyhedron &p) {
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const Edge &e : p.edges()) {
    const double len = edge_length(p, e);
    lo = std::min(lo, len);
    hi = std::max(hi, len);
  }
  return hi - lo;
}

std::optional<Mat3> find_isometry(const Polyhedron &a, int from, const Polyhedron &b, int to, double tol) {
  if (a.num_vertices() != b.num_vertices()) return std::nullopt;
  const Vec3 ca = centroid(a), cb = centroid(b);
  const Vec3 ra = a.vertices()[from] - ca;
  const Vec3 rb = b.vertices()[to] - cb;
  if (std::abs(norm(ra) - norm(rb)) > tol || norm(ra) <= tol) return std::nullopt;

  const std::vector<int> around_a = a.neighbors(from);
  if (around_a.empty()) return std::nullopt;
  const Vec3 edge_a = a.vertices()[around_a.front()] - a.vertices()[from];
  for (int w : b.neighbors(to)) {
    const Vec3 edge_b = b.vertices()[w] - b.vertices()[to];
    if (std::abs(norm(edge_a) - norm(edge_b)) > tol) continue;
    for (bool mirrored : {false, true}) {
      const Mat3 r = frame(rb, edge_b, mirrored) * frame(ra, edge_a, false).transposed();
      if (maps_onto(a, ca, b, cb, r, tol)) return r;
    }
  }
  return std::nullopt;
}

bool vertex_transitive(const Polyhedron &p, const Tolerance &tol) {
  for (int w = 0; w < static_cast<int>(p.num_vertices()); ++w) {
    if (!find_isometry(p, 0, p, w, tol.verify)) return false;
  }
  return true;
}

bool congruent(const Polyhedron &a, const Polyhedron &b, const Tolerance &tol) {
  if (a.num_vertices() != b.num_vertices() || a.num_faces() != b.num_faces()) return false;
  for (int w = 0; w < static_cast<int>(b.num_vertices()); ++w) {
    if (find_isometry(a, 0, b, w, tol.verify)) return true;
  }
  return false;
}

bool is_uniform(const Polyhedron &p, const Tolerance &tol) {
  const Regularity r = face_regularity(p);
  return r.edge_deviation <= tol.verify && r.angle_deviation <= tol.verify && edge_spread(p) <= tol.verify &&
         vertex_transitive(p, tol);
}

EmbeddingResult k_face_embedding(const Polyhedron &inner, const Polyhedron &outer, const Tolerance &tol) {
  for (const Plane &pl : outer.planes()) {
    for (const Vec3 &v : inner.vertices()) {
      if (pl.signed_distance(v) > tol.coplanar) {
        throw GeometryError(ErrorKind::NotContained, "inner solid crosses an outer face plane");
      }
    }
  }
  const bool same = std::all_of(outer.vertices().begin(), outer.vertices().end(), [&](const Vec3 &v) {
    return std::any_of(inner.vertices().begin(), inner.vertices().end(),
                       [&](const Vec3 &w) { return distance(v, w) <= tol.weld; });
  });
  if (same) throw GeometryError(ErrorKind::NotProperSubset, "solids coincide");

  // With inner inside outer, a face lying in an outer face plane lies in that
  // outer face.
  EmbeddingResult result;
  std::vector<bool> in_contact_face(inner.num_vertices(), false);
  for (std::size_t f = 0; f < inner.num_faces(); ++f) {
    const Face &face = inner.faces()[f];
    for (const Plane &pl : outer.planes()) {
      const bool lies = std::all_of(face.begin(), face.end(), [&](int id) {
        return std::abs(pl.signed_distance(inner.vertices()[id])) <= tol.coplanar;
      });
      if (lies) {
        ++result.k;
        for (int id : face) in_contact_face[id] = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < inner.num_vertices(); ++i) {
    if (in_contact_face[i]) continue;
    for (const Plane &pl : outer.planes()) {
      if (std::abs(pl.signed_distance(inner.vertices()[i])) <= tol.coplanar) result.extra_contact = true;
    }
  }
  return result;
}

AngleSet face_pair_angles(const Polyhedron &p, double tol) {
  std::vector<double> all;
  const auto &planes = p.planes();
  for (std::size_t i = 0; i < planes.size(); ++i) {
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      const double d = dot(planes[i].normal, planes[j].normal);
      all.push_back(d + 1.0 <= tol ? std::numbers::pi : dihedral_between(planes[i].normal, planes[j].normal));
    }
  }
  std::sort(all.begin(), all.end());
  AngleSet out;
  for (double a : all) {
    if (out.angles.empty() || a - out.angles.back() > tol) out.angles.push_back(a);
  }
  return out;
}

double tetrahedral_quadruple_margin(const Polyhedron &p) {
  const auto &planes = p.planes();
  const std::size_t n = planes.size();
  std::vector<double> err(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      err[i * n + j] = std::abs(dot(planes[i].normal, planes[j].normal) + 1.0 / 3.0);
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double e2 = err[i * n + j];
      if (e2 >= best) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        const double e3 = std::max({e2, err[i * n + k], err[j * n + k]});
        if (e3 >= best) continue;
        for (std::size_t l = k + 1; l < n; ++l) {
          const double e4 = std::max({e3, err[i * n + l], err[j * n + l], err[k * n + l]});
          best = std::min(best, e4);
        }
      }
    }
  }
  return best;
}

bool has_tetrahedral_quadruple(const Polyhedron &p, double tol) { return tetrahedral_quadruple_margin(p) <= tol; }

int shared_face_normals(const Polyhedron &a, const Polyhedron &b, double tol) {
  int count = 0;
  for (const Plane &pa : a.planes()) {
    const bool shared = std::any_of(b.planes().begin(), b.planes().end(),
                                    [&](const Plane &pb) { return norm(pa.normal - pb.normal) <= tol; });
    if (shared) ++count;
  }
  return count;
}

bool contains(const Polyhedron &a, const Polyhedron &b, double tol) {
  for (const Plane &pl : a.planes()) {
    for (const Vec3 &v : b.vertices()) {
      if (pl.signed_distance(v) > tol) return false;
    }
  }
  return true;
}

namespace {

void measure(VerifyReport &r, const Polyhedron &p, const Tolerance &tol) {
  r.irregularity = face_regularity(p);
  r.max_edge_spread = edge_spread(p);
  r.is_uniform = is_uniform(p, tol);
  r.quadruple_margin = tetrahedral_quadruple_margin(p);
  r.dihedral_spectrum = face_pair_angles(p, tol.verify);
}

}  // namespace

VerifyReport verify_embedding(const std::string &name, const Polyhedron &p, const Polyhedron &host,
                              const Tolerance &tol) {
  VerifyReport r;
  r.solid_name = name;
  measure(r, p, tol);
  r.tetrahedral_quadruple = r.quadruple_margin <= tol.verify;
  try {
    const EmbeddingResult e = k_face_embedding(p, host, tol);
    r.embedding_k = e.k;
    r.extra_contact = e.extra_contact;
    if (e.extra_contact) r.note = "boundary contact outside the embedded faces";
  } catch (const GeometryError &err) {
    r.note = err.what();
  }
  r.pass = r.is_uniform && r.embedding_k == 4 && !r.extra_contact;
  return r;
}

std::vector<VerifyReport> main_theorem_check(int nmax, const Tolerance &tol) {
  std::vector<VerifyReport> rows;
  const Polyhedron host = host_tetrahedron();
  for (const SolidName &name : embeddable_solids()) {
    const Polyhedron p = build(name);
    VerifyReport r = verify_embedding(name.str(), p, host, tol);
    r.signature_ok = signature(p) == expected_signature(name);
    if (!r.signature_ok) r.note = "signature " + to_string(signature(p));
    r.pass = r.pass && r.signature_ok;
    rows.push_back(std::move(r));
  }

  std::vector<SolidName> converse = {{SolidName::Kind::C, 0}, {SolidName::Kind::D, 0}};
  for (int n = 3; n <= nmax; ++n) converse.push_back({SolidName::Kind::Prism, n});
  for (int n = 3; n <= nmax; ++n) converse.push_back({SolidName::Kind::Antiprism, n});

  const Polyhedron octahedron = octahedron_in_T().solid;
  for (const SolidName &name : converse) {
    const Polyhedron p = build(name);
    VerifyReport r;
    r.solid_name = name.str();
    measure(r, p, tol);
    r.signature_ok = signature(p) == expected_signature(name);
    if (name.kind == SolidName::Kind::Antiprism && name.n == 3) {
      // A3 is the octahedron, already on the embeddable side.
      const bool is_octahedron = congruent(p, octahedron, tol);
      r.tetrahedral_quadruple = r.quadruple_margin <= tol.verify;
      r.note = is_octahedron ? "congruent to O; covered by the forward direction" : "not congruent to O";
      r.pass = is_octahedron && *r.tetrahedral_quadruple && r.is_uniform;
    } else {
      r.tetrahedral_quadruple = r.quadruple_margin <= kConverseMargin;
      if (name.kind == SolidName::Kind::Prism && name.n == 4) r.note = "congruent to C";
      r.pass = r.is_uniform && r.signature_ok && !*r.tetrahedral_quadruple;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace polycut
