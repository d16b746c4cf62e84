// One PASS/FAIL line per acceptance criterion, at the stated tolerances.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "polycut/catalog.hpp"
#include "polycut/cli.hpp"
#include "polycut/mesh_io.hpp"
#include "polycut/truncation.hpp"
#include "polycut/verify.hpp"
#include "property_checks.hpp"

using namespace polycut;
using K = SolidName::Kind;

namespace {

const double kSqrt2 = std::numbers::sqrt2;
const double kSqrt3 = std::numbers::sqrt3;
const double kPhi = kGolden;
const double kOcta = std::acos(-1.0 / 3.0);
const double kIcosa = std::acos(-std::sqrt(5.0) / 3.0);

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string &what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Side lengths of every face with `size` corners.
std::vector<double> sides(const Polyhedron &p, std::size_t size) {
  std::vector<double> out;
  for (const Face &f : p.faces()) {
    if (f.size() != size) continue;
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(distance(p.vertices()[f[i]], p.vertices()[f[(i + 1) % f.size()]]));
  }
  return out;
}

double spread_between(const std::vector<std::vector<double>> &groups) {
  double lo = 1e300, hi = -1e300;
  for (const auto &g : groups) {
    for (double x : g) lo = std::min(lo, x), hi = std::max(hi, x);
  }
  return hi - lo;
}

Outcome forward_theorem() {
  Outcome o;
  double worst = 0.0;
  const Polyhedron host = host_tetrahedron();
  for (const SolidName &n : embeddable_solids()) {
    const Polyhedron p = build(n);
    const Regularity r = face_regularity(p);
    const double spread = edge_spread(p);
    worst = std::max({worst, spread, r.edge_deviation, r.angle_deviation});
    o.require(is_uniform(p), n.str() + " not uniform");
    o.require(spread < 1e-9, n.str() + " edge spread " + num(spread));
    o.require(r.edge_deviation < 1e-9 && r.angle_deviation < 1e-9, n.str() + " irregular faces");
    try {
      const EmbeddingResult e = k_face_embedding(p, host);
      o.require(e.k == 4 && !e.extra_contact, n.str() + " k = " + std::to_string(e.k));
    } catch (const GeometryError &e) {
      o.require(false, n.str() + ": " + e.what());
    }
  }
  if (o.pass) o.detail = "15 solids uniform with k = 4; worst deviation " + num(worst);
  return o;
}

Outcome table_one() {
  Outcome o;
  struct Row {
    const char *name;
    double theta;
    VeMode mode;
    double r1, r2, r1n, r2n;
  };
  const Row rows[] = {
      {"eO", kOcta, VeMode::Expand, 2 / (3 + kSqrt2), kSqrt3 / (6 + 2 * kSqrt2), 0.453082, 0.196191},
      {"tCO", kOcta, VeMode::Omnitruncate, (2 + kSqrt2) / (3 + 3 * kSqrt2), kSqrt3 / (6 + 6 * kSqrt2), 0.471405,
       0.119573},
      {"eI", kIcosa, VeMode::Expand, 2 / (3 + kPhi), kSqrt3 / (6 + 2 * kPhi), 0.433086, 0.187530},
      {"tID", kIcosa, VeMode::Omnitruncate, (2 + kPhi) / (3 + 3 * kPhi), kSqrt3 / (6 + 6 * kPhi), 0.460656, 0.110265},
  };
  double worst = 0.0;
  for (const Row &row : rows) {
    const TruncationParams p = solve_ve_params(row.theta, row.mode);
    const double err = std::max(std::abs(p.r1 - row.r1), std::abs(p.r2 - row.r2));
    worst = std::max(worst, err);
    o.require(err < 1e-12, std::string(row.name) + " off closed form by " + num(err));
    o.require(std::abs(p.r1 - row.r1n) < 2e-6 && std::abs(p.r2 - row.r2n) < 2e-6,
              std::string(row.name) + " misses the 6-digit values");
  }
  if (o.pass) o.detail = "4 rows, max error vs closed form " + num(worst);
  return o;
}

Outcome face_consistency() {
  Outcome o;
  const Polyhedron tco = build({K::tCO, 0});
  const double tco_spread = spread_between({sides(tco, 4), sides(tco, 6), sides(tco, 8)});
  o.require(sides(tco, 4).size() == 48 && sides(tco, 6).size() == 48 && sides(tco, 8).size() == 48,
            "tCO face census");
  o.require(tco_spread < 1e-9, "tCO square/hexagon/octagon sides differ by " + num(tco_spread));

  double worst = tco_spread;
  for (K k : {K::eO, K::eI}) {
    const Polyhedron e = build({k, 0});
    const std::size_t triangles = sides(e, 3).size() / 3;
    o.require(triangles == (k == K::eO ? 8u : 20u), "triangles did not survive in " + SolidName{k, 0}.str());
    const double s = spread_between({sides(e, 3), sides(e, 4)});
    worst = std::max(worst, s);
    o.require(s < 1e-9, SolidName{k, 0}.str() + " square vs triangle sides differ by " + num(s));
  }
  if (o.pass) o.detail = "max side mismatch " + num(worst);
  return o;
}

Outcome table_two() {
  Outcome o;
  const double sc = snub_ratio(90.0), sd = snub_ratio(108.0);
  const double res = std::max(std::abs(snub_cubic(sc, 90.0)), std::abs(snub_cubic(sd, 108.0)));
  o.require(std::abs(sc - 1.839286755) < 1e-9, "snub_ratio(90) = " + std::to_string(sc));
  o.require(std::abs(sd - 1.943151259) < 1e-9, "snub_ratio(108) = " + std::to_string(sd));
  o.require(res < 1e-14, "cubic residual " + num(res));
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12f, %.12f, residual %s", sc, sd, num(res).c_str());
    o.detail = buf;
  }
  return o;
}

Outcome over_half() {
  Outcome o;
  const EmbeddedSeed oct = octahedron_in_T();
  const EmbeddedSeed ico = icosahedron_in_T();
  const Polyhedron tc = vertex_truncate(oct.solid, 2.0 - kSqrt2);
  const Polyhedron td = vertex_truncate(ico.solid, (2 + kPhi) / (3 + 2 * kPhi));
  o.require(signature(tc).face_census == std::map<int, int>{{3, 8}, {8, 6}}, "tC census " + to_string(signature(tc)));
  o.require(signature(td).face_census == std::map<int, int>{{3, 20}, {10, 12}},
            "tD census " + to_string(signature(td)));
  o.require(is_uniform(tc), "tC not uniform");
  o.require(is_uniform(td), "tD not uniform");
  o.require(k_face_embedding(tc, oct.host).k == 4, "tC k != 4");
  o.require(k_face_embedding(td, ico.host).k == 4, "tD k != 4");
  if (o.pass) o.detail = "tC {3:8, 8:6}, tD {3:20, 10:12}, both uniform with k = 4";
  return o;
}

Outcome converse() {
  Outcome o;
  std::vector<std::pair<std::string, Polyhedron>> solids = {{"C", cube()}, {"D", dodecahedron()}};
  for (int n = 3; n <= 50; ++n) solids.push_back({"P" + std::to_string(n), prism(n)});
  for (int n = 4; n <= 50; ++n) solids.push_back({"A" + std::to_string(n), antiprism(n)});
  double tightest = 1e300;
  std::string tightest_name;
  for (const auto &[name, p] : solids) {
    const double margin = tetrahedral_quadruple_margin(p);
    if (margin < tightest) tightest = margin, tightest_name = name;
    o.require(margin > 1e-6, name + " has four normals within " + num(margin) + " of -1/3");
  }
  o.require(congruent(antiprism(3), octahedron_in_T().solid), "A3 is not recognized as O");
  if (o.pass) {
    o.detail = std::to_string(solids.size()) + " solids, smallest margin " + num(tightest) + " (" + tightest_name +
               "); A3 congruent to O";
  }
  return o;
}

Outcome remark() {
  Outcome o;
  const Polyhedron ti = build({K::tI, 0});
  const Polyhedron tco = build({K::tCO, 0});
  const int shared = shared_face_normals(ti, tco, 1e-9);
  const int on_host = std::min(shared_face_normals(ti, host_tetrahedron(), 1e-9),
                               shared_face_normals(tco, host_tetrahedron(), 1e-9));
  o.require(shared == 4, "shared_face_normals(tI, tCO) = " + std::to_string(shared) + ", not 4: both are centrally "
                         "symmetric, so T's " + std::to_string(on_host) + " normals appear with their opposites");
  o.require(!contains(ti, tco), "tI contains tCO");
  o.require(!contains(tco, ti), "tCO contains tI");
  if (o.pass) o.detail = "4 shared normals, neither contains the other";
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937 rng(20240611);
  int clips = 0;
  for (const auto &s : testing::seed_solids()) {
    const std::string f = testing::clip_properties(s, 100, rng);
    o.require(f.empty(), f);
    clips += 100;
  }
  const auto all = testing::constructed_solids(50);
  for (const auto &s : all) {
    const std::string f = testing::topology_properties(s);
    o.require(f.empty(), f);
  }
  for (const auto &s : all) {
    const std::string f = testing::rigid_motion_properties(s, 20, rng);
    o.require(f.empty(), f);
  }
  if (o.pass) {
    o.detail = std::to_string(clips) + " clips, " + std::to_string(all.size()) + " solids x 20 rigid motions";
  }
  return o;
}

Outcome negative_controls() {
  Outcome o;
  o.require(!is_uniform(vertex_truncate(tetrahedron(), 0.25)), "T truncated by 0.25 passed is_uniform");

  std::vector<Vec3> vs = octahedron_in_T().solid.vertices();
  vs[0] = vs[0] * (1.0 + 1e-3);
  o.require(!is_uniform(assemble(vs, octahedron_in_T().solid.faces())), "perturbed octahedron passed is_uniform");

  // The tC recipe with depth 1/3 instead of 2 - sqrt2, checked as the tC row would be.
  const Polyhedron wrong = vertex_truncate(scaled(octahedron_in_T().solid, 0.5), 1.0 / 3.0);
  const bool uniform = is_uniform(wrong);
  const bool signature_ok = signature(wrong) == expected_signature({K::tC, 0});
  const bool row_rejected = !(uniform && signature_ok);
  o.require(row_rejected, "wrong-depth tC row accepted");
  o.require(!uniform, "wrong-depth tC (" + to_string(signature(wrong)) +
                          ") is uniform: depth 1/3 on O gives the truncated octahedron, so it cannot be reported "
                          "non-uniform; the row is rejected by its signature instead");
  if (o.pass) o.detail = "all three controls rejected";
  return o;
}

Outcome cli_and_io() {
  Outcome o;
  std::ostringstream out, err;
  const char *argv[] = {"polycut", "theorem", "--nmax", "50"};
  const int code = run_cli(4, argv, out, err);
  o.require(code == 0, "theorem --nmax 50 exited " + std::to_string(code));

  int round_trips = 0;
  for (const auto &s : testing::constructed_solids(50)) {
    const Signature want = signature(s.solid);
    std::stringstream obj;
    write_obj(obj, s.solid, s.name);
    o.require(signature(read_obj(obj)) == want, s.name + " OBJ round trip changed the signature");
    o.require(signature(parse_json(to_json(s.solid, s.name))) == want, s.name + " JSON round trip changed the signature");
    round_trips += 2;
  }
  if (o.pass) o.detail = "theorem exit 0; " + std::to_string(round_trips) + " round trips";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char *title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"forward theorem", forward_theorem},
      {"vertex+edge truncation parameters", table_one},
      {"tCO / eO / eI side consistency", face_consistency},
      {"snub ratios", table_two},
      {"over-half truncations tC, tD", over_half},
      {"converse: no tetrahedral normal quadruple", converse},
      {"tI / tCO shared normals without containment", remark},
      {"property suites", properties},
      {"negative controls", negative_controls},
      {"CLI theorem and mesh round trips", cli_and_io},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion &c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d  %-46s %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", index, c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %d criteria pass\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
