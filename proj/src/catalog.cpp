#include "polycut/catalog.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "polycut/truncation.hpp"

namespace polycut {

namespace {

using Kind = SolidName::Kind;

struct Entry {
  Kind kind;
  const char *label;
};

constexpr Entry kNamed[] = {
    {Kind::T, "T"},     {Kind::C, "C"},     {Kind::O, "O"},   {Kind::D, "D"},   {Kind::I, "I"},
    {Kind::tT, "tT"},   {Kind::tC, "tC"},   {Kind::tO, "tO"}, {Kind::tD, "tD"}, {Kind::tI, "tI"},
    {Kind::CO, "CO"},   {Kind::ID, "ID"},   {Kind::eO, "eO"}, {Kind::eI, "eI"}, {Kind::tCO, "tCO"},
    {Kind::tID, "tID"}, {Kind::sC, "sC"},   {Kind::sD, "sD"},
};

double seed_dihedral(const Polyhedron &p) {
  const Edge &e = p.edges().front();
  return dihedral_between(p.planes()[e.left].normal, p.planes()[e.right].normal);
}

// Host tetrahedra of the seeds have edge 2 (octahedron) and phi^2 sqrt2
// (icosahedron); shrink both frames to the unit-edge host.
Polyhedron from_octahedron_frame(const Polyhedron &p) { return scaled(p, 0.5); }
Polyhedron from_icosahedron_frame(const Polyhedron &p) {
  return scaled(p, 1.0 / (kGolden * kGolden * std::numbers::sqrt2));
}

Signature census(int v, int e, int f, std::map<int, int> faces) { return {v, e, f, std::move(faces)}; }

}  // namespace

std::string SolidName::str() const {
  if (kind == Kind::Prism) return "P" + std::to_string(n);
  if (kind == Kind::Antiprism) return "A" + std::to_string(n);
  for (const Entry &e : kNamed) {
    if (e.kind == kind) return e.label;
  }
  return "?";
}

bool SolidName::embeds_in_tetrahedron() const {
  switch (kind) {
    case Kind::T:
    case Kind::C:
    case Kind::D:
    case Kind::Prism:
    case Kind::Antiprism:
      return false;
    default:
      return true;
  }
}

SolidName parse_solid_name(std::string_view text) {
  for (const Entry &e : kNamed) {
    if (text == e.label) return {e.kind, 0};
  }
  if (text.size() >= 2 && (text[0] == 'P' || text[0] == 'A')) {
    int n = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), n);
    if (ec == std::errc() && ptr == text.data() + text.size() && n >= 3) {
      return {text[0] == 'P' ? Kind::Prism : Kind::Antiprism, n};
    }
  }
  throw GeometryError(ErrorKind::InvalidName, "unknown solid '" + std::string(text) + "'");
}

std::vector<SolidName> embeddable_solids() {
  std::vector<SolidName> out;
  for (Kind k : {Kind::O, Kind::I, Kind::tT, Kind::tO, Kind::tI, Kind::CO, Kind::ID, Kind::tC, Kind::tD,
                 Kind::eO, Kind::tCO, Kind::eI, Kind::tID, Kind::sC, Kind::sD}) {
    out.push_back({k, 0});
  }
  return out;
}

Signature signature(const Polyhedron &p) {
  Signature s{static_cast<int>(p.num_vertices()), static_cast<int>(p.num_edges()),
              static_cast<int>(p.num_faces()), {}};
  for (const Face &f : p.faces()) ++s.face_census[static_cast<int>(f.size())];
  return s;
}

std::string to_string(const Signature &s) {
  std::ostringstream os;
  os << "V=" << s.vertices << " E=" << s.edges << " F=" << s.faces << " {";
  bool first = true;
  for (const auto &[size, count] : s.face_census) {
    os << (first ? "" : ", ") << size << ":" << count;
    first = false;
  }
  os << "}";
  return os.str();
}

Signature expected_signature(const SolidName &name) {
  const int n = name.n;
  switch (name.kind) {
    case Kind::T: return census(4, 6, 4, {{3, 4}});
    case Kind::C: return census(8, 12, 6, {{4, 6}});
    case Kind::O: return census(6, 12, 8, {{3, 8}});
    case Kind::D: return census(20, 30, 12, {{5, 12}});
    case Kind::I: return census(12, 30, 20, {{3, 20}});
    case Kind::tT: return census(12, 18, 8, {{3, 4}, {6, 4}});
    case Kind::tC: return census(24, 36, 14, {{3, 8}, {8, 6}});
    case Kind::tO: return census(24, 36, 14, {{4, 6}, {6, 8}});
    case Kind::tD: return census(60, 90, 32, {{3, 20}, {10, 12}});
    case Kind::tI: return census(60, 90, 32, {{5, 12}, {6, 20}});
    case Kind::CO: return census(12, 24, 14, {{3, 8}, {4, 6}});
    case Kind::ID: return census(30, 60, 32, {{3, 20}, {5, 12}});
    case Kind::eO: return census(24, 48, 26, {{3, 8}, {4, 18}});
    case Kind::eI: return census(60, 120, 62, {{3, 20}, {4, 30}, {5, 12}});
    case Kind::tCO: return census(48, 72, 26, {{4, 12}, {6, 8}, {8, 6}});
    case Kind::tID: return census(120, 180, 62, {{4, 30}, {6, 20}, {10, 12}});
    case Kind::sC: return census(24, 60, 38, {{3, 32}, {4, 6}});
    case Kind::sD: return census(60, 150, 92, {{3, 80}, {5, 12}});
    case Kind::Prism:
      return n == 4 ? census(8, 12, 6, {{4, 6}}) : census(2 * n, 3 * n, n + 2, {{4, n}, {n, 2}});
    case Kind::Antiprism:
      return n == 3 ? census(6, 12, 8, {{3, 8}}) : census(2 * n, 4 * n, 2 * n + 2, {{3, 2 * n}, {n, 2}});
  }
  return {};
}

Polyhedron host_tetrahedron() { return tetrahedron(1.0); }

double truncated_cube_depth() {
  const double s = std::numbers::sqrt2;
  return (2.0 + s) / (3.0 + 2.0 * s);
}

double truncated_dodecahedron_depth() { return (2.0 + kGolden) / (3.0 + 2.0 * kGolden); }

Polyhedron build(const SolidName &name) {
  switch (name.kind) {
    case Kind::T: return host_tetrahedron();
    case Kind::C: return cube();
    case Kind::D: return dodecahedron();
    case Kind::Prism: return prism(name.n);
    case Kind::Antiprism: return antiprism(name.n);
    case Kind::tT: return vertex_truncate(host_tetrahedron(), 1.0 / 3.0);
    default: break;
  }

  const bool on_octahedron = name.kind == Kind::O || name.kind == Kind::tO || name.kind == Kind::CO ||
                             name.kind == Kind::tC || name.kind == Kind::eO || name.kind == Kind::tCO ||
                             name.kind == Kind::sC;
  const Polyhedron seed = on_octahedron ? octahedron_in_T().solid : icosahedron_in_T().solid;

  Polyhedron solid;
  switch (name.kind) {
    case Kind::O:
    case Kind::I: solid = seed; break;
    case Kind::tO:
    case Kind::tI: solid = vertex_truncate(seed, 1.0 / 3.0); break;
    case Kind::CO:
    case Kind::ID: solid = vertex_truncate(seed, 0.5); break;
    case Kind::tC: solid = vertex_truncate(seed, truncated_cube_depth()); break;
    case Kind::tD: solid = vertex_truncate(seed, truncated_dodecahedron_depth()); break;
    case Kind::eO:
    case Kind::eI:
      solid = vertex_edge_truncate(seed, solve_ve_params(seed_dihedral(seed), VeMode::Expand), {}, true);
      break;
    case Kind::tCO:
    case Kind::tID:
      solid = vertex_edge_truncate(seed, solve_ve_params(seed_dihedral(seed), VeMode::Omnitruncate), {}, true);
      break;
    case Kind::sC: solid = skew_truncate(seed, make_snub_spec(90.0)); break;
    case Kind::sD: solid = skew_truncate(seed, make_snub_spec(108.0)); break;
    default: break;
  }
  return on_octahedron ? from_octahedron_frame(solid) : from_icosahedron_frame(solid);
}

}  // namespace polycut
