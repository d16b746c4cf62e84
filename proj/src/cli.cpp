#include "polycut/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "polycut/catalog.hpp"
#include "polycut/mesh_io.hpp"
#include "polycut/truncation.hpp"
#include "polycut/verify.hpp"

namespace polycut {

namespace {

std::string fmt(double x, int digits = 12) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

const char *yes_no(bool b) { return b ? "yes" : "no"; }

void print_report(std::ostream &out, const VerifyReport &r) {
  out << "solid:               " << r.solid_name << "\n"
      << "uniform:             " << yes_no(r.is_uniform) << "\n"
      << "edge spread:         " << fmt(r.max_edge_spread, 3) << "\n"
      << "face side deviation: " << fmt(r.irregularity.edge_deviation, 3) << "\n"
      << "face angle dev.:     " << fmt(r.irregularity.angle_deviation, 3) << " rad\n";
  if (r.embedding_k) out << "faces in T:          " << *r.embedding_k << "\n";
  if (r.tetrahedral_quadruple) {
    out << "tetrahedral normals: " << yes_no(*r.tetrahedral_quadruple) << " (margin " << fmt(r.quadruple_margin, 3)
        << ")\n";
  }
  out << "distinct face-pair angles: " << r.dihedral_spectrum.angles.size() << "\n";
  if (!r.note.empty()) out << "note:                " << r.note << "\n";
  out << "result:              " << (r.pass ? "PASS" : "FAIL") << "\n";
}

VerifyReport report_for(const SolidName &name, const Tolerance &tol) {
  const Polyhedron p = build(name);
  VerifyReport r;
  if (name.embeds_in_tetrahedron()) {
    r = verify_embedding(name.str(), p, host_tetrahedron(), tol);
  } else {
    r.solid_name = name.str();
    r.irregularity = face_regularity(p);
    r.max_edge_spread = edge_spread(p);
    r.is_uniform = is_uniform(p, tol);
    r.quadruple_margin = tetrahedral_quadruple_margin(p);
    r.tetrahedral_quadruple = r.quadruple_margin <= tol.verify;
    r.dihedral_spectrum = face_pair_angles(p, tol.verify);
    // T trivially carries its own normals; the others must not.
    r.pass = r.is_uniform && (name.kind == SolidName::Kind::T || !*r.tetrahedral_quadruple);
  }
  r.signature_ok = signature(p) == expected_signature(name);
  if (!r.signature_ok) r.note = "unexpected signature " + to_string(signature(p));
  r.pass = r.pass && r.signature_ok;
  return r;
}

int cmd_params(std::ostream &out, const SolidName &name) {
  using K = SolidName::Kind;
  const double octa = std::acos(-1.0 / 3.0);
  const double icosa = std::acos(-std::sqrt(5.0) / 3.0);
  switch (name.kind) {
    case K::eO:
    case K::tCO:
    case K::eI:
    case K::tID: {
      const bool on_o = name.kind == K::eO || name.kind == K::tCO;
      const bool omni = name.kind == K::tCO || name.kind == K::tID;
      const double theta = on_o ? octa : icosa;
      const TruncationParams tp = solve_ve_params(theta, omni ? VeMode::Omnitruncate : VeMode::Expand);
      const DerivedLengths d = derived_lengths(tp, theta);
      out << "seed: " << (on_o ? "O" : "I") << "  dihedral: " << fmt(theta) << " rad\n"
          << "r1 (vertex): " << fmt(tp.r1, 15) << "\n"
          << "r2 (edge):   " << fmt(tp.r2, 15) << "\n"
          << "l1 = " << fmt(d.l1, 15) << "  l2 = " << fmt(d.l2, 15) << "  l3 = " << fmt(d.l3, 15) << "\n";
      if (omni) {
        out << "residuals: |l1 - l2| = " << fmt(std::abs(d.l1 - d.l2), 3)
            << "  |l1 - l3| = " << fmt(std::abs(d.l1 - d.l3), 3) << "\n";
      } else {
        out << "residuals: |l1| = " << fmt(std::abs(d.l1), 3) << "  |l2 - l3| = " << fmt(std::abs(d.l2 - d.l3), 3)
            << "\n";
      }
      return 0;
    }
    case K::sC:
    case K::sD: {
      const double alpha = name.kind == K::sC ? 90.0 : 108.0;
      const double r = snub_ratio(alpha);
      out << "alpha: " << fmt(alpha) << " deg\n"
          << (name.kind == K::sC ? "tribonacci constant: " : "snub-dodecahedral ratio: ") << fmt(r, 15) << "\n"
          << "cubic residual: " << fmt(std::abs(snub_cubic(r, alpha)), 3) << "\n";
      return 0;
    }
    case K::tT:
    case K::tO:
    case K::tI: out << "vertex depth: " << fmt(1.0 / 3.0, 15) << "\n"; return 0;
    case K::CO:
    case K::ID: out << "vertex depth: 0.5\n"; return 0;
    case K::tC: out << "vertex depth: " << fmt(truncated_cube_depth(), 15) << "\n"; return 0;
    case K::tD: out << "vertex depth: " << fmt(truncated_dodecahedron_depth(), 15) << "\n"; return 0;
    default: out << name.str() << " is a seed; no cut parameters\n"; return 0;
  }
}

int cmd_theorem(std::ostream &out, int nmax) {
  const std::vector<VerifyReport> rows = main_theorem_check(nmax);
  char line[160];
  std::snprintf(line, sizeof line, "%-6s %-8s %-4s %-10s %-10s %s\n", "solid", "uniform", "k", "T-normals", "margin",
                "result");
  out << line;
  bool all = true;
  for (const VerifyReport &r : rows) {
    std::snprintf(line, sizeof line, "%-6s %-8s %-4s %-10s %-10.3g %s%s%s\n", r.solid_name.c_str(),
                  yes_no(r.is_uniform), r.embedding_k ? std::to_string(*r.embedding_k).c_str() : "-",
                  r.tetrahedral_quadruple ? yes_no(*r.tetrahedral_quadruple) : "-", r.quadruple_margin,
                  r.pass ? "PASS" : "FAIL", r.note.empty() ? "" : "  # ", r.note.c_str());
    out << line;
    all = all && r.pass;
  }
  out << (all ? "all rows pass\n" : "some rows FAIL\n");
  return all ? 0 : 1;
}

int cmd_remark(std::ostream &out) {
  const Polyhedron ti = build({SolidName::Kind::tI, 0});
  const Polyhedron tco = build({SolidName::Kind::tCO, 0});
  const Polyhedron host = host_tetrahedron();
  const int shared = shared_face_normals(ti, tco, 1e-9);
  const int on_host = std::min(shared_face_normals(ti, host, 1e-9), shared_face_normals(tco, host, 1e-9));
  const bool a = contains(tco, ti);
  const bool b = contains(ti, tco);
  out << "shared normals: " << shared << "; tI ⊆ tCO: " << yes_no(a) << "; tCO ⊆ tI: " << yes_no(b) << "\n"
      << "normals also shared with T: " << on_host << "\n";
  return on_host == 4 && shared >= 4 && !a && !b ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Build Archimedean solids by cutting Platonic seeds and check their 4-face embeddings in T"};
  app.require_subcommand(1);

  std::string target;
  std::string out_path;
  std::string format = "obj";
  int nmax = 50;

  auto *build_cmd = app.add_subcommand("build", "write the mesh of a solid");
  build_cmd->add_option("name", target, "solid name, e.g. tCO, sD, P6, A9")->required();
  build_cmd->add_option("--out,-o", out_path, "output file (stdout if omitted)");
  build_cmd->add_option("--format,-f", format, "obj | json | text")->check(CLI::IsMember({"obj", "json", "text"}));

  auto *verify_cmd = app.add_subcommand("verify", "print a verification report");
  verify_cmd->add_option("name", target)->required();
  auto *embed_cmd = app.add_subcommand("embed", "count faces lying in faces of T");
  embed_cmd->add_option("name", target)->required();
  auto *params_cmd = app.add_subcommand("params", "print cut parameters");
  params_cmd->add_option("name", target)->required();
  auto *angles_cmd = app.add_subcommand("angles", "print the face-pair angle set");
  angles_cmd->add_option("name", target)->required();
  auto *theorem_cmd = app.add_subcommand("theorem", "check both directions of the characterization");
  theorem_cmd->add_option("--nmax", nmax, "largest prism/antiprism base")->check(CLI::Range(5, 1000));
  auto *remark_cmd = app.add_subcommand("remark", "tI and tCO share face normals but neither contains the other");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (theorem_cmd->parsed()) return cmd_theorem(out, nmax);
    if (remark_cmd->parsed()) return cmd_remark(out);

    const SolidName name = parse_solid_name(target);
    if (params_cmd->parsed()) return cmd_params(out, name);
    if (verify_cmd->parsed()) {
      const VerifyReport r = report_for(name, {});
      print_report(out, r);
      return r.pass ? 0 : 1;
    }

    const Polyhedron p = build(name);
    if (build_cmd->parsed()) {
      if (format == "text") {
        out << name.str() << ": " << to_string(signature(p)) << "\n";
      } else if (out_path.empty()) {
        if (format == "obj") write_obj(out, p, name.str());
        else out << to_json(p, name.str());
      } else {
        if (format == "obj") export_obj(p, out_path, name.str());
        else export_json(p, out_path, name.str());
        out << "wrote " << out_path << " (" << to_string(signature(p)) << ")\n";
      }
      return 0;
    }
    if (embed_cmd->parsed()) {
      try {
        const EmbeddingResult e = k_face_embedding(p, host_tetrahedron());
        out << name.str() << " in T: k = " << e.k << (e.extra_contact ? " (extra boundary contact)" : "") << "\n";
        return e.k == 4 && !e.extra_contact ? 0 : 1;
      } catch (const GeometryError &e) {
        out << name.str() << " in T: " << e.what() << "\n";
        return 1;
      }
    }
    if (angles_cmd->parsed()) {
      for (double a : face_pair_angles(p).angles) {
        out << fmt(a, 15) << " rad  " << fmt(a * 180.0 / std::numbers::pi, 12) << " deg\n";
      }
      return 0;
    }
  } catch (const GeometryError &e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidName ? 2 : 1;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace polycut
