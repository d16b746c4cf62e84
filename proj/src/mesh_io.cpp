#include "polycut/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace polycut {

namespace {

std::string format_coord(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

[[noreturn]] void malformed(const std::string &what) { throw GeometryError(ErrorKind::MalformedFile, what); }

Polyhedron checked(std::vector<Vec3> vertices, std::vector<Face> faces, const std::string &where) {
  if (vertices.empty()) malformed(where + ": no vertices");
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].size() < 3) malformed(where + ": face " + std::to_string(f) + " has fewer than 3 vertices");
    for (int id : faces[f]) {
      if (id < 0 || id >= static_cast<int>(vertices.size())) {
        malformed(where + ": face " + std::to_string(f) + " index " + std::to_string(id) + " out of range");
      }
    }
  }
  return assemble(std::move(vertices), std::move(faces));
}

std::string slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed(path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

void write_obj(std::ostream &os, const Polyhedron &p, const std::string &name) {
  if (!name.empty()) os << "o " << name << "\n";
  for (const Vec3 &v : p.vertices()) {
    os << "v " << format_coord(v.x) << " " << format_coord(v.y) << " " << format_coord(v.z) << "\n";
  }
  for (const Face &f : p.faces()) {
    os << "f";
    for (int id : f) os << " " << id + 1;
    os << "\n";
  }
}

void export_obj(const Polyhedron &p, const std::filesystem::path &path, const std::string &name) {
  std::ostringstream os;
  write_obj(os, p, name);
  write_file(path, os.str());
}

Polyhedron read_obj(std::istream &is) {
  std::vector<Vec3> vertices;
  std::vector<Face> faces;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    const std::string where = "line " + std::to_string(line_no);
    if (tag == "v") {
      Vec3 v;
      if (!(ls >> v.x >> v.y >> v.z)) malformed(where + ": expected three coordinates");
      vertices.push_back(v);
    } else if (tag == "f") {
      Face face;
      std::string item;
      while (ls >> item) {
        // Accept v, v/vt, v/vt/vn and v//vn.
        const std::string head = item.substr(0, item.find('/'));
        int id = 0;
        try {
          std::size_t used = 0;
          id = std::stoi(head, &used);
          if (used != head.size()) throw std::invalid_argument(head);
        } catch (const std::exception &) {
          malformed(where + ": bad face index '" + item + "'");
        }
        if (id < 1 || id > static_cast<int>(vertices.size())) malformed(where + ": face index out of range");
        face.push_back(id - 1);
      }
      faces.push_back(std::move(face));
    }
  }
  return checked(std::move(vertices), std::move(faces), "obj");
}

Polyhedron import_obj(const std::filesystem::path &path) {
  std::istringstream is(slurp(path));
  return read_obj(is);
}

std::string to_json(const Polyhedron &p, const std::string &name) {
  // Doubles are emitted in shortest round-trip form.
  nlohmann::ordered_json j;
  j["name"] = name;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const Vec3 &v : p.vertices()) j["vertices"].push_back({v.x, v.y, v.z});
  j["faces"] = p.faces();
  return j.dump(1) + "\n";
}

void export_json(const Polyhedron &p, const std::filesystem::path &path, const std::string &name) {
  write_file(path, to_json(p, name));
}

Polyhedron parse_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    malformed("json byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("faces")) {
    malformed("json: expected an object with \"vertices\" and \"faces\"");
  }
  std::vector<Vec3> vertices;
  std::vector<Face> faces;
  try {
    for (const auto &v : j.at("vertices")) {
      if (!v.is_array() || v.size() != 3) malformed("json: vertex " + std::to_string(vertices.size()) + " is not [x, y, z]");
      vertices.push_back({v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
    }
    for (const auto &f : j.at("faces")) faces.push_back(f.get<Face>());
  } catch (const nlohmann::json::exception &e) {
    malformed(std::string("json: ") + e.what());
  }
  return checked(std::move(vertices), std::move(faces), "json");
}

Polyhedron import_json(const std::filesystem::path &path) { return parse_json(slurp(path)); }

}  // namespace polycut
