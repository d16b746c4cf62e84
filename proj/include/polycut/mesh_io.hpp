#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "polycut/geom.hpp"

namespace polycut {

// `v x y z` lines then `f i j k ...` lines, 1-based, counterclockwise from
// outside. Coordinates use 17 significant digits.
void write_obj(std::ostream &os, const Polyhedron &p, const std::string &name = {});
void export_obj(const Polyhedron &p, const std::filesystem::path &path, const std::string &name = {});
Polyhedron read_obj(std::istream &is);
Polyhedron import_obj(const std::filesystem::path &path);

// {"name": ..., "vertices": [[x, y, z], ...], "faces": [[i, ...], ...]}, 0-based.
std::string to_json(const Polyhedron &p, const std::string &name);
void export_json(const Polyhedron &p, const std::filesystem::path &path, const std::string &name);
Polyhedron parse_json(const std::string &text);
Polyhedron import_json(const std::filesystem::path &path);

}  // namespace polycut
