#pragma once

#include <array>
#include <cmath>
#include <ostream>

namespace polycut {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr Vec3 &operator+=(const Vec3 &o) { x += o.x; y += o.y; z += o.z; return *this; }
  constexpr Vec3 &operator-=(const Vec3 &o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  constexpr Vec3 &operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

  bool operator==(const Vec3 &) const = default;

  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr Vec3 operator*(double s, const Vec3 &v) { return v * s; }

constexpr double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3 &a, const Vec3 &b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3 &v) { return std::sqrt(dot(v, v)); }
inline double distance(const Vec3 &a, const Vec3 &b) { return norm(a - b); }

inline Vec3 normalized(const Vec3 &v) {
  const double n = norm(v);
  return n > 0.0 ? v / n : v;
}

inline std::ostream &operator<<(std::ostream &os, const Vec3 &v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

// Row-major 3x3 matrix. Only what rigid motions and frames need.
struct Mat3 {
  std::array<Vec3, 3> rows{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};

  static Mat3 from_columns(const Vec3 &c0, const Vec3 &c1, const Vec3 &c2) {
    Mat3 m;
    m.rows = {Vec3{c0.x, c1.x, c2.x}, Vec3{c0.y, c1.y, c2.y}, Vec3{c0.z, c1.z, c2.z}};
    return m;
  }

  Vec3 operator*(const Vec3 &v) const { return {dot(rows[0], v), dot(rows[1], v), dot(rows[2], v)}; }

  Mat3 operator*(const Mat3 &o) const {
    const Mat3 t = o.transposed();
    Mat3 m;
    for (int i = 0; i < 3; ++i) m.rows[i] = {dot(rows[i], t.rows[0]), dot(rows[i], t.rows[1]), dot(rows[i], t.rows[2])};
    return m;
  }

  Mat3 transposed() const {
    return from_columns(rows[0], rows[1], rows[2]);
  }

  double determinant() const { return dot(rows[0], cross(rows[1], rows[2])); }
};

}  // namespace polycut
