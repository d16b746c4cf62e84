#pragma once

namespace polycut {

// Absolute slacks for O(1) coordinates. Invariant: 0 < weld <= coplanar <= verify < 1.
struct Tolerance {
  double weld = 1e-9;      // two points closer than this are the same vertex
  double coplanar = 1e-8;  // a point this close to a plane lies on it
  double verify = 1e-7;    // regularity / angle / transitivity slack

  constexpr bool valid() const {
    return 0.0 < weld && weld <= coplanar && coplanar <= verify && verify < 1.0;
  }
};

}  // namespace polycut
