#pragma once

#include "ttk/geometry.hpp"

namespace ttk::detail {

/// Orientation conventions of the winding moves. The defaults are the values
/// that reproduce the anchor diagrams; they are exposed only so convention
/// experiments can vary them.
struct WindingConvention {
  IVec longitude{1, 0};
  IVec meridian{0, -1};
  int ccw_sign = 1;
  int cw_sign = -1;
  /// Passing an obstacle on the left means the obstacle lies to the right of
  /// the moving point's straight run.
  bool left_means_obstacle_on_right = true;
  int meridian_sign = 1;
  /// Safety valve on the size of the dragged curve.
  std::size_t max_vertices = 200000;
  /// Initial position of z relative to w; the two sit on either side of alpha.
  Point z_offset{Rational(-1, 32), Rational(1, 80)};
};

WindingConvention& winding_convention();

}  // namespace ttk::detail
