#pragma once

#include <vector>

#include "ttk/diagram.hpp"

namespace ttk::detail {

/// Removes vertices of alpha whose corner triangle holds no puncture lift and
/// is not crossed by alpha; an isotopy in the punctured torus. Repeats until
/// no vertex can go.
PlanarCurve tighten(const PlanarCurve& curve, const std::vector<Point>& punctures);

}  // namespace ttk::detail
