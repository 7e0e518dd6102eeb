#pragma once

#include <string>

#include "ttk/chain.hpp"
#include "ttk/diagram.hpp"

namespace ttk::cli {

/// Fundamental square with alpha folded into it, beta along the bottom and top
/// edges, and the two base points.
std::string render_diagram_svg(const GenusOneDiagram& diagram);

/// Generators placed in the plane by walking the arrows (a horizontal step of
/// n_w, a vertical step of n_z), arrows drawn between them.
std::string render_staircase_svg(const KnotComplex& complex);

}  // namespace ttk::cli
