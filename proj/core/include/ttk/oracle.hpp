#pragma once

#include "ttk/knotparams.hpp"
#include "ttk/laurent.hpp"

namespace ttk {

/// Symmetrized Alexander polynomial of a braid closure from the reduced Burau
/// representation: det(I - B(word)) * (1 - t) / (1 - t^n), normalized.
/// Throws std::invalid_argument when the closure is not a knot.
LaurentPoly burau_alexander(const BraidWord& word);

}  // namespace ttk
