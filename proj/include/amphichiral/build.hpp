#pragma once

#include <string_view>

#include "amphichiral/conway.hpp"
#include "amphichiral/diagram.hpp"

namespace amphi {

// Numerator closure of the tangle described by `expr`, as an alternating
// diagram whose crossings are all of type A with respect to the shaded
// (non-outer) regions. Leaves must share one sign; an all-negative
// expression yields the mirror of its positive counterpart.
Diagram build(const TangleExpr& expr);
Diagram build(std::string_view conway);

}  // namespace amphi
