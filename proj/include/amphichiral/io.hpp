#pragma once

#include <string>
#include <string_view>

#include "amphichiral/conway.hpp"
#include "amphichiral/diagram.hpp"

namespace amphi {

// Variant-tagged JSON tree:
//   {"type":"integer","value":n}
//   {"type":"sum"|"product","left":..,"right":..}
//   {"type":"ramification","parts":[..]}
//   {"type":"polyhedron","name":"6*","slots":[..]}
std::string ast_to_json(const TangleExpr& expr);
TangleExpr ast_from_json(std::string_view json_text);

// {"crossings":n,"components":k,"pd":[[a,b,c,d,over],..]}. Each crossing
// lists the labels of the edges at darts 0..3 (counterclockwise) and the
// over marker (0: darts 0 and 2 pass over). Edges are numbered from 1 along
// the components.
std::string pd_to_json(const Diagram& d);

// Accepts the document above, or a bare array of 4-tuples in the standard
// convention (see pd_from_text).
Diagram pd_from_json(std::string_view json_text);

// Standard planar diagram text: "PD[X[a,b,c,d], ...]" where each X starts
// at the incoming under edge and runs counterclockwise, so the under strand
// is a-c. Requires a connected diagram.
std::string pd_to_text(const Diagram& d);
Diagram pd_from_text(std::string_view text);

}  // namespace amphi
