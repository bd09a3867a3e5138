#pragma once
// PSQF binary field format.
//   magic "PSQF" | version u32 = 1 | dim u32 | per axis: min f64, max f64,
//   n u64 | hbar f64 | theta f64 | payload: interleaved (re, im) f64,
//   row-major, last axis fastest.  All integers and floats little-endian.

#include "psqm/phase_grid.hpp"

#include <string>

namespace psqm {

void write_field(const std::string& path, const Field& f);
Field read_field(const std::string& path);

}  // namespace psqm
