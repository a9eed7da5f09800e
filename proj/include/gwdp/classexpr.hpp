#pragma once

#include <gwdp/surface.hpp>

#include <string>
#include <string_view>

namespace gwdp {

// Textual class syntax, mirroring the usual divisor notation:
//   expr  := dterm { sign eterm }        (blow-up surfaces)
//          | "(" int "," int ")"         (quadric)
//   dterm := [int] "L"
//   eterm := [int] "E" int
//   sign  := "+" | "-"
// An omitted coefficient means 1; whitespace is ignored; E-indices must be
// distinct and <= k; unmentioned Ei get coefficient 0. "5L-2E1" therefore
// parses to (5, 2), i.e. 5L - 2E1, and "0L+E1" to the exceptional class E1.
ClassVec parseClass(std::string_view text, const Surface& surface);

// Canonical form: parse(format(v)) == v and format(parse(s)) is canonical.
// Zero E-coefficients are omitted, unit coefficients print bare ("L-E1").
std::string formatClass(const Surface& surface, const ClassVec& beta);

}  // namespace gwdp
