#pragma once

#include <stdexcept>
#include <string>

#include "tdcalc/form.hpp"

namespace tdcalc {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int pos)
      : std::runtime_error(msg + " (at column " + std::to_string(pos + 1) + ")"),
        pos(pos) {}
  int pos;
};

/// Parses the CLI expression grammar over the given chart.
///
/// Atoms: frame covectors by label (dlr1, dth2, dthh1, dps1, dx1, ...),
/// dlz<i>/dlzb<i>/dz<i>/dzb<i> sugar on elliptic charts, r<i>^<int>,
/// x<i>^<nat>, E<angle>[<int>], z<i>/zb<i>, @param^<int>, i, rationals p/q.
/// Operators: + - * ^ / (on invertible scalars), exp(...) the exterior
/// exponential. parse_form(print) round-trips on normalized forms.
Form parse_form(const std::string& text, ChartPtr chart);

}  // namespace tdcalc
