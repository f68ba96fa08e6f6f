#pragma once

#include "tdcalc/chart.hpp"
#include "tdcalc/fnelem.hpp"

namespace tdcalc {

/// T^k-action on a chart: generator e_j acts by the angle field
/// a(e_j) = sum_i matrix[j][i] * d_{angle_i}.
struct TorusAction {
  ChartPtr chart;
  std::vector<std::vector<int>> matrix;  // k rows, chart->num_angles() columns

  int rank() const { return static_cast<int>(matrix.size()); }
  void validate() const;
};

/// Standardness: GL(k,Z)-equivalent to a selection matrix of k distinct
/// angles. Concretely: exactly k nonzero columns, and the square matrix they
/// form has determinant ±1.
bool is_standard(const TorusAction& action);

/// Projection onto the invariant Fourier modes: keeps the monomials whose
/// Fourier vector is annihilated by every generator row.
FnElem torus_average(const FnElem& f, const TorusAction& action);

bool is_invariant_fn(const FnElem& f, const TorusAction& action);

}  // namespace tdcalc
