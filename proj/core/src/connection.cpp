#include "tdcalc/connection.hpp"

#include <bit>
#include <stdexcept>

namespace tdcalc {

namespace {

int angle_slot(const Chart& chart, int angle) {
  auto fr = frame(chart);
  for (std::size_t p = 0; p < fr.size(); ++p)
    if (fr[p].kind == FrameSlot::Kind::DAngle && fr[p].index == angle)
      return static_cast<int>(p);
  throw std::invalid_argument("angle has no frame covector on this chart");
}

}  // namespace

Multivector action_generator(const TorusAction& action, int j) {
  const Chart& chart = *action.chart;
  Multivector out(action.chart);
  const auto& row = action.matrix.at(j);
  for (int b = 0; b < chart.num_angles(); ++b) {
    if (row.at(b) == 0) continue;
    out += fn::c(GaussianRational(row[b]), chart) *
           Multivector::vector(action.chart, angle_slot(chart, b));
  }
  return out;
}

bool check_connection(const ConnectionForm& conn, const TorusAction& action) {
  const Chart& chart = *action.chart;
  int k = conn.rank();
  if (k != action.rank()) return false;
  for (int c = 0; c < k; ++c) {
    if (conn.theta[c].is_zero()) return false;
    if (!conn.theta[c].chart()->same_shape(chart)) return false;
    if (conn.theta[c].max_degree() != 1 || !conn.theta[c].coefficient(0).is_zero())
      return false;
    if (!is_invariant(conn.theta[c], action)) return false;
    for (int j = 0; j < k; ++j) {
      FnElem v = contract(action_generator(action, j), conn.theta[c])
                     .coefficient(0);
      FnElem want = fn::c(j == c ? 1 : 0, chart);
      if (v != want) return false;
    }
  }
  return true;
}

std::vector<Form> curvature(const ConnectionForm& conn,
                            const TorusAction& action) {
  const Chart& chart = *action.chart;
  std::vector<Form> out;
  for (const Form& th : conn.theta) {
    Form K = d(th);
    auto fr = frame(*K.chart());
    for (const auto& [mask, f] : K.terms()) {
      for (FrameMask rest = mask; rest;) {
        int p = std::countr_zero(rest);
        rest &= rest - 1;
        if (fr[p].kind == FrameSlot::Kind::DAngle)
          throw std::logic_error("curvature is not basic: angle leg survives");
      }
      for (const auto& [key, v] : f.terms()) {
        (void)v;
        for (int e : key.fourier)
          if (e != 0)
            throw std::logic_error(
                "curvature is not basic: angle-dependent coefficient");
      }
    }
    (void)chart;
    out.push_back(std::move(K));
  }
  return out;
}

}  // namespace tdcalc
