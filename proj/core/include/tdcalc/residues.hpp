#pragma once

#include <stdexcept>

#include "tdcalc/form.hpp"

namespace tdcalc {

/// Restriction of an angle-dependent function to a degeneracy stratum: the
/// would-be pullback depends on the normal circle angle.
struct NotBasicError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Restriction of a function with a pole along the stratum.
struct SingularRestrictionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Restriction of a coefficient function to {r_i = 0}. keep_angle selects the
/// S^1 ND picture (Fourier modes of the normal angle survive as free-angle
/// modes) versus the honest stratum (any surviving normal Fourier mode is a
/// NotBasicError). Result lives over demote_r / remove_pair of the chart.
FnElem restrict_to_stratum(const FnElem& f, const Chart& chart, int i,
                           bool keep_angle);

/// Res_q: coefficient of dlogr_i ^ dth_i restricted to {r_i = 0}; the other
/// elliptic coordinates stay formal. Result over remove_pair(chart, i).
Form res_q(const Form& w, int i);

/// Res_r: i_{r_i dr_i} then restriction keeping th_i as a free angle.
/// Result over demote_r(chart, i).
Form res_r(const Form& w, int i);

enum class PointResidueKind { RR, RTheta, ThetaTheta };

/// Point residues on the double stratum {r_i = r_j = 0}, i != j:
/// w(r_i dr_i, r_j dr_j), w(r_i dr_i, d_th_j), w(d_th_i, d_th_j).
/// Result over the chart with both pairs removed.
FnElem res_point(const Form& w, PointResidueKind kind, int i, int j);

/// Real-log residue: i_{x_i dx_i} then restriction to {x_i = 0}.
Form res_log(const Form& w, int i);
/// Second real-log residue w(x_i dx_i, x_j dx_j) on {x_i = x_j = 0}.
FnElem res_log2(const Form& w, int i, int j);

}  // namespace tdcalc
