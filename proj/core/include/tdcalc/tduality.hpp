#pragma once

#include "tdcalc/connection.hpp"
#include "tdcalc/form.hpp"

namespace tdcalc {

/// Correspondence chart of two local models over the same base: shared radii
/// and x, duplicated angles (hatted names on the right block).
struct CorrChart {
  ChartPtr corr;
  ChartPtr left;
  ChartPtr right;
  MonomialMap p;     // corr -> left projection
  MonomialMap phat;  // corr -> right projection
  std::vector<int> left_angle_on_corr;   // left angle j -> corr angle index
  std::vector<int> right_angle_on_corr;  // right angle j -> corr angle index
};

/// Merges two same-shape elliptic charts into their correspondence chart.
CorrChart make_correspondence(ChartPtr left, ChartPtr right);

struct DualityData {
  CorrChart cc;
  Form F;     // over cc.corr
  Form H;     // over cc.left
  Form Hhat;  // over cc.right
  TorusAction left_action;   // over cc.left
  TorusAction right_action;  // over cc.right
};

/// The combined T^{2k}-action on the correspondence chart.
TorusAction corr_action(const DualityData& data);
/// Left/right action transported to the correspondence chart.
TorusAction side_action_on_corr(const DualityData& data, bool right);

struct CheckFReport {
  bool inputs_ok = false;   // H, Hhat closed and invariant
  bool invariant = false;   // F invariant under T^{2k}
  bool cochain = false;     // dF = p*H - phat*Hhat
  bool nondeg = false;      // fiber pairing determinant a nonzero constant
  bool pass = false;
  std::string detail;
};

CheckFReport check_F(const DualityData& data);

/// tau(rho) = i_{X_1^...^X_k}(e^F ^ p*rho), reinterpreted on the right chart.
/// Throws if rho is not invariant or left-angle data survives.
Form tau(const Form& rho, const DualityData& data);

/// Reverse transform with the roles swapped and F replaced by -F.
Form tau_reverse(const Form& rhohat, const DualityData& data);

struct CochainReport {
  bool ok = false;         // d_Hhat∘tau = sign * tau∘d_H on all samples
  int sign = 0;            // the one global sign (0 if undetermined)
  bool roundtrip_ok = false;
  int roundtrip_sign = 0;  // tau_reverse∘tau = roundtrip_sign * id
};

CochainReport cochain_verify(const DualityData& data,
                             const std::vector<Form>& samples);

/// F = -sum_i p*theta_i ^ phat*thetahat_i on the correspondence chart.
Form build_F_from_connections(const CorrChart& cc, const ConnectionForm& theta,
                              const ConnectionForm& thetahat);

}  // namespace tdcalc
