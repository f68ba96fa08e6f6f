#pragma once

#include "tdcalc/form.hpp"
#include "tdcalc/monomial_map.hpp"

namespace tdcalc {

/// Locally principal divisor ideal with a single monomial generator.
struct Divisor {
  FnElem generator;
  FrameKind kind = FrameKind::Elliptic;
};

/// Chart-level blow-down p': (v_1,...,z_i,...,v_l) -> (z_1,...,z_l),
/// z_j = z_i * v_j for j != i. Source radii/angles are named rz<i>/thz<i>
/// and rv<j>/thv<j>; m untouched real coordinates ride along.
struct BlowdownMap {
  int l = 0;
  int i = 0;  // distinguished chart index, 1-based
  ChartPtr source;
  ChartPtr target;
  MonomialMap map;  // domain = source, codomain = target
};

BlowdownMap blowdown_chart(int l, int i, int extra_real = 0);

/// p'* of a form over the target chart.
Form pullback_blowdown(const Form& a, const BlowdownMap& bd);

/// Radical of the pulled-back generator: positive r-exponents reduce to 2.
Divisor induced_divisor(const Divisor& I, const BlowdownMap& bd);

/// Pulls back the target frame volume and checks it is a nonzero constant
/// multiple of the source volume adapted to the induced divisor (smooth
/// directions contribute r^2 dlogr ^ dth in the elliptic frame).
bool fiberwise_iso_check(const BlowdownMap& bd, const Divisor& induced);

}  // namespace tdcalc
