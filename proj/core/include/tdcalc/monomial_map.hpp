#pragma once

#include "tdcalc/chart.hpp"
#include "tdcalc/fnelem.hpp"

namespace tdcalc {

/// A coordinate map phi: domain chart -> codomain chart whose components are
/// monomials: each codomain radius is a positive-rational multiple of a
/// product of domain radii, each codomain angle an integer combination of
/// domain angles, each codomain x a domain x. substitute(f) computes f∘phi
/// (a ring homomorphism); forms pull back along phi with dlog-linear frames.
struct MonomialMap {
  ChartPtr domain;
  ChartPtr codomain;
  // r_exp[i][j]: exponent of domain radius j in codomain radius i.
  std::vector<std::vector<int>> r_exp;
  // scale[i]: positive rational factor of codomain radius i (Z-scaling maps).
  std::vector<Rational> r_scale;
  // angle_comb[a][b]: coefficient of domain angle b in codomain angle a.
  std::vector<std::vector<int>> angle_comb;
  // x_of[s]: domain x index realizing codomain x s.
  std::vector<int> x_of;

  static MonomialMap identity(ChartPtr chart);
  void validate() const;
};

/// f∘phi: exact pullback of a coefficient function along the map.
FnElem substitute(const FnElem& f, const MonomialMap& map);

/// psi∘phi for phi: A -> B, psi: B -> C.
MonomialMap compose(const MonomialMap& psi, const MonomialMap& phi);

bool is_identity(const MonomialMap& map);

}  // namespace tdcalc
