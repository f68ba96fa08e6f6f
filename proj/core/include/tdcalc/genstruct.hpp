#pragma once

#include "tdcalc/eval.hpp"
#include "tdcalc/form.hpp"

namespace tdcalc {

/// Section X + xi of A ⊕ A*: a degree-1 field plus a one-form.
struct GenSection {
  Multivector vec;
  Form cov;
};

/// Inhomogeneous spinor with a closed three-form twist.
struct Spinor {
  Form rho;
  Form H;
};

/// <X+xi, Y+eta> = (eta(X) + xi(Y)) / 2.
FnElem pairing(const GenSection& u, const GenSection& v);

/// Dorfman bracket [[X+xi, Y+eta]]_H = [X,Y] + L_X eta - i_Y d xi + i_X i_Y H.
/// Frame fields commute, so [X,Y] reduces to coefficient derivations.
GenSection dorfman(const GenSection& u, const GenSection& v, const Form& H);

/// Clifford action (X+xi)·rho = i_X rho + xi ^ rho.
Form clifford(const GenSection& u, const Form& rho);

/// Kernel dimension of u -> u·rho over the 2n frame sections of A ⊕ A* at
/// the sample; rho is pointwise pure iff this equals n = frame rank.
int annihilator_rank(const Form& rho, const SamplePoint& at);
bool is_pure_at(const Form& rho, const SamplePoint& at);

/// Degree-reversal anti-automorphism sigma(rho_k) = (-1)^{k(k-1)/2} rho_k.
Form sigma_reversal(const Form& rho);

/// Top-degree coefficient of the Mukai pairing rho ^ sigma(conj rho),
/// over the elliptic (or other real) frame.
FnElem mukai_top(const Form& rho);
bool mukai_nondeg(const Form& rho, const SamplePoint& at);

struct StableReport {
  struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  bool closed = false;
  std::vector<Check> checks;
  bool pass = false;
};

/// Residue conditions of the stable correspondence for a closed two-form:
/// Res_q = 0 on every stratum, symmetry of the mixed point residues, and
/// Res_{r_ir_j} = -Res_{th_ith_j} on every double stratum.
StableReport stable_check(const Form& omega);

/// d rho + H ^ rho = 0, exactly. Throws if H is not closed.
bool dH_closed(const Spinor& s);

struct DescendsResult {
  bool ok = false;
  FnElem witness;  // invertible monomial f with f*rho smooth, unit Mukai
};

/// Whether the spinor line descends through the anchor: searches invertible
/// monomial rescalings f (bounded exponent box derived from the complex-frame
/// coefficients) such that f*rho is a smooth form whose Mukai pairing has an
/// invertible top complex-frame coefficient.
DescendsResult descends(const Form& rho);

}  // namespace tdcalc
