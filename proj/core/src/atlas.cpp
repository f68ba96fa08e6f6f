#include "tdcalc/atlas.hpp"

#include <stdexcept>

namespace tdcalc {

const MonomialMap& Atlas::transition(int from, int to) const {
  for (const auto& t : transitions)
    if (t.from == from && t.to == to) return t.map;
  throw std::out_of_range("no declared transition for this overlap");
}

namespace {

bool same_map(const MonomialMap& a, const MonomialMap& b) {
  return a.domain->same_shape(*b.domain) &&
         a.codomain->same_shape(*b.codomain) && a.r_exp == b.r_exp &&
         a.r_scale == b.r_scale && a.angle_comb == b.angle_comb &&
         a.x_of == b.x_of;
}

bool has_transition(const Atlas& atlas, int from, int to) {
  for (const auto& t : atlas.transitions)
    if (t.from == from && t.to == to) return true;
  return false;
}

/// Single-term monomial g with b = g*a, or zero if none exists.
FnElem monomial_ratio(const FnElem& b, const FnElem& a) {
  if (a.is_zero()) return FnElem::zero();
  FnElem lead;
  {
    const auto& [k, v] = *a.terms().begin();
    lead = FnElem::monomial(v, k);
  }
  if (b.is_zero()) return FnElem::zero();
  const auto& [kb, vb] = *b.terms().begin();
  FnElem g = FnElem::monomial(vb, kb) * lead.inverse();
  if (!g.is_single_term()) return FnElem::zero();
  for (int e : g.terms().begin()->first.x)
    if (e != 0) return FnElem::zero();
  return b == g * a ? g : FnElem::zero();
}

}  // namespace

bool atlas_cocycle_check(const Atlas& atlas) {
  for (const auto& [a, b, c] : atlas.triples) {
    MonomialMap composed =
        compose(atlas.transition(b, c), atlas.transition(a, b));
    if (!same_map(composed, atlas.transition(a, c))) return false;
  }
  for (const auto& t : atlas.transitions) {
    if (!has_transition(atlas, t.to, t.from)) continue;
    if (!is_identity(compose(atlas.transition(t.to, t.from), t.map)))
      return false;
  }
  return true;
}

bool atlas_check_global(const Atlas& atlas, const std::vector<Form>& forms,
                        GlueMode mode) {
  if (forms.size() != atlas.charts.size())
    throw std::invalid_argument("one form per chart required");
  for (const auto& t : atlas.transitions) {
    Form pb = pullback(forms[t.to], t.map);
    const Form& here = forms[t.from];
    if (mode == GlueMode::Exact) {
      if (!(pb == here)) return false;
      continue;
    }
    if (pb.is_zero() != here.is_zero()) return false;
    if (pb.is_zero()) continue;
    const auto& [mask, fa] = *here.terms().begin();
    FnElem g = monomial_ratio(pb.coefficient(mask), fa);
    if (g.is_zero()) return false;
    if (!(pb == g * here)) return false;
  }
  return true;
}

}  // namespace tdcalc
