#pragma once

#include <array>

#include "tdcalc/form.hpp"
#include "tdcalc/monomial_map.hpp"

namespace tdcalc {

/// Finite chart cover with monomial transitions. transition (from, to) maps
/// chart `from` coordinates to chart `to` coordinates on the overlap, i.e.
/// a MonomialMap with domain = charts[from], codomain = charts[to]; forms on
/// `to` pull back along it to forms on `from`.
struct Atlas {
  struct Transition {
    int from = 0;
    int to = 0;
    MonomialMap map;
  };

  std::vector<ChartPtr> charts;
  std::vector<Transition> transitions;
  /// Triple overlaps (a, b, c) on which the cocycle condition
  /// T(b,c)∘T(a,b) = T(a,c) must hold.
  std::vector<std::array<int, 3>> triples;

  const MonomialMap& transition(int from, int to) const;
};

/// Cocycle condition on every declared triple, plus inverse pairs
/// T(b,a)∘T(a,b) = id whenever both directions are declared.
bool atlas_cocycle_check(const Atlas& atlas);

enum class GlueMode {
  Exact,       // pullbacks agree coefficient-wise
  Projective,  // agree up to one invertible monomial per overlap
};

/// True iff for every transition (a, b):
/// pullback(forms[b], T(a,b)) matches forms[a] in the given mode.
bool atlas_check_global(const Atlas& atlas, const std::vector<Form>& forms,
                        GlueMode mode = GlueMode::Exact);

}  // namespace tdcalc
