#include "tdcalc/monomial_map.hpp"

#include <stdexcept>

namespace tdcalc {

MonomialMap MonomialMap::identity(ChartPtr chart) {
  MonomialMap m;
  m.domain = chart;
  m.codomain = chart;
  m.r_exp.assign(chart->num_r, std::vector<int>(chart->num_r, 0));
  m.r_scale.assign(chart->num_r, Rational(1));
  for (int i = 0; i < chart->num_r; ++i) m.r_exp[i][i] = 1;
  m.angle_comb.assign(chart->num_angles(),
                      std::vector<int>(chart->num_angles(), 0));
  for (int a = 0; a < chart->num_angles(); ++a) m.angle_comb[a][a] = 1;
  for (int s = 0; s < chart->num_x; ++s) m.x_of.push_back(s);
  return m;
}

void MonomialMap::validate() const {
  if (!domain || !codomain) throw std::invalid_argument("map without charts");
  if (static_cast<int>(r_exp.size()) != codomain->num_r ||
      static_cast<int>(r_scale.size()) != codomain->num_r ||
      static_cast<int>(angle_comb.size()) != codomain->num_angles() ||
      static_cast<int>(x_of.size()) != codomain->num_x)
    throw std::invalid_argument("map component count mismatch");
  for (const auto& row : r_exp)
    if (static_cast<int>(row.size()) != domain->num_r)
      throw std::invalid_argument("radius exponent row size");
  for (const Rational& s : r_scale)
    if (s <= 0) throw std::invalid_argument("radius scale must be positive");
  for (const auto& row : angle_comb)
    if (static_cast<int>(row.size()) != domain->num_angles())
      throw std::invalid_argument("angle combination row size");
  for (int s : x_of)
    if (s < 0 || s >= domain->num_x)
      throw std::invalid_argument("x index out of range");
  if (domain->params != codomain->params)
    throw std::invalid_argument("parameter lists must agree");
}

static Rational rational_pow(const Rational& q, int e) {
  Rational acc(1), base = q;
  int n = e < 0 ? -e : e;
  for (int k = 0; k < n; ++k) acc *= base;
  if (e < 0) return Rational(1) / acc;
  return acc;
}

FnElem substitute(const FnElem& f, const MonomialMap& map) {
  map.validate();
  const Chart& dom = *map.domain;
  FnElem out;
  for (const auto& [k, v] : f.terms()) {
    ExpKey dk = ExpKey::zero(dom);
    GaussianRational coeff = v;
    for (int i = 0; i < map.codomain->num_r; ++i) {
      if (k.r[i] == 0) continue;
      for (int j = 0; j < dom.num_r; ++j) dk.r[j] += k.r[i] * map.r_exp[i][j];
      if (map.r_scale[i] != 1)
        coeff *= GaussianRational(rational_pow(map.r_scale[i], k.r[i]));
    }
    for (int a = 0; a < map.codomain->num_angles(); ++a) {
      if (k.fourier[a] == 0) continue;
      for (int b = 0; b < dom.num_angles(); ++b)
        dk.fourier[b] += k.fourier[a] * map.angle_comb[a][b];
    }
    for (int s = 0; s < map.codomain->num_x; ++s) dk.x[map.x_of[s]] += k.x[s];
    dk.param = k.param;
    out += FnElem::monomial(coeff, std::move(dk));
  }
  return out;
}

MonomialMap compose(const MonomialMap& psi, const MonomialMap& phi) {
  psi.validate();
  phi.validate();
  if (!psi.domain->same_shape(*phi.codomain))
    throw std::invalid_argument("compose: chart mismatch");
  MonomialMap out;
  out.domain = phi.domain;
  out.codomain = psi.codomain;
  out.r_exp.assign(psi.codomain->num_r,
                   std::vector<int>(phi.domain->num_r, 0));
  out.r_scale.assign(psi.codomain->num_r, Rational(1));
  for (int i = 0; i < psi.codomain->num_r; ++i) {
    Rational scale = psi.r_scale[i];
    for (int m = 0; m < psi.domain->num_r; ++m) {
      int e = psi.r_exp[i][m];
      if (e == 0) continue;
      for (int j = 0; j < phi.domain->num_r; ++j)
        out.r_exp[i][j] += e * phi.r_exp[m][j];
      scale *= rational_pow(phi.r_scale[m], e);
    }
    out.r_scale[i] = scale;
  }
  out.angle_comb.assign(psi.codomain->num_angles(),
                        std::vector<int>(phi.domain->num_angles(), 0));
  for (int a = 0; a < psi.codomain->num_angles(); ++a)
    for (int m = 0; m < psi.domain->num_angles(); ++m) {
      int e = psi.angle_comb[a][m];
      if (e == 0) continue;
      for (int b = 0; b < phi.domain->num_angles(); ++b)
        out.angle_comb[a][b] += e * phi.angle_comb[m][b];
    }
  for (int s = 0; s < psi.codomain->num_x; ++s)
    out.x_of.push_back(phi.x_of[psi.x_of[s]]);
  return out;
}

bool is_identity(const MonomialMap& map) {
  map.validate();
  if (!map.domain->same_shape(*map.codomain)) return false;
  MonomialMap id = MonomialMap::identity(map.domain);
  return map.r_exp == id.r_exp && map.r_scale == id.r_scale &&
         map.angle_comb == id.angle_comb && map.x_of == id.x_of;
}

}  // namespace tdcalc
