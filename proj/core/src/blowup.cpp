#include "tdcalc/blowup.hpp"

#include <stdexcept>

namespace tdcalc {

BlowdownMap blowdown_chart(int l, int i, int extra_real) {
  if (i < 1 || i > l) throw std::out_of_range("blow-down chart index");
  BlowdownMap bd;
  bd.l = l;
  bd.i = i;
  bd.target = make_elliptic_chart(l, 0, extra_real);
  auto src = std::make_shared<Chart>(*bd.target);
  for (int j = 0; j < l; ++j) {
    std::string stem = (j == i - 1) ? "z" : "v";
    src->r_names[j] = "r" + stem + std::to_string(j + 1);
    src->angle_names[j] = "th" + stem + std::to_string(j + 1);
  }
  bd.source = src;
  MonomialMap m;
  m.domain = bd.source;
  m.codomain = bd.target;
  for (int j = 0; j < l; ++j) {
    std::vector<int> row(l, 0);
    row[j] = 1;
    if (j != i - 1) row[i - 1] = 1;  // z_j = z_i * v_j
    m.r_exp.push_back(row);
    m.r_scale.push_back(Rational(1));
    m.angle_comb.push_back(std::move(row));
  }
  for (int s = 0; s < extra_real; ++s) m.x_of.push_back(s);
  bd.map = std::move(m);
  return bd;
}

Form pullback_blowdown(const Form& a, const BlowdownMap& bd) {
  return pullback(a, bd.map);
}

Divisor induced_divisor(const Divisor& I, const BlowdownMap& bd) {
  if (!I.generator.is_single_term())
    throw std::invalid_argument("divisor generator must be a monomial");
  FnElem pulled = substitute(I.generator, bd.map);
  const auto& [key, coeff] = *pulled.terms().begin();
  ExpKey rad = key;
  for (int& e : rad.r)
    if (e > 0) e = 2;
  Divisor out;
  out.kind = I.kind;
  out.generator = FnElem::monomial(coeff, std::move(rad));
  return out;
}

bool fiberwise_iso_check(const BlowdownMap& bd, const Divisor& induced) {
  const Chart& src = *bd.source;
  auto full_volume = [](ChartPtr chart) {
    Form vol = Form::scalar(chart, 1);
    int n = static_cast<int>(frame(*chart).size());
    for (int p = 0; p < n; ++p) vol = wedge(vol, Form::covector(chart, p));
    return vol;
  };
  Form pb = pullback(full_volume(bd.target), bd.map);
  if (!induced.generator.is_single_term()) return false;
  const ExpKey& gen = induced.generator.terms().begin()->first;
  // r^2 dlogr ^ dth is the smooth area form of a non-divisor direction.
  FnElem clear = fn::c(1, src);
  for (int j = 0; j < src.num_r; ++j)
    if (gen.r.at(j) == 0) clear = clear * fn::r(src, j, 2);
  Form expected = clear * full_volume(bd.source);
  if (pb.is_zero() || expected.is_zero()) return false;
  if (pb.terms().size() != 1 || expected.terms().size() != 1) return false;
  const auto& [mp, fp] = *pb.terms().begin();
  const auto& [me, fe] = *expected.terms().begin();
  if (mp != me || !fe.is_single_term()) return false;
  FnElem ratio = fp * fe.inverse();
  return ratio.is_constant() && !ratio.is_zero();
}

}  // namespace tdcalc
