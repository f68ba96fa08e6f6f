#include "tdcalc/tduality.hpp"

#include <bit>
#include <stdexcept>

#include "tdcalc/eval.hpp"

namespace tdcalc {

namespace {

std::string hat_name(const std::string& name) {
  if (name.rfind("th", 0) == 0) return "thh" + name.substr(2);
  if (name.rfind("ps", 0) == 0) return "psh" + name.substr(2);
  return name + "h";
}

int slot_pos(const Chart& chart, const FrameSlot& slot) {
  auto fr = frame(chart);
  for (std::size_t p = 0; p < fr.size(); ++p)
    if (fr[p] == slot) return static_cast<int>(p);
  throw std::logic_error("frame slot not present");
}

MonomialMap projection(ChartPtr corr, ChartPtr side,
                       const std::vector<int>& angle_on_corr) {
  MonomialMap m;
  m.domain = corr;
  m.codomain = side;
  for (int i = 0; i < side->num_r; ++i) {
    std::vector<int> row(corr->num_r, 0);
    row[i] = 1;
    m.r_exp.push_back(std::move(row));
    m.r_scale.push_back(Rational(1));
  }
  for (int j = 0; j < side->num_angles(); ++j) {
    std::vector<int> row(corr->num_angles(), 0);
    row[angle_on_corr[j]] = 1;
    m.angle_comb.push_back(std::move(row));
  }
  for (int s = 0; s < side->num_x; ++s) m.x_of.push_back(s);
  return m;
}

}  // namespace

CorrChart make_correspondence(ChartPtr left, ChartPtr right) {
  if (!left->same_shape(*right))
    throw std::invalid_argument("correspondence needs same-shape sides");
  if (left->kind != FrameKind::Elliptic)
    throw std::invalid_argument("correspondence needs elliptic charts");
  auto c = std::make_shared<Chart>();
  c->kind = FrameKind::Elliptic;
  c->num_r = left->num_r;
  c->num_x = left->num_x;
  c->params = left->params;
  c->r_names = left->r_names;
  c->x_names = left->x_names;
  CorrChart cc;
  cc.left_angle_on_corr.assign(left->num_angles(), -1);
  cc.right_angle_on_corr.assign(right->num_angles(), -1);
  // Declaration order: left anchored, right anchored, left free, right free.
  // With one angle per radius this puts the frame in the order
  // dlr_1, dth_1, ..., dlr_l, dth_l, dthh_1, ..., dthh_l, dps, dpsh, dx.
  auto append = [&](const Chart& side, std::vector<int>& where, bool anchored,
                    bool hat) {
    for (int j = 0; j < side.num_angles(); ++j) {
      if ((side.angle_anchor[j] >= 0) != anchored) continue;
      where[j] = c->num_angles();
      c->angle_anchor.push_back(side.angle_anchor[j]);
      c->angle_names.push_back(hat ? hat_name(side.angle_names[j])
                                   : side.angle_names[j]);
    }
  };
  append(*left, cc.left_angle_on_corr, true, false);
  append(*right, cc.right_angle_on_corr, true, true);
  append(*left, cc.left_angle_on_corr, false, false);
  append(*right, cc.right_angle_on_corr, false, true);
  cc.corr = c;
  cc.left = std::move(left);
  cc.right = std::move(right);
  cc.p = projection(cc.corr, cc.left, cc.left_angle_on_corr);
  cc.phat = projection(cc.corr, cc.right, cc.right_angle_on_corr);
  return cc;
}

TorusAction side_action_on_corr(const DualityData& data, bool right) {
  const TorusAction& side = right ? data.right_action : data.left_action;
  const auto& angle_on_corr =
      right ? data.cc.right_angle_on_corr : data.cc.left_angle_on_corr;
  TorusAction out;
  out.chart = data.cc.corr;
  for (const auto& row : side.matrix) {
    std::vector<int> mapped(data.cc.corr->num_angles(), 0);
    for (std::size_t b = 0; b < row.size(); ++b)
      mapped[angle_on_corr[b]] = row[b];
    out.matrix.push_back(std::move(mapped));
  }
  return out;
}

TorusAction corr_action(const DualityData& data) {
  TorusAction out = side_action_on_corr(data, false);
  TorusAction rt = side_action_on_corr(data, true);
  out.matrix.insert(out.matrix.end(), rt.matrix.begin(), rt.matrix.end());
  return out;
}

CheckFReport check_F(const DualityData& data) {
  CheckFReport rep;
  rep.inputs_ok = d(data.H).is_zero() && d(data.Hhat).is_zero() &&
                  is_invariant(data.H, data.left_action) &&
                  is_invariant(data.Hhat, data.right_action);
  if (!rep.inputs_ok) rep.detail = "H/Hhat not closed or not invariant";
  rep.invariant = is_invariant(data.F, corr_action(data));
  rep.cochain =
      d(data.F) == pullback(data.H, data.cc.p) -
                       pullback(data.Hhat, data.cc.phat);
  TorusAction la = side_action_on_corr(data, false);
  TorusAction ra = side_action_on_corr(data, true);
  int k = la.rank();
  rep.nondeg = (k == ra.rank());
  if (rep.nondeg) {
    QiMatrix m(k, k);
    for (int i = 0; i < k && rep.nondeg; ++i)
      for (int j = 0; j < k && rep.nondeg; ++j) {
        FnElem v = contract(action_generator(ra, j),
                            contract(action_generator(la, i), data.F))
                       .coefficient(0);
        if (!v.is_constant()) {
          rep.nondeg = false;
          rep.detail = "fiber pairing entry is not constant";
          break;
        }
        m.at(i, j) = v.constant_value();
      }
    if (rep.nondeg && m.det().is_zero()) {
      rep.nondeg = false;
      rep.detail = "fiber pairing is degenerate";
    }
  }
  rep.pass = rep.inputs_ok && rep.invariant && rep.cochain && rep.nondeg;
  return rep;
}

namespace {

/// Reinterprets a correspondence form carrying only one side's angle data as
/// a form over that side's chart (sign-tracked frame reordering).
Form project_side(const Form& a, const CorrChart& cc, bool to_right) {
  const Chart& corr = *cc.corr;
  ChartPtr side = to_right ? cc.right : cc.left;
  const auto& keep = to_right ? cc.right_angle_on_corr : cc.left_angle_on_corr;
  std::vector<int> side_angle_of(corr.num_angles(), -1);
  for (std::size_t j = 0; j < keep.size(); ++j)
    side_angle_of[keep[j]] = static_cast<int>(j);
  auto cf = frame(corr);
  std::vector<int> pos(cf.size(), -1);
  for (std::size_t pp = 0; pp < cf.size(); ++pp) {
    FrameSlot t = cf[pp];
    if (t.kind == FrameSlot::Kind::DAngle) {
      int j = side_angle_of[t.index];
      if (j < 0) continue;  // other side's angle: must not appear
      t.index = j;
    }
    pos[pp] = slot_pos(*side, t);
  }
  Form out(side);
  for (const auto& [mask, f] : a.terms()) {
    std::vector<int> dst;
    for (std::size_t b = 0; b < cf.size(); ++b)
      if (mask >> b & 1) {
        if (pos[b] < 0)
          throw std::logic_error("tau: residual other-side frame leg");
        dst.push_back(pos[b]);
      }
    FrameMask nm = 0;
    int inv = 0;
    for (std::size_t x = 0; x < dst.size(); ++x) {
      nm |= FrameMask(1) << dst[x];
      for (std::size_t y = x + 1; y < dst.size(); ++y)
        if (dst[x] > dst[y]) ++inv;
    }
    FnElem nf;
    for (const auto& [key, v] : f.terms()) {
      ExpKey nk;
      nk.r = key.r;
      nk.x = key.x;
      nk.param = key.param;
      nk.fourier.resize(keep.size());
      for (int j = 0; j < corr.num_angles(); ++j) {
        int sj = side_angle_of[j];
        if (sj >= 0)
          nk.fourier[sj] = key.fourier[j];
        else if (key.fourier[j] != 0)
          throw std::logic_error("tau: residual other-side angle dependence");
      }
      nf += FnElem::monomial(v, std::move(nk));
    }
    if (inv % 2) nf = -nf;
    out.add_term(nm, nf);
  }
  return out;
}

Form transform(const Form& rho, const DualityData& data, bool reverse) {
  const TorusAction& source_action =
      reverse ? data.right_action : data.left_action;
  if (!is_invariant(rho, source_action))
    throw std::invalid_argument("tau: form is not invariant");
  const MonomialMap& in = reverse ? data.cc.phat : data.cc.p;
  Form pb = pullback(rho, in);
  Form kernel = exterior_exp(reverse ? -data.F : data.F);
  Form total = wedge(kernel, pb);
  TorusAction fib = side_action_on_corr(data, reverse);
  Multivector X;
  for (int i = 0; i < fib.rank(); ++i) {
    Multivector g = action_generator(fib, i);
    X = (i == 0) ? g : wedge(X, g);
  }
  return project_side(contract(X, total), data.cc, !reverse);
}

}  // namespace

Form tau(const Form& rho, const DualityData& data) {
  return transform(rho, data, false);
}

Form tau_reverse(const Form& rhohat, const DualityData& data) {
  return transform(rhohat, data, true);
}

CochainReport cochain_verify(const DualityData& data,
                             const std::vector<Form>& samples) {
  CochainReport rep;
  rep.ok = true;
  rep.roundtrip_ok = true;
  for (const Form& rho : samples) {
    Form lhs = d(tau(rho, data)) + wedge(data.Hhat, tau(rho, data));
    Form rhs = tau(d(rho) + wedge(data.H, rho), data);
    if (rhs.is_zero()) {
      if (!lhs.is_zero()) rep.ok = false;
    } else {
      int s = (lhs == rhs) ? 1 : ((lhs == -rhs) ? -1 : 0);
      if (s == 0 || (rep.sign != 0 && s != rep.sign)) rep.ok = false;
      if (rep.sign == 0) rep.sign = s;
    }
    Form back = tau_reverse(tau(rho, data), data);
    if (rho.is_zero()) continue;
    int s2 = (back == rho) ? 1 : ((back == -rho) ? -1 : 0);
    if (s2 == 0 || (rep.roundtrip_sign != 0 && s2 != rep.roundtrip_sign))
      rep.roundtrip_ok = false;
    if (rep.roundtrip_sign == 0) rep.roundtrip_sign = s2;
  }
  return rep;
}

Form build_F_from_connections(const CorrChart& cc, const ConnectionForm& theta,
                              const ConnectionForm& thetahat) {
  if (theta.rank() != thetahat.rank())
    throw std::invalid_argument("connection ranks differ");
  Form F(cc.corr);
  for (int i = 0; i < theta.rank(); ++i)
    F -= wedge(pullback(theta.theta[i], cc.p),
               pullback(thetahat.theta[i], cc.phat));
  return F;
}

}  // namespace tdcalc
