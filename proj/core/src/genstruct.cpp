#include "tdcalc/genstruct.hpp"

#include <bit>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "tdcalc/residues.hpp"

namespace tdcalc {

namespace {

void require_degree_one(const detail::AlgebraElement& e, const char* what) {
  for (const auto& [m, f] : e.terms()) {
    (void)f;
    if (mask_degree(m) != 1)
      throw std::invalid_argument(std::string(what) + " must have degree 1");
  }
}

/// X(g) for a degree-1 field X = sum f_a e_a over the commuting frame.
FnElem apply_field(const Multivector& X, const FnElem& g) {
  const Chart& chart = *X.chart();
  auto fr = frame(chart);
  FnElem out;
  for (const auto& [m, f] : X.terms())
    out += f * derive(g, chart, fr[std::countr_zero(m)]);
  return out;
}

Multivector field_bracket(const Multivector& X, const Multivector& Y) {
  Multivector out(X.chart());
  for (const auto& [m, g] : Y.terms()) out.add_term(m, apply_field(X, g));
  for (const auto& [m, f] : X.terms()) out.add_term(m, -apply_field(Y, f));
  return out;
}

}  // namespace

FnElem pairing(const GenSection& u, const GenSection& v) {
  require_degree_one(u.vec, "pairing: vector part");
  require_degree_one(v.vec, "pairing: vector part");
  FnElem s = contract(u.vec, v.cov).coefficient(0) +
             contract(v.vec, u.cov).coefficient(0);
  return GaussianRational(Rational(1, 2)) * s;
}

GenSection dorfman(const GenSection& u, const GenSection& v, const Form& H) {
  require_degree_one(u.vec, "dorfman: vector part");
  require_degree_one(v.vec, "dorfman: vector part");
  if (!d(H).is_zero()) throw std::invalid_argument("dorfman: H is not closed");
  GenSection out;
  out.vec = field_bracket(u.vec, v.vec);
  out.cov = lie_derivative(u.vec, v.cov) - contract(v.vec, d(u.cov)) +
            contract(u.vec, contract(v.vec, H));
  return out;
}

Form clifford(const GenSection& u, const Form& rho) {
  return contract(u.vec, rho) + wedge(u.cov, rho);
}

int annihilator_rank(const Form& rho, const SamplePoint& at) {
  ChartPtr chart = rho.chart();
  int n = static_cast<int>(frame(*chart).size());
  QiMatrix m(2 * n, 1 << n);
  for (int s = 0; s < 2 * n; ++s) {
    GenSection u;
    u.vec = Multivector(chart);
    u.cov = Form(chart);
    if (s < n)
      u.vec = Multivector::vector(chart, s);
    else
      u.cov = Form::covector(chart, s - n);
    for (const auto& [mask, v] : eval_form(clifford(u, rho), at))
      m.at(s, static_cast<int>(mask)) = v;
  }
  return m.kernel_dim();
}

bool is_pure_at(const Form& rho, const SamplePoint& at) {
  return annihilator_rank(rho, at) ==
         static_cast<int>(frame(*rho.chart()).size());
}

Form sigma_reversal(const Form& rho) {
  Form out(rho.chart());
  for (const auto& [m, f] : rho.terms()) {
    int k = mask_degree(m);
    out.add_term(m, (k * (k - 1) / 2) % 2 == 0 ? f : -f);
  }
  return out;
}

FnElem mukai_top(const Form& rho) {
  int n = static_cast<int>(frame(*rho.chart()).size());
  Form m = wedge(rho, sigma_reversal(conj(rho)));
  return m.coefficient((FrameMask(1) << n) - 1);
}

bool mukai_nondeg(const Form& rho, const SamplePoint& at) {
  return !eval_fn(mukai_top(rho), at).is_zero();
}

StableReport stable_check(const Form& omega) {
  const Chart& chart = *omega.chart();
  StableReport rep;
  rep.closed = d(omega).is_zero();
  if (!rep.closed) {
    rep.pass = false;
    return rep;
  }
  auto add = [&rep](std::string name, bool pass, std::string detail) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  for (int i = 0; i < chart.num_r; ++i) {
    std::ostringstream name;
    name << "res_q[" << chart.r_names[i] << "]";
    try {
      Form res = res_q(omega, i);
      add(name.str(), res.is_zero(), res.is_zero() ? "" : res.str());
    } catch (const std::exception& e) {
      add(name.str(), false, e.what());
    }
  }
  for (int i = 0; i < chart.num_r; ++i)
    for (int j = i + 1; j < chart.num_r; ++j) {
      std::ostringstream tag;
      tag << "[" << chart.r_names[i] << "," << chart.r_names[j] << "]";
      try {
        // w(d_th_i, r_j dr_j) = w(r_i dr_i, d_th_j).
        FnElem lhs = -res_point(omega, PointResidueKind::RTheta, j, i);
        FnElem rhs = res_point(omega, PointResidueKind::RTheta, i, j);
        add("res_sym" + tag.str(), lhs == rhs, "");
        FnElem rr = res_point(omega, PointResidueKind::RR, i, j);
        FnElem tt = res_point(omega, PointResidueKind::ThetaTheta, i, j);
        add("res_antisym" + tag.str(), rr == -tt, "");
      } catch (const std::exception& e) {
        add("res_point" + tag.str(), false, e.what());
      }
    }
  rep.pass = true;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

bool dH_closed(const Spinor& s) {
  if (!d(s.H).is_zero()) throw std::invalid_argument("twist H is not closed");
  return (d(s.rho) + wedge(s.H, s.rho)).is_zero();
}

DescendsResult descends(const Form& rho) {
  const Chart& chart = *rho.chart();
  std::mt19937_64 rng(0xd5ca1a);
  for (int t = 0; t < 3; ++t) {
    SamplePoint at = random_sample(chart, rng);
    if (!is_pure_at(rho, at))
      throw std::domain_error("descends: spinor is not pointwise pure");
    if (!mukai_nondeg(rho, at))
      throw std::domain_error("descends: spinor is Mukai-degenerate");
  }
  Form cpx = to_complex_frame(rho);
  const Chart& cchart = *cpx.chart();
  int l = chart.num_r;
  std::vector<int> box(l, 0);
  for (const auto& [m, f] : cpx.terms()) {
    (void)m;
    for (const auto& [k, v] : f.terms()) {
      (void)v;
      for (int i = 0; i < l; ++i) {
        int b = 0;
        for (int j = 0; j < cchart.num_angles(); ++j)
          if (cchart.angle_anchor[j] == i) b += k.fourier[j];
        int n = std::abs(k.r[i]) + std::abs(b);
        if (n > box[i]) box[i] = n;
      }
    }
  }
  // The Mukai pairing of f*rho has a unit top complex-frame coefficient iff
  // its elliptic top coefficient is a single monomial c * prod r_i^2
  // (the elliptic volume is prod (i/2) z_i^{-1} zbar_i^{-1} times the
  // complex one).
  auto unit_mukai = [&](const Form& candidate) {
    FnElem g = mukai_top(candidate);
    if (!g.is_single_term()) return false;
    const ExpKey& k = g.terms().begin()->first;
    for (int i = 0; i < l; ++i)
      if (k.r[i] != 2) return false;
    for (int b : k.fourier)
      if (b != 0) return false;
    for (int e : k.x)
      if (e != 0) return false;
    return true;
  };
  std::vector<int> a(l, 0), b(l, 0);
  std::function<DescendsResult(int)> search = [&](int i) -> DescendsResult {
    if (i == l) {
      ExpKey key = ExpKey::zero(chart);
      for (int s = 0; s < l; ++s) {
        key.r[s] = a[s];
        int j = chart.anchored_angle(s);
        if (j >= 0)
          key.fourier[j] = b[s];
        else if (b[s] != 0)
          return {};
      }
      FnElem f = FnElem::monomial(GaussianRational(1), key);
      Form candidate = f * rho;
      if (!is_smooth_form(candidate)) return {};
      if (!unit_mukai(candidate)) return {};
      return {true, f};
    }
    for (a[i] = -box[i]; a[i] <= box[i]; ++a[i])
      for (b[i] = -box[i]; b[i] <= box[i]; ++b[i]) {
        DescendsResult r = search(i + 1);
        if (r.ok) return r;
      }
    a[i] = b[i] = 0;
    return {};
  };
  return search(0);
}

}  // namespace tdcalc
