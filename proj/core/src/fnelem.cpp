#include "tdcalc/fnelem.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tdcalc {

bool ExpKey::is_unit_key() const {
  auto all_zero = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int e) { return e == 0; });
  };
  return all_zero(r) && all_zero(fourier) && all_zero(x);
}

FnElem FnElem::monomial(GaussianRational c, ExpKey key) {
  FnElem f;
  for (int e : key.x)
    if (e < 0) throw std::invalid_argument("negative x exponent");
  if (!c.is_zero()) f.terms_.emplace(std::move(key), std::move(c));
  return f;
}

bool FnElem::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const ExpKey& k = terms_.begin()->first;
  return k.is_unit_key() &&
         std::all_of(k.param.begin(), k.param.end(),
                     [](int e) { return e == 0; });
}

GaussianRational FnElem::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (!is_constant()) throw std::logic_error("FnElem is not constant");
  return terms_.begin()->second;
}

FnElem FnElem::operator-() const {
  FnElem out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, -v);
  return out;
}

static void add_term(std::map<ExpKey, GaussianRational>& into, const ExpKey& k,
                     const GaussianRational& v) {
  auto it = into.find(k);
  if (it == into.end()) {
    if (!v.is_zero()) into.emplace(k, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) into.erase(it);
}

FnElem& FnElem::operator+=(const FnElem& o) {
  check_same_signature(*this, o);
  for (const auto& [k, v] : o.terms_) add_term(terms_, k, v);
  return *this;
}

FnElem& FnElem::operator-=(const FnElem& o) {
  check_same_signature(*this, o);
  for (const auto& [k, v] : o.terms_) add_term(terms_, k, -v);
  return *this;
}

FnElem operator*(const FnElem& a, const FnElem& b) {
  check_same_signature(a, b);
  FnElem out;
  auto add_vec = [](const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<int> w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
    return w;
  };
  for (const auto& [ka, va] : a.terms_)
    for (const auto& [kb, vb] : b.terms_) {
      ExpKey k;
      k.r = add_vec(ka.r, kb.r);
      k.fourier = add_vec(ka.fourier, kb.fourier);
      k.x = add_vec(ka.x, kb.x);
      k.param = add_vec(ka.param, kb.param);
      for (int e : k.x)
        if (e < 0) throw std::invalid_argument("negative x exponent");
      add_term(out.terms_, k, va * vb);
    }
  return out;
}

FnElem operator*(const GaussianRational& c, const FnElem& f) {
  FnElem out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : f.terms()) out.terms_.emplace(k, c * v);
  return out;
}

FnElem FnElem::inverse() const {
  if (!is_single_term()) throw std::domain_error("inverse of non-monomial");
  const auto& [k, v] = *terms_.begin();
  for (int e : k.x)
    if (e != 0) throw std::domain_error("x factors are not invertible");
  ExpKey inv;
  auto neg = [](const std::vector<int>& u) {
    std::vector<int> w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = -u[i];
    return w;
  };
  inv.r = neg(k.r);
  inv.fourier = neg(k.fourier);
  inv.x = k.x;
  inv.param = neg(k.param);
  return monomial(GaussianRational(1) / v, std::move(inv));
}

FnElem FnElem::conj() const {
  FnElem out;
  for (const auto& [k, v] : terms_) {
    ExpKey ck = k;
    for (int& b : ck.fourier) b = -b;
    out.terms_.emplace(std::move(ck), v.conj());
  }
  return out;
}

void check_same_signature(const FnElem& a, const FnElem& b) {
  if (a.terms().empty() || b.terms().empty()) return;
  const ExpKey& ka = a.terms().begin()->first;
  const ExpKey& kb = b.terms().begin()->first;
  if (ka.r.size() != kb.r.size() || ka.fourier.size() != kb.fourier.size() ||
      ka.x.size() != kb.x.size() || ka.param.size() != kb.param.size())
    throw std::invalid_argument("chart signature mismatch");
}

bool is_smooth_fn(const FnElem& f, const Chart& chart) {
  for (const auto& [k, v] : f.terms()) {
    (void)v;
    for (int i = 0; i < chart.num_r; ++i) {
      int a = k.r[i];
      if (chart.kind == FrameKind::RealLog) {
        if (a < 0) return false;
        continue;
      }
      int b = 0;
      for (int j = 0; j < chart.num_angles(); ++j)
        if (chart.angle_anchor[j] == i) b += k.fourier[j];
      if (a < std::abs(b) || ((a - b) % 2) != 0) return false;
    }
  }
  return true;
}

std::string FnElem::str(const Chart& chart) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    std::vector<std::string> factors;
    std::string coeff = v.str();
    for (int i = 0; i < chart.num_r; ++i)
      if (k.r[i] != 0)
        factors.push_back(chart.r_names[i] +
                          (k.r[i] == 1 ? "" : "^" + std::to_string(k.r[i])));
    for (int j = 0; j < chart.num_angles(); ++j)
      if (k.fourier[j] != 0)
        factors.push_back("E" + chart.angle_names[j] + "[" +
                          std::to_string(k.fourier[j]) + "]");
    for (int s = 0; s < chart.num_x; ++s)
      if (k.x[s] != 0)
        factors.push_back(chart.x_names[s] +
                          (k.x[s] == 1 ? "" : "^" + std::to_string(k.x[s])));
    for (int p = 0; p < chart.num_params(); ++p)
      if (k.param[p] != 0)
        factors.push_back("@" + chart.params[p] +
                          (k.param[p] == 1 ? ""
                                           : "^" + std::to_string(k.param[p])));
    std::string body;
    for (const auto& fct : factors) {
      if (!body.empty()) body += "*";
      body += fct;
    }
    std::string term;
    if (body.empty())
      term = coeff;
    else if (v == GaussianRational(1))
      term = body;
    else if (v == -GaussianRational(1))
      term = "-" + body;
    else if (v.is_real() || v.re() == 0)
      term = coeff + "*" + body;
    else
      term = "(" + coeff + ")*" + body;
    if (!first && term[0] != '-') os << "+";
    os << term;
    first = false;
  }
  return os.str();
}

namespace fn {

FnElem c(long v, const Chart& chart) {
  return FnElem::constant(GaussianRational(v), chart);
}
FnElem c(GaussianRational v, const Chart& chart) {
  return FnElem::constant(std::move(v), chart);
}
FnElem i_unit(const Chart& chart) {
  return FnElem::constant(GaussianRational::i(), chart);
}
FnElem r(const Chart& chart, int i, int exp) {
  ExpKey k = ExpKey::zero(chart);
  k.r.at(i) = exp;
  return FnElem::monomial(GaussianRational(1), std::move(k));
}
FnElem E(const Chart& chart, int angle, int kk) {
  ExpKey k = ExpKey::zero(chart);
  k.fourier.at(angle) = kk;
  return FnElem::monomial(GaussianRational(1), std::move(k));
}
FnElem x(const Chart& chart, int s, int exp) {
  ExpKey k = ExpKey::zero(chart);
  k.x.at(s) = exp;
  return FnElem::monomial(GaussianRational(1), std::move(k));
}
FnElem param(const Chart& chart, const std::string& name, int exp) {
  ExpKey k = ExpKey::zero(chart);
  k.param.at(chart.param_index(name)) = exp;
  return FnElem::monomial(GaussianRational(1), std::move(k));
}
FnElem z(const Chart& chart, int i) { return z_pow(chart, i, 1, 0); }
FnElem zbar(const Chart& chart, int i) { return z_pow(chart, i, 0, 1); }
FnElem z_pow(const Chart& chart, int i, int p, int q) {
  int j = chart.anchored_angle(i);
  if (j < 0) throw std::invalid_argument("radius has no anchored angle");
  ExpKey k = ExpKey::zero(chart);
  k.r.at(i) = p + q;
  k.fourier.at(j) = p - q;
  return FnElem::monomial(GaussianRational(1), std::move(k));
}

}  // namespace fn

}  // namespace tdcalc
