#include "tdcalc/form.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace tdcalc {

int mask_degree(FrameMask mask) { return std::popcount(mask); }

int wedge_sign(FrameMask a, FrameMask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (FrameMask rest = b; rest;) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

static int slot_index(const Chart& chart, const FrameSlot& slot) {
  auto fr = frame(chart);
  for (std::size_t p = 0; p < fr.size(); ++p)
    if (fr[p] == slot) return static_cast<int>(p);
  throw std::invalid_argument("slot not in frame");
}

namespace detail {

void AlgebraElement::add_term(FrameMask mask, const FnElem& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

FnElem AlgebraElement::coefficient(FrameMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? FnElem::zero() : it->second;
}

bool AlgebraElement::is_homogeneous() const {
  int deg = -1;
  for (const auto& [m, f] : terms_) {
    (void)f;
    if (deg < 0)
      deg = mask_degree(m);
    else if (deg != mask_degree(m))
      return false;
  }
  return true;
}

int AlgebraElement::degree() const {
  if (terms_.empty()) return 0;
  if (!is_homogeneous()) throw std::logic_error("inhomogeneous element");
  return mask_degree(terms_.begin()->first);
}

int AlgebraElement::max_degree() const {
  int deg = 0;
  for (const auto& [m, f] : terms_) {
    (void)f;
    deg = std::max(deg, mask_degree(m));
  }
  return deg;
}

void AlgebraElement::keep_degree(int k) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (mask_degree(it->first) == k) ? std::next(it) : terms_.erase(it);
}

bool AlgebraElement::same_chart(const AlgebraElement& o) const {
  if (!chart_ || !o.chart_) return !chart_ && !o.chart_;
  return chart_->same_shape(*o.chart_);
}

}  // namespace detail

static void require_same_chart(const detail::AlgebraElement& a,
                               const detail::AlgebraElement& b) {
  if (!a.same_chart(b)) throw std::invalid_argument("chart mismatch");
}

Form Form::from_fn(ChartPtr chart, FnElem f) {
  Form out(std::move(chart));
  out.add_term(0, f);
  return out;
}

Form Form::scalar(ChartPtr chart, long v) {
  FnElem f = fn::c(v, *chart);
  return from_fn(std::move(chart), f);
}

Form Form::covector(ChartPtr chart, int slot) {
  Form out(chart);
  out.add_term(FrameMask(1) << slot, fn::c(1, *chart));
  return out;
}

Form Form::operator-() const {
  Form out(chart_);
  for (const auto& [m, f] : terms_) out.terms_.emplace(m, -f);
  return out;
}

Form& Form::operator+=(const Form& o) {
  if (terms_.empty() && !chart_) chart_ = o.chart_;
  require_same_chart(*this, o);
  for (const auto& [m, f] : o.terms_) add_term(m, f);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (terms_.empty() && !chart_) chart_ = o.chart_;
  require_same_chart(*this, o);
  for (const auto& [m, f] : o.terms_) add_term(m, -f);
  return *this;
}

Form operator*(const FnElem& f, const Form& a) {
  Form out(a.chart());
  for (const auto& [m, g] : a.terms()) out.add_term(m, f * g);
  return out;
}

Form operator*(const GaussianRational& c, const Form& a) {
  Form out(a.chart());
  for (const auto& [m, g] : a.terms()) out.add_term(m, c * g);
  return out;
}

Form Form::degree_part(int k) const {
  Form out = *this;
  out.keep_degree(k);
  return out;
}

Multivector Multivector::from_fn(ChartPtr chart, FnElem f) {
  Multivector out(std::move(chart));
  out.add_term(0, f);
  return out;
}

Multivector Multivector::vector(ChartPtr chart, int slot) {
  Multivector out(chart);
  out.add_term(FrameMask(1) << slot, fn::c(1, *chart));
  return out;
}

Multivector Multivector::operator-() const {
  Multivector out(chart_);
  for (const auto& [m, f] : terms_) out.terms_.emplace(m, -f);
  return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (terms_.empty() && !chart_) chart_ = o.chart_;
  require_same_chart(*this, o);
  for (const auto& [m, f] : o.terms_) add_term(m, f);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  if (terms_.empty() && !chart_) chart_ = o.chart_;
  require_same_chart(*this, o);
  for (const auto& [m, f] : o.terms_) add_term(m, -f);
  return *this;
}

Multivector operator*(const FnElem& f, const Multivector& a) {
  Multivector out(a.chart());
  for (const auto& [m, g] : a.terms()) out.add_term(m, f * g);
  return out;
}

template <typename T>
static T wedge_impl(const T& a, const T& b) {
  require_same_chart(a, b);
  T out(a.chart() ? a.chart() : b.chart());
  for (const auto& [ma, fa] : a.terms())
    for (const auto& [mb, fb] : b.terms()) {
      int sign = wedge_sign(ma, mb);
      if (sign == 0) continue;
      FnElem c = fa * fb;
      if (sign < 0) c = -c;
      out.add_term(ma | mb, c);
    }
  return out;
}

Form wedge(const Form& a, const Form& b) { return wedge_impl(a, b); }
Multivector wedge(const Multivector& a, const Multivector& b) {
  return wedge_impl(a, b);
}

FnElem derive(const FnElem& f, const Chart& chart, const FrameSlot& slot) {
  using K = FrameSlot::Kind;
  FnElem out;
  const GaussianRational half(Rational(1, 2));
  for (const auto& [k, v] : f.terms()) {
    switch (slot.kind) {
      case K::DLogR:
        out += FnElem::monomial(GaussianRational(k.r[slot.index]) * v, k);
        break;
      case K::DAngle:
        out += FnElem::monomial(
            GaussianRational(k.fourier[slot.index]) * GaussianRational::i() * v,
            k);
        break;
      case K::DX: {
        int c = k.x[slot.index];
        if (c == 0) break;
        ExpKey nk = k;
        nk.x[slot.index] -= 1;
        out += FnElem::monomial(GaussianRational(c) * v, std::move(nk));
        break;
      }
      case K::DLogZ: {
        int j = chart.anchored_angle(slot.index);
        int a = k.r[slot.index], b = j >= 0 ? k.fourier[j] : 0;
        out += FnElem::monomial(half * GaussianRational(a + b) * v, k);
        break;
      }
      case K::DZ: {
        int j = chart.anchored_angle(slot.index);
        int a = k.r[slot.index], b = j >= 0 ? k.fourier[j] : 0;
        if (a + b == 0) break;
        ExpKey nk = k;  // multiply by z^{-1}
        nk.r[slot.index] -= 1;
        if (j >= 0) nk.fourier[j] -= 1;
        out += FnElem::monomial(half * GaussianRational(a + b) * v,
                                std::move(nk));
        break;
      }
      case K::DZBar: {
        int j = chart.anchored_angle(slot.index);
        int a = k.r[slot.index], b = j >= 0 ? k.fourier[j] : 0;
        if (a - b == 0) break;
        ExpKey nk = k;  // multiply by zbar^{-1}
        nk.r[slot.index] -= 1;
        if (j >= 0) nk.fourier[j] += 1;
        out += FnElem::monomial(half * GaussianRational(a - b) * v,
                                std::move(nk));
        break;
      }
    }
  }
  return out;
}

Form d(const Form& a) {
  const Chart& chart = *a.chart();
  auto fr = frame(chart);
  Form out(a.chart());
  for (const auto& [mask, f] : a.terms()) {
    for (std::size_t p = 0; p < fr.size(); ++p) {
      FrameMask bit = FrameMask(1) << p;
      if (mask & bit) continue;
      FnElem g = derive(f, chart, fr[p]);
      if (g.is_zero()) continue;
      int sign = wedge_sign(bit, mask);
      if (sign < 0) g = -g;
      out.add_term(mask | bit, g);
    }
  }
  return out;
}

/// Single contraction by the frame vector dual to slot position p.
static Form contract_slot(int p, const Form& a) {
  Form out(a.chart());
  FrameMask bit = FrameMask(1) << p;
  for (const auto& [mask, f] : a.terms()) {
    if (!(mask & bit)) continue;
    int below = std::popcount(mask & (bit - 1));
    FnElem g = (below % 2 == 0) ? f : -f;
    out.add_term(mask & ~bit, g);
  }
  return out;
}

Form contract(const Multivector& X, const Form& a) {
  require_same_chart(X, a);
  Form out(a.chart());
  for (const auto& [mask, g] : X.terms()) {
    Form piece = a;
    // i_{E_{s1}^...^E_{sk}} = i_{E_{sk}}∘...∘i_{E_{s1}} for s1 < ... < sk.
    for (FrameMask rest = mask; rest;) {
      int p = std::countr_zero(rest);
      rest &= rest - 1;
      piece = contract_slot(p, piece);
      if (piece.is_zero()) break;
    }
    out += g * piece;
  }
  return out;
}

Form lie_derivative(const Multivector& X, const Form& a) {
  for (const auto& [m, f] : X.terms()) {
    (void)f;
    if (mask_degree(m) != 1)
      throw std::invalid_argument("Lie derivative needs a degree-1 field");
  }
  return contract(X, d(a)) + d(contract(X, a));
}

/// Rewrites a form termwise through per-slot degree-1 replacements over a
/// target chart with identical exponent layout.
static Form change_frame(const Form& a, ChartPtr target,
                         const std::vector<Form>& replacement) {
  Form out(target);
  for (const auto& [mask, f] : a.terms()) {
    Form legs = Form::from_fn(target, f);
    for (FrameMask rest = mask; rest;) {
      int p = std::countr_zero(rest);
      rest &= rest - 1;
      legs = wedge(legs, replacement[p]);
      if (legs.is_zero()) break;
    }
    out += legs;
  }
  return out;
}

Form to_complex_frame(const Form& a) {
  const Chart& chart = *a.chart();
  if (chart.kind != FrameKind::Elliptic)
    throw std::invalid_argument("to_complex_frame needs an elliptic chart");
  ChartPtr target = with_kind(chart, FrameKind::ComplexSmooth);
  auto fr = frame(chart);
  const GaussianRational half(Rational(1, 2));
  const GaussianRational half_over_i = half / GaussianRational::i();
  std::vector<Form> rep;
  for (const auto& slot : fr) {
    using K = FrameSlot::Kind;
    if (slot.kind == K::DLogR || slot.kind == K::DAngle) {
      int i = slot.kind == K::DLogR ? slot.index
                                    : chart.angle_anchor[slot.index];
      if (slot.kind == K::DAngle && i < 0) {
        rep.push_back(Form::covector(
            target, slot_index(*target, {K::DAngle, slot.index})));
        continue;
      }
      FnElem zi = fn::z_pow(*target, i, -1, 0);
      FnElem zbi = fn::z_pow(*target, i, 0, -1);
      Form dz = Form::covector(target, slot_index(*target, {K::DZ, i}));
      Form dzb = Form::covector(target, slot_index(*target, {K::DZBar, i}));
      if (slot.kind == K::DLogR)
        rep.push_back(half * (zi * dz) + half * (zbi * dzb));
      else
        rep.push_back(half_over_i * (zi * dz) - half_over_i * (zbi * dzb));
    } else {
      rep.push_back(Form::covector(target, slot_index(*target, slot)));
    }
  }
  return change_frame(a, target, rep);
}

Form from_complex_frame(const Form& a) {
  const Chart& chart = *a.chart();
  if (chart.kind != FrameKind::ComplexSmooth)
    throw std::invalid_argument("from_complex_frame needs complex frame");
  ChartPtr target = with_kind(chart, FrameKind::Elliptic);
  auto fr = frame(chart);
  const GaussianRational i_c = GaussianRational::i();
  std::vector<Form> rep;
  for (const auto& slot : fr) {
    using K = FrameSlot::Kind;
    if (slot.kind == K::DZ || slot.kind == K::DZBar) {
      int i = slot.index;
      int j = chart.anchored_angle(i);
      Form dlr = Form::covector(target, slot_index(*target, {K::DLogR, i}));
      Form dth = Form::covector(target, slot_index(*target, {K::DAngle, j}));
      if (slot.kind == K::DZ)
        rep.push_back(fn::z(*target, i) * (dlr + i_c * dth));
      else
        rep.push_back(fn::zbar(*target, i) * (dlr - i_c * dth));
    } else {
      rep.push_back(Form::covector(target, slot_index(*target, slot)));
    }
  }
  return change_frame(a, target, rep);
}

Form complex_log_to_elliptic(const Form& a) {
  const Chart& chart = *a.chart();
  if (chart.kind != FrameKind::ComplexLog)
    throw std::invalid_argument("expected complex-log chart");
  ChartPtr target = with_kind(chart, FrameKind::Elliptic);
  auto fr = frame(chart);
  const GaussianRational i_c = GaussianRational::i();
  std::vector<Form> rep;
  for (const auto& slot : fr) {
    using K = FrameSlot::Kind;
    if (slot.kind == K::DLogZ || slot.kind == K::DZBar) {
      int i = slot.index;
      int j = chart.anchored_angle(i);
      if (j < 0) throw std::invalid_argument("polar pair without angle");
      Form dlr = Form::covector(target, slot_index(*target, {K::DLogR, i}));
      Form dth = Form::covector(target, slot_index(*target, {K::DAngle, j}));
      if (slot.kind == K::DLogZ)
        rep.push_back(dlr + i_c * dth);
      else
        rep.push_back(fn::zbar(*target, i) * (dlr - i_c * dth));
    } else {
      rep.push_back(Form::covector(target, slot_index(*target, slot)));
    }
  }
  return change_frame(a, target, rep);
}

Form conj(const Form& a) {
  const Chart& chart = *a.chart();
  if (chart.kind != FrameKind::Elliptic && chart.kind != FrameKind::RealLog &&
      chart.kind != FrameKind::Smooth)
    throw std::invalid_argument("conjugation needs a real frame");
  Form out(a.chart());
  for (const auto& [m, f] : a.terms()) out.add_term(m, f.conj());
  return out;
}

Form im_star(const Form& a) {
  Form b = complex_log_to_elliptic(a);
  const GaussianRational inv_2i =
      GaussianRational(1) / (GaussianRational(2) * GaussianRational::i());
  return inv_2i * (b - conj(b));
}

bool is_smooth_form(const Form& a) {
  Form c = to_complex_frame(a);
  for (const auto& [m, f] : c.terms()) {
    (void)m;
    if (!is_smooth_fn(f, *c.chart())) return false;
  }
  return true;
}

bool is_invariant(const Form& a, const TorusAction& action) {
  for (const auto& [m, f] : a.terms()) {
    (void)m;
    if (!is_invariant_fn(f, action)) return false;
  }
  return true;
}

Form pullback(const Form& a, const MonomialMap& map) {
  map.validate();
  if (!a.chart()->same_shape(*map.codomain))
    throw std::invalid_argument("pullback: form not over map codomain");
  const Chart& cod = *map.codomain;
  ChartPtr dom = map.domain;
  using K = FrameSlot::Kind;
  auto fr = frame(cod);
  std::vector<Form> rep;
  for (const auto& slot : fr) {
    Form leg(dom);
    switch (slot.kind) {
      case K::DLogR:
        for (int j = 0; j < dom->num_r; ++j) {
          int e = map.r_exp[slot.index][j];
          if (e != 0)
            leg += GaussianRational(e) *
                   Form::covector(dom, slot_index(*dom, {K::DLogR, j}));
        }
        break;
      case K::DAngle:
        for (int b = 0; b < dom->num_angles(); ++b) {
          int e = map.angle_comb[slot.index][b];
          if (e != 0)
            leg += GaussianRational(e) *
                   Form::covector(dom, slot_index(*dom, {K::DAngle, b}));
        }
        break;
      case K::DX:
        leg = Form::covector(dom,
                             slot_index(*dom, {K::DX, map.x_of[slot.index]}));
        break;
      default:
        throw std::invalid_argument("pullback over complex frames unsupported");
    }
    rep.push_back(leg);
  }
  Form out(dom);
  for (const auto& [mask, f] : a.terms()) {
    Form legs = Form::from_fn(dom, substitute(f, map));
    for (FrameMask rest = mask; rest;) {
      int p = std::countr_zero(rest);
      rest &= rest - 1;
      legs = wedge(legs, rep[p]);
      if (legs.is_zero()) break;
    }
    out += legs;
  }
  return out;
}

Form exterior_exp(const Form& a) {
  if (!a.coefficient(0).is_zero())
    throw std::invalid_argument("exterior exp needs zero degree-0 part");
  Form acc = Form::scalar(a.chart(), 1);
  Form power = acc;
  Rational factorial(1);
  for (int k = 1; ; ++k) {
    power = wedge(power, a);
    if (power.is_zero()) break;
    factorial *= k;
    acc += GaussianRational(Rational(1) / factorial) * power;
  }
  return acc;
}

// A sign that is not an exponent, a Fourier index or inside parentheses
// makes the coefficient ambiguous next to "*legs".
static bool has_toplevel_sign(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if ((c == '+' || c == '-') && depth == 0 && s[i - 1] != '^') return true;
  }
  return false;
}

template <typename T>
static std::string element_str(const T& elem, bool dual) {
  if (elem.is_zero()) return "0";
  const Chart& chart = *elem.chart();
  auto fr = frame(chart);
  std::vector<std::pair<int, FrameMask>> order;
  for (const auto& [m, f] : elem.terms()) {
    (void)f;
    order.emplace_back(mask_degree(m), m);
  }
  std::sort(order.begin(), order.end());
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, m] : order) {
    (void)deg;
    std::string legs;
    for (FrameMask rest = m; rest;) {
      int p = std::countr_zero(rest);
      rest &= rest - 1;
      if (!legs.empty()) legs += "^";
      legs += dual ? vector_label(chart, fr[p]) : slot_label(chart, fr[p]);
    }
    const FnElem f = elem.coefficient(m);
    std::string cs = f.str(chart);
    std::string term;
    if (legs.empty())
      term = cs;
    else if (cs == "1")
      term = legs;
    else if (cs == "-1")
      term = "-" + legs;
    else if (f.is_single_term() && !has_toplevel_sign(cs))
      term = cs + "*" + legs;
    else
      term = "(" + cs + ")*" + legs;
    if (!first && term[0] != '-') os << " + ";
    else if (!first) {
      os << " - ";
      term = term.substr(1);
    }
    os << term;
    first = false;
  }
  return os.str();
}

std::string Form::str() const { return element_str(*this, false); }
std::string Multivector::str() const { return element_str(*this, true); }

}  // namespace tdcalc
