#pragma once

#include <cstdint>
#include <map>

#include "tdcalc/action.hpp"
#include "tdcalc/chart.hpp"
#include "tdcalc/fnelem.hpp"
#include "tdcalc/monomial_map.hpp"

namespace tdcalc {

/// Subset of frame slots, bit i = frame(chart)[i].
using FrameMask = std::uint64_t;

int mask_degree(FrameMask mask);
/// Sign of sorting the concatenation of two disjoint masks; 0 on overlap.
int wedge_sign(FrameMask a, FrameMask b);

namespace detail {

/// Shared representation of exterior-algebra elements over the frame (Form)
/// or its dual (Multivector).
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(ChartPtr chart) : chart_(std::move(chart)) {}

  const ChartPtr& chart() const { return chart_; }
  const std::map<FrameMask, FnElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(FrameMask mask, const FnElem& coeff);
  FnElem coefficient(FrameMask mask) const;

  bool is_homogeneous() const;
  /// Degree of a homogeneous element (0 for the zero element).
  int degree() const;
  int max_degree() const;
  /// Component of the given degree.
  void keep_degree(int k);

  bool same_chart(const AlgebraElement& o) const;

 protected:
  ChartPtr chart_;
  std::map<FrameMask, FnElem> terms_;
};

}  // namespace detail

class Form : public detail::AlgebraElement {
 public:
  Form() = default;
  explicit Form(ChartPtr chart) : AlgebraElement(std::move(chart)) {}

  static Form from_fn(ChartPtr chart, FnElem f);
  static Form scalar(ChartPtr chart, long v);
  /// The canonical frame covector with the given frame index.
  static Form covector(ChartPtr chart, int slot);

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const FnElem& f, const Form& a);
  friend Form operator*(const GaussianRational& c, const Form& a);
  friend bool operator==(const Form& a, const Form& b) {
    return a.terms() == b.terms();
  }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  Form degree_part(int k) const;
  std::string str() const;
};

class Multivector : public detail::AlgebraElement {
 public:
  Multivector() = default;
  explicit Multivector(ChartPtr chart) : AlgebraElement(std::move(chart)) {}

  static Multivector from_fn(ChartPtr chart, FnElem f);
  /// The frame vector dual to the frame covector with the given index.
  static Multivector vector(ChartPtr chart, int slot);

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) {
    return a += b;
  }
  friend Multivector operator-(Multivector a, const Multivector& b) {
    return a -= b;
  }
  friend Multivector operator*(const FnElem& f, const Multivector& a);
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.terms() == b.terms();
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) {
    return !(a == b);
  }
  std::string str() const;
};

Form wedge(const Form& a, const Form& b);
Multivector wedge(const Multivector& a, const Multivector& b);

/// Derivation of a coefficient function along the frame vector dual to the
/// given slot (r dr -> a*m, d_angle -> i*b*m, d_x -> c*m/x, and the complex
/// frame analogues).
FnElem derive(const FnElem& f, const Chart& chart, const FrameSlot& slot);

/// Exterior differential; frame covectors are closed.
Form d(const Form& a);

/// Contraction i_{X1^...^Xk} := i_{Xk}∘...∘i_{X1}, frame vectors pairing
/// dually with frame covectors; FnElem-linear in the multivector.
Form contract(const Multivector& X, const Form& a);

/// Cartan formula L_X = i_X∘d + d∘i_X for a degree-1 field X.
Form lie_derivative(const Multivector& X, const Form& a);

/// Frame change dlogr -> (dz/z + dzbar/zbar)/2, dth -> (dz/z - dzbar/zbar)/2i
/// onto the complex-smooth frame; exact and invertible.
Form to_complex_frame(const Form& a);
Form from_complex_frame(const Form& a);

/// Rewrites a complex-log form over the elliptic frame
/// (dlogz = dlogr + i dth, dzbar = zbar(dlogr - i dth)).
Form complex_log_to_elliptic(const Form& a);

/// Coefficient-wise complex conjugate of a real-frame form.
Form conj(const Form& a);

/// Imaginary part of a complex-log form, landing in the elliptic frame.
Form im_star(const Form& a);

/// True iff the form extends smoothly over the polar origins.
bool is_smooth_form(const Form& a);

bool is_invariant(const Form& a, const TorusAction& action);

/// phi* of a form along a monomial map; frame legs pull back dlog-linearly.
Form pullback(const Form& a, const MonomialMap& map);

/// Finite exterior exponential of a form with zero degree-0 part.
Form exterior_exp(const Form& a);

}  // namespace tdcalc
