#pragma once

#include <map>
#include <string>
#include <vector>

#include "tdcalc/chart.hpp"
#include "tdcalc/rational.hpp"

namespace tdcalc {

/// Exponent key of a monomial coeff * r^a e^{i b.angle} x^c param^e.
/// a and b and e range over Z, c over N. Vector lengths match the chart.
struct ExpKey {
  std::vector<int> r;
  std::vector<int> fourier;
  std::vector<int> x;
  std::vector<int> param;

  static ExpKey zero(const Chart& chart) {
    ExpKey k;
    k.r.assign(chart.num_r, 0);
    k.fourier.assign(chart.num_angles(), 0);
    k.x.assign(chart.num_x, 0);
    k.param.assign(chart.num_params(), 0);
    return k;
  }

  bool is_unit_key() const;  // all coordinate exponents zero (params allowed)

  friend bool operator==(const ExpKey& a, const ExpKey& b) {
    return a.r == b.r && a.fourier == b.fourier && a.x == b.x &&
           a.param == b.param;
  }
  friend bool operator<(const ExpKey& a, const ExpKey& b) {
    if (a.r != b.r) return a.r < b.r;
    if (a.fourier != b.fourier) return a.fourier < b.fourier;
    if (a.x != b.x) return a.x < b.x;
    return a.param < b.param;
  }
};

struct Monomial {
  GaussianRational coeff;
  ExpKey key;
};

/// Finite sum of monomials, canonically normalized (no zero terms, keys
/// strictly ordered). The coefficient ring of every form in the engine.
class FnElem {
 public:
  FnElem() = default;

  static FnElem zero() { return {}; }
  static FnElem constant(GaussianRational c, const Chart& chart) {
    return monomial(std::move(c), ExpKey::zero(chart));
  }
  static FnElem monomial(GaussianRational c, ExpKey key);

  const std::map<ExpKey, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_single_term() const { return terms_.size() == 1; }
  /// Single term with zero coordinate exponents (param powers allowed):
  /// an invertible constant over the whole chart.
  bool is_unit() const {
    return is_single_term() && terms_.begin()->first.is_unit_key();
  }
  bool is_constant() const;
  /// The coefficient if *this is constant (zero key), throws otherwise.
  GaussianRational constant_value() const;

  FnElem operator-() const;
  FnElem& operator+=(const FnElem& o);
  FnElem& operator-=(const FnElem& o);
  friend FnElem operator+(FnElem a, const FnElem& b) { return a += b; }
  friend FnElem operator-(FnElem a, const FnElem& b) { return a -= b; }
  friend FnElem operator*(const FnElem& a, const FnElem& b);
  friend FnElem operator*(const GaussianRational& c, const FnElem& f);

  friend bool operator==(const FnElem& a, const FnElem& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FnElem& a, const FnElem& b) { return !(a == b); }

  /// Multiplicative inverse of a single monomial (x-exponents must be zero).
  FnElem inverse() const;
  /// Complex conjugate: negate every Fourier vector, conjugate scalars.
  FnElem conj() const;

  std::string str(const Chart& chart) const;

 private:
  std::map<ExpKey, GaussianRational> terms_;
};

void check_same_signature(const FnElem& a, const FnElem& b);

/// True iff every monomial extends smoothly over the polar origins:
/// for each elliptic pair i, r_exp[i] >= |fourier[anchored angle]| with equal
/// parity; free-angle Fourier modes are unconstrained; for real-log charts
/// all log exponents must be >= 0.
bool is_smooth_fn(const FnElem& f, const Chart& chart);

/// Convenience builders.
namespace fn {
FnElem c(long v, const Chart& chart);
FnElem c(GaussianRational v, const Chart& chart);
FnElem i_unit(const Chart& chart);
FnElem r(const Chart& chart, int i, int exp = 1);
FnElem E(const Chart& chart, int angle, int k);  // e^{i k angle}
FnElem x(const Chart& chart, int s, int exp = 1);
FnElem param(const Chart& chart, const std::string& name, int exp = 1);
FnElem z(const Chart& chart, int i);     // r_i e^{i th_i}
FnElem zbar(const Chart& chart, int i);  // r_i e^{-i th_i}
FnElem z_pow(const Chart& chart, int i, int p, int q);  // z^p zbar^q
}  // namespace fn

}  // namespace tdcalc
