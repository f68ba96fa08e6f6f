#pragma once

#include <random>

#include "tdcalc/form.hpp"

namespace tdcalc {

/// Rational evaluation point in the open dense locus: positive radii,
/// rational points e^{i th} = (1-t^2+2it)/(1+t^2) on the unit circle,
/// nonzero x and parameter values.
struct SamplePoint {
  std::vector<Rational> r;
  std::vector<GaussianRational> unit;  // value of e^{i angle}, |unit| = 1
  std::vector<Rational> x;
  std::vector<Rational> param;
};

SamplePoint random_sample(const Chart& chart, std::mt19937_64& rng);
/// All radii and x equal to one, all angles at t = 0 (unit = 1), params = 1.
SamplePoint unit_sample(const Chart& chart);

GaussianRational eval_fn(const FnElem& f, const SamplePoint& at);

/// Evaluates every coefficient; keys are frame masks. Frame covectors are
/// treated as a basis at the point (no dr/dlogr rescaling: identities between
/// forms hold iff they hold coefficient-wise in any frame).
std::map<FrameMask, GaussianRational> eval_form(const Form& a,
                                                const SamplePoint& at);

/// Dense matrix over Q(i) with exact Gaussian elimination.
class QiMatrix {
 public:
  QiMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  GaussianRational& at(int r, int c) { return data_[r * cols_ + c]; }
  const GaussianRational& at(int r, int c) const {
    return data_[r * cols_ + c];
  }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int rank() const;
  int kernel_dim() const { return rows_ - rank(); }  // kernel of row map
  GaussianRational det() const;

 private:
  int rows_, cols_;
  std::vector<GaussianRational> data_;
};

}  // namespace tdcalc
