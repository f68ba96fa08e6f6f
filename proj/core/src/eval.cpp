#include "tdcalc/eval.hpp"

#include <stdexcept>

namespace tdcalc {

static Rational rational_pow(const Rational& q, int e) {
  if (e < 0) return Rational(1) / rational_pow(q, -e);
  Rational acc(1);
  for (int k = 0; k < e; ++k) acc *= q;
  return acc;
}

SamplePoint random_sample(const Chart& chart, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 9), t_num(-5, 5);
  SamplePoint p;
  for (int i = 0; i < chart.num_r; ++i)
    p.r.push_back(Rational(num(rng), den(rng)));
  for (int j = 0; j < chart.num_angles(); ++j) {
    Rational t(t_num(rng), den(rng));
    Rational d = 1 + t * t;
    p.unit.push_back(GaussianRational((1 - t * t) / d, 2 * t / d));
  }
  for (int s = 0; s < chart.num_x; ++s)
    p.x.push_back(Rational(num(rng), den(rng)));
  for (int q = 0; q < chart.num_params(); ++q)
    p.param.push_back(Rational(num(rng), den(rng)));
  return p;
}

SamplePoint unit_sample(const Chart& chart) {
  SamplePoint p;
  p.r.assign(chart.num_r, Rational(1));
  p.unit.assign(chart.num_angles(), GaussianRational(1));
  p.x.assign(chart.num_x, Rational(1));
  p.param.assign(chart.num_params(), Rational(1));
  return p;
}

GaussianRational eval_fn(const FnElem& f, const SamplePoint& at) {
  GaussianRational total(0);
  for (const auto& [k, v] : f.terms()) {
    GaussianRational term = v;
    Rational real_part(1);
    for (std::size_t i = 0; i < k.r.size(); ++i)
      if (k.r[i] != 0) real_part *= rational_pow(at.r.at(i), k.r[i]);
    for (std::size_t s = 0; s < k.x.size(); ++s)
      if (k.x[s] != 0) real_part *= rational_pow(at.x.at(s), k.x[s]);
    for (std::size_t q = 0; q < k.param.size(); ++q)
      if (k.param[q] != 0) real_part *= rational_pow(at.param.at(q), k.param[q]);
    term *= GaussianRational(real_part);
    for (std::size_t j = 0; j < k.fourier.size(); ++j) {
      int b = k.fourier[j];
      if (b == 0) continue;
      // |unit| = 1, so the inverse is the conjugate.
      GaussianRational u = b > 0 ? at.unit.at(j) : at.unit.at(j).conj();
      term *= pow(u, b > 0 ? b : -b);
    }
    total += term;
  }
  return total;
}

std::map<FrameMask, GaussianRational> eval_form(const Form& a,
                                                const SamplePoint& at) {
  std::map<FrameMask, GaussianRational> out;
  for (const auto& [m, f] : a.terms()) {
    GaussianRational v = eval_fn(f, at);
    if (!v.is_zero()) out.emplace(m, v);
  }
  return out;
}

int QiMatrix::rank() const {
  QiMatrix m = *this;
  int rank = 0;
  for (int c = 0; c < m.cols_ && rank < m.rows_; ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows_; ++r)
      if (!m.at(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols_; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    GaussianRational inv = GaussianRational(1) / m.at(rank, c);
    for (int j = c; j < m.cols_; ++j) m.at(rank, j) *= inv;
    for (int r = 0; r < m.rows_; ++r) {
      if (r == rank || m.at(r, c).is_zero()) continue;
      GaussianRational factor = m.at(r, c);
      for (int j = c; j < m.cols_; ++j)
        m.at(r, j) -= factor * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

GaussianRational QiMatrix::det() const {
  if (rows_ != cols_) throw std::logic_error("det of non-square matrix");
  QiMatrix m = *this;
  GaussianRational det(1);
  for (int c = 0; c < cols_; ++c) {
    int piv = -1;
    for (int r = c; r < rows_; ++r)
      if (!m.at(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return GaussianRational(0);
    if (piv != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    GaussianRational inv = GaussianRational(1) / m.at(c, c);
    for (int r = c + 1; r < rows_; ++r) {
      if (m.at(r, c).is_zero()) continue;
      GaussianRational factor = m.at(r, c) * inv;
      for (int j = c; j < cols_; ++j) m.at(r, j) -= factor * m.at(c, j);
    }
  }
  return det;
}

}  // namespace tdcalc
