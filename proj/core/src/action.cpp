#include "tdcalc/action.hpp"

#include <stdexcept>

namespace tdcalc {

void TorusAction::validate() const {
  if (!chart) throw std::invalid_argument("action without chart");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != chart->num_angles())
      throw std::invalid_argument("action row size mismatch");
}

// Integer determinant by fraction-free Gaussian elimination on a copy.
static long long int_det(std::vector<std::vector<long long>> m) {
  int n = static_cast<int>(m.size());
  long long det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    for (int r = c + 1; r < n; ++r) {
      // Euclidean reduction keeps entries integral without division.
      while (m[r][c] != 0) {
        long long q = m[c][c] / m[r][c];
        for (int j = c; j < n; ++j) m[c][j] -= q * m[r][j];
        std::swap(m[c], m[r]);
        det = -det;
      }
    }
    det *= m[c][c];
  }
  return det;
}

bool is_standard(const TorusAction& action) {
  action.validate();
  int k = action.rank();
  if (k == 0) return true;
  std::vector<int> nonzero_cols;
  for (int c = 0; c < action.chart->num_angles(); ++c) {
    bool nz = false;
    for (int r = 0; r < k; ++r) nz = nz || action.matrix[r][c] != 0;
    if (nz) nonzero_cols.push_back(c);
  }
  if (static_cast<int>(nonzero_cols.size()) != k) return false;
  std::vector<std::vector<long long>> sq(k, std::vector<long long>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sq[r][c] = action.matrix[r][nonzero_cols[c]];
  long long d = int_det(std::move(sq));
  return d == 1 || d == -1;
}

FnElem torus_average(const FnElem& f, const TorusAction& action) {
  action.validate();
  FnElem out;
  for (const auto& [k, v] : f.terms()) {
    bool invariant = true;
    for (const auto& row : action.matrix) {
      long long dot = 0;
      for (std::size_t c = 0; c < row.size(); ++c) dot += row[c] * k.fourier[c];
      if (dot != 0) {
        invariant = false;
        break;
      }
    }
    if (invariant) out += FnElem::monomial(v, k);
  }
  return out;
}

bool is_invariant_fn(const FnElem& f, const TorusAction& action) {
  return torus_average(f, action) == f;
}

}  // namespace tdcalc
