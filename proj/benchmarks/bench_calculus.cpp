#include <benchmark/benchmark.h>

#include <random>

#include "tdcalc/genstruct.hpp"
#include "tdcalc/parse.hpp"
#include "tdcalc/tduality.hpp"

using namespace tdcalc;

namespace {

Form dense_form(ChartPtr chart, std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  int n = static_cast<int>(frame(*chart).size());
  Form out(chart);
  for (FrameMask m = 0; m < (1ull << n); ++m) {
    if (mask_degree(m) > max_degree) continue;
    ExpKey k = ExpKey::zero(*chart);
    for (int& e : k.r) e = coeff(rng) % 3;
    Form legs = Form::scalar(chart, 1);
    for (int p = 0; p < n; ++p)
      if (m & (1ull << p)) legs = wedge(legs, Form::covector(chart, p));
    out += FnElem::monomial(GaussianRational(coeff(rng)), k) * legs;
  }
  return out;
}

void BM_wedge(benchmark::State& state) {
  auto chart = make_elliptic_chart(3, 0, 0);
  std::mt19937_64 rng(1);
  Form a = dense_form(chart, rng, 3);
  Form b = dense_form(chart, rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_wedge);

void BM_d(benchmark::State& state) {
  auto chart = make_elliptic_chart(3, 0, 1);
  std::mt19937_64 rng(2);
  Form a = dense_form(chart, rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(d(a));
}
BENCHMARK(BM_d);

void BM_tau(benchmark::State& state) {
  DualityData data;
  data.cc = make_correspondence(make_elliptic_chart(2, 0, 0),
                                make_elliptic_chart(2, 0, 0));
  data.F = parse_form("-dth1^dthh2 + dth2^dthh1", data.cc.corr);
  data.H = Form(data.cc.left);
  data.Hhat = Form(data.cc.right);
  data.left_action.chart = data.cc.left;
  data.left_action.matrix = {{1, 0}, {0, 1}};
  data.right_action.chart = data.cc.right;
  data.right_action.matrix = {{1, 0}, {0, 1}};
  Form rho = parse_form("exp(i*(dlr1^dth2 + dth1^dlr2))", data.cc.left);
  for (auto _ : state) benchmark::DoNotOptimize(tau(rho, data));
}
BENCHMARK(BM_tau);

void BM_stable_check(benchmark::State& state) {
  auto chart = make_elliptic_chart(3, 0, 0);
  Form w = parse_form(
      "dlr1^dth2 + dth1^dlr2 + dlr2^dth3 + dth2^dlr3 + dlr1^dth3 + dth1^dlr3",
      chart);
  for (auto _ : state) benchmark::DoNotOptimize(stable_check(w));
}
BENCHMARK(BM_stable_check);

void BM_descends(benchmark::State& state) {
  auto chart = make_elliptic_chart(2, 0, 0);
  Form rho = parse_form("dlz1^dlz2", chart);
  for (auto _ : state) benchmark::DoNotOptimize(descends(rho));
}
BENCHMARK(BM_descends);

}  // namespace

BENCHMARK_MAIN();
