#include <doctest.h>

#include <random>

#include "tdcalc/eval.hpp"
#include "tdcalc/fnelem.hpp"

#include "test_util.hpp"

using namespace tdcalc;
using namespace tdcalc::testutil;

TEST_CASE("gaussian rational arithmetic and printing") {
  GaussianRational a(Rational(3, 2));
  CHECK(a.str() == "3/2");
  CHECK(GaussianRational::i().str() == "i");
  GaussianRational b(Rational(0), Rational(-1, 4));
  CHECK(b.str() == "-1/4*i");
  GaussianRational c(Rational(1), Rational(2));
  CHECK(c.str() == "1+2*i");

  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK(c * c.conj() == GaussianRational(Rational(5)));
  CHECK((c / c) == GaussianRational(1));
  CHECK(pow(GaussianRational::i(), 4) == GaussianRational(1));
  CHECK(pow(c, -1) * c == GaussianRational(1));
}

TEST_CASE("monomial normalization and ring laws") {
  auto chart = make_elliptic_chart(2, 1, 1, {"lambda"});
  FnElem r1 = fn::r(*chart, 0);
  FnElem zero = r1 - r1;
  CHECK(zero.is_zero());
  CHECK((r1 + r1) == GaussianRational(2) * r1);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    FnElem a = rand_fn(*chart, rng);
    FnElem b = rand_fn(*chart, rng);
    FnElem c = rand_fn(*chart, rng);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    // numeric oracle: ring operations commute with evaluation
    SamplePoint at = random_sample(*chart, rng);
    CHECK(eval_fn(a * b, at) == eval_fn(a, at) * eval_fn(b, at));
    CHECK(eval_fn(a + b, at) == eval_fn(a, at) + eval_fn(b, at));
    CHECK(eval_fn(a.conj(), at) ==
          eval_fn(a, at).conj());  // |unit| = 1 at every sample
  }
}

TEST_CASE("inverse of invertible monomials") {
  auto chart = make_elliptic_chart(2, 0, 0, {"lambda"});
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    ExpKey k = ExpKey::zero(*chart);
    for (int& e : k.r) e = rand_int(rng, -2, 2);
    for (int& e : k.fourier) e = rand_int(rng, -2, 2);
    for (int& e : k.param) e = rand_int(rng, -1, 1);
    GaussianRational c = rand_scalar(rng);
    if (c.is_zero()) continue;
    FnElem m = FnElem::monomial(c, k);
    CHECK(m * m.inverse() == fn::c(1, *chart));
  }
  auto xchart = make_elliptic_chart(0, 0, 1);
  CHECK_THROWS(fn::x(*xchart, 0).inverse());
  CHECK_THROWS((fn::r(*chart, 0) + fn::r(*chart, 1)).inverse());
}

TEST_CASE("z builders") {
  auto chart = make_elliptic_chart(2, 0, 0);
  CHECK(fn::z(*chart, 0) * fn::zbar(*chart, 0) == fn::r(*chart, 0, 2));
  CHECK(fn::z_pow(*chart, 0, 2, 1) ==
        fn::z(*chart, 0) * fn::z(*chart, 0) * fn::zbar(*chart, 0));
  CHECK(fn::z(*chart, 1).conj() == fn::zbar(*chart, 1));
}

TEST_CASE("smoothness of monomials") {
  auto chart = make_elliptic_chart(2, 1, 0);
  // r^a E[b]: smooth iff a >= |b| and a = b mod 2 on each polar pair
  CHECK(is_smooth_fn(fn::z(*chart, 0), *chart));
  CHECK(is_smooth_fn(fn::z(*chart, 0) * fn::zbar(*chart, 0), *chart));
  CHECK(is_smooth_fn(fn::r(*chart, 0, 2), *chart));
  CHECK(!is_smooth_fn(fn::r(*chart, 0, 1), *chart));  // parity
  CHECK(!is_smooth_fn(fn::E(*chart, 0, 1), *chart));
  CHECK(is_smooth_fn(fn::E(*chart, 2, 5), *chart));  // free angle
  CHECK(!is_smooth_fn(fn::z(*chart, 1) * fn::z(*chart, 0).inverse(), *chart));
  CHECK(is_smooth_fn(fn::z_pow(*chart, 0, 3, 1), *chart));
  CHECK(!is_smooth_fn(fn::z_pow(*chart, 0, 1, -1), *chart));  // z/zbar

  auto rl = make_real_log_chart(1, 0, 1);
  CHECK(is_smooth_fn(fn::r(*rl, 0, 1), *rl));
  CHECK(!is_smooth_fn(fn::r(*rl, 0, -1), *rl));
}

TEST_CASE("printing round trip through terms") {
  auto chart = make_elliptic_chart(1, 0, 1, {"lambda"});
  FnElem f = fn::r(*chart, 0, 2) * fn::E(*chart, 0, 1) * fn::x(*chart, 0) *
             fn::param(*chart, "lambda");
  CHECK(f.str(*chart) == "r1^2*Eth1[1]*x1*@lambda");
  FnElem g = GaussianRational(Rational(1), Rational(2)) * fn::r(*chart, 0);
  CHECK(g.str(*chart) == "(1+2*i)*r1");
}
