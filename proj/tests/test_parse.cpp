#include <doctest.h>

#include <random>

#include "tdcalc/parse.hpp"

#include "test_util.hpp"

using namespace tdcalc;
using namespace tdcalc::testutil;

TEST_CASE("atoms and operators") {
  auto chart = make_elliptic_chart(2, 1, 1, {"lambda"});
  CHECK(parse_form("dlr1", chart) == Form::covector(chart, 0));
  CHECK(parse_form("dth2", chart) == Form::covector(chart, 3));
  CHECK(parse_form("dps1", chart) == Form::covector(chart, 4));
  CHECK(parse_form("dx1", chart) == Form::covector(chart, 5));
  CHECK(parse_form("r1^2", chart) ==
        Form::from_fn(chart, fn::r(*chart, 0, 2)));
  CHECK(parse_form("r2^-3", chart) ==
        Form::from_fn(chart, fn::r(*chart, 1, -3)));
  CHECK(parse_form("x1^2", chart) ==
        Form::from_fn(chart, fn::x(*chart, 0, 2)));
  CHECK(parse_form("@lambda^-1", chart) ==
        Form::from_fn(chart, fn::param(*chart, "lambda", -1)));
  CHECK(parse_form("Eth1[2]", chart) ==
        Form::from_fn(chart, fn::E(*chart, 0, 2)));
  CHECK(parse_form("E3[-1]", chart) ==
        Form::from_fn(chart, fn::E(*chart, 2, -1)));
  CHECK(parse_form("z1", chart) == Form::from_fn(chart, fn::z(*chart, 0)));
  CHECK(parse_form("zb2", chart) ==
        Form::from_fn(chart, fn::zbar(*chart, 1)));
  CHECK(parse_form("i*i", chart) == Form::scalar(chart, -1));
  CHECK(parse_form("3/2", chart) ==
        Form::from_fn(chart, fn::c(GaussianRational(Rational(3, 2)), *chart)));
}

TEST_CASE("sugar expands over the elliptic frame") {
  auto chart = make_elliptic_chart(1, 0, 0);
  Form dlr = Form::covector(chart, 0);
  Form dth = Form::covector(chart, 1);
  CHECK(parse_form("dlz1", chart) == dlr + GaussianRational::i() * dth);
  CHECK(parse_form("dlzb1", chart) == dlr - GaussianRational::i() * dth);
  CHECK(parse_form("dz1", chart) ==
        fn::z(*chart, 0) * (dlr + GaussianRational::i() * dth));
  CHECK(parse_form("dzb1", chart) ==
        fn::zbar(*chart, 0) * (dlr - GaussianRational::i() * dth));
  // d of the coordinate equals the sugar
  CHECK(parse_form("dz1", chart) == d(parse_form("z1", chart)));
}

TEST_CASE("power suffix only binds digits") {
  auto chart = make_elliptic_chart(2, 0, 0);
  // r1^2 is a power, r1^dth1 is a wedge
  CHECK(parse_form("r1^dth1", chart) ==
        fn::r(*chart, 0) * Form::covector(chart, 1));
  CHECK(parse_form("r1^2*dth1", chart) ==
        fn::r(*chart, 0, 2) * Form::covector(chart, 1));
  CHECK(parse_form("dlr1^dth2 + dth1^dlr2", chart) ==
        wedge(Form::covector(chart, 0), Form::covector(chart, 3)) +
            wedge(Form::covector(chart, 1), Form::covector(chart, 2)));
}

TEST_CASE("exp and division") {
  auto chart = make_elliptic_chart(1, 0, 0);
  Form B = wedge(Form::covector(chart, 0), Form::covector(chart, 1));
  CHECK(parse_form("exp(dlr1^dth1)", chart) == exterior_exp(B));
  CHECK(parse_form("dth1/2", chart) ==
        GaussianRational(Rational(1, 2)) * Form::covector(chart, 1));
  CHECK(parse_form("dth1/z1", chart) ==
        fn::z(*chart, 0).inverse() * Form::covector(chart, 1));
  CHECK_THROWS_AS(parse_form("dth1/(1 + r1)", chart), ParseError);
}

TEST_CASE("errors carry positions") {
  auto chart = make_elliptic_chart(1, 0, 0);
  CHECK_THROWS_AS(parse_form("dlr7", chart), ParseError);
  CHECK_THROWS_AS(parse_form("dlr1 +", chart), ParseError);
  CHECK_THROWS_AS(parse_form("(dlr1", chart), ParseError);
  CHECK_THROWS_AS(parse_form("x1^-1", chart), ParseError);
  CHECK_THROWS_AS(parse_form("Eth1", chart), ParseError);
}

TEST_CASE("print parse round trip") {
  auto chart = make_elliptic_chart(2, 1, 1, {"lambda"});
  std::mt19937_64 rng(47);
  for (int t = 0; t < 60; ++t) {
    Form a = rand_mixed_form(chart, rng, 4);
    if (a.is_zero()) continue;
    CHECK(parse_form(a.str(), chart) == a);
  }
  auto rl = make_real_log_chart(2, 1, 1);
  for (int t = 0; t < 20; ++t) {
    Form a = rand_mixed_form(rl, rng, 3);
    if (a.is_zero()) continue;
    CHECK(parse_form(a.str(), rl) == a);
  }
}
