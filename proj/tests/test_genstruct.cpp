#include <doctest.h>

#include <random>

#include "tdcalc/genstruct.hpp"
#include "tdcalc/parse.hpp"

#include "test_util.hpp"

using namespace tdcalc;
using namespace tdcalc::testutil;

TEST_CASE("pairing of frame sections") {
  auto chart = make_elliptic_chart(1, 0, 0);
  GenSection e1{Multivector::vector(chart, 0), Form(chart)};
  GenSection f1{Multivector(chart), Form::covector(chart, 0)};
  CHECK(pairing(e1, f1) == GaussianRational(Rational(1, 2)) * fn::c(1, *chart));
  CHECK(pairing(e1, e1).is_zero());
  CHECK(pairing(f1, f1).is_zero());
}

TEST_CASE("clifford relation against the pairing") {
  auto chart = make_elliptic_chart(2, 0, 1);
  std::mt19937_64 rng(31);
  int n = static_cast<int>(frame(*chart).size());
  for (int t = 0; t < 40; ++t) {
    GenSection u{rand_fn(*chart, rng, 1) *
                     Multivector::vector(chart, rand_int(rng, 0, n - 1)),
                 rand_fn(*chart, rng, 1) *
                     Form::covector(chart, rand_int(rng, 0, n - 1))};
    Form rho = rand_mixed_form(chart, rng, 3);
    // u . u . rho = <u, u> rho
    CHECK(clifford(u, clifford(u, rho)) == pairing(u, u) * rho);
  }
}

TEST_CASE("mukai pairing on the complex log spinor") {
  auto chart = make_elliptic_chart(2, 0, 0);
  Form rho = parse_form("dlz1^dlz2", chart);
  CHECK(mukai_top(rho) == fn::c(-4, *chart));
  // |f|^2 scaling of the pairing under a monomial rescaling
  std::mt19937_64 rng(37);
  for (int t = 0; t < 20; ++t) {
    ExpKey k = ExpKey::zero(*chart);
    for (int& e : k.r) e = rand_int(rng, -2, 2);
    for (int& e : k.fourier) e = rand_int(rng, -2, 2);
    GaussianRational c = rand_scalar(rng);
    if (c.is_zero()) continue;
    FnElem f = FnElem::monomial(c, k);
    CHECK(mukai_top(f * rho) == f * f.conj() * mukai_top(rho));
  }
}

TEST_CASE("purity of the standard spinors") {
  auto chart = make_elliptic_chart(2, 0, 0);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 3; ++t) {
    SamplePoint at = random_sample(*chart, rng);
    CHECK(is_pure_at(parse_form("dlz1^dlz2", chart), at));
    CHECK(is_pure_at(parse_form("dlz1^dlzb2", chart), at));
    CHECK(is_pure_at(parse_form("exp(i*(dlr1^dth2 + dth1^dlr2))", chart), at));
    // a generic inhomogeneous form is not pure
    CHECK(!is_pure_at(parse_form("1 + dlr1 + dlr1^dth1^dlr2^dth2", chart), at));
  }
}

TEST_CASE("dorfman bracket special values") {
  auto chart = make_elliptic_chart(1, 0, 1);
  Form H(chart);
  GenSection X{Multivector::vector(chart, 0), Form(chart)};
  GenSection Y{Multivector::vector(chart, 2), Form(chart)};
  // commuting frame fields, no twist
  GenSection b = dorfman(X, Y, H);
  CHECK(b.vec.is_zero());
  CHECK(b.cov.is_zero());
  // [[X, f Y]] = (X f) Y for invariant frame data
  FnElem f = fn::r(*chart, 0, 2);
  GenSection fY{f * Multivector::vector(chart, 2), Form(chart)};
  GenSection c = dorfman(X, fY, H);
  CHECK(c.vec == GaussianRational(2) * f * Multivector::vector(chart, 2));
  CHECK(c.cov.is_zero());
  // twist term: i_X i_Y H
  Form H3 = parse_form("dlr1^dth1^dx1", chart);
  GenSection tw = dorfman(X, Y, H3);
  CHECK(tw.cov == parse_form("dth1", chart));
  auto wide = make_elliptic_chart(1, 0, 2);
  GenSection X2{Multivector::vector(wide, 0), Form(wide)};
  GenSection Y2{Multivector::vector(wide, 2), Form(wide)};
  CHECK_THROWS(dorfman(X2, Y2, parse_form("x1*dlr1^dth1^dx2", wide)));
}

TEST_CASE("stable two-forms") {
  auto chart = make_elliptic_chart(2, 0, 0);
  CHECK(stable_check(parse_form("dlr1^dth2 + dth1^dlr2", chart)).pass);
  CHECK(stable_check(parse_form("dlr1^dlr2 - dth1^dth2", chart)).pass);
  // unbalanced mixed residues break the symmetry condition
  CHECK(!stable_check(parse_form("dlr1^dth2 - dth1^dlr2", chart)).pass);
  // nonzero Res_q
  CHECK(!stable_check(parse_form("dlr1^dth1 + dlr2^dth2", chart)).pass);
  // not closed
  CHECK(!stable_check(parse_form("r1*dlr2^dth2", chart)).pass);
}

TEST_CASE("descends on known lines") {
  auto chart = make_elliptic_chart(2, 0, 0);
  DescendsResult r = descends(parse_form("dlz1^dlz2", chart));
  CHECK(r.ok);
  CHECK(r.witness == fn::z(*chart, 0) * fn::z(*chart, 1));
  // already smooth with unit pairing: witness is the constant 1
  DescendsResult s = descends(parse_form("exp(i*(z1*zb1*dlr1^dth1 + z2*zb2*dlr2^dth2))", chart));
  CHECK(s.ok);
  // mixed log line: z1*zb2 clears both poles with unit pairing
  DescendsResult m = descends(parse_form("dlz1^dlzb2", chart));
  CHECK(m.ok);
  CHECK(m.witness == fn::z(*chart, 0) * fn::zbar(*chart, 1));
}

TEST_CASE("dH closure") {
  auto chart = make_elliptic_chart(2, 0, 0);
  Spinor s{parse_form("dlz1^dlz2", chart), Form(chart)};
  CHECK(dH_closed(s));
  Spinor bad{parse_form("r1^2*dth1", chart), Form(chart)};
  CHECK(!dH_closed(bad));
  CHECK_THROWS(dH_closed(Spinor{
      parse_form("dlz1", chart),
      parse_form("r1^2*dth1^dlr2^dth2", chart)}));
}
