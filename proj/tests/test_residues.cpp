#include <doctest.h>

#include <random>

#include "tdcalc/parse.hpp"
#include "tdcalc/residues.hpp"

#include "test_util.hpp"

using namespace tdcalc;
using namespace tdcalc::testutil;

TEST_CASE("res_q on the standard two-forms") {
  auto chart = make_elliptic_chart(2, 0, 0);
  Form w = parse_form("dlr1^dth2 + dth1^dlr2", chart);
  CHECK(res_q(w, 0).is_zero());
  CHECK(res_q(w, 1).is_zero());

  Form bad = parse_form("dlr1^dth1", chart);
  auto rp = remove_pair(*chart, 0);
  CHECK(res_q(bad, 0) == Form::scalar(rp, 1));
  CHECK(res_q(bad, 1).is_zero());
}

TEST_CASE("res_q with a formal parameter") {
  auto chart = make_elliptic_chart(1, 0, 2, {"lambda"});
  Form w = parse_form("@lambda*dlr1^dth1 + dx1^dx2", chart);
  auto rp = remove_pair(*chart, 0);
  CHECK(res_q(w, 0) == Form::from_fn(rp, fn::param(*rp, "lambda")));
}

TEST_CASE("res_r keeps the normal angle") {
  auto chart = make_elliptic_chart(1, 0, 0);
  Form w = parse_form("dlr1^dth1", chart);
  Form res = res_r(w, 0);
  auto dm = demote_r(*chart, 0);
  CHECK(res == parse_form("dth1", dm));
}

TEST_CASE("basic and singular restriction errors") {
  auto chart = make_elliptic_chart(2, 0, 0);
  // E^{i th_1} at r_1 = 0 in the honest-stratum picture is not basic
  Form w = fn::E(*chart, 0, 1) * parse_form("dlr1^dth1", chart);
  CHECK_THROWS_AS(res_q(w, 0), NotBasicError);
  // but survives in the S^1 ND picture
  CHECK_NOTHROW(res_r(w, 0));
  // a pole along the stratum
  Form pole = fn::r(*chart, 0, -1) * parse_form("dlr1^dth1", chart);
  CHECK_THROWS_AS(res_q(pole, 0), SingularRestrictionError);
  // positive powers restrict to zero
  Form vanish = fn::r(*chart, 0, 2) * parse_form("dlr1^dth1", chart);
  CHECK(res_q(vanish, 0).is_zero());
}

TEST_CASE("point residues of the standard symplectic form") {
  auto chart = make_elliptic_chart(2, 0, 0);
  Form w = parse_form("dlr1^dth2 + dth1^dlr2", chart);
  auto pt = remove_pair(*remove_pair(*chart, 0), 0);
  // w(r1 dr1, dth2) = +1 and w(r2 dr2, dth1) = -1: the mixed point
  // residues agree only up to the orientation flip (i,j) -> (j,i)
  CHECK(res_point(w, PointResidueKind::RTheta, 0, 1) == fn::c(1, *pt));
  CHECK(res_point(w, PointResidueKind::RTheta, 1, 0) == fn::c(-1, *pt));
  CHECK(res_point(w, PointResidueKind::RR, 0, 1).is_zero());
  CHECK(res_point(w, PointResidueKind::ThetaTheta, 0, 1).is_zero());

  Form w2 = parse_form("dlr1^dlr2 - dth1^dth2", chart);
  CHECK(res_point(w2, PointResidueKind::RR, 0, 1) == fn::c(1, *pt));
  CHECK(res_point(w2, PointResidueKind::ThetaTheta, 0, 1) == fn::c(-1, *pt));
  CHECK(res_point(w2, PointResidueKind::RTheta, 0, 1).is_zero());
}

TEST_CASE("real log residues") {
  auto chart = make_real_log_chart(2, 0, 0);
  Form dlx1 = Form::covector(chart, 0);
  Form dlx2 = Form::covector(chart, 1);
  Form w = wedge(dlx1, dlx2);
  CHECK(res_log2(w, 0, 1) ==
        fn::c(1, *remove_pair(*remove_pair(*chart, 0), 0)));
  Form r1 = res_log(w, 0);
  CHECK(r1 == Form::covector(demote_r(*chart, 0), 0));
  // the double residue is antisymmetric in its two strata
  CHECK(res_log2(w, 0, 1) == -res_log2(w, 1, 0));
}

TEST_CASE("residues are linear") {
  auto chart = make_elliptic_chart(2, 0, 0);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    Form a = rand_form(chart, rng, 2);
    Form b = rand_form(chart, rng, 2);
    for (int i = 0; i < 2; ++i) {
      try {
        Form ra = res_r(a, i), rb = res_r(b, i);
        CHECK(res_r(a + b, i) == ra + rb);
      } catch (const SingularRestrictionError&) {
        // random coefficients may be singular along the stratum; skip
      }
    }
  }
}
