#include <doctest.h>

#include "tdcalc/atlas.hpp"
#include "tdcalc/connection.hpp"
#include "tdcalc/parse.hpp"

using namespace tdcalc;

TEST_CASE("connection conditions") {
  auto chart = make_elliptic_chart(2, 0, 0);
  TorusAction act;
  act.chart = chart;
  act.matrix = {{-1, -1}, {1, 0}};
  ConnectionForm conn{{parse_form("-dth2", chart),
                       parse_form("dth1 - dth2", chart)}};
  CHECK(check_connection(conn, act));
  // wrong normalization
  ConnectionForm off{{parse_form("-2*dth2", chart),
                      parse_form("dth1 - dth2", chart)}};
  CHECK(!check_connection(off, act));
  // angle-dependent coefficient is not invariant
  ConnectionForm wob{{parse_form("-dth2 + Eth1[1]*dlr1", chart),
                      parse_form("dth1 - dth2", chart)}};
  CHECK(!check_connection(wob, act));
}

TEST_CASE("curvature is basic") {
  auto chart = make_elliptic_chart(1, 0, 2);
  TorusAction act;
  act.chart = chart;
  act.matrix = {{1}};
  ConnectionForm conn{{parse_form("dth1 + x1*dx2", chart)}};
  REQUIRE(check_connection(conn, act));
  auto curv = curvature(conn, act);
  CHECK(curv[0] == parse_form("dx1^dx2", chart));
  // a non-connection with angle legs in d(theta) is rejected
  ConnectionForm bad{{parse_form("dth1 + x1*dth1", chart)}};
  CHECK_THROWS(curvature(bad, act));
}

TEST_CASE("cocycle and gluing on a two chart cover") {
  auto a0 = make_elliptic_chart(1, 0, 0);
  auto a1 = make_elliptic_chart(1, 0, 0);
  Atlas atlas;
  atlas.charts = {a0, a1};
  MonomialMap inv;  // w = 1/z
  inv.domain = a0;
  inv.codomain = a1;
  inv.r_exp = {{-1}};
  inv.r_scale = {Rational(1)};
  inv.angle_comb = {{-1}};
  MonomialMap inv_back = inv;
  inv_back.domain = a1;
  inv_back.codomain = a0;
  atlas.transitions = {{0, 1, inv}, {1, 0, inv_back}};
  CHECK(atlas_cocycle_check(atlas));

  // dlog z picks up a sign under inversion, dth glues with the sign too
  Form dth0 = parse_form("dth1", a0);
  Form dth1f = parse_form("dth1", a1);
  CHECK(!atlas_check_global(atlas, {dth0, dth1f}));
  CHECK(atlas_check_global(atlas, {dth0, -dth1f}));

  // exact-only data fails the stricter mode but glues projectively
  Form z0 = parse_form("z1*dth1", a0);
  Form z1f = parse_form("-z1*dth1", a1);
  CHECK(!atlas_check_global(atlas, {z0, z1f}));
  CHECK(atlas_check_global(atlas, {z0, z1f}, GlueMode::Projective));

  // a broken inverse pair
  Atlas broken = atlas;
  broken.transitions[1].map.angle_comb = {{1}};
  CHECK(!atlas_cocycle_check(broken));
}

TEST_CASE("triple overlap condition") {
  auto c = make_elliptic_chart(1, 0, 0);
  Atlas atlas;
  atlas.charts = {c, c, c};
  MonomialMap s2 = MonomialMap::identity(c);
  s2.r_scale = {Rational(2)};
  MonomialMap s3 = MonomialMap::identity(c);
  s3.r_scale = {Rational(3)};
  MonomialMap s6 = MonomialMap::identity(c);
  s6.r_scale = {Rational(6)};
  atlas.transitions = {{0, 1, s2}, {1, 2, s3}, {0, 2, s6}};
  atlas.triples = {{0, 1, 2}};
  CHECK(atlas_cocycle_check(atlas));
  atlas.transitions[2].map.r_scale = {Rational(5)};
  CHECK(!atlas_cocycle_check(atlas));
}
