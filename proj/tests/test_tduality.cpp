#include <doctest.h>

#include <random>

#include "tdcalc/examples.hpp"
#include "tdcalc/parse.hpp"
#include "tdcalc/tduality.hpp"

#include "test_util.hpp"

using namespace tdcalc;
using namespace tdcalc::testutil;

namespace {

DualityData make_data(int l, const std::string& F_expr) {
  DualityData data;
  data.cc = make_correspondence(make_elliptic_chart(l, 0, 0),
                                make_elliptic_chart(l, 0, 0));
  data.F = parse_form(F_expr, data.cc.corr);
  data.H = Form(data.cc.left);
  data.Hhat = Form(data.cc.right);
  auto fill = [&](TorusAction& a, ChartPtr chart) {
    a.chart = chart;
    for (int i = 0; i < chart->num_r; ++i) {
      std::vector<int> row(chart->num_angles(), 0);
      row[chart->anchored_angle(i)] = 1;
      a.matrix.push_back(std::move(row));
    }
  };
  fill(data.left_action, data.cc.left);
  fill(data.right_action, data.cc.right);
  return data;
}

}  // namespace

TEST_CASE("correspondence chart shape") {
  auto cc = make_correspondence(make_elliptic_chart(2, 0, 1),
                                make_elliptic_chart(2, 0, 1));
  CHECK(cc.corr->num_r == 2);
  CHECK(cc.corr->num_angles() == 4);
  CHECK(cc.corr->num_x == 1);
  CHECK(cc.corr->angle_names[0] == "th1");
  CHECK(cc.corr->angle_names[2] == "thh1");
  // projections hit the anchored angles of each side
  Form dth1 = Form::covector(cc.left, 1);
  Form pb = pullback(dth1, cc.p);
  auto frc = frame(*cc.corr);
  bool found = false;
  for (const auto& [mask, f] : pb.terms())
    for (int p = 0; p < static_cast<int>(frc.size()); ++p)
      if ((mask >> p) & 1)
        found = found || slot_label(*cc.corr, frc[p]) == "dth1";
  CHECK(found);
}

TEST_CASE("kernel conditions for the four standard kernels") {
  CHECK(make_data(2, "dth1^dthh1 + dth2^dthh2").F ==
        parse_form("dth1^dthh1 + dth2^dthh2",
                   make_data(2, "0").cc.corr));
  CHECK(check_F(make_data(2, "dth1^dthh1 + dth2^dthh2")).pass);
  CHECK(check_F(make_data(2, "dth1^dthh1 - dth2^dthh2")).pass);
  CHECK(check_F(make_data(2, "-dth1^dthh2 + dth2^dthh1")).pass);
  CHECK(check_F(make_data(2, "-dth1^dthh2 - dth2^dthh1")).pass);
  // degenerate fiber pairing
  CHECK(!check_F(make_data(2, "dth1^dthh1")).pass);
  // not invariant
  CHECK(!check_F(make_data(2, "r1*dth1^dthh1 + dth2^dthh2")).nondeg);
  // angle-dependent kernel is not invariant
  CHECK(!check_F(make_data(1, "Eth1[1]*dth1^dthh1")).invariant);
}

TEST_CASE("rank one transform of the symplectic spinor") {
  DualityData data = make_data(1, "dth1^dthh1");
  Form rho = parse_form("exp(i*(dlr1^dth1))", data.cc.left);
  Form image = tau(rho, data);
  CHECK(projectively_equal(parse_form("dlr1 + i*dth1", data.cc.right), image));
  // reverse transport brings the line back
  Form back = tau_reverse(image, data);
  CHECK(projectively_equal(rho, back));
}

TEST_CASE("transform is a cochain map with one global sign") {
  DualityData data = make_data(2, "-dth1^dthh2 + dth2^dthh1");
  std::mt19937_64 rng(43);
  std::vector<Form> samples;
  for (int t = 0; t < 12; ++t) {
    // invariant forms only: no fourier modes on the anchored angles
    Form a(data.cc.left);
    int n = static_cast<int>(frame(*data.cc.left).size());
    for (int k = 0; k <= 3; ++k) {
      FrameMask mask = 0;
      while (mask_degree(mask) < k) mask |= 1ull << rand_int(rng, 0, n - 1);
      if (mask_degree(mask) != k) continue;
      ExpKey key = ExpKey::zero(*data.cc.left);
      for (int& e : key.r) e = rand_int(rng, -1, 2);
      Form legs = Form::scalar(data.cc.left, 1);
      for (int p = 0; p < n; ++p)
        if (mask & (1ull << p)) legs = wedge(legs, Form::covector(data.cc.left, p));
      a += FnElem::monomial(rand_scalar(rng), key) * legs;
    }
    if (!a.is_zero()) samples.push_back(a);
  }
  CochainReport rep = cochain_verify(data, samples);
  CHECK(rep.ok);
  CHECK((rep.sign == 1 || rep.sign == -1));
  CHECK(rep.roundtrip_ok);
  CHECK((rep.roundtrip_sign == 1 || rep.roundtrip_sign == -1));
}

TEST_CASE("non-invariant spinors are rejected") {
  DualityData data = make_data(1, "dth1^dthh1");
  CHECK_THROWS(tau(parse_form("Eth1[1]*dlr1", data.cc.left), data));
}

TEST_CASE("kernel from connections") {
  DualityData data = make_data(2, "0");
  ConnectionForm theta{{parse_form("dth1", data.cc.left),
                        parse_form("dth2", data.cc.left)}};
  ConnectionForm thetahat{{parse_form("dth1", data.cc.right),
                           parse_form("dth2", data.cc.right)}};
  Form F = build_F_from_connections(data.cc, theta, thetahat);
  CHECK(F == parse_form("-dth1^dthh1 - dth2^dthh2", data.cc.corr));
  DualityData with = data;
  with.F = F;
  CHECK(check_F(with).pass);
}
