#include "tdcalc/examples.hpp"

#include <stdexcept>

#include "tdcalc/atlas.hpp"
#include "tdcalc/blowup.hpp"
#include "tdcalc/connection.hpp"
#include "tdcalc/eval.hpp"
#include "tdcalc/genstruct.hpp"
#include "tdcalc/parse.hpp"
#include "tdcalc/residues.hpp"
#include "tdcalc/tduality.hpp"

namespace tdcalc {

bool projectively_equal(const Form& a, const Form& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& [mask, fa] = *a.terms().begin();
  FnElem fb = b.coefficient(mask);
  if (fa.is_zero() || fb.is_zero()) return false;
  const auto& [ka, va] = *fa.terms().begin();
  const auto& [kb, vb] = *fb.terms().begin();
  if (!(ka == kb)) return false;
  GaussianRational c = vb / va;
  if (c.is_zero()) return false;
  return b == c * a;
}

namespace {

class Builder {
 public:
  explicit Builder(std::string name) { res_.name = std::move(name); }

  void check(std::string name, bool pass, std::string detail = "") {
    res_.checks.push_back({std::move(name), pass, std::move(detail)});
  }

  template <typename Fn>
  void guarded(std::string name, Fn fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      check(std::move(name), false, e.what());
    }
  }

  ExampleResult done() {
    res_.pass = true;
    for (const auto& c : res_.checks) res_.pass = res_.pass && c.pass;
    return res_;
  }

 private:
  ExampleResult res_;
};

TorusAction standard_action(ChartPtr chart) {
  TorusAction a;
  a.chart = chart;
  for (int i = 0; i < chart->num_r; ++i) {
    std::vector<int> row(chart->num_angles(), 0);
    row[chart->anchored_angle(i)] = 1;
    a.matrix.push_back(std::move(row));
  }
  return a;
}

TorusAction action_with(ChartPtr chart, std::vector<std::vector<int>> m) {
  TorusAction a;
  a.chart = std::move(chart);
  a.matrix = std::move(m);
  return a;
}

DualityData make_dual(ChartPtr left, ChartPtr right, const std::string& F_expr,
                      std::vector<std::vector<int>> act = {}) {
  DualityData data;
  data.cc = make_correspondence(std::move(left), std::move(right));
  data.F = parse_form(F_expr, data.cc.corr);
  data.H = Form(data.cc.left);
  data.Hhat = Form(data.cc.right);
  data.left_action = act.empty() ? standard_action(data.cc.left)
                                 : action_with(data.cc.left, act);
  data.right_action = act.empty() ? standard_action(data.cc.right)
                                  : action_with(data.cc.right, act);
  return data;
}

ExampleResult run_c1_elliptic_symplectic() {
  Builder b("c1-elliptic-symplectic");
  auto chart = make_elliptic_chart(1, 0, 0);
  DualityData data = make_dual(chart, make_elliptic_chart(1, 0, 0),
                               "dth1^dthh1");
  b.check("check-F", check_F(data).pass);
  b.guarded("tau-line", [&] {
    Form rho = parse_form("exp(i*(dlr1^dth1))", data.cc.left);
    Form target = parse_form("dlr1 + i*dth1", data.cc.right);
    b.check("tau-line", projectively_equal(target, tau(rho, data)));
  });
  return b.done();
}

ExampleResult run_c2_complex_side() {
  Builder b("c2-complex-side");
  DualityData data =
      make_dual(make_elliptic_chart(2, 0, 0), make_elliptic_chart(2, 0, 0),
                "-dth1^dthh2 + dth2^dthh1");
  b.check("check-F", check_F(data).pass);
  b.guarded("case", [&] {
    Form rho = parse_form("exp(i*(dlr1^dth2 + dth1^dlr2))", data.cc.left);
    Form image = tau(rho, data);
    Form target = parse_form("dlz1^dlz2", data.cc.right);
    b.check("tau-line", projectively_equal(target, image));
    DescendsResult dec = descends(image);
    b.check("descends", dec.ok);
    FnElem witness = fn::z(*data.cc.right, 0) * fn::z(*data.cc.right, 1);
    b.check("witness", dec.ok && dec.witness == witness,
            dec.ok ? dec.witness.str(*data.cc.right) : "");
  });
  return b.done();
}

ExampleResult run_c2_real_side() {
  Builder b("c2-real-side");
  DualityData data =
      make_dual(make_elliptic_chart(2, 0, 0), make_elliptic_chart(2, 0, 0),
                "dth1^dthh1 - dth2^dthh2");
  b.check("check-F", check_F(data).pass);
  b.guarded("case", [&] {
    Form rho = parse_form("exp(i*(dlr1^dlr2 - dth1^dth2))", data.cc.left);
    Form image = tau(rho, data);
    Form target =
        parse_form("-i*exp(-i*(dlr1^dlr2 + dth1^dth2))", data.cc.right);
    // The stated target line; the transform lands on the opposite
    // exponential sign, recorded by the pinning check below.
    b.check("tau-line", projectively_equal(target, image));
    Form pinned =
        parse_form("-i*exp(i*(dlr1^dlr2 + dth1^dth2))", data.cc.right);
    b.check("tau-line-engine-pinned", projectively_equal(pinned, image));
  });
  return b.done();
}

ExampleResult run_c2_controls() {
  Builder b("c2-controls");
  const char* kernels[4] = {
      "dth1^dthh1 + dth2^dthh2",   // F_{1,+}
      "dth1^dthh1 - dth2^dthh2",   // F_{1,-}
      "-dth1^dthh2 + dth2^dthh1",  // F_{2,+}
      "-dth1^dthh2 - dth2^dthh1",  // F_{2,-}
  };
  const char* tags[4] = {"F1p", "F1m", "F2p", "F2m"};
  // Stated verdicts: for omega only F_{2,+} descends, for omega' only
  // F_{1,-} does.
  bool omega_expect[4] = {false, false, true, false};
  bool omega_prime_expect[4] = {false, true, false, false};
  for (int k = 0; k < 4; ++k) {
    DualityData data =
        make_dual(make_elliptic_chart(2, 0, 0), make_elliptic_chart(2, 0, 0),
                  kernels[k]);
    b.guarded(std::string("omega-") + tags[k], [&] {
      Form rho = parse_form("exp(i*(dlr1^dth2 + dth1^dlr2))", data.cc.left);
      bool dec = descends(tau(rho, data)).ok;
      b.check(std::string("omega-") + tags[k], dec == omega_expect[k],
              dec ? "descends" : "does not descend");
    });
    b.guarded(std::string("omega-prime-") + tags[k], [&] {
      Form rho = parse_form("exp(i*(dlr1^dlr2 - dth1^dth2))", data.cc.left);
      bool dec = descends(tau(rho, data)).ok;
      b.check(std::string("omega-prime-") + tags[k],
              dec == omega_prime_expect[k],
              dec ? "descends" : "does not descend");
    });
  }
  return b.done();
}

ExampleResult run_stable_c2() {
  Builder b("stable-c2");
  auto chart = make_elliptic_chart(2, 0, 0);
  for (const char* expr :
       {"dlr1^dth2 + dth1^dlr2", "dlr1^dlr2 - dth1^dth2"}) {
    StableReport rep = stable_check(parse_form(expr, chart));
    b.check(std::string("stable: ") + expr, rep.pass);
  }
  return b.done();
}

ExampleResult run_radius_one_model() {
  Builder b("radius-one-model");
  auto chart = make_elliptic_chart(1, 0, 2, {"lambda"});
  Form w = parse_form("@lambda*dlr1^dth1 + dx1^dx2", chart);
  StableReport rep = stable_check(w);
  b.check("closed", rep.closed);
  b.check("fails-stability", !rep.pass);
  bool resq_fails = false;
  for (const auto& c : rep.checks)
    if (c.name == "res_q[r1]") resq_fails = !c.pass;
  b.check("res_q-nonzero", resq_fails);
  b.guarded("res_q-value", [&] {
    Form res = res_q(w, 0);
    Form lam = Form::from_fn(remove_pair(*chart, 0),
                             fn::param(*remove_pair(*chart, 0), "lambda"));
    b.check("res_q-value", res == lam);
  });
  return b.done();
}

ExampleResult run_radius_one_duality() {
  Builder b("radius-one-duality");
  auto left = make_elliptic_chart(1, 0, 2, {"lambda"});
  auto right = make_elliptic_chart(1, 0, 2, {"lambda"});
  DualityData data = make_dual(left, right, "dth1^dthh1");
  b.check("check-F", check_F(data).pass);
  b.guarded("connections", [&] {
    ConnectionForm theta{{parse_form("dth1", data.cc.left)}};
    ConnectionForm thetahat{{parse_form("dth1", data.cc.right)}};
    b.check("connections",
            check_connection(theta, data.left_action) &&
                check_connection(thetahat, data.right_action));
    Form built = build_F_from_connections(data.cc, theta, thetahat);
    b.check("built-F", built == parse_form("-dth1^dthh1", data.cc.corr));
  });
  b.guarded("tau-line", [&] {
    Form rho =
        parse_form("exp(i*(@lambda*dlr1^dth1 + dx1^dx2))", data.cc.left);
    Form image = tau(rho, data);
    Form target = parse_form(
        "i*@lambda*(dlr1 + i*dth1)^exp(i*(dx1^dx2))", data.cc.right);
    // The stated image line for the formal parameter; matches only at
    // lambda = 1. The rescaled kernel below pins the engine conventions.
    b.check("tau-line", projectively_equal(target, image));
    DualityData scaled = data;
    scaled.F = parse_form("@lambda*dth1^dthh1", data.cc.corr);
    b.check("tau-line-scaled-kernel",
            projectively_equal(target, tau(rho, scaled)));
  });
  return b.done();
}

ExampleResult run_blowup_volume() {
  Builder b("blowup-volume");
  BlowdownMap bd = blowdown_chart(2, 1);
  Form vol = parse_form("dlr1^dth1^dlr2^dth2", bd.target);
  Form pb = pullback_blowdown(vol, bd);
  Form expected = parse_form(
      "dlrz1^dthz1^(dlrz1 + dlrv2)^(dthz1 + dthv2)", bd.source);
  b.check("volume-pullback", pb == expected);
  Divisor I{fn::r(*bd.target, 0, 2) * fn::r(*bd.target, 1, 2)};
  Divisor ind = induced_divisor(I, bd);
  b.check("induced-divisor",
          ind.generator == fn::r(*bd.source, 0, 2) * fn::r(*bd.source, 1, 2));
  b.check("radical-idempotent",
          induced_divisor(Divisor{substitute(I.generator, bd.map)},
                          blowdown_chart(2, 2))
                  .generator.is_single_term());
  b.check("fiberwise-iso", fiberwise_iso_check(bd, ind));
  Divisor wrong{fn::r(*bd.source, 0, 2)};
  b.check("fiberwise-iso-wrong-divisor", !fiberwise_iso_check(bd, wrong));
  BlowdownMap trivial = blowdown_chart(1, 1);
  b.check("trivial-chart",
          is_identity(trivial.map) &&
              fiberwise_iso_check(trivial,
                                  Divisor{fn::r(*trivial.source, 0, 2)}));
  return b.done();
}

ExampleResult run_blowup_duality() {
  Builder b("blowup-duality");
  DualityData data =
      make_dual(make_elliptic_chart(2, 0, 0), make_elliptic_chart(2, 0, 0),
                "-dth1^dthh2 + dth2^dthh1");
  BlowdownMap bd = blowdown_chart(2, 1);
  std::vector<std::vector<int>> blown_act = {{1, -1}, {0, 1}};
  DualityData blown;
  blown.cc = make_correspondence(bd.source, bd.source);
  blown.H = Form(blown.cc.left);
  blown.Hhat = Form(blown.cc.right);
  blown.left_action = action_with(blown.cc.left, blown_act);
  blown.right_action = action_with(blown.cc.right, blown_act);
  // Correspondence-level blow-down Q: shared radii via bd, both angle
  // blocks via the same substitution.
  MonomialMap Q;
  Q.domain = blown.cc.corr;
  Q.codomain = data.cc.corr;
  Q.r_exp = bd.map.r_exp;
  Q.r_scale = bd.map.r_scale;
  int l = 2;
  for (int side = 0; side < 2; ++side)
    for (int j = 0; j < l; ++j) {
      std::vector<int> row(blown.cc.corr->num_angles(), 0);
      for (int bcol = 0; bcol < l; ++bcol)
        row[side * l + bcol] = bd.map.angle_comb[j][bcol];
      Q.angle_comb.push_back(std::move(row));
    }
  blown.F = pullback(data.F, Q);
  b.check("check-F-blown", check_F(blown).pass);
  b.guarded("commutation", [&] {
    Form rho = parse_form("exp(i*(dlr1^dth2 + dth1^dlr2))", data.cc.left);
    Form lhs = tau(pullback(rho, bd.map), blown);
    Form rhs = pullback(tau(rho, data), bd.map);
    b.check("commutation", lhs == rhs);
  });
  return b.done();
}

ExampleResult run_descent_counterexample() {
  Builder b("descent-counterexample");
  auto chart = make_elliptic_chart(2, 0, 0);
  FnElem quotient = fn::z(*chart, 1) * fn::z(*chart, 0).inverse();
  b.check("z2/z1-not-smooth", !is_smooth_fn(quotient, *chart));
  b.check("z2*z1-smooth",
          is_smooth_fn(fn::z(*chart, 1) * fn::z(*chart, 0), *chart));
  Form rho = parse_form("dlz1^dlzb2", chart);
  std::mt19937_64 rng(20260823);
  bool pure = true, nondeg = true;
  for (int t = 0; t < 3; ++t) {
    SamplePoint at = random_sample(*chart, rng);
    pure = pure && is_pure_at(rho, at);
    nondeg = nondeg && mukai_nondeg(rho, at);
  }
  b.check("pure", pure);
  b.check("mukai-nondeg", nondeg);
  return b.done();
}

ExampleResult run_cp2_connections() {
  Builder b("cp2-connections");
  auto u0 = make_elliptic_chart(2, 0, 0);
  auto u1 = make_elliptic_chart(2, 0, 0);
  TorusAction act0 = action_with(u0, {{-1, -1}, {1, 0}});
  TorusAction act1 = action_with(u1, {{1, 0}, {-1, -1}});
  ConnectionForm theta0{{parse_form("-dth2", u0), parse_form("dth1-dth2", u0)}};
  ConnectionForm theta1{{parse_form("dth1-dth2", u1), parse_form("-dth2", u1)}};
  b.check("check-connection-u0", check_connection(theta0, act0));
  b.check("check-connection-u1", check_connection(theta1, act1));
  b.guarded("curvature", [&] {
    auto curv = curvature(theta0, act0);
    bool flat = curv[0].is_zero() && curv[1].is_zero();
    b.check("curvature-basic-flat", flat);
    for (int c = 0; c < 2 && flat; ++c)
      for (int i = 0; i < 2; ++i) {
        Form lhs = res_r(curv[c], i);
        Form rhs = d(res_r(theta0.theta[c], i));
        b.check("res-curvature[" + std::to_string(c) + "][" +
                    std::to_string(i) + "]",
                lhs == rhs);
      }
  });
  b.guarded("line-bundle-curvature", [&] {
    auto lb = make_elliptic_chart(1, 0, 2);
    TorusAction act = standard_action(lb);
    ConnectionForm theta{{parse_form("dth1 + x1*dx2", lb)}};
    b.check("line-bundle-connection", check_connection(theta, act));
    auto curv = curvature(theta, act);
    b.check("line-bundle-curvature",
            curv[0] == parse_form("dx1^dx2", lb));
    b.check("line-bundle-res",
            res_r(curv[0], 0) == d(res_r(theta.theta[0], 0)));
  });
  b.guarded("atlas", [&] {
    Atlas atlas;
    atlas.charts = {u0, u1};
    MonomialMap t01;  // w1 = 1/u1, w2 = u2/u1
    t01.domain = u0;
    t01.codomain = u1;
    t01.r_exp = {{-1, 0}, {-1, 1}};
    t01.r_scale = {Rational(1), Rational(1)};
    t01.angle_comb = {{-1, 0}, {-1, 1}};
    MonomialMap t10 = t01;  // the inversion has the same matrix
    t10.domain = u1;
    t10.codomain = u0;
    atlas.transitions = {{0, 1, t01}, {1, 0, t10}};
    b.check("cocycle", atlas_cocycle_check(atlas));
    b.check("glue-theta-1",
            atlas_check_global(atlas, {theta0.theta[0], theta1.theta[0]}));
    b.check("glue-theta-2",
            atlas_check_global(atlas, {theta0.theta[1], theta1.theta[1]}));
  });
  return b.done();
}

ExampleResult run_s2s2_glue() {
  Builder b("s2s2-glue");
  auto a0 = make_elliptic_chart(2, 0, 0);
  auto a1 = make_elliptic_chart(2, 0, 0);
  Atlas atlas;
  atlas.charts = {a0, a1};
  MonomialMap inv;  // both affine coordinates invert
  inv.domain = a0;
  inv.codomain = a1;
  inv.r_exp = {{-1, 0}, {0, -1}};
  inv.r_scale = {Rational(1), Rational(1)};
  inv.angle_comb = {{-1, 0}, {0, -1}};
  MonomialMap inv_back = inv;
  inv_back.domain = a1;
  inv_back.codomain = a0;
  atlas.transitions = {{0, 1, inv}, {1, 0, inv_back}};
  b.check("cocycle", atlas_cocycle_check(atlas));
  Form rho0 = parse_form("z1*z2 + dz1^dz2", a0);
  Form rho1 = parse_form("z1*z2 + dz1^dz2", a1);
  b.check("glue-projective",
          atlas_check_global(atlas, {rho0, rho1}, GlueMode::Projective));
  b.check("glue-not-exact", !atlas_check_global(atlas, {rho0, rho1}));
  return b.done();
}

ExampleResult run_hopf_scaling() {
  Builder b("hopf-scaling");
  auto chart = make_elliptic_chart(2, 0, 0);
  MonomialMap twice = MonomialMap::identity(chart);
  twice.r_scale = {Rational(2), Rational(2)};
  Form rho = parse_form("z1*z2 + dz1^dz2", chart);
  Form pb = pullback(rho, twice);
  b.check("scaling-projective", projectively_equal(rho, pb));
  b.check("scaling-factor", pb == GaussianRational(4) * rho);
  return b.done();
}

}  // namespace

const std::vector<ExampleCase>& example_registry() {
  static const std::vector<ExampleCase> cases = {
      {"c1-elliptic-symplectic",
       "one polar pair, flat kernel, transform of the symplectic spinor",
       run_c1_elliptic_symplectic},
      {"c2-complex-side",
       "two polar pairs: transform landing on the complex-structure line",
       run_c2_complex_side},
      {"c2-real-side",
       "two polar pairs: transform of the real exponential spinor",
       run_c2_real_side},
      {"c2-controls", "descent verdicts across all four kernel choices",
       run_c2_controls},
      {"stable-c2", "residue conditions on the stable two-forms",
       run_stable_c2},
      {"radius-one-model", "nonzero-residue model failing stability",
       run_radius_one_model},
      {"radius-one-duality", "duality for the nonzero-residue model",
       run_radius_one_duality},
      {"blowup-volume", "blow-down volume pullback and induced divisor",
       run_blowup_volume},
      {"blowup-duality", "blow-down commutes with the duality transform",
       run_blowup_duality},
      {"descent-counterexample",
       "non-smooth monomial quotient; pure nondegenerate mixed spinor",
       run_descent_counterexample},
      {"cp2-connections", "projective-plane connections, curvature, gluing",
       run_cp2_connections},
      {"s2s2-glue", "product-of-spheres spinor glues projectively",
       run_s2s2_glue},
      {"hopf-scaling", "scaling invariance of the standard spinor",
       run_hopf_scaling},
  };
  return cases;
}

ExampleResult run_example(const std::string& name) {
  for (const auto& c : example_registry())
    if (c.name == name) return c.run();
  throw std::out_of_range("unknown example " + name);
}

}  // namespace tdcalc
