// tdual-calc: command line front end for the chart calculus library.
//
// Exit codes: 0 = computed / verdict holds, 1 = verdict fails,
// 2 = bad usage or unparsable input.

#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdcalc/atlas.hpp"
#include "tdcalc/blowup.hpp"
#include "tdcalc/connection.hpp"
#include "tdcalc/eval.hpp"
#include "tdcalc/examples.hpp"
#include "tdcalc/genstruct.hpp"
#include "tdcalc/parse.hpp"
#include "tdcalc/residues.hpp"
#include "tdcalc/tduality.hpp"

using namespace tdcalc;
using nlohmann::json;

namespace {

struct ChartOpts {
  int l = 1;
  int f = 0;
  int m = 0;
  std::string kind = "elliptic";
  std::vector<std::string> params;

  ChartPtr build() const {
    if (kind == "elliptic") return make_elliptic_chart(l, f, m, params);
    if (kind == "reallog") return make_real_log_chart(l, f, m, params);
    if (kind == "smooth") return make_smooth_chart(f, m, params);
    throw CLI::ValidationError("--kind", "unknown chart kind " + kind);
  }
};

void add_chart_options(CLI::App* cmd, ChartOpts& opts) {
  cmd->add_option("--l", opts.l, "number of polar pairs");
  cmd->add_option("--f", opts.f, "number of free angles");
  cmd->add_option("--m", opts.m, "number of real coordinates");
  cmd->add_option("--kind", opts.kind, "elliptic|reallog|smooth");
  cmd->add_option("--param", opts.params, "formal parameter names");
}

bool g_json = false;

void emit(const json& j, const std::string& text) {
  if (g_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

json check_json(const std::string& name, bool pass, const std::string& detail) {
  json j = {{"name", name}, {"pass", pass}};
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

int report_example(const ExampleResult& r) {
  json checks = json::array();
  std::string text;
  for (const auto& c : r.checks) {
    checks.push_back(check_json(c.name, c.pass, c.detail));
    text += std::string(c.pass ? "  pass  " : "  FAIL  ") + c.name +
            (c.detail.empty() ? "" : "   [" + c.detail + "]") + "\n";
  }
  text += std::string(r.pass ? "PASS " : "FAIL ") + r.name;
  emit({{"example", r.name}, {"pass", r.pass}, {"checks", checks}}, text);
  return r.pass ? 0 : 1;
}

DualityData standard_duality(const ChartOpts& opts, const std::string& F_expr) {
  if (opts.kind != "elliptic")
    throw CLI::ValidationError("--kind", "duality commands need elliptic charts");
  DualityData data;
  data.cc = make_correspondence(opts.build(), opts.build());
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

int main(int argc, char** argv) {
  CLI::App app{"exact chart calculus for torus fibrations"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --json after the subcommand
  app.add_flag("--json", g_json, "machine readable output");
  int exit_code = 0;

  // ---- d ----
  ChartOpts d_chart;
  std::string d_expr;
  auto* cmd_d = app.add_subcommand("d", "exterior derivative of a form");
  add_chart_options(cmd_d, d_chart);
  cmd_d->add_option("expr", d_expr, "form expression")->required();
  cmd_d->callback([&] {
    auto chart = d_chart.build();
    Form out = d(parse_form(d_expr, chart));
    emit({{"result", out.str()}}, out.str());
  });

  // ---- wedge ----
  ChartOpts w_chart;
  std::vector<std::string> w_exprs;
  auto* cmd_w = app.add_subcommand("wedge", "wedge product of forms");
  add_chart_options(cmd_w, w_chart);
  cmd_w->add_option("expr", w_exprs, "form expressions")->expected(2, -1);
  cmd_w->callback([&] {
    auto chart = w_chart.build();
    Form acc = parse_form(w_exprs[0], chart);
    for (std::size_t k = 1; k < w_exprs.size(); ++k)
      acc = wedge(acc, parse_form(w_exprs[k], chart));
    emit({{"result", acc.str()}}, acc.str());
  });

  // ---- residue ----
  ChartOpts res_chart;
  std::string res_type = "q", res_expr;
  int res_i = 1, res_j = 2;
  auto* cmd_res = app.add_subcommand("residue", "residue maps of a form");
  add_chart_options(cmd_res, res_chart);
  cmd_res->add_option("--type", res_type, "q|r|log|rr|rtheta|thetatheta|log2");
  cmd_res->add_option("--i", res_i, "first index (1-based)");
  cmd_res->add_option("--j", res_j, "second index (1-based)");
  cmd_res->add_option("expr", res_expr, "form expression")->required();
  cmd_res->callback([&] {
    auto chart = res_chart.build();
    Form w = parse_form(res_expr, chart);
    int i = res_i - 1, j = res_j - 1;
    auto point_chart = [&] {
      return remove_pair(*remove_pair(*chart, i), j > i ? j - 1 : j);
    };
    std::string out;
    if (res_type == "q")
      out = res_q(w, i).str();
    else if (res_type == "r")
      out = res_r(w, i).str();
    else if (res_type == "log")
      out = res_log(w, i).str();
    else if (res_type == "rr")
      out = res_point(w, PointResidueKind::RR, i, j).str(*point_chart());
    else if (res_type == "rtheta")
      out = res_point(w, PointResidueKind::RTheta, i, j).str(*point_chart());
    else if (res_type == "thetatheta")
      out = res_point(w, PointResidueKind::ThetaTheta, i, j).str(*point_chart());
    else if (res_type == "log2")
      out = res_log2(w, i, j).str(*point_chart());
    else
      throw CLI::ValidationError("--type", "unknown residue type " + res_type);
    emit({{"result", out}}, out);
  });

  // ---- check-stable ----
  ChartOpts st_chart;
  std::string st_expr;
  auto* cmd_st = app.add_subcommand("check-stable",
                                    "residue conditions for a stable two-form");
  add_chart_options(cmd_st, st_chart);
  cmd_st->add_option("expr", st_expr, "two-form expression")->required();
  cmd_st->callback([&] {
    StableReport rep = stable_check(parse_form(st_expr, st_chart.build()));
    json checks = json::array();
    std::string text = std::string(rep.closed ? "  pass  " : "  FAIL  ") +
                       "closed\n";
    checks.push_back(check_json("closed", rep.closed, ""));
    for (const auto& c : rep.checks) {
      checks.push_back(check_json(c.name, c.pass, c.detail));
      text += std::string(c.pass ? "  pass  " : "  FAIL  ") + c.name +
              (c.detail.empty() ? "" : "   [" + c.detail + "]") + "\n";
    }
    text += rep.pass ? "STABLE" : "NOT STABLE";
    emit({{"pass", rep.pass}, {"checks", checks}}, text);
    if (!rep.pass) exit_code = 1;
  });

  // ---- check-spinor ----
  ChartOpts sp_chart;
  std::string sp_expr, sp_H;
  int sp_samples = 3;
  unsigned long long sp_seed = 1;
  auto* cmd_sp = app.add_subcommand(
      "check-spinor", "pointwise purity, Mukai nondegeneracy, d_H closure");
  add_chart_options(cmd_sp, sp_chart);
  cmd_sp->add_option("--samples", sp_samples, "number of sample points");
  cmd_sp->add_option("--seed", sp_seed, "sample RNG seed");
  cmd_sp->add_option("--H", sp_H, "three-form twist (default 0)");
  cmd_sp->add_option("expr", sp_expr, "spinor expression")->required();
  cmd_sp->callback([&] {
    auto chart = sp_chart.build();
    Spinor s{parse_form(sp_expr, chart),
             sp_H.empty() ? Form(chart) : parse_form(sp_H, chart)};
    std::mt19937_64 rng(sp_seed);
    bool pure = true, nondeg = true;
    for (int t = 0; t < sp_samples; ++t) {
      SamplePoint at = random_sample(*chart, rng);
      pure = pure && is_pure_at(s.rho, at);
      nondeg = nondeg && mukai_nondeg(s.rho, at);
    }
    bool closed = dH_closed(s);
    bool pass = pure && nondeg && closed;
    std::string text = std::string(pure ? "  pass  " : "  FAIL  ") + "pure\n" +
                       (nondeg ? "  pass  " : "  FAIL  ") + "mukai-nondeg\n" +
                       (closed ? "  pass  " : "  FAIL  ") + "dH-closed\n" +
                       (pass ? "OK" : "NOT A GENERALIZED STRUCTURE");
    emit({{"pure", pure},
          {"mukai_nondeg", nondeg},
          {"dH_closed", closed},
          {"pass", pass}},
         text);
    if (!pass) exit_code = 1;
  });

  // ---- descends ----
  ChartOpts de_chart;
  std::string de_expr;
  auto* cmd_de =
      app.add_subcommand("descends", "monomial rescaling to a smooth spinor");
  add_chart_options(cmd_de, de_chart);
  cmd_de->add_option("expr", de_expr, "spinor expression")->required();
  cmd_de->callback([&] {
    auto chart = de_chart.build();
    DescendsResult r = descends(parse_form(de_expr, chart));
    std::string w = r.ok ? r.witness.str(*chart) : "";
    emit({{"descends", r.ok}, {"witness", w}},
         r.ok ? "DESCENDS  witness " + w : "DOES NOT DESCEND");
    if (!r.ok) exit_code = 1;
  });

  // ---- check-F ----
  ChartOpts cf_chart;
  std::string cf_F;
  auto* cmd_cf =
      app.add_subcommand("check-F", "duality kernel conditions on F");
  add_chart_options(cmd_cf, cf_chart);
  cmd_cf->add_option("--F", cf_F, "kernel two-form over the correspondence")
      ->required();
  cmd_cf->callback([&] {
    CheckFReport rep = check_F(standard_duality(cf_chart, cf_F));
    std::string text =
        std::string(rep.inputs_ok ? "  pass  " : "  FAIL  ") + "inputs\n" +
        (rep.invariant ? "  pass  " : "  FAIL  ") + "invariant\n" +
        (rep.cochain ? "  pass  " : "  FAIL  ") + "cochain\n" +
        (rep.nondeg ? "  pass  " : "  FAIL  ") + "nondegenerate\n" +
        (rep.pass ? "OK" : "NOT A DUALITY KERNEL") +
        (rep.detail.empty() ? "" : "   [" + rep.detail + "]");
    emit({{"inputs_ok", rep.inputs_ok},
          {"invariant", rep.invariant},
          {"cochain", rep.cochain},
          {"nondeg", rep.nondeg},
          {"pass", rep.pass},
          {"detail", rep.detail}},
         text);
    if (!rep.pass) exit_code = 1;
  });

  // ---- tau ----
  ChartOpts tau_chart;
  std::string tau_F, tau_expr;
  bool tau_rev = false;
  auto* cmd_tau = app.add_subcommand("tau", "duality transform of a spinor");
  add_chart_options(cmd_tau, tau_chart);
  cmd_tau->add_option("--F", tau_F, "kernel two-form")->required();
  cmd_tau->add_flag("--reverse", tau_rev, "apply the reverse transform");
  cmd_tau->add_option("expr", tau_expr, "invariant spinor expression")
      ->required();
  cmd_tau->callback([&] {
    DualityData data = standard_duality(tau_chart, tau_F);
    Form rho = parse_form(tau_expr, tau_rev ? data.cc.right : data.cc.left);
    Form out = tau_rev ? tau_reverse(rho, data) : tau(rho, data);
    emit({{"result", out.str()}}, out.str());
  });

  // ---- build-F ----
  ChartOpts bf_chart;
  std::vector<std::string> bf_theta, bf_thetahat;
  auto* cmd_bf =
      app.add_subcommand("build-F", "kernel from a pair of connections");
  add_chart_options(cmd_bf, bf_chart);
  cmd_bf->add_option("--theta", bf_theta, "left connection components")
      ->required();
  cmd_bf->add_option("--thetahat", bf_thetahat, "right connection components")
      ->required();
  cmd_bf->callback([&] {
    DualityData data = standard_duality(bf_chart, "0");
    if (bf_theta.size() != bf_thetahat.size())
      throw CLI::ValidationError("--thetahat", "component counts differ");
    ConnectionForm theta, thetahat;
    for (const auto& e : bf_theta)
      theta.theta.push_back(parse_form(e, data.cc.left));
    for (const auto& e : bf_thetahat)
      thetahat.theta.push_back(parse_form(e, data.cc.right));
    bool ok = check_connection(theta, data.left_action) &&
              check_connection(thetahat, data.right_action);
    Form F = build_F_from_connections(data.cc, theta, thetahat);
    emit({{"connections_ok", ok}, {"F", F.str()}},
         std::string(ok ? "connections ok\n" : "NOT CONNECTIONS\n") + F.str());
    if (!ok) exit_code = 1;
  });

  // ---- blowup ----
  int bl_l = 2, bl_i = 1, bl_m = 0;
  std::string bl_form, bl_divisor;
  auto* cmd_bl =
      app.add_subcommand("blowup", "chart blow-down pullback and divisor");
  cmd_bl->add_option("--l", bl_l, "number of polar pairs");
  cmd_bl->add_option("--i", bl_i, "distinguished chart index (1-based)");
  cmd_bl->add_option("--m", bl_m, "untouched real coordinates");
  cmd_bl->add_option("--form", bl_form, "form over the target chart");
  cmd_bl->add_option("--divisor", bl_divisor,
                     "monomial divisor generator over the target chart");
  cmd_bl->callback([&] {
    BlowdownMap bd = blowdown_chart(bl_l, bl_i, bl_m);
    json j;
    std::string text;
    if (!bl_form.empty()) {
      Form pb = pullback_blowdown(parse_form(bl_form, bd.target), bd);
      j["pullback"] = pb.str();
      text += "pullback: " + pb.str() + "\n";
    }
    if (!bl_divisor.empty()) {
      Form gen = parse_form(bl_divisor, bd.target);
      Divisor ind = induced_divisor(Divisor{gen.coefficient(0)}, bd);
      bool iso = fiberwise_iso_check(bd, ind);
      j["induced_divisor"] = ind.generator.str(*bd.source);
      j["fiberwise_iso"] = iso;
      text += "induced divisor: " + ind.generator.str(*bd.source) + "\n" +
              (iso ? "fiberwise iso ok" : "FIBERWISE ISO FAILS") + "\n";
      if (!iso) exit_code = 1;
    }
    if (text.empty()) text = "nothing to do (pass --form or --divisor)";
    emit(j, text);
  });

  // ---- verify-example / list-examples ----
  std::string ex_name;
  bool ex_all = false;
  auto* cmd_ex = app.add_subcommand("verify-example",
                                    "run one built-in verification case");
  cmd_ex->add_option("name", ex_name, "example name");
  cmd_ex->add_flag("--all", ex_all, "run every case");
  cmd_ex->callback([&] {
    if (ex_all) {
      for (const auto& c : example_registry())
        if (report_example(c.run()) != 0) exit_code = 1;
    } else if (!ex_name.empty()) {
      exit_code = report_example(run_example(ex_name));
    } else {
      throw CLI::ValidationError("name", "give a name or --all");
    }
  });

  auto* cmd_ls =
      app.add_subcommand("list-examples", "list the built-in cases");
  cmd_ls->callback([&] {
    json j = json::array();
    std::string text;
    for (const auto& c : example_registry()) {
      j.push_back({{"name", c.name}, {"summary", c.summary}});
      text += c.name + "  -  " + c.summary + "\n";
    }
    if (!text.empty()) text.pop_back();
    emit(j, text);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
