// Acceptance gate: one binary, one criterion per invocation, one verdict
// line per criterion. Exit 0 iff the criterion holds.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "tdcalc/examples.hpp"

using namespace tdcalc;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> cases;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table = {
      {1, "rank one symplectic transform", {"c1-elliptic-symplectic"}},
      {2, "rank two complex side transform and descent", {"c2-complex-side"}},
      {3, "rank two real side transform", {"c2-real-side"}},
      {4, "descent verdicts over all kernels", {"c2-controls"}},
      {5, "stability of the model two-forms", {"stable-c2", "radius-one-model"}},
      {6, "parametric radius one duality", {"radius-one-duality"}},
      {7, "blow down volume and divisor", {"blowup-volume"}},
      {8, "blow down commutes with the transform", {"blowup-duality"}},
      {9, "descent counterexample and pure spinor", {"descent-counterexample"}},
      {10, "projective plane connections and gluing", {"cp2-connections"}},
      {11, "global spinor gluing", {"s2s2-glue", "hopf-scaling"}},
  };
  return table;
}

int run_criterion(const Criterion& c) {
  bool pass = true;
  for (const auto& name : c.cases) {
    ExampleResult r = run_example(name);
    for (const auto& chk : r.checks)
      std::printf("    %-4s %s/%s%s%s\n", chk.pass ? "ok" : "FAIL",
                  name.c_str(), chk.name.c_str(),
                  chk.detail.empty() ? "" : "  ",
                  chk.detail.c_str());
    pass = pass && r.pass;
  }
  std::printf("criterion %02d  %-45s %s\n", c.number, c.title.c_str(),
              pass ? "PASS" : "FAIL");
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 1) {
    int rc = 0;
    for (const auto& c : criteria())
      if (run_criterion(c) != 0) rc = 1;
    return rc;
  }
  int want = std::atoi(argv[1]);
  for (const auto& c : criteria())
    if (c.number == want) return run_criterion(c);
  std::fprintf(stderr, "unknown criterion %s\n", argv[1]);
  return 2;
}
