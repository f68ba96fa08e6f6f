#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tdcalc/form.hpp"

namespace tdcalc {

/// Equality of spinor lines: b = c*a for one nonzero scalar c.
bool projectively_equal(const Form& a, const Form& b);

struct ExampleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExampleResult {
  std::string name;
  bool pass = false;
  std::vector<ExampleCheck> checks;
};

struct ExampleCase {
  std::string name;
  std::string summary;
  std::function<ExampleResult()> run;
};

/// Built-in verification cases covering the worked local models.
const std::vector<ExampleCase>& example_registry();

/// Runs one case by name; throws std::out_of_range for unknown names.
ExampleResult run_example(const std::string& name);

}  // namespace tdcalc
