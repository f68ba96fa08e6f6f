#pragma once

#include "tdcalc/action.hpp"
#include "tdcalc/form.hpp"

namespace tdcalc {

/// t^k-valued connection one-form for a torus action: component theta[j]
/// pairs to delta_{ij} with the i-th action generator and is invariant.
struct ConnectionForm {
  std::vector<Form> theta;

  int rank() const { return static_cast<int>(theta.size()); }
};

/// Degree-1 field of the j-th action generator on the action's chart.
Multivector action_generator(const TorusAction& action, int j);

/// Both defining conditions, exactly: i_{a(e_i)} theta_j = delta_{ij} and
/// every component invariant.
bool check_connection(const ConnectionForm& conn, const TorusAction& action);

/// d(theta) componentwise; throws if the result is not basic (angle legs or
/// angle-dependent coefficients survive), which means conn was no connection.
std::vector<Form> curvature(const ConnectionForm& conn,
                            const TorusAction& action);

}  // namespace tdcalc
