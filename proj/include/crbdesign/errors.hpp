#pragma once

#include <stdexcept>

namespace crbdesign {

// A scenario that cannot produce a meaningful result (rejected configuration,
// violated feasibility constraint). CLI maps this to exit code 2.
struct infeasible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fisher information for the angle vanishes: no unbiased estimator has finite
// variance, so no bound is reported.
struct unidentifiable_error : infeasible_error {
  using infeasible_error::infeasible_error;
};

}  // namespace crbdesign
