#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace fluxtri {

/// Thrown when a search finds no admissible solution (no interior minimum, no crossing).
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an iterative method exhausts its budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NelderMeadOptions {
  double initial_step = 0.5;
  double diameter_tol = 1e-9;  ///< stop when max vertex distance from the best vertex drops below this
  int max_evaluations = 200000;
  int restarts = 2;            ///< re-seed a fresh simplex at the optimum this many times
};

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Derivative-free minimization (Nelder-Mead with standard coefficients 1, 2, 1/2, 1/2).
MinimizeResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                           std::vector<double> x0, const NelderMeadOptions& options = {});

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section minimization on [lo, hi] to interval width `tol`.
ScalarMinimum golden_section(const std::function<double(double)>& f, double lo, double hi,
                             double tol = 1e-10);

/// Uniform grid bracketing followed by golden-section refinement around the best grid point.
/// Throws NotFoundError when the best grid point sits on the boundary of [lo, hi].
ScalarMinimum bracket_and_refine(const std::function<double(double)>& f, double lo, double hi,
                                 int grid_points, double tol = 1e-10);

/// Root of f on [lo, hi] by bisection; requires a sign change.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12);

}  // namespace fluxtri
