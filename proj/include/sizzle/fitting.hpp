#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace sizzle {

// Golden-section maximizer on [lo, hi]; assumes a single interior peak.
// Returns the abscissa of the maximum to within tol.
double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol);

// Scalar root bracket + bisection: finds x in [lo, hi] with f(x) = target,
// assuming f is monotone increasing. Returns the midpoint of the final
// bracket with relative tolerance rel_tol on f.
double bisect_to_target(const std::function<double(double)>& f, double lo,
                        double hi, double target, double rel_tol, int max_iter = 60);

// Unconstrained Nelder-Mead minimization (small dimension).
Eigen::VectorXd nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                            Eigen::VectorXd start, double scale, double tol,
                            int max_iter = 400);

// Least squares for y ~ X b.
Eigen::VectorXd linear_least_squares(const Eigen::MatrixXd& x,
                                     const Eigen::VectorXd& y);

} // namespace sizzle
