#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace dircoal {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss rules via Golub-Welsch on the Jacobi matrix.
QuadRule gauss_legendre(int n);                // weight 1 on [-1, 1]
QuadRule gauss_laguerre(int n, double alpha);  // weight x^alpha e^-x / Gamma(alpha+1), mass 1
QuadRule gauss_hermite_prob(int n);            // weight N(0,1), mass 1

struct IntegralResult {
  double value = 0;
  double abs_error = 0;
};

// Adaptive Simpson with recursion-depth guard.
IntegralResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                  double b, double abs_tol, int max_depth = 48);

// Independent route: composite 32-point Gauss-Legendre on dyadically refined
// panels, stopping when successive refinements agree.
IntegralResult integrate_gl(const std::function<double(double)>& f, double a, double b,
                            double abs_tol, int max_level = 14);

// sum_{k=a}^{b} k^{-s} and sum_{k>a} k^{-s} (s > 1), exact summation below a
// crossover and Euler-Maclaurin beyond it.
double power_range_sum(double s, std::uint64_t a, std::uint64_t b);
double power_tail_sum(double s, std::uint64_t a_exclusive);

}  // namespace dircoal
