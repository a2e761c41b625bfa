#include "dircoal/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace dircoal {

namespace {

// Nodes/weights from the symmetric tridiagonal Jacobi matrix; weights are
// mu0 * (first eigenvector component)^2.
QuadRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& sub,
                      double mu0) {
  const int n = int(diag.size());
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), n);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(std::max(n - 1, 0));
  for (int i = 0; i + 1 < n; ++i) e[i] = sub[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, e);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigen solve failed");
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()[i];
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

double simpson(double fa, double fm, double fb, double h) {
  return (fa + 4.0 * fm + fb) * h / 6.0;
}

struct AdaptiveCtx {
  const std::function<double(double)>* f;
  double abs_err = 0;
};

double adaptive_step(AdaptiveCtx& ctx, double a, double b, double fa, double fm,
                     double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = (*ctx.f)(lm);
  const double frm = (*ctx.f)(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    ctx.abs_err += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return adaptive_step(ctx, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(ctx, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

QuadRule gauss_legendre(int n) {
  std::vector<double> d(n, 0.0), e(std::max(n - 1, 0));
  for (int i = 1; i < n; ++i) e[i - 1] = i / std::sqrt(4.0 * i * i - 1.0);
  return golub_welsch(d, e, 2.0);
}

QuadRule gauss_laguerre(int n, double alpha) {
  if (alpha <= -1.0) throw std::invalid_argument("laguerre alpha must exceed -1");
  std::vector<double> d(n), e(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) d[i] = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) e[i - 1] = std::sqrt(i * (i + alpha));
  return golub_welsch(d, e, 1.0);  // mass Gamma(alpha+1) normalized out
}

QuadRule gauss_hermite_prob(int n) {
  std::vector<double> d(n, 0.0), e(std::max(n - 1, 0));
  for (int i = 1; i < n; ++i) e[i - 1] = std::sqrt(double(i));
  return golub_welsch(d, e, 1.0);
}

IntegralResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                  double b, double abs_tol, int max_depth) {
  if (a == b) return {0.0, 0.0};
  AdaptiveCtx ctx{&f};
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  const double v = adaptive_step(ctx, a, b, fa, fm, fb, whole, abs_tol, max_depth);
  return {v, ctx.abs_err};
}

IntegralResult integrate_gl(const std::function<double(double)>& f, double a, double b,
                            double abs_tol, int max_level) {
  static const QuadRule rule = gauss_legendre(32);
  auto composite = [&](int panels) {
    double total = 0.0;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = a + p * h;
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(lo + 0.5 * h * (rule.nodes[i] + 1.0));
      total += 0.5 * h * acc;
    }
    return total;
  };
  double prev = composite(1);
  for (int level = 1; level <= max_level; ++level) {
    const double cur = composite(1 << level);
    const double diff = std::abs(cur - prev);
    if (diff <= abs_tol) return {cur, diff};
    prev = cur;
  }
  return {prev, abs_tol};
}

namespace {

constexpr std::uint64_t kDirectCross = 512;

// Euler-Maclaurin correction terms at one endpoint of sum k^{-s}.
double em_endpoint(double s, double x) {
  double c = 0.5 * std::pow(x, -s);
  c += s * std::pow(x, -s - 1.0) / 12.0;
  c -= s * (s + 1.0) * (s + 2.0) * std::pow(x, -s - 3.0) / 720.0;
  c += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(x, -s - 5.0) / 30240.0;
  return c;
}

// sum_{k=a}^{b} k^{-s} with both endpoints >= kDirectCross, any s >= 0.
double em_range(double s, double a, double b) {
  double integral;
  if (s == 1.0) {
    integral = std::log(b / a);
  } else {
    integral = (std::pow(a, 1.0 - s) - std::pow(b, 1.0 - s)) / (s - 1.0);
  }
  // sum_{a..b} = int_a^b + (f(a)+f(b))/2 + higher-order endpoint terms
  return integral + em_endpoint(s, a) - em_endpoint(s, b) + std::pow(b, -s);
}

}  // namespace

double power_tail_sum(double s, std::uint64_t a_exclusive) {
  if (s <= 1.0) throw std::invalid_argument("power_tail_sum needs s > 1");
  std::uint64_t start = a_exclusive + 1;
  double direct = 0.0;
  while (start < kDirectCross) {
    direct += std::pow(double(start), -s);
    ++start;
  }
  const double a = double(start);
  return direct + std::pow(a, 1.0 - s) / (s - 1.0) + em_endpoint(s, a);
}

double power_range_sum(double s, std::uint64_t a, std::uint64_t b) {
  if (a > b) return 0.0;
  if (a == 0) a = 1;
  double direct = 0.0;
  std::uint64_t k = a;
  const std::uint64_t direct_end = std::min(b, std::max(a + 2 * kDirectCross, kDirectCross) - 1);
  for (; k <= direct_end; ++k) direct += std::pow(double(k), -s);
  if (k > b) return direct;
  return direct + em_range(s, double(k), double(b));
}

}  // namespace dircoal
