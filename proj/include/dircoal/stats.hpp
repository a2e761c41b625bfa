#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dircoal {

// Streaming mean/variance (Welford).
class RunningStats {
 public:
  void add(double x);
  void merge(const RunningStats& other);
  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const;  // sample variance
  double std_error() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

RunningStats summarize(std::span<const double> xs);

struct KsResult {
  double statistic = 0;
  double p_value = 1;
};

// Two-sample Kolmogorov-Smirnov with the asymptotic p-value.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// Critical value of the two-sample KS statistic at significance level alpha.
double ks_two_sample_critical(std::size_t n1, std::size_t n2, double alpha);

double kolmogorov_q(double lambda);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

struct CorrInterval {
  double r = 0;
  double lower = 0;
  double upper = 0;
};

// Fisher-z confidence interval for a correlation coefficient.
CorrInterval correlation_interval(std::span<const double> x, std::span<const double> y,
                                  double confidence);

}  // namespace dircoal
