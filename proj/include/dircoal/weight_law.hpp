#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dircoal/rng.hpp"

namespace dircoal {

// Quadrature rule for expectations against the normalized weight
// Gamma = w / E(w). For a degenerate law this is the single node 1.
struct GammaRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  bool mc_fallback = false;  // Gauss rule failed its self-test, nodes are MC quantile bins
  double second_moment = 1.0;  // exact E Gamma^2 when available, else quadrature value

  template <class F>
  double expect(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

enum class WeightKind { kConstant, kGamma, kLogNormal, kFiniteDiscrete };

std::string to_string(WeightKind kind);

// Law of the i.i.d. weights behind a mass partition. The menu is closed so
// that means and second moments stay available in closed form.
class WeightLaw {
 public:
  static WeightLaw constant(double value);
  static WeightLaw gamma(double shape, double scale);
  static WeightLaw log_normal(double mu, double sigma);
  static WeightLaw finite_discrete(std::vector<double> values, std::vector<double> probs);

  WeightKind kind() const { return kind_; }
  std::span<const double> params() const { return params_; }
  std::span<const double> discrete_values() const { return values_; }
  std::span<const double> discrete_probs() const { return probs_; }

  double mean() const;
  double second_moment() const;
  double gamma_second_moment() const;  // E Gamma^2 = E w^2 / (E w)^2

  double sample(Rng& rng) const;
  double sample_gamma(Rng& rng) const { return sample(rng) / mean(); }

  // (w_1/s_k, ..., w_k/s_k); entries positive, sum exactly normalized.
  void sample_mass_partition(std::int64_t k, Rng& rng, std::vector<double>& out) const;

  struct SecondMomentSup {
    double value = 1.0;
    bool heuristic = false;
  };
  // Upper bound for sup_k E[(k p_1)^2]; exact for Constant and Gamma,
  // Monte Carlo with a 1.5x safety factor otherwise.
  SecondMomentSup second_moment_sup() const;

  GammaRule make_gamma_rule(int nodes = 64) const;

 private:
  WeightKind kind_ = WeightKind::kConstant;
  std::vector<double> params_;
  std::vector<double> values_;
  std::vector<double> probs_;
};

}  // namespace dircoal
