#include "dircoal/weight_law.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dircoal/quadrature.hpp"

namespace dircoal {

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::kConstant: return "constant";
    case WeightKind::kGamma: return "gamma";
    case WeightKind::kLogNormal: return "lognormal";
    case WeightKind::kFiniteDiscrete: return "finite_discrete";
  }
  return "?";
}

WeightLaw WeightLaw::constant(double value) {
  if (!(value > 0)) throw std::invalid_argument("constant weight must be positive");
  WeightLaw law;
  law.kind_ = WeightKind::kConstant;
  law.params_ = {value};
  return law;
}

WeightLaw WeightLaw::gamma(double shape, double scale) {
  if (!(shape > 0) || !(scale > 0)) throw std::invalid_argument("gamma params must be positive");
  WeightLaw law;
  law.kind_ = WeightKind::kGamma;
  law.params_ = {shape, scale};
  return law;
}

WeightLaw WeightLaw::log_normal(double mu, double sigma) {
  if (!(sigma > 0)) throw std::invalid_argument("lognormal sigma must be positive");
  WeightLaw law;
  law.kind_ = WeightKind::kLogNormal;
  law.params_ = {mu, sigma};
  return law;
}

WeightLaw WeightLaw::finite_discrete(std::vector<double> values, std::vector<double> probs) {
  if (values.empty() || values.size() != probs.size())
    throw std::invalid_argument("finite_discrete needs matching nonempty values/probs");
  double total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0)) throw std::invalid_argument("weights must be positive");
    if (!(probs[i] >= 0)) throw std::invalid_argument("probs must be nonnegative");
    total += probs[i];
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("probs must sum to 1");
  for (auto& p : probs) p /= total;
  WeightLaw law;
  law.kind_ = WeightKind::kFiniteDiscrete;
  law.values_ = std::move(values);
  law.probs_ = std::move(probs);
  return law;
}

double WeightLaw::mean() const {
  switch (kind_) {
    case WeightKind::kConstant: return params_[0];
    case WeightKind::kGamma: return params_[0] * params_[1];
    case WeightKind::kLogNormal: return std::exp(params_[0] + 0.5 * params_[1] * params_[1]);
    case WeightKind::kFiniteDiscrete: {
      double m = 0;
      for (std::size_t i = 0; i < values_.size(); ++i) m += values_[i] * probs_[i];
      return m;
    }
  }
  return 0;
}

double WeightLaw::second_moment() const {
  switch (kind_) {
    case WeightKind::kConstant: return params_[0] * params_[0];
    case WeightKind::kGamma: {
      const double a = params_[0], s = params_[1];
      return a * (a + 1.0) * s * s;
    }
    case WeightKind::kLogNormal:
      return std::exp(2.0 * params_[0] + 2.0 * params_[1] * params_[1]);
    case WeightKind::kFiniteDiscrete: {
      double m = 0;
      for (std::size_t i = 0; i < values_.size(); ++i) m += values_[i] * values_[i] * probs_[i];
      return m;
    }
  }
  return 0;
}

double WeightLaw::gamma_second_moment() const {
  const double m = mean();
  return second_moment() / (m * m);
}

double WeightLaw::sample(Rng& rng) const {
  switch (kind_) {
    case WeightKind::kConstant: return params_[0];
    case WeightKind::kGamma: return params_[1] * rng.gamma(params_[0]);
    case WeightKind::kLogNormal: return std::exp(params_[0] + params_[1] * rng.normal());
    case WeightKind::kFiniteDiscrete: {
      double u = rng.uniform01();
      for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
        if (u < probs_[i]) return values_[i];
        u -= probs_[i];
      }
      return values_.back();
    }
  }
  return 0;
}

void WeightLaw::sample_mass_partition(std::int64_t k, Rng& rng, std::vector<double>& out) const {
  if (k < 1) throw std::invalid_argument("mass partition needs k >= 1");
  out.resize(std::size_t(k));
  if (kind_ == WeightKind::kConstant) {
    std::fill(out.begin(), out.end(), 1.0 / double(k));
    return;
  }
  double total = 0;
  for (auto& w : out) {
    w = sample(rng);
    total += w;
  }
  for (auto& w : out) w /= total;
}

WeightLaw::SecondMomentSup WeightLaw::second_moment_sup() const {
  SecondMomentSup sup;
  switch (kind_) {
    case WeightKind::kConstant:
      sup.value = 1.0;  // p_1 = 1/k exactly
      return sup;
    case WeightKind::kGamma: {
      // Dirichlet moments give E[(k p_1)^2] = k(a+1)/(ka+1), increasing in k.
      const double a = params_[0];
      sup.value = (a + 1.0) / a;
      return sup;
    }
    default: break;
  }
  // Deterministic internal stream; reported as heuristic.
  std::uint64_t salt = fnv1a64(to_string(kind_));
  for (double p : params_) salt = mix64(salt ^ std::uint64_t(std::llround(p * 1e9)));
  for (double v : values_) salt = mix64(salt ^ std::uint64_t(std::llround(v * 1e9)));
  Rng rng(salt, "second-moment-sup");
  std::vector<double> part;
  double worst = 1.0;
  for (int logk = 1; logk <= 14; ++logk) {
    const std::int64_t k = std::int64_t(1) << logk;
    double acc = 0;
    const int reps = 20000;
    for (int r = 0; r < reps; ++r) {
      sample_mass_partition(k, rng, part);
      const double kp = double(k) * part[0];
      acc += kp * kp;
    }
    worst = std::max(worst, acc / reps);
  }
  sup.value = 1.5 * worst;
  sup.heuristic = true;
  return sup;
}

namespace {

GammaRule mc_fallback_rule(const WeightLaw& law, double exact_second_moment) {
  // 1e6 draws compressed to equal-probability quantile bins (stratified means).
  Rng rng(fnv1a64("gamma-rule-mc"), to_string(law.kind()));
  const int n_draw = 1'000'000;
  std::vector<double> draws(n_draw);
  for (auto& d : draws) d = law.sample_gamma(rng);
  std::sort(draws.begin(), draws.end());
  const int bins = 1024;
  GammaRule rule;
  rule.mc_fallback = true;
  rule.nodes.resize(bins);
  rule.weights.assign(bins, 1.0 / bins);
  const int per = n_draw / bins;
  for (int b = 0; b < bins; ++b) {
    double acc = 0;
    for (int i = 0; i < per; ++i) acc += draws[std::size_t(b) * per + i];
    rule.nodes[b] = acc / per;
  }
  // renormalize so E Gamma = 1 holds exactly for downstream identities
  double m = 0;
  for (int b = 0; b < bins; ++b) m += rule.nodes[b] * rule.weights[b];
  for (auto& x : rule.nodes) x /= m;
  rule.second_moment = exact_second_moment;
  return rule;
}

}  // namespace

GammaRule WeightLaw::make_gamma_rule(int nodes) const {
  GammaRule rule;
  rule.second_moment = gamma_second_moment();
  switch (kind_) {
    case WeightKind::kConstant:
      rule.nodes = {1.0};
      rule.weights = {1.0};
      return rule;
    case WeightKind::kFiniteDiscrete: {
      const double m = mean();
      for (std::size_t i = 0; i < values_.size(); ++i) {
        rule.nodes.push_back(values_[i] / m);
        rule.weights.push_back(probs_[i]);
      }
      return rule;
    }
    case WeightKind::kGamma: {
      // Gamma = w/(a*scale) ~ Gamma(a, 1/a); generalized Laguerre with
      // parameter a-1 integrates x^{a-1} e^{-x} exactly.
      const double a = params_[0];
      QuadRule q = gauss_laguerre(nodes, a - 1.0);
      rule.nodes.resize(q.nodes.size());
      rule.weights = q.weights;
      for (std::size_t i = 0; i < q.nodes.size(); ++i) rule.nodes[i] = q.nodes[i] / a;
      break;
    }
    case WeightKind::kLogNormal: {
      // Gamma = exp(sigma Z - sigma^2/2) under Z ~ N(0,1).
      const double sigma = params_[1];
      QuadRule q = gauss_hermite_prob(nodes);
      rule.nodes.resize(q.nodes.size());
      rule.weights = q.weights;
      for (std::size_t i = 0; i < q.nodes.size(); ++i)
        rule.nodes[i] = std::exp(sigma * q.nodes[i] - 0.5 * sigma * sigma);
      break;
    }
  }
  const double mean_test = rule.expect([](double g) { return g; });
  if (std::abs(mean_test - 1.0) > 1e-8) {
    // extreme parameters defeat the Gauss rule; fall back to a dense MC rule
    return mc_fallback_rule(*this, rule.second_moment);
  }
  return rule;
}

}  // namespace dircoal
