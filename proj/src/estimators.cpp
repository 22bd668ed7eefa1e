#include "mindsim/estimators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mindsim/kahan.hpp"

namespace mindsim {

namespace {

void require_normalized(std::span<const PosteriorEstimate> posteriors, const char* what) {
  if (posteriors.empty()) throw std::invalid_argument(std::string(what) + ": empty input");
  const std::size_t m = posteriors.front().probs.size();
  for (const auto& p : posteriors) {
    if (!p.normalized) throw std::invalid_argument(std::string(what) + ": posteriors must be normalized");
    if (p.probs.size() != m) throw std::invalid_argument(std::string(what) + ": ragged posterior set");
  }
}

double entropy_term(double p) {
  return p > 0.0 ? -p * std::log2(p) : 0.0;
}

double stderr_of(const std::vector<double>& contributions, double mean) {
  const std::size_t n = contributions.size();
  if (n < 2) return 0.0;
  KahanSum sq;
  for (double c : contributions) {
    const double d = c - mean;
    sq.add(d * d);
  }
  const double var = sq.value() / static_cast<double>(n - 1);
  return std::sqrt(var / static_cast<double>(n));
}

}  // namespace

std::vector<double> estimate_source_pmf(std::span<const PosteriorEstimate> posteriors) {
  require_normalized(posteriors, "estimate_source_pmf");
  const std::size_t m = posteriors.front().probs.size();
  std::vector<KahanSum> acc(m);
  for (const auto& post : posteriors) {
    for (std::size_t i = 0; i < m; ++i) acc[i].add(post.probs[i]);
  }
  std::vector<double> pmf(m);
  for (std::size_t i = 0; i < m; ++i) pmf[i] = acc[i].value() / static_cast<double>(posteriors.size());
  return pmf;
}

double source_entropy(std::span<const double> pmf) {
  KahanSum h;
  for (double p : pmf) {
    if (p < 0.0) throw std::invalid_argument("source_entropy: negative pmf entry");
    h.add(entropy_term(p));
  }
  return h.value();
}

double conditional_entropy(std::span<const PosteriorEstimate> posteriors) {
  require_normalized(posteriors, "conditional_entropy");
  KahanSum total;
  for (const auto& post : posteriors) {
    for (double p : post.probs) total.add(entropy_term(p));
  }
  return total.value() / static_cast<double>(posteriors.size());
}

double error_probability(std::span<const PosteriorEstimate> posteriors) {
  require_normalized(posteriors, "error_probability");
  KahanSum total;
  for (const auto& post : posteriors) {
    double best = 0.0;
    for (double p : post.probs) best = p > best ? p : best;
    total.add(1.0 - best);
  }
  return total.value() / static_cast<double>(posteriors.size());
}

RateEstimate estimate_rates(std::span<const PosteriorEstimate> posteriors, int channel_uses) {
  require_normalized(posteriors, "estimate_rates");
  if (channel_uses < 1) throw std::invalid_argument("estimate_rates: channel_uses must be >= 1");

  const std::size_t n = posteriors.size();
  const std::size_t m = posteriors.front().probs.size();

  RateEstimate est;
  est.n_samples = static_cast<std::int64_t>(n);

  const std::vector<double> pmf = estimate_source_pmf(posteriors);
  est.hx_bits = source_entropy(pmf);

  // Per-sample contributions back the CLT standard errors. The source-entropy
  // contribution is the delta-method linearization of H(mean posterior).
  std::vector<double> grad(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    grad[i] = pmf[i] > 0.0 ? -(std::log2(pmf[i]) + std::numbers::log2e) : 0.0;
  }

  std::vector<double> hx_contrib(n), hxy_contrib(n), mi_contrib(n), pe_contrib(n);
  KahanSum hxy_total, pe_total;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& probs = posteriors[j].probs;
    KahanSum lin, h;
    double best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      lin.add(grad[i] * probs[i]);
      h.add(entropy_term(probs[i]));
      best = probs[i] > best ? probs[i] : best;
    }
    hx_contrib[j] = lin.value();
    hxy_contrib[j] = h.value();
    mi_contrib[j] = (lin.value() - h.value()) / channel_uses;
    pe_contrib[j] = 1.0 - best;
    hxy_total.add(hxy_contrib[j]);
    pe_total.add(pe_contrib[j]);
  }

  est.hxy_bits = hxy_total.value() / static_cast<double>(n);
  est.pe = pe_total.value() / static_cast<double>(n);
  est.mi_bits_per_use = (est.hx_bits - est.hxy_bits) / channel_uses;

  KahanSum lin_mean;
  for (double c : hx_contrib) lin_mean.add(c);
  const double hx_lin_mean = lin_mean.value() / static_cast<double>(n);
  est.hx_stderr = stderr_of(hx_contrib, hx_lin_mean);
  est.hxy_stderr = stderr_of(hxy_contrib, est.hxy_bits);
  est.mi_stderr = stderr_of(mi_contrib, (hx_lin_mean - est.hxy_bits) / channel_uses);
  est.pe_stderr = stderr_of(pe_contrib, est.pe);
  return est;
}

}  // namespace mindsim
