#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mindsim/mind.hpp"

namespace mindsim {

// Monte-Carlo estimates of source entropy, conditional entropy, normalized
// mutual information and decoding error probability, with plug-in CLT
// standard errors over the N per-sample contributions.
struct RateEstimate {
  double hx_bits = 0.0;
  double hxy_bits = 0.0;
  double mi_bits_per_use = 0.0;  // (hx - hxy) / n
  double pe = 0.0;
  double hx_stderr = 0.0;
  double hxy_stderr = 0.0;
  double mi_stderr = 0.0;
  double pe_stderr = 0.0;
  std::int64_t n_samples = 0;
};

// P_X(x_i) ~= (1/N) sum_j P(x_i|y_j). Posteriors must be normalized.
std::vector<double> estimate_source_pmf(std::span<const PosteriorEstimate> posteriors);

// -sum_i p_i log2 p_i with 0*log(0) := 0. Throws on negative entries.
double source_entropy(std::span<const double> pmf);

// -(1/N) sum_j sum_i P_ij log2 P_ij over normalized posteriors.
double conditional_entropy(std::span<const PosteriorEstimate> posteriors);

// 1 - (1/N) sum_j max_i P_ij.
double error_probability(std::span<const PosteriorEstimate> posteriors);

RateEstimate estimate_rates(std::span<const PosteriorEstimate> posteriors, int channel_uses);

}  // namespace mindsim
