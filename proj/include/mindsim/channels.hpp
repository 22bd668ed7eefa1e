#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mindsim/rng.hpp"

namespace mindsim {

enum class ChannelKind { awgn, nonlinear_awgn, middleton };

std::string to_string(ChannelKind k);

// Per-sample Bernoulli impulse outcomes realized during transmission over a
// Middleton channel. Empty for the Gaussian kinds.
struct GenieSideInfo {
  std::vector<std::uint8_t> impulse;  // epsilon_k in {0,1}
  bool empty() const { return impulse.empty(); }
};

// Stochastic channel y = H(x, n). Middleton noise is the two-component
// Bernoulli-Gaussian mixture: with probability P a sample is hit by an
// impulse of variance B*sigma_b^2 instead of sigma_b^2.
struct ChannelModel {
  ChannelKind kind = ChannelKind::awgn;
  double noise_sigma_b = 1.0;  // sigma_b, linear units
  double impulse_ratio = 1.0;  // B >= 1 (middleton only)
  double impulse_prob = 0.0;   // P in [0,1] (middleton only)

  static ChannelModel awgn(double sigma_b);
  static ChannelModel nonlinear_awgn(double sigma_b);
  static ChannelModel middleton(double sigma_b, double impulse_ratio, double impulse_prob);

  // sigma_b = 0 is accepted as the noiseless limit for transmit();
  // likelihood evaluation requires sigma_b > 0.
  void validate() const;
};

// Deterministic pre-noise map: identity except the nonlinear channel's
// sign(x)*sqrt(|x|).
double channel_map(ChannelKind kind, double x);

struct TransmitResult {
  std::vector<double> y;
  GenieSideInfo side;
};

TransmitResult transmit(const ChannelModel& ch, std::span<const double> x, Rng& rng);

// Natural-log density of y given transmitted codeword x, summed over samples.
// The nonlinear kind evaluates the Gaussian density around the mapped symbol.
double log_likelihood(const ChannelModel& ch, std::span<const double> y, std::span<const double> x);

// Middleton only: Gaussian log-density with variance sigma_b^2 where
// epsilon_k = 0 and B*sigma_b^2 where epsilon_k = 1, summed over samples.
double genie_log_likelihood(const ChannelModel& ch, std::span<const double> y,
                            std::span<const double> x, const GenieSideInfo& side);

// Total average noise variance E[n^2]:
// sigma_b^2 for the Gaussian kinds, (1-P)*sigma_b^2 + P*B*sigma_b^2 for middleton.
double noise_variance(const ChannelModel& ch);

// Solves E_s / E[n^2] = 10^(snr_db/10) for sigma_b. E_s is the prior-weighted
// mean square of the transmitted channel symbols (post-nonlinearity for the
// nonlinear channel).
double sigma_for_snr(double snr_db, double symbol_energy, ChannelKind kind,
                     double impulse_ratio = 1.0, double impulse_prob = 0.0);

}  // namespace mindsim
