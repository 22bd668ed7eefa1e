#include "mindsim/channels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mindsim {

namespace {

constexpr double kLogTwoPi = 1.8378770664093454836;  // log(2*pi)

double log_normal_pdf(double u, double variance) {
  return -0.5 * (kLogTwoPi + std::log(variance)) - u * u / (2.0 * variance);
}

// log((1-P)*N(u;0,s2) + P*N(u;0,B*s2)) via log-sum-exp.
double log_middleton_pdf(double u, double s2, double impulse_ratio, double impulse_prob) {
  if (impulse_prob <= 0.0) return log_normal_pdf(u, s2);
  if (impulse_prob >= 1.0) return log_normal_pdf(u, impulse_ratio * s2);
  const double a = std::log1p(-impulse_prob) + log_normal_pdf(u, s2);
  const double b = std::log(impulse_prob) + log_normal_pdf(u, impulse_ratio * s2);
  const double hi = a > b ? a : b;
  const double lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

void check_finite(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
  }
}

}  // namespace

std::string to_string(ChannelKind k) {
  switch (k) {
    case ChannelKind::awgn: return "awgn";
    case ChannelKind::nonlinear_awgn: return "nonlinear_awgn";
    case ChannelKind::middleton: return "middleton";
  }
  return "?";
}

ChannelModel ChannelModel::awgn(double sigma_b) {
  ChannelModel ch{ChannelKind::awgn, sigma_b, 1.0, 0.0};
  ch.validate();
  return ch;
}

ChannelModel ChannelModel::nonlinear_awgn(double sigma_b) {
  ChannelModel ch{ChannelKind::nonlinear_awgn, sigma_b, 1.0, 0.0};
  ch.validate();
  return ch;
}

ChannelModel ChannelModel::middleton(double sigma_b, double impulse_ratio, double impulse_prob) {
  ChannelModel ch{ChannelKind::middleton, sigma_b, impulse_ratio, impulse_prob};
  ch.validate();
  return ch;
}

void ChannelModel::validate() const {
  if (!(noise_sigma_b >= 0.0) || !std::isfinite(noise_sigma_b)) {
    throw std::invalid_argument("ChannelModel: noise_sigma_b must be finite and >= 0");
  }
  if (kind == ChannelKind::middleton) {
    if (!(impulse_ratio >= 1.0)) throw std::invalid_argument("ChannelModel: impulse_ratio must be >= 1");
    if (!(impulse_prob >= 0.0 && impulse_prob <= 1.0)) {
      throw std::invalid_argument("ChannelModel: impulse_prob must be in [0,1]");
    }
  }
}

double channel_map(ChannelKind kind, double x) {
  if (kind == ChannelKind::nonlinear_awgn) {
    return (x < 0.0 ? -1.0 : 1.0) * std::sqrt(std::fabs(x));
  }
  return x;
}

TransmitResult transmit(const ChannelModel& ch, std::span<const double> x, Rng& rng) {
  check_finite(x, "transmit");
  TransmitResult res;
  res.y.resize(x.size());
  const double sigma = ch.noise_sigma_b;
  switch (ch.kind) {
    case ChannelKind::awgn:
    case ChannelKind::nonlinear_awgn:
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double noise = sigma > 0.0 ? sigma * rng.gaussian() : 0.0;
        res.y[i] = channel_map(ch.kind, x[i]) + noise;
      }
      break;
    case ChannelKind::middleton: {
      const double sigma_impulse = sigma * std::sqrt(ch.impulse_ratio);
      res.side.impulse.resize(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        const bool hit = rng.bernoulli(ch.impulse_prob);
        res.side.impulse[i] = hit ? 1 : 0;
        const double s = hit ? sigma_impulse : sigma;
        res.y[i] = x[i] + (s > 0.0 ? s * rng.gaussian() : 0.0);
      }
      break;
    }
  }
  return res;
}

double log_likelihood(const ChannelModel& ch, std::span<const double> y, std::span<const double> x) {
  if (y.size() != x.size()) throw std::invalid_argument("log_likelihood: length mismatch");
  check_finite(y, "log_likelihood");
  check_finite(x, "log_likelihood");
  if (!(ch.noise_sigma_b > 0.0)) {
    throw std::invalid_argument("log_likelihood: requires noise_sigma_b > 0");
  }
  const double s2 = ch.noise_sigma_b * ch.noise_sigma_b;
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double u = y[i] - channel_map(ch.kind, x[i]);
    sum += ch.kind == ChannelKind::middleton
               ? log_middleton_pdf(u, s2, ch.impulse_ratio, ch.impulse_prob)
               : log_normal_pdf(u, s2);
  }
  return sum;
}

double genie_log_likelihood(const ChannelModel& ch, std::span<const double> y,
                            std::span<const double> x, const GenieSideInfo& side) {
  if (ch.kind != ChannelKind::middleton) {
    throw std::invalid_argument("genie_log_likelihood: channel kind must be middleton");
  }
  if (y.size() != x.size() || side.impulse.size() != y.size()) {
    throw std::invalid_argument("genie_log_likelihood: length mismatch");
  }
  if (!(ch.noise_sigma_b > 0.0)) {
    throw std::invalid_argument("genie_log_likelihood: requires noise_sigma_b > 0");
  }
  const double s2 = ch.noise_sigma_b * ch.noise_sigma_b;
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double u = y[i] - x[i];
    sum += log_normal_pdf(u, side.impulse[i] ? ch.impulse_ratio * s2 : s2);
  }
  return sum;
}

double noise_variance(const ChannelModel& ch) {
  const double s2 = ch.noise_sigma_b * ch.noise_sigma_b;
  if (ch.kind == ChannelKind::middleton) {
    return s2 * (1.0 + ch.impulse_prob * (ch.impulse_ratio - 1.0));
  }
  return s2;
}

double sigma_for_snr(double snr_db, double symbol_energy, ChannelKind kind,
                     double impulse_ratio, double impulse_prob) {
  if (!(symbol_energy > 0.0)) throw std::invalid_argument("sigma_for_snr: symbol_energy must be > 0");
  const double target_noise_var = symbol_energy / std::pow(10.0, snr_db / 10.0);
  double scale = 1.0;
  if (kind == ChannelKind::middleton) {
    scale = 1.0 + impulse_prob * (impulse_ratio - 1.0);
  }
  return std::sqrt(target_noise_var / scale);
}

}  // namespace mindsim
