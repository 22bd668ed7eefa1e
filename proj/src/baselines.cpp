#include "mindsim/baselines.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mindsim/kahan.hpp"

namespace mindsim {

std::string to_string(DecoderKind k) {
  switch (k) {
    case DecoderKind::map: return "map";
    case DecoderKind::maxl_gaussian: return "maxl_gaussian";
    case DecoderKind::maxl_gaussian_csi: return "maxl_gaussian_csi";
    case DecoderKind::maxl_middleton: return "maxl_middleton";
    case DecoderKind::genie_middleton: return "genie_middleton";
    case DecoderKind::mind_supervised: return "mind_supervised";
    case DecoderKind::mind_unsupervised: return "mind_unsupervised";
  }
  return "?";
}

DecoderKind decoder_from_string(const std::string& s) {
  for (DecoderKind k :
       {DecoderKind::map, DecoderKind::maxl_gaussian, DecoderKind::maxl_gaussian_csi,
        DecoderKind::maxl_middleton, DecoderKind::genie_middleton, DecoderKind::mind_supervised,
        DecoderKind::mind_unsupervised}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown decoder: " + s);
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

template <typename Score>
int argmax_score(int m, Score&& score) {
  int best = 0;
  double best_score = kNegInf;
  for (int i = 0; i < m; ++i) {
    const double s = score(i);
    if (s > best_score) {
      best_score = s;
      best = i;
    }
  }
  return best;
}

}  // namespace

int map_decode(const Codebook& cb, const ChannelModel& ch, std::span<const double> y) {
  return argmax_score(cb.size(), [&](int i) {
    const double p = cb.prior[static_cast<std::size_t>(i)];
    if (p <= 0.0) return kNegInf;
    return std::log(p) + log_likelihood(ch, y, cb.codeword(i));
  });
}

int maxl_decode(const Codebook& cb, const ChannelModel& assumed, std::span<const double> y) {
  return argmax_score(cb.size(),
                      [&](int i) { return log_likelihood(assumed, y, cb.codeword(i)); });
}

int genie_decode(const Codebook& cb, const ChannelModel& ch, std::span<const double> y,
                 const GenieSideInfo& side) {
  if (side.empty()) throw std::invalid_argument("genie_decode: missing side information");
  return argmax_score(cb.size(),
                      [&](int i) { return genie_log_likelihood(ch, y, cb.codeword(i), side); });
}

std::vector<double> bayes_posterior(const Codebook& cb, const ChannelModel& ch,
                                    std::span<const double> y) {
  const int m = cb.size();
  std::vector<double> log_scores(static_cast<std::size_t>(m), kNegInf);
  double max_score = kNegInf;
  for (int i = 0; i < m; ++i) {
    const double p = cb.prior[static_cast<std::size_t>(i)];
    if (p <= 0.0) continue;
    const double s = std::log(p) + log_likelihood(ch, y, cb.codeword(i));
    log_scores[static_cast<std::size_t>(i)] = s;
    if (s > max_score) max_score = s;
  }
  std::vector<double> post(static_cast<std::size_t>(m), 0.0);
  KahanSum z;
  for (int i = 0; i < m; ++i) {
    const double s = log_scores[static_cast<std::size_t>(i)];
    if (s == kNegInf) continue;
    post[static_cast<std::size_t>(i)] = std::exp(s - max_score);
    z.add(post[static_cast<std::size_t>(i)]);
  }
  for (double& p : post) p /= z.value();
  return post;
}

}  // namespace mindsim
