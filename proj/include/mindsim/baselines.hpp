#pragma once

#include <span>
#include <string>
#include <vector>

#include "mindsim/channels.hpp"
#include "mindsim/coding.hpp"

namespace mindsim {

enum class DecoderKind {
  map,
  maxl_gaussian,
  maxl_gaussian_csi,
  maxl_middleton,
  genie_middleton,
  mind_supervised,
  mind_unsupervised,
};

std::string to_string(DecoderKind k);
DecoderKind decoder_from_string(const std::string& s);

// argmax_i [ log P_X(x_i) + log p(y|x_i) ], exhaustive over the codebook,
// lowest-index tie-break. Zero-prior codewords are never selected.
int map_decode(const Codebook& cb, const ChannelModel& ch, std::span<const double> y);

// Maximum likelihood under an assumed channel (uniform source). The no-CSI
// Gaussian baseline passes an awgn model; the perfect-CSI baseline passes the
// true nonlinear model; MaxL-Middleton passes the middleton model.
int maxl_decode(const Codebook& cb, const ChannelModel& assumed, std::span<const double> y);

// Middleton bound decoder that knows each sample's impulse outcome.
int genie_decode(const Codebook& cb, const ChannelModel& ch, std::span<const double> y,
                 const GenieSideInfo& side);

// Exact a-posteriori pmf under a known channel, normalized. Reference for
// estimator oracles and for cross-checking learned posteriors.
std::vector<double> bayes_posterior(const Codebook& cb, const ChannelModel& ch,
                                    std::span<const double> y);

}  // namespace mindsim
