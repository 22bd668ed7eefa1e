#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mindsim/channels.hpp"
#include "mindsim/coding.hpp"
#include "mindsim/neuralnet.hpp"

namespace mindsim {

// Discriminator whose M output logits encode the a-posteriori information of
// each codeword given the received vector: D_i = sigmoid(l_i) and
// P(x_i|y) = (1-D_i)/D_i = exp(-l_i), so l_i * log2(e) is i(x_i|y) in bits.
struct SupervisedDiscriminator {
  Network net;        // input dim n, output dim M
  Codebook codebook;

  static SupervisedDiscriminator create(const Codebook& cb, std::span<const int> hidden_sizes,
                                        Activation act, std::uint64_t seed);
};

// Scalar discriminator over concatenated (codeword, received) pairs. Works
// for any coding scheme; posterior extraction runs M forward passes.
struct UnsupervisedDiscriminator {
  Network net;        // input dim 2n, scalar output
  Codebook codebook;

  static UnsupervisedDiscriminator create(const Codebook& cb, std::span<const int> hidden_sizes,
                                          Activation act, std::uint64_t seed);
};

struct TrainConfig {
  int epochs = 20;
  int batch_size = 10;
  int samples_per_epoch = 5000;
  double learning_rate = 2e-3;  // initial rate; cosine-annealed to 0 over the run
  std::uint64_t seed = 1;
  double logit_clamp = 30.0;  // >= 30; keeps exp(-l) finite down to ~1e-13

  void validate() const;
};

// Per-received-vector posterior pmf estimate. probs = 2^(-apost_info_bits)
// holds elementwise by construction.
struct PosteriorEstimate {
  std::vector<double> probs;
  std::vector<double> apost_info_bits;
  bool normalized = false;
};

struct LossGrad {
  double loss = 0.0;
  Matrix dlogits;
};

// Batch loss whose minimization maximizes the supervised value function:
// loss = (1/B) * sum_rows [ sum_i softplus(-l_i) + softplus(l_label) ].
// label_onehots must contain exactly one 1 per row.
LossGrad supervised_loss(const Matrix& logits, const Matrix& label_onehots);

struct UnsupervisedLossGrad {
  double loss = 0.0;
  std::vector<double> d_joint;
  std::vector<double> d_marginal;
};

// loss = M * mean(softplus(-l_marginal)) + mean(softplus(l_joint)).
// Joint logits come from transmitted (x_j, y_j) pairs; marginal logits pair
// uniformly drawn codewords with within-batch-shuffled received vectors.
UnsupervisedLossGrad unsupervised_loss(std::span<const double> joint_logits,
                                       std::span<const double> marginal_logits, int M);

// Two routes to the same discrete value function, used as a cross-check.
// logits_all row j holds the logit of D(x_i, y_j) for every codeword i;
// labels[j] is the transmitted index. mind_value_discrete enumerates the
// uniform codeword average exactly; summing mind_value_per_codeword over i
// must reproduce it.
double mind_value_discrete(const Matrix& logits_all, std::span<const int> labels);
double mind_value_per_codeword(const Matrix& logits_all, std::span<const int> labels, int i);

// Channel access used by training; lets tests substitute degenerate channels
// (e.g. output independent of the input).
using TransmitFn = std::function<std::vector<double>(std::span<const double> x, Rng& rng)>;

TransmitFn channel_transmitter(const ChannelModel& ch);

struct TrainTrace {
  std::vector<double> epoch_loss;  // mean batch loss per epoch
  std::int64_t samples_seen = 0;
};

// Training data is regenerated every epoch from the seeded stream: messages
// drawn from the codebook prior, received vectors from the channel. Throws
// std::runtime_error if the loss turns non-finite.
TrainTrace train(SupervisedDiscriminator& disc, const TransmitFn& tx, const TrainConfig& cfg);
TrainTrace train(SupervisedDiscriminator& disc, const ChannelModel& ch, const TrainConfig& cfg);
TrainTrace train(UnsupervisedDiscriminator& disc, const TransmitFn& tx, const TrainConfig& cfg);
TrainTrace train(UnsupervisedDiscriminator& disc, const ChannelModel& ch, const TrainConfig& cfg);

// Logits -> posterior. Clamps to +/-clamp before exponentiation. Normalization
// is needed for entropy estimation; decoding is scale-free and skips it.
PosteriorEstimate posterior_from_logits(std::span<const double> logits, double clamp,
                                        bool normalize);

PosteriorEstimate posterior(const SupervisedDiscriminator& disc, std::span<const double> y,
                            double clamp = 30.0, bool normalize = false);
PosteriorEstimate posterior(const UnsupervisedDiscriminator& disc, std::span<const double> y,
                            double clamp = 30.0, bool normalize = false);

// argmin_i i(x_i|y) = argmax_i P(x_i|y); ties break to the lowest index.
int decode(const PosteriorEstimate& post);
int decode(const SupervisedDiscriminator& disc, std::span<const double> y);
int decode(const UnsupervisedDiscriminator& disc, std::span<const double> y);

}  // namespace mindsim
