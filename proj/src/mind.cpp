#include "mindsim/mind.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mindsim/kahan.hpp"

namespace mindsim {

namespace {

// softplus(z) = log(1 + e^z), overflow-safe.
double softplus(double z) {
  const double m = z > 0.0 ? z : 0.0;
  return m + std::log1p(std::exp(-std::fabs(z)));
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

NetSpec make_spec(int input_dim, std::span<const int> hidden_sizes, int output_dim, Activation act) {
  NetSpec spec;
  spec.layer_sizes.push_back(input_dim);
  spec.layer_sizes.insert(spec.layer_sizes.end(), hidden_sizes.begin(), hidden_sizes.end());
  spec.layer_sizes.push_back(output_dim);
  spec.hidden_activation = act;
  return spec;
}

void check_trained_logits(std::span<const double> logits) {
  for (double l : logits) {
    if (!std::isfinite(l)) throw std::invalid_argument("posterior: non-finite logit");
  }
}

}  // namespace

SupervisedDiscriminator SupervisedDiscriminator::create(const Codebook& cb,
                                                        std::span<const int> hidden_sizes,
                                                        Activation act, std::uint64_t seed) {
  cb.validate();
  SupervisedDiscriminator disc;
  disc.codebook = cb;
  disc.net = init_network(make_spec(cb.n, hidden_sizes, cb.size(), act), seed);
  return disc;
}

UnsupervisedDiscriminator UnsupervisedDiscriminator::create(const Codebook& cb,
                                                            std::span<const int> hidden_sizes,
                                                            Activation act, std::uint64_t seed) {
  cb.validate();
  UnsupervisedDiscriminator disc;
  disc.codebook = cb;
  disc.net = init_network(make_spec(2 * cb.n, hidden_sizes, 1, act), seed);
  return disc;
}

void TrainConfig::validate() const {
  if (epochs < 1 || batch_size < 1 || samples_per_epoch < 1) {
    throw std::invalid_argument("TrainConfig: epochs, batch_size, samples_per_epoch must be >= 1");
  }
  if (!(learning_rate > 0.0)) throw std::invalid_argument("TrainConfig: learning_rate must be > 0");
  if (!(logit_clamp >= 30.0)) throw std::invalid_argument("TrainConfig: logit_clamp must be >= 30");
}

LossGrad supervised_loss(const Matrix& logits, const Matrix& label_onehots) {
  if (logits.rows != label_onehots.rows || logits.cols != label_onehots.cols) {
    throw std::invalid_argument("supervised_loss: shape mismatch");
  }
  const int batch = logits.rows;
  const int m = logits.cols;
  if (batch < 1) throw std::invalid_argument("supervised_loss: empty batch");

  LossGrad out;
  out.dlogits = Matrix(batch, m);
  KahanSum loss;
  const double inv_batch = 1.0 / batch;
  for (int r = 0; r < batch; ++r) {
    const double* oh = label_onehots.row(r);
    int label = -1;
    for (int i = 0; i < m; ++i) {
      if (oh[i] == 1.0) {
        if (label >= 0) throw std::invalid_argument("supervised_loss: multiple ones in one-hot row");
        label = i;
      } else if (oh[i] != 0.0) {
        throw std::invalid_argument("supervised_loss: one-hot entries must be 0 or 1");
      }
    }
    if (label < 0) throw std::invalid_argument("supervised_loss: one-hot row without a 1");

    const double* l = logits.row(r);
    double* g = out.dlogits.row(r);
    for (int i = 0; i < m; ++i) {
      // -log D_i = softplus(-l_i); every output sees the marginal term.
      loss.add(softplus(-l[i]));
      g[i] = -sigmoid(-l[i]) * inv_batch;
    }
    // -log(1 - D_label) = softplus(l_label); only the label output sees it.
    loss.add(softplus(l[label]));
    g[label] += sigmoid(l[label]) * inv_batch;
  }
  out.loss = loss.value() * inv_batch;
  return out;
}

UnsupervisedLossGrad unsupervised_loss(std::span<const double> joint_logits,
                                       std::span<const double> marginal_logits, int M) {
  if (joint_logits.empty() || marginal_logits.empty()) {
    throw std::invalid_argument("unsupervised_loss: empty batch");
  }
  if (M < 1) throw std::invalid_argument("unsupervised_loss: M must be >= 1");

  UnsupervisedLossGrad out;
  out.d_joint.resize(joint_logits.size());
  out.d_marginal.resize(marginal_logits.size());

  KahanSum marg;
  const double inv_m_batch = 1.0 / static_cast<double>(marginal_logits.size());
  for (std::size_t i = 0; i < marginal_logits.size(); ++i) {
    marg.add(softplus(-marginal_logits[i]));
    out.d_marginal[i] = -static_cast<double>(M) * sigmoid(-marginal_logits[i]) * inv_m_batch;
  }
  KahanSum joint;
  const double inv_j_batch = 1.0 / static_cast<double>(joint_logits.size());
  for (std::size_t i = 0; i < joint_logits.size(); ++i) {
    joint.add(softplus(joint_logits[i]));
    out.d_joint[i] = sigmoid(joint_logits[i]) * inv_j_batch;
  }
  out.loss = static_cast<double>(M) * marg.value() * inv_m_batch + joint.value() * inv_j_batch;
  return out;
}

double mind_value_discrete(const Matrix& logits_all, std::span<const int> labels) {
  if (static_cast<std::size_t>(logits_all.rows) != labels.size()) {
    throw std::invalid_argument("mind_value_discrete: label count mismatch");
  }
  KahanSum v;
  for (int j = 0; j < logits_all.rows; ++j) {
    const double* l = logits_all.row(j);
    for (int i = 0; i < logits_all.cols; ++i) {
      v.add(-softplus(-l[i]));  // log D(x_i, y_j)
    }
    v.add(-softplus(l[labels[static_cast<std::size_t>(j)]]));  // log(1 - D(x_j, y_j))
  }
  return v.value() / logits_all.rows;
}

double mind_value_per_codeword(const Matrix& logits_all, std::span<const int> labels, int i) {
  if (static_cast<std::size_t>(logits_all.rows) != labels.size()) {
    throw std::invalid_argument("mind_value_per_codeword: label count mismatch");
  }
  if (i < 0 || i >= logits_all.cols) {
    throw std::invalid_argument("mind_value_per_codeword: codeword index out of range");
  }
  KahanSum v;
  for (int j = 0; j < logits_all.rows; ++j) {
    v.add(-softplus(-logits_all.at(j, i)));
    if (labels[static_cast<std::size_t>(j)] == i) v.add(-softplus(logits_all.at(j, i)));
  }
  return v.value() / logits_all.rows;
}

TransmitFn channel_transmitter(const ChannelModel& ch) {
  ch.validate();
  return [ch](std::span<const double> x, Rng& rng) { return transmit(ch, x, rng).y; };
}

namespace {

struct EpochPlan {
  int steps = 0;
  int batch = 0;
};

EpochPlan plan_epoch(const TrainConfig& cfg) {
  EpochPlan p;
  p.batch = cfg.batch_size;
  p.steps = (cfg.samples_per_epoch + cfg.batch_size - 1) / cfg.batch_size;
  return p;
}

// Cosine-annealed step size: starts at `base`, decays to 0 by the last step.
// Settles the iterate instead of leaving it hovering at constant-rate noise,
// which matters for posterior calibration.
double cosine_lr(double base, long step, double total_steps) {
  constexpr double pi = 3.14159265358979323846;
  return base * 0.5 * (1.0 + std::cos(pi * static_cast<double>(step) / total_steps));
}

void check_loss_finite(double loss, int epoch) {
  if (!std::isfinite(loss)) {
    throw std::runtime_error("training diverged: non-finite loss at epoch " +
                             std::to_string(epoch));
  }
}

// Tail weight averaging (Polyak): the returned model is the mean of the
// iterates over the last quarter of training, not the last iterate. Single
// runs otherwise carry run-to-run calibration wander that shows up directly
// in the error-probability estimate.
struct TailAverage {
  long start_step = 0;
  long count = 0;
  std::vector<std::vector<double>> weight_sum;
  std::vector<std::vector<double>> bias_sum;

  explicit TailAverage(const Network& net, double total_steps) {
    start_step = static_cast<long>(total_steps * 0.75);
    weight_sum.resize(net.weights.size());
    bias_sum.resize(net.biases.size());
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
      weight_sum[l].assign(net.weights[l].data.size(), 0.0);
      bias_sum[l].assign(net.biases[l].size(), 0.0);
    }
  }

  void observe(const Network& net, long step) {
    if (step < start_step) return;
    ++count;
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
      for (std::size_t i = 0; i < weight_sum[l].size(); ++i) {
        weight_sum[l][i] += net.weights[l].data[i];
      }
      for (std::size_t i = 0; i < bias_sum[l].size(); ++i) bias_sum[l][i] += net.biases[l][i];
    }
  }

  void apply(Network& net) const {
    if (count == 0) return;
    const double inv = 1.0 / static_cast<double>(count);
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
      for (std::size_t i = 0; i < weight_sum[l].size(); ++i) {
        net.weights[l].data[i] = weight_sum[l][i] * inv;
      }
      for (std::size_t i = 0; i < bias_sum[l].size(); ++i) net.biases[l][i] = bias_sum[l][i] * inv;
    }
  }
};

// Fold the input scale into the first layer so hidden pre-activations start
// near unit variance regardless of the channel's operating point. Uses a
// short pilot draw from the transmitter.
void condition_first_layer(Network& net, const Codebook& cb, const TransmitFn& tx, Rng& rng,
                           bool pair_input) {
  const int kPilot = 256;
  std::vector<double> mean_sq(static_cast<std::size_t>(net.spec.input_dim()), 0.0);
  for (int p = 0; p < kPilot; ++p) {
    const int idx = sample_message(cb, rng);
    const auto x = cb.codeword(idx);
    const auto y = tx(x, rng);
    if (static_cast<int>(y.size()) != cb.n) {
      throw std::invalid_argument("train: transmitter output length mismatch");
    }
    for (int c = 0; c < cb.n; ++c) {
      const auto cu = static_cast<std::size_t>(c);
      if (pair_input) {
        mean_sq[cu] += x[cu] * x[cu];
        mean_sq[static_cast<std::size_t>(cb.n + c)] += y[cu] * y[cu];
      } else {
        mean_sq[cu] += y[cu] * y[cu];
      }
    }
  }
  Matrix& w1 = net.weights[0];
  for (int c = 0; c < w1.cols; ++c) {
    const double scale = std::sqrt(mean_sq[static_cast<std::size_t>(c)] / kPilot);
    if (scale <= 1e-12) continue;
    for (int r = 0; r < w1.rows; ++r) w1.at(r, c) /= scale;
  }
}

}  // namespace

TrainTrace train(SupervisedDiscriminator& disc, const TransmitFn& tx, const TrainConfig& cfg) {
  cfg.validate();
  const Codebook& cb = disc.codebook;
  if (disc.net.spec.input_dim() != cb.n || disc.net.spec.output_dim() != cb.size()) {
    throw std::invalid_argument("train: discriminator dimensions do not match codebook");
  }

  Rng rng(cfg.seed);
  condition_first_layer(disc.net, cb, tx, rng, false);
  AdamState adam = make_adam(disc.net, cfg.learning_rate);
  const EpochPlan plan = plan_epoch(cfg);
  const double total_steps = static_cast<double>(cfg.epochs) * plan.steps;
  TailAverage tail(disc.net, total_steps);

  TrainTrace trace;
  Matrix batch(plan.batch, cb.n);
  Matrix onehots(plan.batch, cb.size());
  long global_step = 0;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    KahanSum epoch_loss;
    for (int step = 0; step < plan.steps; ++step, ++global_step) {
      adam.learning_rate = cosine_lr(cfg.learning_rate, global_step, total_steps);
      std::fill(onehots.data.begin(), onehots.data.end(), 0.0);
      for (int r = 0; r < plan.batch; ++r) {
        const int idx = sample_message(cb, rng);
        const auto y = tx(cb.codeword(idx), rng);
        if (static_cast<int>(y.size()) != cb.n) {
          throw std::invalid_argument("train: transmitter output length mismatch");
        }
        for (int c = 0; c < cb.n; ++c) batch.at(r, c) = y[static_cast<std::size_t>(c)];
        onehots.at(r, idx) = 1.0;
      }
      const Matrix logits = forward(disc.net, batch);
      const LossGrad lg = supervised_loss(logits, onehots);
      check_loss_finite(lg.loss, epoch);
      const Gradients grads = backward(disc.net, batch, lg.dlogits);
      adam_step(disc.net, grads, adam);
      tail.observe(disc.net, global_step);
      epoch_loss.add(lg.loss);
      trace.samples_seen += plan.batch;
    }
    trace.epoch_loss.push_back(epoch_loss.value() / plan.steps);
  }
  tail.apply(disc.net);
  return trace;
}

TrainTrace train(SupervisedDiscriminator& disc, const ChannelModel& ch, const TrainConfig& cfg) {
  return train(disc, channel_transmitter(ch), cfg);
}

TrainTrace train(UnsupervisedDiscriminator& disc, const TransmitFn& tx, const TrainConfig& cfg) {
  cfg.validate();
  const Codebook& cb = disc.codebook;
  if (disc.net.spec.input_dim() != 2 * cb.n || disc.net.spec.output_dim() != 1) {
    throw std::invalid_argument("train: discriminator dimensions do not match codebook");
  }

  Rng rng(cfg.seed);
  condition_first_layer(disc.net, cb, tx, rng, true);
  AdamState adam = make_adam(disc.net, cfg.learning_rate);
  const EpochPlan plan = plan_epoch(cfg);
  const double total_steps = static_cast<double>(cfg.epochs) * plan.steps;
  TailAverage tail(disc.net, total_steps);

  TrainTrace trace;
  Matrix joint(plan.batch, 2 * cb.n);
  Matrix marginal(plan.batch, 2 * cb.n);
  std::vector<int> perm(static_cast<std::size_t>(plan.batch));
  long global_step = 0;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    KahanSum epoch_loss;
    for (int step = 0; step < plan.steps; ++step, ++global_step) {
      adam.learning_rate = cosine_lr(cfg.learning_rate, global_step, total_steps);
      for (int r = 0; r < plan.batch; ++r) {
        const int idx = sample_message(cb, rng);
        const auto x = cb.codeword(idx);
        const auto y = tx(x, rng);
        if (static_cast<int>(y.size()) != cb.n) {
          throw std::invalid_argument("train: transmitter output length mismatch");
        }
        for (int c = 0; c < cb.n; ++c) {
          joint.at(r, c) = x[static_cast<std::size_t>(c)];
          joint.at(r, cb.n + c) = y[static_cast<std::size_t>(c)];
        }
        perm[static_cast<std::size_t>(r)] = r;
      }
      // Marginal pairs: uniform codeword draw against within-batch-shuffled y.
      rng.shuffle(perm);
      for (int r = 0; r < plan.batch; ++r) {
        const int u = static_cast<int>(rng.uniform() * cb.size());
        const auto xu = cb.codeword(u < cb.size() ? u : cb.size() - 1);
        const int src = perm[static_cast<std::size_t>(r)];
        for (int c = 0; c < cb.n; ++c) {
          marginal.at(r, c) = xu[static_cast<std::size_t>(c)];
          marginal.at(r, cb.n + c) = joint.at(src, cb.n + c);
        }
      }

      const Matrix joint_logits = forward(disc.net, joint);
      const Matrix marginal_logits = forward(disc.net, marginal);
      const UnsupervisedLossGrad lg =
          unsupervised_loss({joint_logits.data.data(), joint_logits.data.size()},
                            {marginal_logits.data.data(), marginal_logits.data.size()}, cb.size());
      check_loss_finite(lg.loss, epoch);

      Matrix d_joint(plan.batch, 1);
      Matrix d_marginal(plan.batch, 1);
      d_joint.data = lg.d_joint;
      d_marginal.data = lg.d_marginal;
      Gradients grads = backward(disc.net, joint, d_joint);
      const Gradients marg_grads = backward(disc.net, marginal, d_marginal);
      for (std::size_t l = 0; l < grads.weights.size(); ++l) {
        for (std::size_t i = 0; i < grads.weights[l].data.size(); ++i) {
          grads.weights[l].data[i] += marg_grads.weights[l].data[i];
        }
        for (std::size_t i = 0; i < grads.biases[l].size(); ++i) {
          grads.biases[l][i] += marg_grads.biases[l][i];
        }
      }
      adam_step(disc.net, grads, adam);
      tail.observe(disc.net, global_step);
      epoch_loss.add(lg.loss);
      trace.samples_seen += plan.batch;
    }
    trace.epoch_loss.push_back(epoch_loss.value() / plan.steps);
  }
  tail.apply(disc.net);
  return trace;
}

TrainTrace train(UnsupervisedDiscriminator& disc, const ChannelModel& ch, const TrainConfig& cfg) {
  return train(disc, channel_transmitter(ch), cfg);
}

PosteriorEstimate posterior_from_logits(std::span<const double> logits, double clamp,
                                        bool normalize) {
  check_trained_logits(logits);
  PosteriorEstimate post;
  post.probs.resize(logits.size());
  post.apost_info_bits.resize(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) {
    double l = logits[i];
    if (l > clamp) l = clamp;
    if (l < -clamp) l = -clamp;
    // (1-D)/D = exp(-l); in bits the logit is the a-posteriori information.
    post.apost_info_bits[i] = l * std::numbers::log2e;
    post.probs[i] = std::exp2(-post.apost_info_bits[i]);
  }
  if (normalize) {
    KahanSum total;
    for (double p : post.probs) total.add(p);
    const double z = total.value();
    for (std::size_t i = 0; i < post.probs.size(); ++i) {
      post.apost_info_bits[i] = -std::log2(post.probs[i] / z);
      post.probs[i] = std::exp2(-post.apost_info_bits[i]);
    }
    post.normalized = true;
  }
  return post;
}

PosteriorEstimate posterior(const SupervisedDiscriminator& disc, std::span<const double> y,
                            double clamp, bool normalize) {
  if (static_cast<int>(y.size()) != disc.codebook.n) {
    throw std::invalid_argument("posterior: received vector length mismatch");
  }
  Matrix input(1, disc.codebook.n);
  for (int c = 0; c < disc.codebook.n; ++c) input.at(0, c) = y[static_cast<std::size_t>(c)];
  const Matrix logits = forward(disc.net, input);
  return posterior_from_logits({logits.data.data(), logits.data.size()}, clamp, normalize);
}

PosteriorEstimate posterior(const UnsupervisedDiscriminator& disc, std::span<const double> y,
                            double clamp, bool normalize) {
  const Codebook& cb = disc.codebook;
  if (static_cast<int>(y.size()) != cb.n) {
    throw std::invalid_argument("posterior: received vector length mismatch");
  }
  // One (x_i, y) pass per codeword.
  Matrix input(cb.size(), 2 * cb.n);
  for (int i = 0; i < cb.size(); ++i) {
    const auto x = cb.codeword(i);
    for (int c = 0; c < cb.n; ++c) {
      input.at(i, c) = x[static_cast<std::size_t>(c)];
      input.at(i, cb.n + c) = y[static_cast<std::size_t>(c)];
    }
  }
  const Matrix logits = forward(disc.net, input);
  return posterior_from_logits({logits.data.data(), logits.data.size()}, clamp, normalize);
}

int decode(const PosteriorEstimate& post) {
  if (post.apost_info_bits.empty()) throw std::invalid_argument("decode: empty posterior");
  int best = 0;
  for (std::size_t i = 1; i < post.apost_info_bits.size(); ++i) {
    if (post.apost_info_bits[i] < post.apost_info_bits[static_cast<std::size_t>(best)]) {
      best = static_cast<int>(i);
    }
  }
  return best;
}

int decode(const SupervisedDiscriminator& disc, std::span<const double> y) {
  return decode(posterior(disc, y));
}

int decode(const UnsupervisedDiscriminator& disc, std::span<const double> y) {
  return decode(posterior(disc, y));
}

}  // namespace mindsim
