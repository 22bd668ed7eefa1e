// End-to-end acceptance gate for the decoder benchmark. Each numbered
// criterion prints exactly one [PASS]/[FAIL] line on stdout; progress and
// per-point measurements go to stderr as [info] lines. The exit code is the
// number of failed criteria.
//
// Criteria (tolerances pinned here, in code):
//   1  loss gradients match finite differences through full networks
//   2  analytically built discriminator reproduces the exact posterior and
//      its decoder matches MAP decisions everywhere
//   3  discrete value function decomposes over codewords
//   4  nonuniform 4-PAM on AWGN: near-MAP error rates, beats plain MaxL at
//      low SNR, and self-reported error probability is calibrated
//   5  entropy/MI estimates: H(X) recovered above 6 dB, MI monotone in SNR,
//      MI -> H(X) at high SNR
//   6  nonlinear channel: near perfect-CSI MaxL; no-CSI MaxL clearly worse
//   7  Middleton repetition code: genie bound respected; near MaxL-Middleton
//   8  estimator sanity on the noiseless and pure-noise limits
//   9  sweeps are byte-for-byte deterministic
//  10  code-construction oracles (Hamming distance 3, convolutional
//      distance 5, GF(2) linearity)

#include <chrono>
#include <cstdarg>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mindsim/harness.hpp"

using namespace mindsim;

namespace {

// Master seeds for the benchmark sweeps. Everything downstream is
// deterministic in these, so each gate is a reproducible measurement.
constexpr std::uint64_t kSeedGradients = 401;
constexpr std::uint64_t kSeedOracle = 402;
constexpr std::uint64_t kSeedDecomposition = 403;
constexpr std::uint64_t kSeedPamSweep = 2;
constexpr std::uint64_t kSeedNonlinearSweep = 1;
constexpr std::uint64_t kSeedRepetitionSweep = 1;
constexpr std::uint64_t kSeedLimits = 404;
constexpr std::uint64_t kSeedDeterminism = 405;

struct Gate {
  int id = 0;
  bool pass = false;
  std::string detail;
};

std::vector<Gate> g_gates;

void record(int id, bool pass, const std::string& detail) {
  g_gates.push_back({id, pass, detail});
}

void info(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  std::fprintf(stderr, "[info] ");
  std::vfprintf(stderr, fmt, args);
  std::fprintf(stderr, "\n");
  va_end(args);
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return std::string(buf);
}

const DecoderOutcome& outcome(const SweepRow& row, DecoderKind k) {
  for (const DecoderOutcome& d : row.decoders) {
    if (d.kind == k) return d;
  }
  throw std::runtime_error("decoder missing from sweep row: " + to_string(k));
}

double combined_se(double a, double b) { return std::sqrt(a * a + b * b); }

// ---------------------------------------------------------------------------
// Criterion 1: gradients of both losses, differentiated through the full
// network, match central finite differences (< 1e-4 relative, < 5 s).
// ---------------------------------------------------------------------------

std::vector<double*> param_pointers(Network& net) {
  std::vector<double*> out;
  for (auto& w : net.weights)
    for (double& v : w.data) out.push_back(&v);
  for (auto& b : net.biases)
    for (double& v : b) out.push_back(&v);
  return out;
}

std::vector<double> flatten(const Gradients& g) {
  std::vector<double> out;
  for (const auto& w : g.weights)
    for (double v : w.data) out.push_back(v);
  for (const auto& b : g.biases)
    for (double v : b) out.push_back(v);
  return out;
}

void accumulate(Gradients& into, const Gradients& add) {
  for (std::size_t l = 0; l < into.weights.size(); ++l) {
    for (std::size_t i = 0; i < into.weights[l].data.size(); ++i) {
      into.weights[l].data[i] += add.weights[l].data[i];
    }
    for (std::size_t i = 0; i < into.biases[l].size(); ++i) {
      into.biases[l][i] += add.biases[l][i];
    }
  }
}

double max_rel_error(const std::vector<double>& analytic, Network& net,
                     const std::function<double()>& loss_fn) {
  const std::vector<double*> params = param_pointers(net);
  const double h = 1e-6;
  double worst = 0.0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double saved = *params[i];
    *params[i] = saved + h;
    const double up = loss_fn();
    *params[i] = saved - h;
    const double dn = loss_fn();
    *params[i] = saved;
    const double fd = (up - dn) / (2.0 * h);
    const double rel = std::fabs(fd - analytic[i]) / std::max(1e-6, std::fabs(analytic[i]));
    worst = std::max(worst, rel);
  }
  return worst;
}

void run_criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const Codebook cb = build_pam4(0.05);
  Rng rng(kSeedGradients);

  // Supervised loss through a 1 -> 16 -> 4 network (100 parameters).
  auto sup = SupervisedDiscriminator::create(cb, std::vector<int>{16}, Activation::tanh, 7);
  const int batch = 32;
  Matrix ys(batch, 1);
  Matrix onehots(batch, 4);
  for (int r = 0; r < batch; ++r) {
    const int idx = sample_message(cb, rng);
    ys.at(r, 0) = cb.codeword(idx)[0] + rng.gaussian();
    onehots.at(r, idx) = 1.0;
  }
  const LossGrad lg = supervised_loss(forward(sup.net, ys), onehots);
  const Gradients sup_grads = backward(sup.net, ys, lg.dlogits);
  const double sup_err = max_rel_error(flatten(sup_grads), sup.net, [&] {
    return supervised_loss(forward(sup.net, ys), onehots).loss;
  });

  // Unsupervised loss through a 2 -> 16 -> 1 network (65 parameters); the
  // joint and marginal batches feed the same parameters.
  auto unsup = UnsupervisedDiscriminator::create(cb, std::vector<int>{16}, Activation::tanh, 9);
  Matrix joint_in(batch, 2), marg_in(batch, 2);
  for (int r = 0; r < batch; ++r) {
    const int idx = sample_message(cb, rng);
    joint_in.at(r, 0) = cb.codeword(idx)[0];
    joint_in.at(r, 1) = cb.codeword(idx)[0] + rng.gaussian();
    marg_in.at(r, 0) = cb.codeword(static_cast<int>(rng.uniform() * 4))[0];
    marg_in.at(r, 1) = rng.uniform(-4.0, 4.0);
  }
  auto unsup_loss = [&] {
    const Matrix lj = forward(unsup.net, joint_in);
    const Matrix lm = forward(unsup.net, marg_in);
    return unsupervised_loss(lj.data, lm.data, cb.size()).loss;
  };
  const Matrix lj = forward(unsup.net, joint_in);
  const Matrix lm = forward(unsup.net, marg_in);
  const UnsupervisedLossGrad ug = unsupervised_loss(lj.data, lm.data, cb.size());
  Matrix up_j(batch, 1), up_m(batch, 1);
  for (int r = 0; r < batch; ++r) {
    up_j.at(r, 0) = ug.d_joint[static_cast<std::size_t>(r)];
    up_m.at(r, 0) = ug.d_marginal[static_cast<std::size_t>(r)];
  }
  Gradients unsup_grads = backward(unsup.net, joint_in, up_j);
  accumulate(unsup_grads, backward(unsup.net, marg_in, up_m));
  const double unsup_err = max_rel_error(flatten(unsup_grads), unsup.net, unsup_loss);

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = sup_err < 1e-4 && unsup_err < 1e-4 && secs < 5.0;
  record(1, pass,
         fmt("loss gradients vs finite differences: rel err %.2e (supervised), %.2e "
             "(unsupervised), %.2f s",
             sup_err, unsup_err, secs));
}

// ---------------------------------------------------------------------------
// Criterion 2: a discriminator built from the exact posterior round-trips the
// posterior to 1e-12 and decodes identically to MAP on 10^4 receptions.
// ---------------------------------------------------------------------------

void run_criterion_2() {
  const Codebook cb = build_pam4(0.05);
  const double sigma = sigma_for_snr(6.0, symbol_energy(cb, ChannelKind::awgn), ChannelKind::awgn);
  const ChannelModel ch = ChannelModel::awgn(sigma);
  Rng rng(kSeedOracle);

  const int n = 10000;
  double worst_gap = 0.0;
  int agreements = 0;
  for (int t = 0; t < n; ++t) {
    const int idx = sample_message(cb, rng);
    const auto tr = transmit(ch, cb.codeword(idx), rng);
    const std::vector<double> exact = bayes_posterior(cb, ch, tr.y);

    // Optimal discriminator: D_i = 1/(1 + P(x_i|y)), i.e. logit -ln P.
    std::vector<double> logits;
    for (double p : exact) logits.push_back(-std::log(p));
    const PosteriorEstimate post = posterior_from_logits(logits, 700.0, true);

    for (std::size_t i = 0; i < exact.size(); ++i) {
      worst_gap = std::max(worst_gap, std::fabs(post.probs[i] - exact[i]));
    }
    agreements += decode(post) == map_decode(cb, ch, tr.y) ? 1 : 0;
  }
  const bool pass = worst_gap <= 1e-12 && agreements == n;
  record(2, pass,
         fmt("oracle discriminator: posterior round-trip gap %.2e, decode/MAP agreement %d/%d",
             worst_gap, agreements, n));
}

// ---------------------------------------------------------------------------
// Criterion 3: the discrete value function equals the sum of its per-codeword
// components on 10^4 fixed samples (1e-12).
// ---------------------------------------------------------------------------

void run_criterion_3() {
  const int n = 10000, m = 4;
  Rng rng(kSeedDecomposition);
  Matrix logits(n, m);
  for (double& v : logits.data) v = rng.uniform(-4.0, 4.0);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int& l : labels) l = static_cast<int>(rng.uniform() * m);

  const double whole = mind_value_discrete(logits, labels);
  double parts = 0.0;
  for (int i = 0; i < m; ++i) parts += mind_value_per_codeword(logits, labels, i);
  const double gap = std::fabs(whole - parts);
  const bool pass = gap <= 1e-12 * std::max(1.0, std::fabs(whole));
  record(3, pass, fmt("value-function decomposition: |whole - sum of parts| = %.2e", gap));
}

// ---------------------------------------------------------------------------
// Criteria 4 and 5: nonuniform 4-PAM over AWGN. One sweep serves both the
// error-rate gates and the entropy/MI gates.
// ---------------------------------------------------------------------------

void run_criteria_4_and_5() {
  ExperimentConfig cfg = default_config(Scenario::nonuniform_4pam);
  cfg.snr_db_grid = {0, 2, 4, 6, 8, 10, 12, 30};
  cfg.seed = kSeedPamSweep;
  info("criterion 4/5: sweeping %zu SNR points (10^5 train / 10^5 eval each)...",
       cfg.snr_db_grid.size());
  const auto rows = run_scenario(cfg, &std::cerr);

  bool near_map = true;        // (4a) SER <= 1.15 x MAP where MAP SER >= 1e-3
  bool beats_maxl_low = true;  // (4b) below MaxL - 3 sigma at <= 4 dB
  bool pe_calibrated = true;   // (4c) estimated Pe within 3 combined SE of SER
  bool hx_recovered = true;    // (5)  H(X) within 0.05 of 1.2865 at >= 6 dB
  bool mi_monotone = true;     //      MI non-decreasing across the grid
  std::string worst4, worst5;

  const double h_true = 1.2865;
  double prev_mi = -1.0, prev_mi_se = 0.0;
  for (const SweepRow& row : rows) {
    if (row.failed) {
      near_map = pe_calibrated = hx_recovered = false;
      worst4 = fmt("training failed at %g dB", row.snr_db);
      break;
    }
    const auto& map = outcome(row, DecoderKind::map);
    const auto& maxl = outcome(row, DecoderKind::maxl_gaussian);
    const auto& mind = outcome(row, DecoderKind::mind_supervised);
    const RateEstimate& re = *mind.rate_estimate;

    const double pe_gap_se =
        std::fabs(re.pe - mind.rates.ser) /
        std::max(1e-30, 3.0 * combined_se(re.pe_stderr, mind.rates.ser_stderr));
    info("criterion 4/5: snr=%g ser map=%.5f maxl=%.5f mind=%.5f (ratio %.3f)  pe=%.5f "
         "(%.2f of 3sig)  hx=%.4f hxy=%.4f mi=%.4f",
         row.snr_db, map.rates.ser, maxl.rates.ser, mind.rates.ser,
         map.rates.ser > 0 ? mind.rates.ser / map.rates.ser : 0.0, re.pe, pe_gap_se, re.hx_bits,
         re.hxy_bits, re.mi_bits_per_use);

    if (row.snr_db <= 12.0) {
      if (map.rates.ser >= 1e-3 && mind.rates.ser > 1.15 * map.rates.ser) {
        near_map = false;
        worst4 = fmt("snr %g: mind ser %.5f > 1.15 x map %.5f", row.snr_db, mind.rates.ser,
                     map.rates.ser);
      }
      if (row.snr_db <= 4.0) {
        const double margin = 3.0 * combined_se(mind.rates.ser_stderr, maxl.rates.ser_stderr);
        if (!(mind.rates.ser < maxl.rates.ser - margin)) {
          beats_maxl_low = false;
          worst4 = fmt("snr %g: mind ser %.5f not below maxl %.5f - 3sig", row.snr_db,
                       mind.rates.ser, maxl.rates.ser);
        }
      }
      if (std::fabs(re.pe - mind.rates.ser) >
          3.0 * combined_se(re.pe_stderr, mind.rates.ser_stderr)) {
        pe_calibrated = false;
        worst4 = fmt("snr %g: pe %.5f vs ser %.5f exceeds 3 combined SE", row.snr_db, re.pe,
                     mind.rates.ser);
      }
    }
    if (row.snr_db >= 6.0 && std::fabs(re.hx_bits - h_true) > 0.05) {
      hx_recovered = false;
      worst5 = fmt("snr %g: hx %.4f off %.4f", row.snr_db, re.hx_bits, h_true);
    }
    if (prev_mi >= 0.0 &&
        re.mi_bits_per_use < prev_mi - 3.0 * combined_se(re.mi_stderr, prev_mi_se)) {
      mi_monotone = false;
      worst5 = fmt("snr %g: mi %.4f dropped below previous %.4f", row.snr_db, re.mi_bits_per_use,
                   prev_mi);
    }
    prev_mi = re.mi_bits_per_use;
    prev_mi_se = re.mi_stderr;
  }

  // MI reaches the source entropy on the essentially noiseless point.
  const SweepRow& top = rows.back();
  bool mi_saturates = false;
  if (!top.failed) {
    const RateEstimate& re = *outcome(top, DecoderKind::mind_supervised).rate_estimate;
    mi_saturates = std::fabs(re.mi_bits_per_use - re.hx_bits) <= 0.05;
    if (!mi_saturates) {
      worst5 = fmt("30 dB: mi %.4f vs hx %.4f", re.mi_bits_per_use, re.hx_bits);
    }
  }

  const bool pass4 = near_map && beats_maxl_low && pe_calibrated;
  record(4, pass4,
         pass4 ? "nonuniform 4-PAM: near-MAP error rates, beats plain MaxL at low SNR, "
                 "calibrated self-reported error probability"
               : "nonuniform 4-PAM: " + worst4);
  const bool pass5 = hx_recovered && mi_monotone && mi_saturates;
  record(5, pass5,
         pass5 ? "entropy/MI estimates: H(X) recovered above 6 dB, MI monotone and saturating"
               : "entropy/MI estimates: " + worst5);
}

// ---------------------------------------------------------------------------
// Criterion 6: nonlinear channel with uniform 4-PAM. The learned decoder must
// track the perfect-CSI MaxL baseline; the model-mismatched no-CSI baseline
// must be measurably worse at high SNR.
// ---------------------------------------------------------------------------

void run_criterion_6() {
  ExperimentConfig cfg = default_config(Scenario::nonlinear_4pam);
  cfg.seed = kSeedNonlinearSweep;
  info("criterion 6: sweeping %zu SNR points on the nonlinear channel...",
       cfg.snr_db_grid.size());
  const auto rows = run_scenario(cfg, &std::cerr);

  bool near_csi = true, nocsi_worse = true;
  std::string worst;
  for (const SweepRow& row : rows) {
    if (row.failed) {
      near_csi = false;
      worst = fmt("training failed at %g dB", row.snr_db);
      break;
    }
    const auto& nocsi = outcome(row, DecoderKind::maxl_gaussian);
    const auto& csi = outcome(row, DecoderKind::maxl_gaussian_csi);
    const auto& mind = outcome(row, DecoderKind::mind_supervised);
    info("criterion 6: snr=%g ser csi=%.5f mind=%.5f (ratio %.3f) nocsi=%.5f", row.snr_db,
         csi.rates.ser, mind.rates.ser,
         csi.rates.ser > 0 ? mind.rates.ser / csi.rates.ser : 0.0, nocsi.rates.ser);

    if (csi.rates.ser >= 1e-3 && mind.rates.ser > 1.15 * csi.rates.ser) {
      near_csi = false;
      worst = fmt("snr %g: mind ser %.5f > 1.15 x perfect-CSI %.5f", row.snr_db, mind.rates.ser,
                  csi.rates.ser);
    }
    if (row.snr_db >= 8.0) {
      const double margin = 3.0 * combined_se(nocsi.rates.ser_stderr, csi.rates.ser_stderr);
      if (!(nocsi.rates.ser >= csi.rates.ser + margin)) {
        nocsi_worse = false;
        worst = fmt("snr %g: no-CSI ser %.5f not above CSI %.5f + 3sig", row.snr_db,
                    nocsi.rates.ser, csi.rates.ser);
      }
    }
  }
  const bool pass = near_csi && nocsi_worse;
  record(6, pass,
         pass ? "nonlinear channel: learned decoder tracks perfect-CSI MaxL; no-CSI MaxL "
                "clearly worse at high SNR"
              : "nonlinear channel: " + worst);
}

// ---------------------------------------------------------------------------
// Criterion 7: repetition code on the Middleton impulsive channel. The genie
// bound must hold everywhere; the learned decoder must stay within 1.25x the
// MaxL-Middleton BER at every grid point. Whether it strictly beats
// MaxL-Middleton is reported as a soft check only.
// ---------------------------------------------------------------------------

void run_criterion_7() {
  ExperimentConfig cfg = default_config(Scenario::middleton_repetition);
  cfg.seed = kSeedRepetitionSweep;
  cfg.train.epochs = 200;     // 10^6 training samples per point
  cfg.eval_samples = 2000000; // BER floors near 1e-5 need large counts
  info("criterion 7: sweeping %zu SNR points (10^6 train / 2x10^6 eval each; slow)...",
       cfg.snr_db_grid.size());
  const auto rows = run_scenario(cfg, &std::cerr);

  bool genie_bound = true, near_maxl = true;
  int soft_wins = 0, points = 0;
  std::string worst;
  for (const SweepRow& row : rows) {
    if (row.failed) {
      genie_bound = near_maxl = false;
      worst = fmt("training failed at %g dB", row.snr_db);
      break;
    }
    const auto& maxl = outcome(row, DecoderKind::maxl_middleton);
    const auto& genie = outcome(row, DecoderKind::genie_middleton);
    const auto& mind = outcome(row, DecoderKind::mind_supervised);
    ++points;
    soft_wins += mind.rates.ber < maxl.rates.ber ? 1 : 0;
    info("criterion 7: snr=%g ber genie=%.3e maxl=%.3e mind=%.3e (mind/maxl %.3f)", row.snr_db,
         genie.rates.ber, maxl.rates.ber, mind.rates.ber,
         maxl.rates.ber > 0 ? mind.rates.ber / maxl.rates.ber : 0.0);

    if (genie.rates.ber >
        mind.rates.ber + 3.0 * combined_se(genie.rates.ber_stderr, mind.rates.ber_stderr)) {
      genie_bound = false;
      worst = fmt("snr %g: genie ber %.3e above mind %.3e + 3sig", row.snr_db, genie.rates.ber,
                  mind.rates.ber);
    }
    if (genie.rates.ber >
        maxl.rates.ber + 3.0 * combined_se(genie.rates.ber_stderr, maxl.rates.ber_stderr)) {
      genie_bound = false;
      worst = fmt("snr %g: genie ber %.3e above maxl %.3e + 3sig", row.snr_db, genie.rates.ber,
                  maxl.rates.ber);
    }
    if (mind.rates.ber > 1.25 * maxl.rates.ber) {
      near_maxl = false;
      worst = fmt("snr %g: mind ber %.3e > 1.25 x maxl %.3e", row.snr_db, mind.rates.ber,
                  maxl.rates.ber);
    }
  }
  info("criterion 7: soft check (learned decoder strictly below MaxL-Middleton): %d/%d points "
       "(reported, not gated)",
       soft_wins, points);
  const bool pass = genie_bound && near_maxl;
  record(7, pass,
         pass ? "Middleton repetition: genie bound respected, within 1.25x MaxL-Middleton BER"
              : "Middleton repetition: " + worst);
}

// ---------------------------------------------------------------------------
// Criterion 8: estimator behaviour in the two degenerate limits.
// ---------------------------------------------------------------------------

void run_criterion_8() {
  const Codebook cb = build_pam4(0.05);
  Rng rng(kSeedLimits);

  // Noiseless limit: receptions coincide with codewords, posteriors are
  // one-hot after clamping, so MI must equal H(X)/n and Pe must vanish.
  const ChannelModel clean = ChannelModel::awgn(0.0);
  std::vector<PosteriorEstimate> posts;
  const int n_clean = 10000;
  for (int t = 0; t < n_clean; ++t) {
    const int idx = sample_message(cb, rng);
    const auto tr = transmit(clean, cb.codeword(idx), rng);
    std::vector<double> logits(static_cast<std::size_t>(cb.size()), 1e9);
    for (int i = 0; i < cb.size(); ++i) {
      if (cb.codeword(i)[0] == tr.y[0]) logits[static_cast<std::size_t>(i)] = 0.0;
    }
    posts.push_back(posterior_from_logits(logits, 700.0, true));
  }
  const RateEstimate clean_est = estimate_rates(posts, cb.n);
  const double mi_gap = std::fabs(clean_est.mi_bits_per_use - clean_est.hx_bits / cb.n);
  const bool clean_ok = mi_gap <= 1e-6 && clean_est.pe == 0.0;
  info("criterion 8: noiseless limit |mi - hx/n| = %.2e, pe = %.2e", mi_gap, clean_est.pe);

  // Pure-noise limit: the channel output ignores the input, so the learned
  // posterior must collapse to the prior.
  auto disc =
      SupervisedDiscriminator::create(cb, std::vector<int>{32, 32}, Activation::tanh,
                                      derive_seed(kSeedLimits, 1));
  TrainConfig tc;
  tc.epochs = 10;
  tc.samples_per_epoch = 5000;
  tc.batch_size = 10;
  tc.seed = derive_seed(kSeedLimits, 2);
  const TransmitFn pure_noise = [](std::span<const double> x, Rng& r) {
    std::vector<double> y(x.size());
    for (double& v : y) v = r.gaussian();
    return y;
  };
  train(disc, pure_noise, tc);

  const int n_noise = 20000;
  std::vector<PosteriorEstimate> noise_posts;
  int correct = 0;
  Rng eval_rng(derive_seed(kSeedLimits, 3));
  for (int t = 0; t < n_noise; ++t) {
    const int idx = sample_message(cb, eval_rng);
    const std::vector<double> y = pure_noise(cb.codeword(idx), eval_rng);
    const PosteriorEstimate post = posterior(disc, y, 30.0, true);
    correct += decode(post) == idx ? 1 : 0;
    noise_posts.push_back(post);
  }
  const RateEstimate noise_est = estimate_rates(noise_posts, cb.n);
  const double max_prior = 0.475;
  const double acc = static_cast<double>(correct) / n_noise;
  const double acc_se = std::sqrt(max_prior * (1.0 - max_prior) / n_noise);
  const double hxy_gap = std::fabs(noise_est.hxy_bits - noise_est.hx_bits);
  const bool noise_ok = std::fabs(acc - max_prior) <= 3.0 * acc_se && hxy_gap <= 0.1;
  info("criterion 8: pure-noise limit accuracy %.4f (max prior %.4f, 3sig %.4f), "
       "|hxy - hx| = %.4f",
       acc, max_prior, 3.0 * acc_se, hxy_gap);

  record(8, clean_ok && noise_ok,
         fmt("degenerate limits: noiseless mi gap %.1e / pe %.1e; pure-noise accuracy %.4f vs "
             "%.3f, |hxy-hx| %.3f",
             mi_gap, clean_est.pe, acc, max_prior, hxy_gap));
}

// ---------------------------------------------------------------------------
// Criterion 9: the sweep is deterministic down to the serialized bytes.
// ---------------------------------------------------------------------------

void run_criterion_9() {
  ExperimentConfig cfg = default_config(Scenario::nonuniform_4pam);
  cfg.snr_db_grid = {0.0, 6.0};
  cfg.eval_samples = 2000;
  cfg.train.epochs = 2;
  cfg.train.samples_per_epoch = 1000;
  cfg.seed = kSeedDeterminism;
  info("criterion 9: running the same sweep twice...");
  const std::string a = results_csv(cfg, run_scenario(cfg, nullptr));
  const std::string b = results_csv(cfg, run_scenario(cfg, nullptr));
  record(9, a == b,
         a == b ? fmt("identical configs give byte-identical CSV (%zu bytes)", a.size())
                : "CSV outputs differ between identical runs");
}

// ---------------------------------------------------------------------------
// Criterion 10: code-construction oracles, exhaustively.
// ---------------------------------------------------------------------------

std::vector<std::uint8_t> bits_of(const Codebook& cb, int i) {
  std::vector<std::uint8_t> bits;
  for (double s : cb.codeword(i)) bits.push_back(s < 0.0 ? 1 : 0);
  return bits;
}

int min_pairwise_distance(const Codebook& cb) {
  int best = cb.n + 1;
  for (int i = 0; i < cb.size(); ++i) {
    const auto bi = bits_of(cb, i);
    for (int j = i + 1; j < cb.size(); ++j) {
      const auto bj = bits_of(cb, j);
      int d = 0;
      for (std::size_t t = 0; t < bi.size(); ++t) d += bi[t] != bj[t];
      best = std::min(best, d);
    }
  }
  return best;
}

bool is_gf2_linear(const Codebook& cb) {
  std::set<std::vector<std::uint8_t>> words;
  for (int i = 0; i < cb.size(); ++i) words.insert(bits_of(cb, i));
  for (const auto& a : words) {
    for (const auto& b : words) {
      std::vector<std::uint8_t> x = a;
      for (std::size_t t = 0; t < x.size(); ++t) x[t] ^= b[t];
      if (!words.count(x)) return false;
    }
  }
  return true;
}

void run_criterion_10() {
  const Codebook hamming = build_hamming74();
  const Codebook conv = build_conv();
  const int d_h = min_pairwise_distance(hamming);
  const int d_c = min_pairwise_distance(conv);
  const bool lin_h = is_gf2_linear(hamming);
  const bool lin_c = is_gf2_linear(conv);
  const bool pass = d_h == 3 && d_c == 5 && lin_h && lin_c;
  record(10, pass,
         fmt("code constructions: Hamming(7,4) min distance %d, convolutional min distance %d, "
             "GF(2)-linear %s/%s",
             d_h, d_c, lin_h ? "yes" : "no", lin_c ? "yes" : "no"));
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  const auto run = [&](int id) { return wanted.empty() || wanted.count(id) > 0; };

  try {
    if (run(1)) run_criterion_1();
    if (run(2)) run_criterion_2();
    if (run(3)) run_criterion_3();
    if (run(4) || run(5)) run_criteria_4_and_5();
    if (run(6)) run_criterion_6();
    if (run(7)) run_criterion_7();
    if (run(8)) run_criterion_8();
    if (run(9)) run_criterion_9();
    if (run(10)) run_criterion_10();
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 99;
  }

  int failures = 0;
  for (const Gate& g : g_gates) {
    if (!wanted.empty() && !wanted.count(g.id)) continue;
    std::printf("[%s] criterion %d: %s\n", g.pass ? "PASS" : "FAIL", g.id, g.detail.c_str());
    failures += g.pass ? 0 : 1;
  }
  return failures;
}
