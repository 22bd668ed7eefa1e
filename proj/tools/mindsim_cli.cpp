// Command-line front end: train discriminators, sweep SNR grids, estimate
// information rates from a checkpoint, and inspect codebooks.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mindsim/harness.hpp"

namespace {

using namespace mindsim;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct CommonOpts {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> snr_db;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_snr, bool with_out) {
  cmd->add_option("--config", opts.config_path, "flat key=value config file");
  cmd->add_option("--seed", opts.seed, "master seed (overrides config)");
  if (with_snr) cmd->add_option("--snr-db", opts.snr_db, "operating SNR in dB");
  if (with_out) cmd->add_option("--out", opts.out_path, "output file path");
}

ExperimentConfig resolve_config(const CommonOpts& opts) {
  ExperimentConfig cfg = opts.config_path.empty() ? default_config(Scenario::nonuniform_4pam)
                                                  : load_config(opts.config_path);
  if (opts.seed) cfg.seed = *opts.seed;
  if (!opts.out_path.empty()) cfg.out_path = opts.out_path;
  return cfg;
}

double resolve_snr(const CommonOpts& opts, const ExperimentConfig& cfg) {
  return opts.snr_db ? *opts.snr_db : cfg.snr_db_grid.front();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

int cmd_train(const CommonOpts& opts) {
  ExperimentConfig cfg = resolve_config(opts);
  if (cfg.out_path.empty()) throw std::runtime_error("train: --out checkpoint path is required");
  const double snr_db = resolve_snr(opts, cfg);

  const Codebook cb = make_codebook(cfg);
  const ChannelModel proto = make_channel(cfg, 1.0);
  const double sigma_b =
      sigma_for_snr(snr_db, symbol_energy(cb, proto.kind), proto.kind, cfg.impulse_ratio,
                    cfg.impulse_prob);
  const ChannelModel ch = make_channel(cfg, sigma_b);

  bool unsupervised = false;
  for (DecoderKind k : cfg.decoders) {
    if (k == DecoderKind::mind_supervised) {
      unsupervised = false;
      break;
    }
    if (k == DecoderKind::mind_unsupervised) unsupervised = true;
  }

  TrainConfig tc = cfg.train;
  tc.seed = derive_seed(cfg.seed, 1);
  std::cerr << "[train] scenario=" << to_string(cfg.scenario) << " snr_db=" << snr_db
            << " sigma_b=" << sigma_b << " kind=" << (unsupervised ? "unsupervised" : "supervised")
            << "\n";
  if (unsupervised) {
    auto disc = UnsupervisedDiscriminator::create(cb, cfg.hidden_sizes, cfg.activation,
                                                  derive_seed(cfg.seed, 0));
    const TrainTrace trace = train(disc, ch, tc);
    for (std::size_t e = 0; e < trace.epoch_loss.size(); ++e) {
      std::cerr << "[train] epoch " << e + 1 << " loss=" << trace.epoch_loss[e] << "\n";
    }
    save_checkpoint(cfg.out_path, disc);
  } else {
    auto disc = SupervisedDiscriminator::create(cb, cfg.hidden_sizes, cfg.activation,
                                                derive_seed(cfg.seed, 0));
    const TrainTrace trace = train(disc, ch, tc);
    for (std::size_t e = 0; e < trace.epoch_loss.size(); ++e) {
      std::cerr << "[train] epoch " << e + 1 << " loss=" << trace.epoch_loss[e] << "\n";
    }
    save_checkpoint(cfg.out_path, disc);
  }
  std::cerr << "[train] checkpoint written to " << cfg.out_path << "\n";
  return 0;
}

int cmd_sweep(const CommonOpts& opts) {
  ExperimentConfig cfg = resolve_config(opts);
  const auto rows = run_scenario(cfg, &std::cerr);
  write_text(cfg.out_path, results_csv(cfg, rows));
  if (!cfg.out_path.empty()) std::cerr << "[sweep] results written to " << cfg.out_path << "\n";
  return 0;
}

int cmd_estimate(const CommonOpts& opts, const std::string& ckpt_path) {
  ExperimentConfig cfg = resolve_config(opts);
  const double snr_db = resolve_snr(opts, cfg);
  const Codebook cb = make_codebook(cfg);
  const ChannelModel proto = make_channel(cfg, 1.0);
  const double sigma_b =
      sigma_for_snr(snr_db, symbol_energy(cb, proto.kind), proto.kind, cfg.impulse_ratio,
                    cfg.impulse_prob);
  const ChannelModel ch = make_channel(cfg, sigma_b);

  const std::string kind = checkpoint_kind(ckpt_path);
  SupervisedDiscriminator sup;
  UnsupervisedDiscriminator unsup;
  if (kind == "supervised") {
    sup = load_supervised_checkpoint(ckpt_path, cb);
  } else if (kind == "unsupervised") {
    unsup = load_unsupervised_checkpoint(ckpt_path, cb);
  } else {
    throw std::runtime_error(ckpt_path + ": unknown discriminator kind '" + kind + "'");
  }

  Rng rng(derive_seed(cfg.seed, 4));
  std::vector<PosteriorEstimate> posteriors;
  posteriors.reserve(static_cast<std::size_t>(cfg.eval_samples));
  std::int64_t symbol_errors = 0;
  for (std::int64_t j = 0; j < cfg.eval_samples; ++j) {
    const int idx = sample_message(cb, rng);
    const TransmitResult tr = transmit(ch, cb.codeword(idx), rng);
    PosteriorEstimate post = kind == "supervised"
                                 ? posterior(sup, tr.y, cfg.train.logit_clamp, true)
                                 : posterior(unsup, tr.y, cfg.train.logit_clamp, true);
    symbol_errors += decode(post) != idx;
    posteriors.push_back(std::move(post));
  }
  const RateEstimate est = estimate_rates(posteriors, cb.n);
  const double ser = static_cast<double>(symbol_errors) / static_cast<double>(cfg.eval_samples);

  std::string report;
  report += "snr_db = " + fmt17(snr_db) + "\n";
  report += "sigma_b = " + fmt17(sigma_b) + "\n";
  report += "hx_bits = " + fmt17(est.hx_bits) + "\n";
  report += "hx_stderr = " + fmt17(est.hx_stderr) + "\n";
  report += "hxy_bits = " + fmt17(est.hxy_bits) + "\n";
  report += "hxy_stderr = " + fmt17(est.hxy_stderr) + "\n";
  report += "mi_bits_per_use = " + fmt17(est.mi_bits_per_use) + "\n";
  report += "mi_stderr = " + fmt17(est.mi_stderr) + "\n";
  report += "pe = " + fmt17(est.pe) + "\n";
  report += "pe_stderr = " + fmt17(est.pe_stderr) + "\n";
  report += "ser = " + fmt17(ser) + "\n";
  report += "n_samples = " + std::to_string(est.n_samples) + "\n";
  write_text(opts.out_path, report);
  return 0;
}

int cmd_dump_codebook(const CommonOpts& opts) {
  const ExperimentConfig cfg = resolve_config(opts);
  // out_path was folded into cfg by resolve_config; write to stdout unless set.
  write_text(cfg.out_path, format_codebook(make_codebook(cfg)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"channel decoding via learned a-posteriori information"};
  app.require_subcommand(1);

  CommonOpts train_opts, sweep_opts, est_opts, dump_opts;
  std::string ckpt_path;

  CLI::App* train_cmd =
      app.add_subcommand("train", "train a discriminator at one SNR point and save a checkpoint");
  add_common(train_cmd, train_opts, true, true);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "run a full SNR sweep and write decoder metrics as CSV");
  add_common(sweep_cmd, sweep_opts, false, true);

  CLI::App* est_cmd = app.add_subcommand(
      "estimate", "estimate entropy, mutual information, and error probability from a checkpoint");
  est_cmd->add_option("checkpoint", ckpt_path, "checkpoint file")->required();
  add_common(est_cmd, est_opts, true, true);

  CLI::App* dump_cmd = app.add_subcommand("dump-codebook", "print the scenario codebook");
  add_common(dump_cmd, dump_opts, false, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (train_cmd->parsed()) return cmd_train(train_opts);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opts);
    if (est_cmd->parsed()) return cmd_estimate(est_opts, ckpt_path);
    if (dump_cmd->parsed()) return cmd_dump_codebook(dump_opts);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
