#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mindsim/baselines.hpp"
#include "mindsim/estimators.hpp"
#include "mindsim/mind.hpp"

namespace mindsim {

enum class Scenario {
  nonuniform_4pam,
  nonlinear_4pam,
  middleton_repetition,
  middleton_hamming,
  middleton_conv,
};

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& s);

struct ExperimentConfig {
  Scenario scenario = Scenario::nonuniform_4pam;
  std::vector<double> snr_db_grid;       // strictly increasing, non-empty
  TrainConfig train;
  std::vector<int> hidden_sizes{64, 64, 64};
  Activation activation = Activation::tanh;
  std::int64_t eval_samples = 100000;    // >= 1000
  std::vector<DecoderKind> decoders;
  std::uint64_t seed = 1;
  std::string out_path;

  // Scenario parameters.
  double pam_p_low = 0.05;    // 4-PAM inner-symbol prior mass P
  double impulse_ratio = 5.0; // Middleton B
  double impulse_prob = 0.05; // Middleton P

  void validate() const;
};

// Scenario defaults: the matching reference-decoder list and SNR grid
// 0..12 dB in 2 dB steps (repetition scenario: 0..6 dB).
ExperimentConfig default_config(Scenario s);

// Flat key-value text (lines of "key = value", '#' comments). Unknown keys
// are an error. See README for the key list.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string format_config(const ExperimentConfig& cfg);

Codebook make_codebook(const ExperimentConfig& cfg);
ChannelModel make_channel(const ExperimentConfig& cfg, double sigma_b);

// Prior-weighted mean square of the channel symbols, after the deterministic
// channel map. Feeds sigma_for_snr.
double symbol_energy(const Codebook& cb, ChannelKind kind);

struct ErrorRates {
  double ser = 0.0;
  double ser_stderr = 0.0;
  double ber = 0.0;
  double ber_stderr = 0.0;
};

// SER = fraction of index mismatches; BER = fraction of differing info bits
// via the codebook labels; binomial standard errors.
ErrorRates ber_from_blocks(std::span<const int> truth, std::span<const int> decoded,
                           const Codebook& cb);

struct DecoderOutcome {
  DecoderKind kind = DecoderKind::map;
  ErrorRates rates;
  std::optional<RateEstimate> rate_estimate;  // MIND decoders only
};

struct SweepRow {
  double snr_db = 0.0;
  double sigma_b = 0.0;
  std::vector<DecoderOutcome> decoders;
  double train_loss_final = 0.0;
  double wall_time_s = 0.0;
  bool failed = false;  // training diverged; metric fields left empty on save
};

// Per SNR point: derive sigma_b, train fresh MIND discriminators with seeds
// derived from (seed, point index), evaluate every requested decoder on a
// fresh evaluation stream, estimate rates from the MIND posteriors.
// Fully deterministic under a fixed config. Progress goes to `progress`
// (pass nullptr to silence); results are ordered by grid position.
std::vector<SweepRow> run_scenario(const ExperimentConfig& cfg, std::ostream* progress = nullptr);

// CSV with fixed columns: scenario, snr_db, decoder, ser, ser_stderr, ber,
// ber_stderr, pe_est, hx, hxy, mi_per_use, n_train, n_eval, seed.
// Floats carry 17 significant digits so a reload parses identical values.
std::string results_csv(const ExperimentConfig& cfg, std::span<const SweepRow> rows);
void save_results(const std::string& path, const ExperimentConfig& cfg,
                  std::span<const SweepRow> rows);

// Discriminator checkpoints: network checkpoint plus a codebook fingerprint;
// loading refuses a mismatched codebook.
void save_checkpoint(const std::string& path, const SupervisedDiscriminator& disc);
void save_checkpoint(const std::string& path, const UnsupervisedDiscriminator& disc);
SupervisedDiscriminator load_supervised_checkpoint(const std::string& path, const Codebook& cb);
UnsupervisedDiscriminator load_unsupervised_checkpoint(const std::string& path, const Codebook& cb);

// "supervised" or "unsupervised" without loading the network body.
std::string checkpoint_kind(const std::string& path);

}  // namespace mindsim
