#include "mindsim/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mindsim {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

double parse_double(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value for '" + key + "': " + s);
  }
}

std::int64_t parse_int(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer value for '" + key + "': " + s);
  }
}

// Per-point seed streams. Keep the layout stable: it defines reproducibility
// of published sweeps.
enum SeedStream : std::uint64_t {
  kInitSupervised = 0,
  kTrainSupervised = 1,
  kInitUnsupervised = 2,
  kTrainUnsupervised = 3,
  kEval = 4,
  kStreamsPerPoint = 8,
};

std::uint64_t point_seed(const ExperimentConfig& cfg, std::size_t point, SeedStream stream) {
  return derive_seed(cfg.seed, point * kStreamsPerPoint + stream);
}

bool wants(const ExperimentConfig& cfg, DecoderKind k) {
  return std::find(cfg.decoders.begin(), cfg.decoders.end(), k) != cfg.decoders.end();
}

}  // namespace

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::nonuniform_4pam: return "nonuniform_4pam";
    case Scenario::nonlinear_4pam: return "nonlinear_4pam";
    case Scenario::middleton_repetition: return "middleton_repetition";
    case Scenario::middleton_hamming: return "middleton_hamming";
    case Scenario::middleton_conv: return "middleton_conv";
  }
  return "?";
}

Scenario scenario_from_string(const std::string& s) {
  for (Scenario sc : {Scenario::nonuniform_4pam, Scenario::nonlinear_4pam,
                      Scenario::middleton_repetition, Scenario::middleton_hamming,
                      Scenario::middleton_conv}) {
    if (to_string(sc) == s) return sc;
  }
  throw std::invalid_argument("unknown scenario: " + s);
}

void ExperimentConfig::validate() const {
  if (snr_db_grid.empty()) throw std::invalid_argument("config: snr_db_grid must be non-empty");
  for (std::size_t i = 1; i < snr_db_grid.size(); ++i) {
    if (!(snr_db_grid[i] > snr_db_grid[i - 1])) {
      throw std::invalid_argument("config: snr_db_grid must be strictly increasing");
    }
  }
  train.validate();
  if (hidden_sizes.empty()) throw std::invalid_argument("config: hidden_sizes must be non-empty");
  for (int h : hidden_sizes) {
    if (h < 1) throw std::invalid_argument("config: hidden sizes must be >= 1");
  }
  if (eval_samples < 1000) throw std::invalid_argument("config: eval_samples must be >= 1000");
  if (decoders.empty()) throw std::invalid_argument("config: decoders must be non-empty");

  const bool is_middleton = scenario == Scenario::middleton_repetition ||
                            scenario == Scenario::middleton_hamming ||
                            scenario == Scenario::middleton_conv;
  for (DecoderKind k : decoders) {
    if ((k == DecoderKind::maxl_middleton || k == DecoderKind::genie_middleton) && !is_middleton) {
      throw std::invalid_argument("config: " + mindsim::to_string(k) +
                                  " requires a middleton scenario");
    }
  }
  if (!(pam_p_low > 0.0 && pam_p_low < 1.0)) {
    throw std::invalid_argument("config: pam_p_low must be in (0,1)");
  }
  if (!(impulse_ratio >= 1.0)) throw std::invalid_argument("config: impulse_ratio must be >= 1");
  if (!(impulse_prob >= 0.0 && impulse_prob <= 1.0)) {
    throw std::invalid_argument("config: impulse_prob must be in [0,1]");
  }
}

ExperimentConfig default_config(Scenario s) {
  ExperimentConfig cfg;
  cfg.scenario = s;
  cfg.snr_db_grid = {0, 2, 4, 6, 8, 10, 12};
  switch (s) {
    case Scenario::nonuniform_4pam:
      cfg.decoders = {DecoderKind::map, DecoderKind::maxl_gaussian, DecoderKind::mind_supervised};
      cfg.pam_p_low = 0.05;
      break;
    case Scenario::nonlinear_4pam:
      cfg.decoders = {DecoderKind::maxl_gaussian, DecoderKind::maxl_gaussian_csi,
                      DecoderKind::mind_supervised};
      cfg.pam_p_low = 0.5;  // uniform source
      break;
    case Scenario::middleton_repetition:
      cfg.snr_db_grid = {0, 2, 4, 6};
      cfg.decoders = {DecoderKind::maxl_middleton, DecoderKind::genie_middleton,
                      DecoderKind::mind_supervised};
      break;
    case Scenario::middleton_hamming:
    case Scenario::middleton_conv:
      cfg.decoders = {DecoderKind::maxl_middleton, DecoderKind::genie_middleton,
                      DecoderKind::mind_supervised};
      break;
  }
  return cfg;
}

ExperimentConfig parse_config(const std::string& text) {
  // First pass: find the scenario so defaults can be scenario-aware.
  std::vector<std::pair<std::string, std::string>> entries;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) + " is not 'key = value'");
    }
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }

  Scenario scenario = Scenario::nonuniform_4pam;
  for (const auto& [key, value] : entries) {
    if (key == "scenario") scenario = scenario_from_string(value);
  }
  ExperimentConfig cfg = default_config(scenario);

  for (const auto& [key, value] : entries) {
    if (key == "scenario") {
      // already applied
    } else if (key == "snr_db_grid") {
      cfg.snr_db_grid.clear();
      for (const auto& part : split(value, ',')) cfg.snr_db_grid.push_back(parse_double(part, key));
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_int(value, key));
    } else if (key == "out") {
      cfg.out_path = value;
    } else if (key == "eval_samples") {
      cfg.eval_samples = parse_int(value, key);
    } else if (key == "decoders") {
      cfg.decoders.clear();
      for (const auto& part : split(value, ',')) cfg.decoders.push_back(decoder_from_string(part));
    } else if (key == "train_epochs") {
      cfg.train.epochs = static_cast<int>(parse_int(value, key));
    } else if (key == "train_batch_size") {
      cfg.train.batch_size = static_cast<int>(parse_int(value, key));
    } else if (key == "train_samples_per_epoch") {
      cfg.train.samples_per_epoch = static_cast<int>(parse_int(value, key));
    } else if (key == "train_learning_rate") {
      cfg.train.learning_rate = parse_double(value, key);
    } else if (key == "train_clamp") {
      cfg.train.logit_clamp = parse_double(value, key);
    } else if (key == "hidden_sizes") {
      cfg.hidden_sizes.clear();
      for (const auto& part : split(value, ',')) {
        cfg.hidden_sizes.push_back(static_cast<int>(parse_int(part, key)));
      }
    } else if (key == "activation") {
      cfg.activation = activation_from_string(value);
    } else if (key == "pam_p_low") {
      cfg.pam_p_low = parse_double(value, key);
    } else if (key == "impulse_ratio") {
      cfg.impulse_ratio = parse_double(value, key);
    } else if (key == "impulse_prob") {
      cfg.impulse_prob = parse_double(value, key);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string format_config(const ExperimentConfig& cfg) {
  std::string out;
  out += "scenario = " + to_string(cfg.scenario) + "\n";
  out += "snr_db_grid = ";
  for (std::size_t i = 0; i < cfg.snr_db_grid.size(); ++i) {
    if (i) out += ",";
    out += fmt17(cfg.snr_db_grid[i]);
  }
  out += "\nseed = " + std::to_string(cfg.seed) + "\n";
  if (!cfg.out_path.empty()) out += "out = " + cfg.out_path + "\n";
  out += "eval_samples = " + std::to_string(cfg.eval_samples) + "\n";
  out += "decoders = ";
  for (std::size_t i = 0; i < cfg.decoders.size(); ++i) {
    if (i) out += ",";
    out += to_string(cfg.decoders[i]);
  }
  out += "\ntrain_epochs = " + std::to_string(cfg.train.epochs) + "\n";
  out += "train_batch_size = " + std::to_string(cfg.train.batch_size) + "\n";
  out += "train_samples_per_epoch = " + std::to_string(cfg.train.samples_per_epoch) + "\n";
  out += "train_learning_rate = " + fmt17(cfg.train.learning_rate) + "\n";
  out += "train_clamp = " + fmt17(cfg.train.logit_clamp) + "\n";
  out += "hidden_sizes = ";
  for (std::size_t i = 0; i < cfg.hidden_sizes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cfg.hidden_sizes[i]);
  }
  out += "\nactivation = " + to_string(cfg.activation) + "\n";
  out += "pam_p_low = " + fmt17(cfg.pam_p_low) + "\n";
  out += "impulse_ratio = " + fmt17(cfg.impulse_ratio) + "\n";
  out += "impulse_prob = " + fmt17(cfg.impulse_prob) + "\n";
  return out;
}

Codebook make_codebook(const ExperimentConfig& cfg) {
  switch (cfg.scenario) {
    case Scenario::nonuniform_4pam:
    case Scenario::nonlinear_4pam:
      return build_pam4(cfg.pam_p_low);
    case Scenario::middleton_repetition:
      return build_repetition(5);
    case Scenario::middleton_hamming:
      return build_hamming74();
    case Scenario::middleton_conv:
      return build_conv();
  }
  throw std::logic_error("make_codebook: unhandled scenario");
}

ChannelModel make_channel(const ExperimentConfig& cfg, double sigma_b) {
  switch (cfg.scenario) {
    case Scenario::nonuniform_4pam:
      return ChannelModel::awgn(sigma_b);
    case Scenario::nonlinear_4pam:
      return ChannelModel::nonlinear_awgn(sigma_b);
    case Scenario::middleton_repetition:
    case Scenario::middleton_hamming:
    case Scenario::middleton_conv:
      return ChannelModel::middleton(sigma_b, cfg.impulse_ratio, cfg.impulse_prob);
  }
  throw std::logic_error("make_channel: unhandled scenario");
}

double symbol_energy(const Codebook& cb, ChannelKind kind) {
  double energy = 0.0;
  for (int i = 0; i < cb.size(); ++i) {
    const auto word = cb.codeword(i);
    double mean_sq = 0.0;
    for (double s : word) {
      const double mapped = channel_map(kind, s);
      mean_sq += mapped * mapped;
    }
    energy += cb.prior[static_cast<std::size_t>(i)] * mean_sq / cb.n;
  }
  return energy;
}

ErrorRates ber_from_blocks(std::span<const int> truth, std::span<const int> decoded,
                           const Codebook& cb) {
  if (truth.size() != decoded.size()) {
    throw std::invalid_argument("ber_from_blocks: length mismatch");
  }
  if (truth.empty()) throw std::invalid_argument("ber_from_blocks: empty input");

  std::int64_t symbol_errors = 0;
  std::int64_t bit_errors = 0;
  for (std::size_t j = 0; j < truth.size(); ++j) {
    if (truth[j] == decoded[j]) continue;
    ++symbol_errors;
    const auto a = cb.labels(truth[j]);
    const auto b = cb.labels(decoded[j]);
    for (int bi = 0; bi < cb.k; ++bi) {
      bit_errors += a[static_cast<std::size_t>(bi)] != b[static_cast<std::size_t>(bi)];
    }
  }

  const double n_blocks = static_cast<double>(truth.size());
  const double n_bits = n_blocks * cb.k;
  ErrorRates rates;
  rates.ser = static_cast<double>(symbol_errors) / n_blocks;
  rates.ber = static_cast<double>(bit_errors) / n_bits;
  rates.ser_stderr = std::sqrt(rates.ser * (1.0 - rates.ser) / n_blocks);
  rates.ber_stderr = std::sqrt(rates.ber * (1.0 - rates.ber) / n_bits);
  return rates;
}

std::vector<SweepRow> run_scenario(const ExperimentConfig& cfg, std::ostream* progress) {
  cfg.validate();
  const Codebook cb = make_codebook(cfg);
  const ChannelModel proto = make_channel(cfg, 1.0);
  const double e_s = symbol_energy(cb, proto.kind);

  const bool run_sup = wants(cfg, DecoderKind::mind_supervised);
  const bool run_unsup = wants(cfg, DecoderKind::mind_unsupervised);

  std::vector<SweepRow> rows;
  rows.reserve(cfg.snr_db_grid.size());
  for (std::size_t pi = 0; pi < cfg.snr_db_grid.size(); ++pi) {
    const double snr_db = cfg.snr_db_grid[pi];
    const double sigma_b =
        sigma_for_snr(snr_db, e_s, proto.kind, cfg.impulse_ratio, cfg.impulse_prob);
    const ChannelModel ch = make_channel(cfg, sigma_b);

    SweepRow row;
    row.snr_db = snr_db;
    row.sigma_b = sigma_b;
    const auto t0 = std::chrono::steady_clock::now();

    SupervisedDiscriminator sup;
    UnsupervisedDiscriminator unsup;
    try {
      TrainConfig tc = cfg.train;
      if (run_sup) {
        sup = SupervisedDiscriminator::create(cb, cfg.hidden_sizes, cfg.activation,
                                              point_seed(cfg, pi, kInitSupervised));
        tc.seed = point_seed(cfg, pi, kTrainSupervised);
        const TrainTrace trace = train(sup, ch, tc);
        row.train_loss_final = trace.epoch_loss.back();
      }
      if (run_unsup) {
        unsup = UnsupervisedDiscriminator::create(cb, cfg.hidden_sizes, cfg.activation,
                                                  point_seed(cfg, pi, kInitUnsupervised));
        tc.seed = point_seed(cfg, pi, kTrainUnsupervised);
        const TrainTrace trace = train(unsup, ch, tc);
        if (!run_sup) row.train_loss_final = trace.epoch_loss.back();
      }
    } catch (const std::runtime_error& err) {
      row.failed = true;
      row.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      for (DecoderKind k : cfg.decoders) row.decoders.push_back({k, {}, std::nullopt});
      rows.push_back(std::move(row));
      if (progress) {
        *progress << "[sweep] point " << pi + 1 << "/" << cfg.snr_db_grid.size() << " snr_db="
                  << snr_db << " FAILED: " << err.what() << "\n";
      }
      continue;
    }

    // Fresh evaluation stream; every decoder sees the same receptions.
    Rng rng(point_seed(cfg, pi, kEval));
    std::vector<int> truth(static_cast<std::size_t>(cfg.eval_samples));
    std::vector<std::vector<int>> decoded(cfg.decoders.size(),
                                          std::vector<int>(static_cast<std::size_t>(cfg.eval_samples)));
    std::vector<PosteriorEstimate> sup_posteriors, unsup_posteriors;
    if (run_sup) sup_posteriors.reserve(static_cast<std::size_t>(cfg.eval_samples));
    if (run_unsup) unsup_posteriors.reserve(static_cast<std::size_t>(cfg.eval_samples));

    const ChannelModel assumed_gaussian = ChannelModel::awgn(sigma_b);
    const ChannelModel assumed_csi =
        ch.kind == ChannelKind::nonlinear_awgn ? ChannelModel::nonlinear_awgn(sigma_b)
                                               : ChannelModel::awgn(sigma_b);

    for (std::int64_t j = 0; j < cfg.eval_samples; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      const int idx = sample_message(cb, rng);
      truth[ju] = idx;
      const TransmitResult tr = transmit(ch, cb.codeword(idx), rng);
      const std::span<const double> y(tr.y);

      for (std::size_t d = 0; d < cfg.decoders.size(); ++d) {
        int dec = 0;
        switch (cfg.decoders[d]) {
          case DecoderKind::map:
            dec = map_decode(cb, ch, y);
            break;
          case DecoderKind::maxl_gaussian:
            dec = maxl_decode(cb, assumed_gaussian, y);
            break;
          case DecoderKind::maxl_gaussian_csi:
            dec = maxl_decode(cb, assumed_csi, y);
            break;
          case DecoderKind::maxl_middleton:
            dec = maxl_decode(cb, ch, y);
            break;
          case DecoderKind::genie_middleton:
            dec = genie_decode(cb, ch, y, tr.side);
            break;
          case DecoderKind::mind_supervised: {
            PosteriorEstimate post = posterior(sup, y, cfg.train.logit_clamp, true);
            dec = decode(post);
            sup_posteriors.push_back(std::move(post));
            break;
          }
          case DecoderKind::mind_unsupervised: {
            PosteriorEstimate post = posterior(unsup, y, cfg.train.logit_clamp, true);
            dec = decode(post);
            unsup_posteriors.push_back(std::move(post));
            break;
          }
        }
        decoded[d][ju] = dec;
      }
    }

    for (std::size_t d = 0; d < cfg.decoders.size(); ++d) {
      DecoderOutcome outcome;
      outcome.kind = cfg.decoders[d];
      outcome.rates = ber_from_blocks(truth, decoded[d], cb);
      if (outcome.kind == DecoderKind::mind_supervised) {
        outcome.rate_estimate = estimate_rates(sup_posteriors, cb.n);
      } else if (outcome.kind == DecoderKind::mind_unsupervised) {
        outcome.rate_estimate = estimate_rates(unsup_posteriors, cb.n);
      }
      row.decoders.push_back(std::move(outcome));
    }

    row.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress) {
      *progress << "[sweep] point " << pi + 1 << "/" << cfg.snr_db_grid.size()
                << " snr_db=" << snr_db << " sigma_b=" << sigma_b << " wall_s=" << row.wall_time_s
                << "\n";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string results_csv(const ExperimentConfig& cfg, std::span<const SweepRow> rows) {
  const std::int64_t steps =
      (cfg.train.samples_per_epoch + cfg.train.batch_size - 1) / cfg.train.batch_size;
  const bool trains_mind =
      wants(cfg, DecoderKind::mind_supervised) || wants(cfg, DecoderKind::mind_unsupervised);
  const std::int64_t n_train =
      trains_mind ? static_cast<std::int64_t>(cfg.train.epochs) * steps * cfg.train.batch_size : 0;

  std::string csv =
      "scenario,snr_db,decoder,ser,ser_stderr,ber,ber_stderr,pe_est,hx,hxy,mi_per_use,n_train,"
      "n_eval,seed\n";
  for (const SweepRow& row : rows) {
    for (const DecoderOutcome& out : row.decoders) {
      csv += to_string(cfg.scenario) + "," + fmt17(row.snr_db) + "," + to_string(out.kind) + ",";
      if (!row.failed) {
        csv += fmt17(out.rates.ser) + "," + fmt17(out.rates.ser_stderr) + "," +
               fmt17(out.rates.ber) + "," + fmt17(out.rates.ber_stderr) + ",";
        if (out.rate_estimate) {
          const RateEstimate& re = *out.rate_estimate;
          csv += fmt17(re.pe) + "," + fmt17(re.hx_bits) + "," + fmt17(re.hxy_bits) + "," +
                 fmt17(re.mi_bits_per_use) + ",";
        } else {
          csv += ",,,,";
        }
      } else {
        csv += ",,,,,,,,";  // ser..mi left empty for failed rows
      }
      csv += std::to_string(n_train) + "," + std::to_string(cfg.eval_samples) + "," +
             std::to_string(cfg.seed) + "\n";
    }
  }
  return csv;
}

void save_results(const std::string& path, const ExperimentConfig& cfg,
                  std::span<const SweepRow> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << results_csv(cfg, rows);
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

void save_checkpoint_impl(const std::string& path, const Network& net, std::uint64_t fp,
                          const char* kind) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open checkpoint file: " + path);
  char fp_hex[32];
  std::snprintf(fp_hex, sizeof fp_hex, "%016llx", static_cast<unsigned long long>(fp));
  out << "format mindsim-ckpt-1\n"
      << "kind " << kind << "\n"
      << "codebook_fp " << fp_hex << "\n";
  save_network(out, net);
  if (!out) throw std::runtime_error("write failed: " + path);
}

struct CheckpointHeader {
  std::string kind;
  std::uint64_t fp = 0;
};

CheckpointHeader read_checkpoint_header(std::istream& in, const std::string& path) {
  std::string word;
  if (!(in >> word) || word != "format") throw std::runtime_error(path + ": not a checkpoint file");
  if (!(in >> word) || word != "mindsim-ckpt-1") {
    throw std::runtime_error(path + ": unsupported checkpoint version '" + word + "'");
  }
  CheckpointHeader hdr;
  if (!(in >> word) || word != "kind" || !(in >> hdr.kind)) {
    throw std::runtime_error(path + ": missing discriminator kind");
  }
  std::string fp_hex;
  if (!(in >> word) || word != "codebook_fp" || !(in >> fp_hex)) {
    throw std::runtime_error(path + ": missing codebook fingerprint");
  }
  hdr.fp = std::stoull(fp_hex, nullptr, 16);
  return hdr;
}

Network load_checkpoint_net(const std::string& path, const Codebook& cb,
                            const std::string& expect_kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open checkpoint file: " + path);
  const CheckpointHeader hdr = read_checkpoint_header(in, path);
  if (hdr.kind != expect_kind) {
    throw std::runtime_error(path + ": checkpoint kind is '" + hdr.kind + "', expected '" +
                             expect_kind + "'");
  }
  if (hdr.fp != fingerprint(cb)) {
    throw std::runtime_error(path + ": codebook fingerprint mismatch; refusing to decode");
  }
  return load_network(in);
}

}  // namespace

void save_checkpoint(const std::string& path, const SupervisedDiscriminator& disc) {
  save_checkpoint_impl(path, disc.net, fingerprint(disc.codebook), "supervised");
}

void save_checkpoint(const std::string& path, const UnsupervisedDiscriminator& disc) {
  save_checkpoint_impl(path, disc.net, fingerprint(disc.codebook), "unsupervised");
}

SupervisedDiscriminator load_supervised_checkpoint(const std::string& path, const Codebook& cb) {
  SupervisedDiscriminator disc;
  disc.codebook = cb;
  disc.net = load_checkpoint_net(path, cb, "supervised");
  if (disc.net.spec.input_dim() != cb.n || disc.net.spec.output_dim() != cb.size()) {
    throw std::runtime_error(path + ": network dimensions do not match codebook");
  }
  return disc;
}

UnsupervisedDiscriminator load_unsupervised_checkpoint(const std::string& path, const Codebook& cb) {
  UnsupervisedDiscriminator disc;
  disc.codebook = cb;
  disc.net = load_checkpoint_net(path, cb, "unsupervised");
  if (disc.net.spec.input_dim() != 2 * cb.n || disc.net.spec.output_dim() != 1) {
    throw std::runtime_error(path + ": network dimensions do not match codebook");
  }
  return disc;
}

std::string checkpoint_kind(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open checkpoint file: " + path);
  return read_checkpoint_header(in, path).kind;
}

}  // namespace mindsim
