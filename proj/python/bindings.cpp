// Python bindings for the mindsim core library.
//
// The module mirrors the C++ API closely: codebooks, channel models, the
// trainable discriminators with their posterior/decode operations, the
// analytic reference decoders, rate estimation, and the sweep harness with
// its config/CSV/checkpoint formats. Long-running calls release the GIL.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "mindsim/baselines.hpp"
#include "mindsim/channels.hpp"
#include "mindsim/coding.hpp"
#include "mindsim/estimators.hpp"
#include "mindsim/harness.hpp"
#include "mindsim/mind.hpp"
#include "mindsim/neuralnet.hpp"
#include "mindsim/rng.hpp"

namespace py = pybind11;
using namespace mindsim;

PYBIND11_MODULE(_mindsim, m) {
  m.doc() =
      "Neural a-posteriori-information decoding: trainable discriminators, "
      "simulated channels, analytic reference decoders, and rate estimators.";

  // ---------------------------------------------------------------- rng ----
  py::class_<Rng>(m, "Rng", "Deterministic random source; identical seeds give identical draws.")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", static_cast<double (Rng::*)()>(&Rng::uniform))
      .def("gaussian", &Rng::gaussian)
      .def("bernoulli", &Rng::bernoulli, py::arg("p"));

  m.def("splitmix64", &splitmix64, py::arg("x"));
  m.def("derive_seed", &derive_seed, py::arg("base"), py::arg("stream"),
        "Seed for an independent substream of a base seed.");

  // ------------------------------------------------------------- coding ----
  py::class_<Codebook>(m, "Codebook",
                       "Modulated codewords with their prior pmf and message label bits.")
      .def_readonly("k", &Codebook::k)
      .def_readonly("n", &Codebook::n)
      .def_readonly("symbols", &Codebook::symbols)
      .def_readonly("prior", &Codebook::prior)
      .def_readonly("label_bits", &Codebook::label_bits)
      .def_property_readonly("size", &Codebook::size)
      .def_property_readonly("rate", &Codebook::rate)
      .def("codeword",
           [](const Codebook& cb, int i) {
             if (i < 0 || i >= cb.size()) throw std::out_of_range("codeword index");
             auto s = cb.codeword(i);
             return std::vector<double>(s.begin(), s.end());
           },
           py::arg("i"))
      .def("labels",
           [](const Codebook& cb, int i) {
             if (i < 0 || i >= cb.size()) throw std::out_of_range("codeword index");
             auto s = cb.labels(i);
             return std::vector<int>(s.begin(), s.end());
           },
           py::arg("i"))
      .def("validate", &Codebook::validate)
      .def("__len__", &Codebook::size)
      .def("__repr__", [](const Codebook& cb) {
        std::ostringstream os;
        os << "Codebook(k=" << cb.k << ", n=" << cb.n << ", M=" << cb.size() << ")";
        return os.str();
      });

  m.def("build_pam4", &build_pam4, py::arg("p_low"),
        "4-PAM symbols {-3,-1,1,3} with prior [(1-P)/2, P/2, (1-P)/2, P/2].");
  m.def("build_repetition", &build_repetition, py::arg("length"),
        "Odd-length binary repetition code, BPSK-modulated, uniform prior.");
  m.def("build_hamming74", &build_hamming74, "Systematic (7,4) Hamming code, BPSK-modulated.");
  m.def("build_conv", [] { return build_conv(); },
        "Rate-1/2 terminated convolutional code with (7,5) octal generators.");
  m.def("sample_message", &sample_message, py::arg("codebook"), py::arg("rng"),
        "Codeword index drawn from the codebook prior.");
  m.def("fingerprint", &fingerprint, py::arg("codebook"));
  m.def("format_codebook", &format_codebook, py::arg("codebook"),
        "Diagnostic text table, one row per codeword.");

  // ----------------------------------------------------------- channels ----
  py::enum_<ChannelKind>(m, "ChannelKind")
      .value("awgn", ChannelKind::awgn)
      .value("nonlinear_awgn", ChannelKind::nonlinear_awgn)
      .value("middleton", ChannelKind::middleton);

  py::class_<GenieSideInfo>(m, "GenieSideInfo",
                            "Per-sample impulse outcomes realized during Middleton transmission.")
      .def_readonly("impulse", &GenieSideInfo::impulse)
      .def("empty", &GenieSideInfo::empty);

  py::class_<TransmitResult>(m, "TransmitResult")
      .def_readonly("y", &TransmitResult::y)
      .def_readonly("side", &TransmitResult::side);

  py::class_<ChannelModel>(m, "ChannelModel",
                           "Stochastic channel y = H(x, n); construct via the static factories.")
      .def_readonly("kind", &ChannelModel::kind)
      .def_readonly("noise_sigma_b", &ChannelModel::noise_sigma_b)
      .def_readonly("impulse_ratio", &ChannelModel::impulse_ratio)
      .def_readonly("impulse_prob", &ChannelModel::impulse_prob)
      .def_static("awgn", &ChannelModel::awgn, py::arg("sigma_b"))
      .def_static("nonlinear_awgn", &ChannelModel::nonlinear_awgn, py::arg("sigma_b"))
      .def_static("middleton", &ChannelModel::middleton, py::arg("sigma_b"),
                  py::arg("impulse_ratio"), py::arg("impulse_prob"))
      .def("validate", &ChannelModel::validate);

  m.def("channel_map", &channel_map, py::arg("kind"), py::arg("x"),
        "Deterministic pre-noise map (identity except the nonlinear sign(x)*sqrt|x|).");
  m.def("transmit",
        [](const ChannelModel& ch, const std::vector<double>& x, Rng& rng) {
          return transmit(ch, x, rng);
        },
        py::arg("channel"), py::arg("x"), py::arg("rng"));
  m.def("log_likelihood",
        [](const ChannelModel& ch, const std::vector<double>& y, const std::vector<double>& x) {
          return log_likelihood(ch, y, x);
        },
        py::arg("channel"), py::arg("y"), py::arg("x"),
        "Natural-log density of y given transmitted codeword x.");
  m.def("noise_variance", &noise_variance, py::arg("channel"),
        "Total average noise variance E[n^2].");
  m.def("sigma_for_snr", &sigma_for_snr, py::arg("snr_db"), py::arg("symbol_energy"),
        py::arg("kind"), py::arg("impulse_ratio") = 1.0, py::arg("impulse_prob") = 0.0,
        "Solves E_s / E[n^2] = 10^(snr_db/10) for sigma_b.");

  // ---------------------------------------------------------- baselines ----
  py::enum_<DecoderKind>(m, "DecoderKind")
      .value("map", DecoderKind::map)
      .value("maxl_gaussian", DecoderKind::maxl_gaussian)
      .value("maxl_gaussian_csi", DecoderKind::maxl_gaussian_csi)
      .value("maxl_middleton", DecoderKind::maxl_middleton)
      .value("genie_middleton", DecoderKind::genie_middleton)
      .value("mind_supervised", DecoderKind::mind_supervised)
      .value("mind_unsupervised", DecoderKind::mind_unsupervised);

  m.def("map_decode",
        [](const Codebook& cb, const ChannelModel& ch, const std::vector<double>& y) {
          return map_decode(cb, ch, y);
        },
        py::arg("codebook"), py::arg("channel"), py::arg("y"),
        "Exhaustive maximum a-posteriori decoding under the true channel.");
  m.def("maxl_decode",
        [](const Codebook& cb, const ChannelModel& assumed, const std::vector<double>& y) {
          return maxl_decode(cb, assumed, y);
        },
        py::arg("codebook"), py::arg("assumed_channel"), py::arg("y"),
        "Maximum likelihood under an assumed channel (uniform source).");
  m.def("genie_decode",
        [](const Codebook& cb, const ChannelModel& ch, const std::vector<double>& y,
           const GenieSideInfo& side) { return genie_decode(cb, ch, y, side); },
        py::arg("codebook"), py::arg("channel"), py::arg("y"), py::arg("side"),
        "Middleton bound decoder that knows each sample's impulse outcome.");
  m.def("bayes_posterior",
        [](const Codebook& cb, const ChannelModel& ch, const std::vector<double>& y) {
          return bayes_posterior(cb, ch, y);
        },
        py::arg("codebook"), py::arg("channel"), py::arg("y"),
        "Exact normalized a-posteriori pmf under a known channel.");

  // ---------------------------------------------------------- neuralnet ----
  py::enum_<Activation>(m, "Activation")
      .value("relu", Activation::relu)
      .value("tanh", Activation::tanh);

  // --------------------------------------------------------------- mind ----
  py::class_<TrainConfig>(m, "TrainConfig",
                          "Optimization settings; data is regenerated every epoch from the seed.")
      .def(py::init<>())
      .def_readwrite("epochs", &TrainConfig::epochs)
      .def_readwrite("batch_size", &TrainConfig::batch_size)
      .def_readwrite("samples_per_epoch", &TrainConfig::samples_per_epoch)
      .def_readwrite("learning_rate", &TrainConfig::learning_rate)
      .def_readwrite("seed", &TrainConfig::seed)
      .def_readwrite("logit_clamp", &TrainConfig::logit_clamp)
      .def("validate", &TrainConfig::validate);

  py::class_<PosteriorEstimate>(m, "PosteriorEstimate",
                                "Per-received-vector posterior pmf estimate; "
                                "probs = 2**(-apost_info_bits) elementwise.")
      .def_readonly("probs", &PosteriorEstimate::probs)
      .def_readonly("apost_info_bits", &PosteriorEstimate::apost_info_bits)
      .def_readonly("normalized", &PosteriorEstimate::normalized);

  py::class_<TrainTrace>(m, "TrainTrace")
      .def_readonly("epoch_loss", &TrainTrace::epoch_loss)
      .def_readonly("samples_seen", &TrainTrace::samples_seen);

  py::class_<SupervisedDiscriminator>(m, "SupervisedDiscriminator",
                                      "One forward pass emits all M codeword logits.")
      .def_static("create",
                  [](const Codebook& cb, const std::vector<int>& hidden, Activation act,
                     std::uint64_t seed) {
                    return SupervisedDiscriminator::create(cb, hidden, act, seed);
                  },
                  py::arg("codebook"), py::arg("hidden_sizes"), py::arg("activation"),
                  py::arg("seed"))
      .def_readonly("codebook", &SupervisedDiscriminator::codebook)
      .def("posterior",
           [](const SupervisedDiscriminator& d, const std::vector<double>& y, double clamp,
              bool normalize) { return posterior(d, y, clamp, normalize); },
           py::arg("y"), py::arg("clamp") = 30.0, py::arg("normalize") = false)
      .def("decode",
           [](const SupervisedDiscriminator& d, const std::vector<double>& y) {
             return decode(d, y);
           },
           py::arg("y"));

  py::class_<UnsupervisedDiscriminator>(m, "UnsupervisedDiscriminator",
                                        "Scalar discriminator over (codeword, reception) pairs.")
      .def_static("create",
                  [](const Codebook& cb, const std::vector<int>& hidden, Activation act,
                     std::uint64_t seed) {
                    return UnsupervisedDiscriminator::create(cb, hidden, act, seed);
                  },
                  py::arg("codebook"), py::arg("hidden_sizes"), py::arg("activation"),
                  py::arg("seed"))
      .def_readonly("codebook", &UnsupervisedDiscriminator::codebook)
      .def("posterior",
           [](const UnsupervisedDiscriminator& d, const std::vector<double>& y, double clamp,
              bool normalize) { return posterior(d, y, clamp, normalize); },
           py::arg("y"), py::arg("clamp") = 30.0, py::arg("normalize") = false)
      .def("decode",
           [](const UnsupervisedDiscriminator& d, const std::vector<double>& y) {
             return decode(d, y);
           },
           py::arg("y"));

  m.def("train",
        [](SupervisedDiscriminator& d, const ChannelModel& ch, const TrainConfig& cfg) {
          return train(d, ch, cfg);
        },
        py::arg("discriminator"), py::arg("channel"), py::arg("config"),
        py::call_guard<py::gil_scoped_release>(),
        "Train in place; raises RuntimeError if the loss turns non-finite.");
  m.def("train",
        [](UnsupervisedDiscriminator& d, const ChannelModel& ch, const TrainConfig& cfg) {
          return train(d, ch, cfg);
        },
        py::arg("discriminator"), py::arg("channel"), py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  m.def("posterior_from_logits",
        [](const std::vector<double>& logits, double clamp, bool normalize) {
          return posterior_from_logits(logits, clamp, normalize);
        },
        py::arg("logits"), py::arg("clamp"), py::arg("normalize"),
        "Posterior pmf from discriminator logits: P(x_i|y) = exp(-logit_i).");
  m.def("decode_posterior", [](const PosteriorEstimate& p) { return decode(p); },
        py::arg("posterior"),
        "argmax_i P(x_i|y); ties break to the lowest index.");

  // ----------------------------------------------------------- estimators --
  py::class_<RateEstimate>(m, "RateEstimate",
                           "Monte-Carlo entropy/MI/error-probability estimates with "
                           "plug-in CLT standard errors.")
      .def_readonly("hx_bits", &RateEstimate::hx_bits)
      .def_readonly("hxy_bits", &RateEstimate::hxy_bits)
      .def_readonly("mi_bits_per_use", &RateEstimate::mi_bits_per_use)
      .def_readonly("pe", &RateEstimate::pe)
      .def_readonly("hx_stderr", &RateEstimate::hx_stderr)
      .def_readonly("hxy_stderr", &RateEstimate::hxy_stderr)
      .def_readonly("mi_stderr", &RateEstimate::mi_stderr)
      .def_readonly("pe_stderr", &RateEstimate::pe_stderr)
      .def_readonly("n_samples", &RateEstimate::n_samples);

  m.def("estimate_source_pmf",
        [](const std::vector<PosteriorEstimate>& p) { return estimate_source_pmf(p); },
        py::arg("posteriors"), "P_X(x_i) ~= mean_j P(x_i|y_j); posteriors must be normalized.");
  m.def("source_entropy",
        [](const std::vector<double>& pmf) { return source_entropy(pmf); }, py::arg("pmf"));
  m.def("conditional_entropy",
        [](const std::vector<PosteriorEstimate>& p) { return conditional_entropy(p); },
        py::arg("posteriors"));
  m.def("error_probability",
        [](const std::vector<PosteriorEstimate>& p) { return error_probability(p); },
        py::arg("posteriors"));
  m.def("estimate_rates",
        [](const std::vector<PosteriorEstimate>& p, int channel_uses) {
          return estimate_rates(p, channel_uses);
        },
        py::arg("posteriors"), py::arg("channel_uses"));

  // -------------------------------------------------------------- harness --
  py::enum_<Scenario>(m, "Scenario")
      .value("nonuniform_4pam", Scenario::nonuniform_4pam)
      .value("nonlinear_4pam", Scenario::nonlinear_4pam)
      .value("middleton_repetition", Scenario::middleton_repetition)
      .value("middleton_hamming", Scenario::middleton_hamming)
      .value("middleton_conv", Scenario::middleton_conv);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("scenario", &ExperimentConfig::scenario)
      .def_readwrite("snr_db_grid", &ExperimentConfig::snr_db_grid)
      .def_readwrite("train", &ExperimentConfig::train)
      .def_readwrite("hidden_sizes", &ExperimentConfig::hidden_sizes)
      .def_readwrite("activation", &ExperimentConfig::activation)
      .def_readwrite("eval_samples", &ExperimentConfig::eval_samples)
      .def_readwrite("decoders", &ExperimentConfig::decoders)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("out_path", &ExperimentConfig::out_path)
      .def_readwrite("pam_p_low", &ExperimentConfig::pam_p_low)
      .def_readwrite("impulse_ratio", &ExperimentConfig::impulse_ratio)
      .def_readwrite("impulse_prob", &ExperimentConfig::impulse_prob)
      .def("validate", &ExperimentConfig::validate);

  m.def("default_config", &default_config, py::arg("scenario"),
        "Scenario defaults: decoder list and SNR grid.");
  m.def("parse_config", &parse_config, py::arg("text"),
        "Parse flat key-value config text; unknown keys are an error.");
  m.def("load_config", &load_config, py::arg("path"));
  m.def("format_config", &format_config, py::arg("config"));
  m.def("make_codebook", &make_codebook, py::arg("config"));
  m.def("make_channel", &make_channel, py::arg("config"), py::arg("sigma_b"));
  m.def("symbol_energy", &symbol_energy, py::arg("codebook"), py::arg("kind"),
        "Prior-weighted mean square of the mapped channel symbols.");

  py::class_<ErrorRates>(m, "ErrorRates")
      .def_readonly("ser", &ErrorRates::ser)
      .def_readonly("ser_stderr", &ErrorRates::ser_stderr)
      .def_readonly("ber", &ErrorRates::ber)
      .def_readonly("ber_stderr", &ErrorRates::ber_stderr);

  m.def("ber_from_blocks",
        [](const std::vector<int>& truth, const std::vector<int>& decoded, const Codebook& cb) {
          return ber_from_blocks(truth, decoded, cb);
        },
        py::arg("truth"), py::arg("decoded"), py::arg("codebook"));

  py::class_<DecoderOutcome>(m, "DecoderOutcome")
      .def_readonly("kind", &DecoderOutcome::kind)
      .def_readonly("rates", &DecoderOutcome::rates)
      .def_readonly("rate_estimate", &DecoderOutcome::rate_estimate);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("snr_db", &SweepRow::snr_db)
      .def_readonly("sigma_b", &SweepRow::sigma_b)
      .def_readonly("decoders", &SweepRow::decoders)
      .def_readonly("train_loss_final", &SweepRow::train_loss_final)
      .def_readonly("wall_time_s", &SweepRow::wall_time_s)
      .def_readonly("failed", &SweepRow::failed);

  m.def("run_scenario",
        [](const ExperimentConfig& cfg, bool verbose) {
          return run_scenario(cfg, verbose ? &std::cerr : nullptr);
        },
        py::arg("config"), py::arg("verbose") = false,
        py::call_guard<py::gil_scoped_release>(),
        "Train and evaluate every decoder at every SNR point. Deterministic "
        "under a fixed config.");
  m.def("results_csv",
        [](const ExperimentConfig& cfg, const std::vector<SweepRow>& rows) {
          return results_csv(cfg, rows);
        },
        py::arg("config"), py::arg("rows"),
        "Fixed-schema CSV; floats carry 17 significant digits.");
  m.def("save_results",
        [](const std::string& path, const ExperimentConfig& cfg,
           const std::vector<SweepRow>& rows) { save_results(path, cfg, rows); },
        py::arg("path"), py::arg("config"), py::arg("rows"));

  m.def("save_checkpoint",
        [](const std::string& path, const SupervisedDiscriminator& d) {
          save_checkpoint(path, d);
        },
        py::arg("path"), py::arg("discriminator"));
  m.def("save_checkpoint",
        [](const std::string& path, const UnsupervisedDiscriminator& d) {
          save_checkpoint(path, d);
        },
        py::arg("path"), py::arg("discriminator"));
  m.def("load_supervised_checkpoint", &load_supervised_checkpoint, py::arg("path"),
        py::arg("codebook"));
  m.def("load_unsupervised_checkpoint", &load_unsupervised_checkpoint, py::arg("path"),
        py::arg("codebook"));
  m.def("checkpoint_kind", &checkpoint_kind, py::arg("path"),
        "\"supervised\" or \"unsupervised\" without loading the network body.");

  m.attr("__version__") = "1.0.0";
}
