#include "mindsim/neuralnet.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mindsim {

namespace {

void format_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

double apply_activation(Activation a, double z) {
  switch (a) {
    case Activation::relu:
      return z > 0.0 ? z : 0.0;
    case Activation::tanh:
      return std::tanh(z);
  }
  return z;
}

// Derivative expressed through the activation output.
double activation_grad(Activation a, double out) {
  switch (a) {
    case Activation::relu:
      return out > 0.0 ? 1.0 : 0.0;
    case Activation::tanh:
      return 1.0 - out * out;
  }
  return 1.0;
}

// z = a_in * W^T + b, one layer for the whole batch.
void affine(const Matrix& a_in, const Matrix& w, std::span<const double> b, Matrix& z) {
  for (int r = 0; r < a_in.rows; ++r) {
    const double* in = a_in.row(r);
    double* out = z.row(r);
    for (int o = 0; o < w.rows; ++o) {
      const double* wr = w.row(o);
      double acc = b[static_cast<std::size_t>(o)];
      for (int c = 0; c < w.cols; ++c) acc += wr[c] * in[c];
      out[o] = acc;
    }
  }
}

std::vector<Matrix> forward_activations(const Network& net, const Matrix& batch) {
  const auto& sizes = net.spec.layer_sizes;
  std::vector<Matrix> acts;
  acts.reserve(sizes.size());
  acts.push_back(batch);
  for (int l = 0; l < net.num_layers(); ++l) {
    Matrix z(batch.rows, sizes[static_cast<std::size_t>(l) + 1]);
    affine(acts.back(), net.weights[static_cast<std::size_t>(l)],
           net.biases[static_cast<std::size_t>(l)], z);
    const bool hidden = l + 1 < net.num_layers();
    if (hidden) {
      for (double& v : z.data) v = apply_activation(net.spec.hidden_activation, v);
    }
    acts.push_back(std::move(z));
  }
  return acts;
}

}  // namespace

std::string to_string(Activation a) {
  return a == Activation::relu ? "relu" : "tanh";
}

Activation activation_from_string(const std::string& s) {
  if (s == "relu") return Activation::relu;
  if (s == "tanh") return Activation::tanh;
  throw std::invalid_argument("unknown activation: " + s);
}

void NetSpec::validate() const {
  if (layer_sizes.size() < 2) throw std::invalid_argument("NetSpec: need at least 2 layers");
  for (int s : layer_sizes) {
    if (s < 1) throw std::invalid_argument("NetSpec: layer sizes must be >= 1");
  }
}

std::int64_t Network::num_params() const {
  std::int64_t count = 0;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    count += static_cast<std::int64_t>(weights[l].data.size());
    count += static_cast<std::int64_t>(biases[l].size());
  }
  return count;
}

Network init_network(const NetSpec& spec, std::uint64_t seed) {
  spec.validate();
  Network net;
  net.spec = spec;
  Rng rng(seed);
  const auto& sizes = spec.layer_sizes;
  for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
    const int fan_in = sizes[l];
    const int fan_out = sizes[l + 1];
    const double bound = std::sqrt(6.0 / fan_in);
    Matrix w(fan_out, fan_in);
    for (double& v : w.data) v = rng.uniform(-bound, bound);
    net.weights.push_back(std::move(w));
    net.biases.emplace_back(static_cast<std::size_t>(fan_out), 0.0);
  }
  return net;
}

Matrix forward(const Network& net, const Matrix& batch) {
  if (batch.cols != net.spec.input_dim()) {
    throw std::invalid_argument("forward: input width does not match first layer size");
  }
  return forward_activations(net, batch).back();
}

Gradients backward(const Network& net, const Matrix& batch, const Matrix& upstream) {
  if (batch.cols != net.spec.input_dim()) {
    throw std::invalid_argument("backward: input width does not match first layer size");
  }
  if (upstream.rows != batch.rows || upstream.cols != net.spec.output_dim()) {
    throw std::invalid_argument("backward: upstream gradient shape mismatch");
  }

  const auto acts = forward_activations(net, batch);
  Gradients grads;
  grads.weights.resize(static_cast<std::size_t>(net.num_layers()));
  grads.biases.resize(static_cast<std::size_t>(net.num_layers()));

  Matrix delta = upstream;
  for (int l = net.num_layers() - 1; l >= 0; --l) {
    const auto lu = static_cast<std::size_t>(l);
    const Matrix& a_prev = acts[lu];
    const Matrix& w = net.weights[lu];

    Matrix dw(w.rows, w.cols);
    std::vector<double> db(static_cast<std::size_t>(w.rows), 0.0);
    for (int r = 0; r < delta.rows; ++r) {
      const double* d = delta.row(r);
      const double* a = a_prev.row(r);
      for (int o = 0; o < w.rows; ++o) {
        const double dv = d[o];
        db[static_cast<std::size_t>(o)] += dv;
        double* dwr = dw.row(o);
        for (int c = 0; c < w.cols; ++c) dwr[c] += dv * a[c];
      }
    }
    grads.weights[lu] = std::move(dw);
    grads.biases[lu] = std::move(db);

    if (l > 0) {
      // delta_prev = (delta * W) ⊙ act'(a_prev)
      Matrix prev(delta.rows, w.cols);
      for (int r = 0; r < delta.rows; ++r) {
        const double* d = delta.row(r);
        const double* a = a_prev.row(r);
        double* p = prev.row(r);
        for (int c = 0; c < w.cols; ++c) {
          double acc = 0.0;
          for (int o = 0; o < w.rows; ++o) acc += d[o] * w.at(o, c);
          p[c] = acc * activation_grad(net.spec.hidden_activation, a[c]);
        }
      }
      delta = std::move(prev);
    }
  }
  return grads;
}

AdamState make_adam(const Network& net, double learning_rate) {
  AdamState st;
  st.learning_rate = learning_rate;
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    st.m_w.emplace_back(net.weights[l].rows, net.weights[l].cols);
    st.v_w.emplace_back(net.weights[l].rows, net.weights[l].cols);
    st.m_b.emplace_back(net.biases[l].size(), 0.0);
    st.v_b.emplace_back(net.biases[l].size(), 0.0);
  }
  return st;
}

void adam_step(Network& net, const Gradients& grads, AdamState& state) {
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    for (double g : grads.weights[l].data) {
      if (!std::isfinite(g)) throw std::invalid_argument("adam_step: non-finite gradient");
    }
    for (double g : grads.biases[l]) {
      if (!std::isfinite(g)) throw std::invalid_argument("adam_step: non-finite gradient");
    }
  }

  state.step += 1;
  const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
  const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));

  auto update = [&](double& p, double g, double& m, double& v) {
    m = state.beta1 * m + (1.0 - state.beta1) * g;
    v = state.beta2 * v + (1.0 - state.beta2) * g * g;
    p -= state.learning_rate * (m / bc1) / (std::sqrt(v / bc2) + state.epsilon);
  };

  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    auto& w = net.weights[l].data;
    const auto& gw = grads.weights[l].data;
    auto& mw = state.m_w[l].data;
    auto& vw = state.v_w[l].data;
    for (std::size_t i = 0; i < w.size(); ++i) update(w[i], gw[i], mw[i], vw[i]);

    auto& b = net.biases[l];
    const auto& gb = grads.biases[l];
    auto& mb = state.m_b[l];
    auto& vb = state.v_b[l];
    for (std::size_t i = 0; i < b.size(); ++i) update(b[i], gb[i], mb[i], vb[i]);
  }
}

void save_network(std::ostream& out, const Network& net) {
  std::string text = "format mindsim-net-1\n";
  text += "layer_sizes";
  for (int s : net.spec.layer_sizes) text += " " + std::to_string(s);
  text += "\nactivation " + to_string(net.spec.hidden_activation) + "\n";
  for (int l = 0; l < net.num_layers(); ++l) {
    const auto lu = static_cast<std::size_t>(l);
    const Matrix& w = net.weights[lu];
    text += "layer " + std::to_string(l) + " " + std::to_string(w.rows) + " " +
            std::to_string(w.cols) + "\n";
    for (int r = 0; r < w.rows; ++r) {
      for (int c = 0; c < w.cols; ++c) {
        if (c) text += ' ';
        format_double(text, w.at(r, c));
      }
      text += '\n';
    }
    text += "bias";
    for (double b : net.biases[lu]) {
      text += ' ';
      format_double(text, b);
    }
    text += '\n';
  }
  out << text;
}

Network load_network(std::istream& in) {
  auto fail = [](const std::string& why) -> Network {
    throw std::runtime_error("load_network: " + why);
  };

  std::string word;
  if (!(in >> word) || word != "format") return fail("missing format line");
  if (!(in >> word) || word != "mindsim-net-1") return fail("unsupported format version '" + word + "'");

  std::string line;
  std::getline(in, line);
  if (!std::getline(in, line) || line.rfind("layer_sizes", 0) != 0) return fail("missing layer_sizes");
  NetSpec spec;
  {
    std::istringstream ls(line.substr(std::string("layer_sizes").size()));
    int v = 0;
    while (ls >> v) spec.layer_sizes.push_back(v);
  }
  if (!(in >> word) || word != "activation") return fail("missing activation");
  if (!(in >> word)) return fail("missing activation value");
  spec.hidden_activation = activation_from_string(word);
  spec.validate();

  Network net;
  net.spec = spec;
  for (std::size_t l = 0; l + 1 < spec.layer_sizes.size(); ++l) {
    int idx = 0, rows = 0, cols = 0;
    if (!(in >> word) || word != "layer" || !(in >> idx >> rows >> cols)) return fail("bad layer header");
    if (idx != static_cast<int>(l) || rows != spec.layer_sizes[l + 1] ||
        cols != spec.layer_sizes[l]) {
      return fail("layer header does not match layer_sizes");
    }
    Matrix w(rows, cols);
    for (double& v : w.data) {
      if (!(in >> v)) return fail("truncated weight block");
    }
    if (!(in >> word) || word != "bias") return fail("missing bias line");
    std::vector<double> b(static_cast<std::size_t>(rows));
    for (double& v : b) {
      if (!(in >> v)) return fail("truncated bias line");
    }
    net.weights.push_back(std::move(w));
    net.biases.push_back(std::move(b));
  }
  return net;
}

}  // namespace mindsim
