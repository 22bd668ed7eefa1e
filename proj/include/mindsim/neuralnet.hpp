#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mindsim/rng.hpp"

namespace mindsim {

enum class Activation { relu, tanh };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& s);

// Row-major dense matrix of doubles. All math in this library is double
// precision; entropy estimates are log-scale sensitive.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  double* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
  const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }
};

struct NetSpec {
  std::vector<int> layer_sizes;  // input dim first, output dim last
  Activation hidden_activation = Activation::relu;

  void validate() const;  // throws std::invalid_argument
  int input_dim() const { return layer_sizes.front(); }
  int output_dim() const { return layer_sizes.back(); }
};

// Dense feedforward network. The output layer emits raw logits; losses apply
// sigmoid internally through softplus identities.
struct Network {
  NetSpec spec;
  std::vector<Matrix> weights;              // weights[l]: sizes[l+1] x sizes[l]
  std::vector<std::vector<double>> biases;  // biases[l]: sizes[l+1]

  int num_layers() const { return static_cast<int>(weights.size()); }
  std::int64_t num_params() const;
};

// Parameter-shaped gradient container.
struct Gradients {
  std::vector<Matrix> weights;
  std::vector<std::vector<double>> biases;
};

struct AdamState {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double learning_rate = 1e-3;
  std::int64_t step = 0;  // increments by exactly 1 per adam_step

  std::vector<Matrix> m_w, v_w;
  std::vector<std::vector<double>> m_b, v_b;
};

// Weights ~ U(-sqrt(6/fan_in), sqrt(6/fan_in)), biases zero. Identical seed
// gives a bit-identical network.
Network init_network(const NetSpec& spec, std::uint64_t seed);

// batch: rows are input vectors of width spec.input_dim(). Returns logits,
// one row per input. Pure function of (net, batch).
Matrix forward(const Network& net, const Matrix& batch);

// upstream: dloss/dlogit with the shape of forward(net, batch).
Gradients backward(const Network& net, const Matrix& batch, const Matrix& upstream);

AdamState make_adam(const Network& net, double learning_rate);

// Standard bias-corrected Adam update, applied in place.
void adam_step(Network& net, const Gradients& grads, AdamState& state);

// Versioned text checkpoint: key-value header, then row-major weight/bias
// arrays with 17 significant digits. Round trip reproduces forward outputs
// bit-exactly.
void save_network(std::ostream& out, const Network& net);
Network load_network(std::istream& in);

}  // namespace mindsim
