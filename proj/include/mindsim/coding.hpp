#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mindsim/rng.hpp"

namespace mindsim {

// BPSK convention: bit 0 -> +1, bit 1 -> -1.
inline double bpsk(int bit) { return bit ? -1.0 : 1.0; }

// The M = 2^k modulated codewords of length n together with their prior pmf
// and the k-bit message labels (index bits, MSB first).
struct Codebook {
  int k = 0;
  int n = 0;
  std::vector<double> symbols;           // M x n row-major
  std::vector<double> prior;             // M entries, >= 0, summing to 1
  std::vector<std::uint8_t> label_bits;  // M x k

  int size() const { return static_cast<int>(prior.size()); }  // M
  double rate() const { return static_cast<double>(k) / n; }
  std::span<const double> codeword(int i) const {
    return {symbols.data() + static_cast<std::size_t>(i) * n, static_cast<std::size_t>(n)};
  }
  std::span<const std::uint8_t> labels(int i) const {
    return {label_bits.data() + static_cast<std::size_t>(i) * k, static_cast<std::size_t>(k)};
  }

  // M = 2^k, pmf within 1e-12 of 1, pairwise distinct rows.
  void validate() const;
};

// 4-PAM symbols {-3,-1,1,3} with prior [(1-P)/2, P/2, (1-P)/2, P/2].
Codebook build_pam4(double p_low);

// Binary repetition code of odd length, BPSK-modulated, uniform prior.
Codebook build_repetition(int length);

// Systematic (7,4) Hamming code, BPSK-modulated, uniform prior.
Codebook build_hamming74();

// Rate-1/2 terminated convolutional code: 7 info bits plus 2 zero tail bits
// through the (7,5) octal generators give 18 coded bits and M = 128.
struct ConvCodeSpec {
  int memory = 2;
  std::array<unsigned, 2> generators{07, 05};  // octal
  int info_bits = 7;
  int tail_bits = 2;
  int coded_length = 18;

  void validate() const;
};

Codebook build_conv(const ConvCodeSpec& spec = {});

// Index drawn from the codebook prior.
int sample_message(const Codebook& cb, Rng& rng);

// FNV-1a over the dimensions and codeword table; checkpoints store it so a
// trained discriminator refuses to decode with a mismatched codebook.
std::uint64_t fingerprint(const Codebook& cb);

// Diagnostic text table: label bits, prior, symbols, one row per codeword.
std::string format_codebook(const Codebook& cb);

}  // namespace mindsim
