#include "mindsim/coding.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace mindsim {

namespace {

// Index bits, MSB first.
std::vector<std::uint8_t> index_bits(int index, int k) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    bits[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((index >> (k - 1 - j)) & 1);
  }
  return bits;
}

Codebook from_bit_codewords(int k, const std::vector<std::vector<std::uint8_t>>& words) {
  Codebook cb;
  cb.k = k;
  cb.n = static_cast<int>(words.front().size());
  const int m = 1 << k;
  cb.prior.assign(static_cast<std::size_t>(m), 1.0 / m);
  for (int i = 0; i < m; ++i) {
    for (std::uint8_t b : words[static_cast<std::size_t>(i)]) cb.symbols.push_back(bpsk(b));
    const auto bits = index_bits(i, k);
    cb.label_bits.insert(cb.label_bits.end(), bits.begin(), bits.end());
  }
  cb.validate();
  return cb;
}

}  // namespace

void Codebook::validate() const {
  const int m = size();
  if (k < 1 || n < 1) throw std::invalid_argument("Codebook: k and n must be >= 1");
  if (m != (1 << k)) throw std::invalid_argument("Codebook: M must equal 2^k");
  if (symbols.size() != static_cast<std::size_t>(m) * n ||
      label_bits.size() != static_cast<std::size_t>(m) * k) {
    throw std::invalid_argument("Codebook: table shape mismatch");
  }
  double sum = 0.0;
  for (double p : prior) {
    if (!(p >= 0.0)) throw std::invalid_argument("Codebook: prior entries must be >= 0");
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-12) throw std::invalid_argument("Codebook: prior must sum to 1");
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (std::memcmp(codeword(i).data(), codeword(j).data(), sizeof(double) * static_cast<std::size_t>(n)) == 0) {
        throw std::invalid_argument("Codebook: duplicate codeword rows");
      }
    }
  }
}

Codebook build_pam4(double p_low) {
  if (!(p_low > 0.0 && p_low < 1.0)) {
    throw std::invalid_argument("build_pam4: p_low must be in (0,1)");
  }
  Codebook cb;
  cb.k = 2;
  cb.n = 1;
  cb.symbols = {-3.0, -1.0, 1.0, 3.0};
  cb.prior = {(1.0 - p_low) / 2.0, p_low / 2.0, (1.0 - p_low) / 2.0, p_low / 2.0};
  for (int i = 0; i < 4; ++i) {
    const auto bits = index_bits(i, 2);
    cb.label_bits.insert(cb.label_bits.end(), bits.begin(), bits.end());
  }
  cb.validate();
  return cb;
}

Codebook build_repetition(int length) {
  if (length < 1 || length % 2 == 0) {
    throw std::invalid_argument("build_repetition: length must be odd and positive");
  }
  std::vector<std::vector<std::uint8_t>> words(2);
  words[0].assign(static_cast<std::size_t>(length), 0);
  words[1].assign(static_cast<std::size_t>(length), 1);
  return from_bit_codewords(1, words);
}

Codebook build_hamming74() {
  // G = [I4 | A] with parity bits c4 = d0+d1+d3, c5 = d0+d2+d3, c6 = d1+d2+d3.
  static const std::uint8_t parity[3][4] = {
      {1, 1, 0, 1},
      {1, 0, 1, 1},
      {0, 1, 1, 1},
  };
  std::vector<std::vector<std::uint8_t>> words(16);
  for (int msg = 0; msg < 16; ++msg) {
    const auto d = index_bits(msg, 4);
    auto& w = words[static_cast<std::size_t>(msg)];
    w = d;
    for (const auto& row : parity) {
      std::uint8_t c = 0;
      for (int j = 0; j < 4; ++j) c ^= static_cast<std::uint8_t>(row[j] & d[static_cast<std::size_t>(j)]);
      w.push_back(c);
    }
  }
  return from_bit_codewords(4, words);
}

void ConvCodeSpec::validate() const {
  if (memory < 1) throw std::invalid_argument("ConvCodeSpec: memory must be >= 1");
  if (tail_bits != memory) {
    throw std::invalid_argument("ConvCodeSpec: tail_bits must equal memory to terminate the trellis");
  }
  if (info_bits < 1) throw std::invalid_argument("ConvCodeSpec: info_bits must be >= 1");
  if (coded_length != 2 * (info_bits + tail_bits)) {
    throw std::invalid_argument("ConvCodeSpec: coded_length must equal 2*(info_bits + tail_bits)");
  }
  const unsigned max_gen = 1u << (memory + 1);
  for (unsigned g : generators) {
    if (g == 0 || g >= max_gen) throw std::invalid_argument("ConvCodeSpec: generator out of range");
  }
}

Codebook build_conv(const ConvCodeSpec& spec) {
  spec.validate();
  const int k = spec.info_bits;
  const int m = 1 << k;
  const unsigned state_mask = (1u << spec.memory) - 1u;

  std::vector<std::vector<std::uint8_t>> words(static_cast<std::size_t>(m));
  for (int msg = 0; msg < m; ++msg) {
    const auto info = index_bits(msg, k);
    auto& w = words[static_cast<std::size_t>(msg)];
    w.reserve(static_cast<std::size_t>(spec.coded_length));
    unsigned state = 0;  // bit (memory-1) holds the newest past bit
    for (int t = 0; t < k + spec.tail_bits; ++t) {
      const unsigned u = t < k ? info[static_cast<std::size_t>(t)] : 0u;
      const unsigned window = (u << spec.memory) | state;
      for (unsigned g : spec.generators) {
        w.push_back(static_cast<std::uint8_t>(std::popcount(g & window) & 1));
      }
      state = ((state >> 1) | (u << (spec.memory - 1))) & state_mask;
    }
  }
  return from_bit_codewords(k, words);
}

int sample_message(const Codebook& cb, Rng& rng) {
  return rng.discrete(cb.prior);
}

std::uint64_t fingerprint(const Codebook& cb) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const void* bytes, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(bytes);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ULL;
    }
  };
  const std::int32_t dims[2] = {cb.k, cb.n};
  mix(dims, sizeof dims);
  mix(cb.symbols.data(), cb.symbols.size() * sizeof(double));
  return h;
}

std::string format_codebook(const Codebook& cb) {
  char buf[64];
  std::string out;
  std::snprintf(buf, sizeof buf, "# codebook M=%d k=%d n=%d rate=%.6g\n", cb.size(), cb.k, cb.n,
                cb.rate());
  out += buf;
  out += "# index bits prior symbols...\n";
  for (int i = 0; i < cb.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%d ", i);
    out += buf;
    for (std::uint8_t b : cb.labels(i)) out += static_cast<char>('0' + b);
    std::snprintf(buf, sizeof buf, " %.12g", cb.prior[static_cast<std::size_t>(i)]);
    out += buf;
    for (double s : cb.codeword(i)) {
      std::snprintf(buf, sizeof buf, " %.12g", s);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace mindsim
