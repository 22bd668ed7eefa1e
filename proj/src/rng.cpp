#include "mindsim/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace mindsim {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream + 0x51ed270b7a7c1611ULL));
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double Rng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_gaussian_;
  }
  double v1 = 0.0, v2 = 0.0, s = 0.0;
  do {
    v1 = uniform(-1.0, 1.0);
    v2 = uniform(-1.0, 1.0);
    s = v1 * v1 + v2 * v2;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  cached_gaussian_ = v2 * scale;
  has_cached_ = true;
  return v1 * scale;
}

int Rng::discrete(std::span<const double> pmf) {
  if (pmf.empty()) throw std::invalid_argument("discrete: empty pmf");
  const double u = uniform();
  double cum = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    cum += pmf[i];
    if (u < cum) return static_cast<int>(i);
  }
  // u landed in the rounding gap above the last nonzero entry.
  for (std::size_t i = pmf.size(); i-- > 0;) {
    if (pmf[i] > 0.0) return static_cast<int>(i);
  }
  return static_cast<int>(pmf.size()) - 1;
}

void Rng::shuffle(std::span<int> idx) {
  for (std::size_t i = idx.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform() * static_cast<double>(i));
    std::swap(idx[i - 1], idx[j < i ? j : i - 1]);
  }
}

}  // namespace mindsim
