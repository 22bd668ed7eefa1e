#pragma once

namespace mindsim {

// Compensated accumulator; keeps order-independent reductions accurate enough
// for the 1e-12 cross-check tolerances used throughout.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }

  double value() const { return sum; }
};

}  // namespace mindsim
