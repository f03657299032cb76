#pragma once

#include <cstdint>
#include <vector>

namespace slabcy {

using Exponent = std::vector<std::int64_t>;

// Strictly positive integer weights on the curve-class basis {C_{n+1},...,C_m}.
// deg is the weighted sum of exponent coordinates; every effective class the
// system ever enumerates must have deg >= 1, which makes truncation and all
// order-by-order recursions well founded.
struct Grading {
  std::vector<std::int64_t> weights;

  std::size_t num_vars() const { return weights.size(); }

  std::int64_t degree(const Exponent& e) const {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * e[i];
    return d;
  }

  friend bool operator==(const Grading&, const Grading&) = default;
};

}  // namespace slabcy
