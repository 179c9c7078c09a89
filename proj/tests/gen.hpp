#pragma once

#include "magnon/bogoliubov.hpp"
#include "magnon/lattice.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace gen {

// Seeded generators for the property tests.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  double angle() { return uniform(-magnon::kPi, magnon::kPi); }

  magnon::KVector k_point() {
    return magnon::KVector({uniform(-magnon::kPi, magnon::kPi), uniform(-magnon::kPi, magnon::kPi),
                            uniform(-magnon::kPi, magnon::kPi)});
  }

  // tanh(Theta) uniform on [0, max_tanh]
  magnon::InstantBogoliubov frame(double max_tanh, double B = 0.0) {
    const double t = uniform(0.0, max_tanh);
    return magnon::InstantBogoliubov::from_squeeze(std::atanh(t), angle(), uniform(0.5, 5.0), B);
  }

  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

} // namespace gen
