#pragma once

#include <cstdint>
#include <random>

namespace clspectra {

// Seedable generator with a frozen algorithm identifier. mt19937_64 is
// fully specified by the C++ standard, and the 53-bit uniform mapping
// below avoids the implementation-defined std::uniform_real_distribution,
// so streams are reproducible across platforms and compilers.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    static constexpr const char* id() { return "mt19937_64/u53"; }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    std::uint64_t bits() { return gen_(); }

    // Rademacher +/-1.
    double sign() { return (gen_() & 1u) ? 1.0 : -1.0; }

  private:
    std::mt19937_64 gen_;
};

} // namespace clspectra
