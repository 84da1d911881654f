#pragma once

#include <cstdint>
#include <vector>

#include "lppm/errors.hpp"

namespace lppm {

// xorshift64* with the published constants (shifts 12, 25, 27, multiplier
// 0x2545F4914F6CDD1D). Chosen over std::mt19937 so that reimplementations in
// other languages reproduce samples bit for bit.
class Xorshift64Star {
  public:
    explicit Xorshift64Star(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Index sampled proportionally to the (unnormalized, nonnegative) weights.
    int sample(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        if (total <= 0.0) throw ValidationError("sample: weights sum to zero");
        double u = uniform01() * total;
        double acc = 0.0;
        for (size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(weights.size()) - 1;
    }

  private:
    std::uint64_t state_;
};

}  // namespace lppm
