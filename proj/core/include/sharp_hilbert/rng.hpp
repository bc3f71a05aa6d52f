#pragma once

#include <cmath>
#include <cstdint>

namespace sharp_hilbert {

// SplitMix64: 64 bits of state, one multiply-xor-shift chain per draw.
// Used instead of <random> engines so that streams are bit-identical
// across platforms and so that stream i is a pure function of (seed, i).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Derives an independent stream for (seed, index) pairs.
    static SplitMix64 for_stream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed ^ (0xA0761D6478BD642FULL * (index + 1)));
        return SplitMix64(mixer.next_u64());
    }

  private:
    std::uint64_t state_;
};

// Marsaglia polar method. Deterministic given the stream; the pair is
// consumed together so callers draw an even number of normals per use.
class NormalSampler {
  public:
    explicit NormalSampler(SplitMix64 rng) : rng_(rng) {}

    void next_pair(double& n1, double& n2) {
        double u, v, s;
        do {
            u = 2.0 * rng_.next_double() - 1.0;
            v = 2.0 * rng_.next_double() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        n1 = u * m;
        n2 = v * m;
    }

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double a, b;
        next_pair(a, b);
        spare_ = b;
        have_spare_ = true;
        return a;
    }

  private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace sharp_hilbert
