#pragma once

#include <cstdint>
#include <vector>

namespace cnotopt {

/// SplitMix64 generator. Used instead of <random> engines/distributions so
/// that seeded runs are bit-identical across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound); bound must be >= 1.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t t = values.size(); t > 1; --t) {
            std::size_t s = static_cast<std::size_t>(below(t));
            std::swap(values[t - 1], values[s]);
        }
    }

    /// Derives an independent stream from a base seed and a stream index.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        Rng r(seed ^ (stream * 0x632be59bd9b4e019ULL + 0xd1b54a32d192ed03ULL));
        r.next();
        return r.next();
    }

  private:
    std::uint64_t state_;
};

}  // namespace cnotopt
