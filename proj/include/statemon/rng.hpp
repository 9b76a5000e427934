#pragma once

#include <cstdint>
#include <random>

namespace statemon {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from (master, stream, index). Workers in
/// parallel sweeps each get their own seed, so results do not depend on thread
/// count or scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s ^= stream + 0x632BE59BD9B4E019ULL;
    std::uint64_t b = splitmix64(s);
    s ^= index + 0x9E6C63D0876A9ULL;
    return splitmix64(s) ^ (a * 3) ^ (b << 1);
}

/// mt19937_64 wrapper producing doubles in [0,1) with a fixed bit recipe, so
/// trajectories replay identically across platforms for a given seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    std::uint64_t next_u64() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

}  // namespace statemon
