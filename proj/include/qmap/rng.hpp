#pragma once

#include <cstdint>

namespace qmap {

/// Deterministic splittable generator (splitmix64). Used for every random
/// decision in the mapper so that a fixed --seed reproduces runs bit-for-bit
/// across platforms; the standard distributions are implementation-defined
/// and would break that guarantee.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, n). n must be > 0.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    /// Derives an independent stream, e.g. one per restart.
    Rng split(std::uint64_t stream) const {
        Rng child(state_ ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
        child.next();
        return child;
    }

  private:
    std::uint64_t state_;
};

} // namespace qmap
