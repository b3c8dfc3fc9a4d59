#pragma once

#include <cstdint>
#include <random>

namespace turan {

// mt19937_64 produces an implementation-independent stream for a given seed;
// bounded draws avoid std::uniform_int_distribution, whose mapping is
// implementation-defined, so seeded runs replay identically everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling on the top range keeps the draw unbiased
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

    bool chance(double p) {
        return static_cast<double>(eng_() >> 11) < p * 9007199254740992.0;  // 2^53
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace turan
