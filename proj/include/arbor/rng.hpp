#ifndef ARBOR_RNG_HPP
#define ARBOR_RNG_HPP

#include <cstdint>

namespace arbor {

// splitmix64: tiny deterministic generator so seeded outputs are
// bit-identical across platforms and standard-library versions.
struct split_mix64 {
    std::uint64_t state;

    explicit split_mix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n); n > 0
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    bool coin() { return next() & 1u; }
};

} // namespace arbor

#endif
