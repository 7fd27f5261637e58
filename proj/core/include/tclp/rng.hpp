#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace tclp {

// Deterministic generator used everywhere a seed is accepted.
//
// Engine: std::mt19937_64 (bit-exact by the standard). The standard
// distributions are implementation-defined, so bounded integers use
// Lemire's multiply-shift rejection method and reals use the top 53 bits;
// results are identical across compilers and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);

    // Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

    // Uniform real in [0, 1).
    double unit();

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace tclp
