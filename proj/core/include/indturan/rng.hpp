#pragma once

#include <cstdint>
#include <limits>

namespace indturan {

// Counter-based generator: the i-th output is a fixed mixing function of
// (key, i). Streams are derived with split(), so every probabilistic step
// can be replayed from the run seed without sharing mutable state.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    result_type operator()();
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    Rng split(std::uint64_t id) const;

    // Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    // Uniform in [0, 1) with 53 random bits.
    double uniform01();
    bool bernoulli(double p);

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x);

}  // namespace indturan
