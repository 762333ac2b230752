#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "arp/core.hpp"

namespace arp {

/// Name of the generator stream recorded in every generated file.
inline constexpr const char* kPrngName = "mt19937_64";

/// std::mt19937_64 (its output sequence is fixed by the C++ standard) with an
/// in-house unbiased bounded draw, so streams are identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

struct GeneratorParams {
    std::size_t n = 10;
    Scalar c_target{2000};
    std::uint64_t seed = 0;
    AssumptionParams assumptions;
};

struct Table4Options {
    bool rounded = true;      // one decimal, half-up
    Scalar crossing{2000};    // common crossing point with the last airplane
};

/// c_i = i + 1, v_i = c_i (c_i + crossing) / 1001, rounded to one decimal.
Instance table4_family(std::size_t n, const Table4Options& opts = {});

/// Seeded complete reverse order instance honoring epsilon, M and M1.
Instance random_cro(const GeneratorParams& params);

struct GeneralRanges {
    Scalar v_min{1}, v_max{100};
    Scalar c_min{mpq_class(1, 10)}, c_max{10};
};

/// Seeded instance with one-decimal v, c drawn uniformly from the ranges.
Instance random_general(std::size_t n, std::uint64_t seed, const GeneralRanges& ranges = {});

/// k distinct airplanes (ids kept), ordered by v/c^2 descending.
Instance random_subset(const Instance& inst, std::size_t k, std::uint64_t seed);

}  // namespace arp
