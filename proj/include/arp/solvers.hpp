#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "arp/core.hpp"

namespace arp {

enum class Method { BruteForce, Greedy, SequentialSearch };
std::string_view to_string(Method method);

enum class SearchMode { OptimizeOnly, CountOnly, OptimizeAndCount, EnumerateAll };

struct SearchOptions {
    SearchMode mode = SearchMode::OptimizeAndCount;
    /// Largest n the factorial oracles accept.
    std::size_t max_n_guard = 10;
    /// Requested parallelism; results do not depend on it.
    unsigned worker_hint = 1;
};

struct Solution {
    std::optional<Schedule> schedule;  // absent only for CountOnly searches
    Method method = Method::SequentialSearch;
    std::optional<BigCount> q_count;
    std::uint64_t visited_nodes = 0;
    std::vector<Permutation> leaves;  // EnumerateAll only, sorted
};

/// Maximum over all n! orders; ties go to the lexicographically smallest id sequence.
Solution brute_force(const Instance& inst, const SearchOptions& opts = {});

/// Every order accepted by is_sequential_feasible, sorted lexicographically.
std::vector<Permutation> enumerate_sfs_oracle(const Instance& inst, const SearchOptions& opts = {});

Solution greedy_sequential(const Instance& inst);

/// Backtracking over positions from farthest to first, admitting only placements
/// that keep every decided pair sequentially feasible. Leaves are exactly the
/// sequential feasible solutions.
Solution sequential_search(const Instance& inst, const SearchOptions& opts = {});

}  // namespace arp
