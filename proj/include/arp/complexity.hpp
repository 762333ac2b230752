#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "arp/core.hpp"
#include "arp/scalar.hpp"

namespace arp {

enum class Regime { Exponential, Polynomial };
std::string_view to_string(Regime regime);

struct ComplexityReport {
    std::size_t n = 0;
    std::optional<std::size_t> m;        // exact index (complete reverse order only)
    std::optional<std::size_t> m_prime;  // heuristic index
    BigCount q_star;                     // 2^(n-2)
    BigCount q_m_exact;                  // sum_{p<m} C(n-2, p)
    Scalar q_m_bound;                    // (m^2 / n) C(n, m)
    Regime regime = Regime::Exponential;

    /// The index the bound columns were evaluated at.
    std::size_t bound_index() const;
};

BigCount binomial(std::size_t n, std::size_t k);
BigCount factorial(std::size_t n);

/// 2^(n-2), n >= 2.
BigCount q_star(std::size_t n);
/// sum_{p=0}^{m-1} C(n-2, p), 1 <= m <= n-1.
BigCount q_m_exact(std::size_t n, std::size_t m);
/// (m^2 / n) C(n, m), 1 <= m <= n.
Scalar q_m_bound(std::size_t n, std::size_t m);
/// n / (n + 1 - m) == q_m_bound(n+1, m) / q_m_bound(n, m), n >= m.
Scalar growth_ratio(std::size_t n, std::size_t m);

/// Bound columns for an instance size and index (index clamped to >= 1).
ComplexityReport make_report(std::size_t n, std::size_t index);

/// Minimal prefix index m whose consumption sum puts A_n ahead of every later
/// airplane. Requires every airplane to be in reverse order relation with the
/// last one (lower v/c, higher v/c^2); complete reverse order instances qualify.
ComplexityReport estimate_m(const Instance& inst);

/// Greedy-from-every-start estimate m': fix each airplane but the max-v/c one
/// farthest, complete greedily, keep the best distance, and count the airplanes
/// that fly farther than the max-v/c airplane. Requires n >= 2.
ComplexityReport heuristic_m(const Instance& inst, unsigned workers = 1);

}  // namespace arp
