#include "arp/reports.hpp"

#include <chrono>
#include <set>

#include "arp/complexity.hpp"
#include "arp/generator.hpp"
#include "arp/io.hpp"

namespace arp {

using nlohmann::json;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::size_t family_index(std::size_t family_n) { return *estimate_m(table4_family(family_n)).m; }

}  // namespace

json table2_report() {
    json rows = json::array();
    for (std::size_t n : {4, 6, 8, 10})
        rows.push_back({{"n", n}, {"f_n", exact_and_scientific(factorial(n))}, {"q_star", exact_and_scientific(q_star(n))}});
    return {{"report", "table2"}, {"rows", rows}};
}

json table5_report(std::size_t family_n) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t m = family_index(family_n);
    std::set<std::size_t> sizes;
    for (std::size_t k : {2, 3, 4, 5, 10, 15})
        for (std::size_t extra : {0, 1}) sizes.insert(k * m + extra);
    sizes.insert(family_n - 1);
    sizes.insert(family_n);
    json rows = json::array();
    for (std::size_t n : sizes) {
        if (n > family_n || n < 2) continue;
        json row = {{"n", n}, {"q_star", exact_and_scientific(q_star(n))}};
        if (m <= n - 1) row["q_m_exact"] = exact_and_scientific(q_m_exact(n, m));
        row["q_m_bound"] = exact_and_scientific(q_m_bound(n, std::min(m, n)));
        row["regime"] = std::string(to_string(n > 2 * m ? Regime::Polynomial : Regime::Exponential));
        rows.push_back(std::move(row));
    }
    return {{"report", "table5"}, {"family_n", family_n}, {"m", m}, {"rows", rows}, {"elapsed_ms", ms_since(t0)}};
}

json table6_report(std::size_t family_n, unsigned workers) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t m = family_index(family_n);
    std::set<std::size_t> sizes;
    for (std::size_t k : {2, 3, 4, 5, 10, 15}) sizes.insert(k * m);
    sizes.insert(family_n);
    json rows = json::array();
    for (std::size_t n : sizes) {
        if (n > family_n || n < 2) continue;
        const auto t_row = std::chrono::steady_clock::now();
        const ComplexityReport h = heuristic_m(table4_family(n), workers);
        rows.push_back({{"n", n},
                        {"m_prime", *h.m_prime},
                        {"q_m_prime_bound", exact_and_scientific(h.q_m_bound)},
                        {"q_m_bound", exact_and_scientific(q_m_bound(n, std::min(m, n)))},
                        {"q_star", exact_and_scientific(q_star(n))},
                        {"elapsed_ms", ms_since(t_row)}});
    }
    return {{"report", "table6"}, {"family_n", family_n}, {"m", m}, {"rows", rows}, {"elapsed_ms", ms_since(t0)}};
}

}  // namespace arp
