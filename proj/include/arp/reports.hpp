#pragma once

#include <cstddef>

#include "json.hpp"

namespace arp {

/// n! against 2^(n-2) at n = 4, 6, 8, 10.
nlohmann::json table2_report();

/// 2^(n-2) against the (m^2/n) C(n, m) bound along the table4 family, with m
/// estimated on the full family of size `family_n`.
nlohmann::json table5_report(std::size_t family_n = 1000);

/// Heuristic m' recomputed on each prefix family (2m, 3m, 4m, 5m, 10m, 15m, family_n).
nlohmann::json table6_report(std::size_t family_n = 1000, unsigned workers = 1);

}  // namespace arp
