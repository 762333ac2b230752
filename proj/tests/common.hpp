#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arp/core.hpp"

namespace testing {

// Instance from (v, c) decimal strings, ids 1..n in order.
inline arp::Instance fleet(const std::vector<std::pair<std::string, std::string>>& vc) {
    std::vector<arp::Airplane> planes;
    arp::AirplaneId id = 1;
    for (const auto& [v, c] : vc) planes.push_back({id++, arp::Scalar::parse(v), arp::Scalar::parse(c)});
    return arp::Instance(std::move(planes));
}

inline arp::Instance pair_example() { return fleet({{"4", "2"}, {"7", "3"}}); }
inline arp::Instance triple_example() { return fleet({{"4", "2"}, {"7", "3"}, {"19", "5"}}); }

inline arp::Scalar q(long num, long den = 1) { return arp::Scalar(mpq_class(num, den)); }

}  // namespace testing
