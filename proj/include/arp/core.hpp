#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "arp/scalar.hpp"

namespace arp {

using AirplaneId = std::uint32_t;

/// One aircraft: fuel capacity `v` (tanks) and consumption rate `c` (tanks/km).
struct Airplane {
    AirplaneId id = 0;
    Scalar v;
    Scalar c;
};

/// Drop-out order as airplane ids; index 0 drops out first, the last entry flies farthest.
using Permutation = std::vector<AirplaneId>;

/// Ordered fleet with distinct positive ids and strictly positive v, c.
class Instance {
public:
    Instance() = default;
    explicit Instance(std::vector<Airplane> airplanes);

    std::size_t size() const { return airplanes_.size(); }
    bool empty() const { return airplanes_.empty(); }
    std::span<const Airplane> airplanes() const { return airplanes_; }
    const Airplane& operator[](std::size_t i) const { return airplanes_[i]; }

    /// Index in airplanes() of the airplane with this id; throws on unknown id.
    std::size_t index_of(AirplaneId id) const;
    const Airplane& by_id(AirplaneId id) const { return airplanes_[index_of(id)]; }

    /// Throws unless `pi` is a bijection onto this instance's ids.
    void check_permutation(std::span<const AirplaneId> pi) const;

private:
    std::vector<Airplane> airplanes_;
    std::vector<std::pair<AirplaneId, std::size_t>> by_id_;  // sorted by id
};

struct Schedule {
    Permutation pi;
    /// cumulative[l] = sum of c over positions after l (0-based); cumulative.back() == 0.
    std::vector<Scalar> cumulative;
    /// legs[l] = v / (c + cumulative[l]) of the airplane at position l.
    std::vector<Scalar> legs;
    Scalar total;
};

enum class ClassKind { Aligned, CompleteReverseOrder, Mixed };
std::string_view to_string(ClassKind kind);

struct InstanceClass {
    ClassKind kind = ClassKind::Mixed;
    bool ties = false;  // some pair shares v/c^2 or v/c
};

/// Bounds used by the large-n analysis: Delta_{n-1,n} >= epsilon, v_n/c_n <= M, c_n <= M1.
struct AssumptionParams {
    Scalar epsilon{mpq_class(1, 100)};
    Scalar M{100};
    Scalar M1{100};

    void validate() const;
};

/// Relative distance factor v / (c (c + C)).
Scalar phi(const Airplane& a, const Scalar& context);

/// Exact objective of a drop-out order plus its per-airplane legs.
Schedule total_distance(const Instance& inst, std::span<const AirplaneId> pi);

/// Context C > 0 at which phi(a_i, C) == phi(a_j, C); nullopt when v/c ratios are
/// equal or the crossing is not strictly positive.
std::optional<Scalar> crossing_point(const Airplane& a_i, const Airplane& a_j);

/// v_j/c_j - v_i/c_i.
Scalar delta(const Airplane& a_i, const Airplane& a_j);

/// Sequential feasibility of a drop-out order, evaluated pair by pair.
///
/// For positions i < j with contexts C_i > C_j, the pair passes when
///   phi(pi(i), C_j) <= phi(pi(j), C_j)   or   phi(pi(i), C_i) <= phi(pi(j), C_i),
/// and a neighbouring pair (j == i + 1) must satisfy the first inequality, which is
/// exactly "swapping the two neighbours does not increase the distance".
bool is_sequential_feasible(const Instance& inst, std::span<const AirplaneId> pi);

InstanceClass classify(const Instance& inst);

/// Indices sorted by v/c^2 descending, ties by id ascending.
std::vector<std::size_t> order_by_v_over_c2_desc(const Instance& inst);

}  // namespace arp
