#pragma once

// Scaled-integer view of an instance for the hot loops. Every v and c is multiplied
// by the common denominator L, so
//   phi(a, C) = V_a L / (Cc_a (Cc_a + CC))   and   leg = V_a / (Cc_a + CC),
// and phi comparisons reduce to one cross-multiplication of integers.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "arp/core.hpp"

namespace arp::detail {

using int128 = __int128;

inline mpz_class to_mpz(const mpz_class& z) { return z; }
inline mpz_class to_mpz(int128 x) {
    const bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class r = hi;
    r <<= 64;
    r += mpz_class(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    return neg ? mpz_class(-r) : r;
}

template <class Int>
Int from_mpz(const mpz_class& z);
template <>
inline mpz_class from_mpz<mpz_class>(const mpz_class& z) { return z; }
template <>
inline int128 from_mpz<int128>(const mpz_class& z) {
    mpz_class hi = z >> 64;
    mpz_class lo = z - (hi << 64);
    return (static_cast<int128>(hi.get_ui()) << 64) | static_cast<int128>(lo.get_ui());
}

template <class Int>
struct ScaledFleet {
    std::vector<Int> v;  // scaled capacities
    std::vector<Int> c;  // scaled consumption rates
    std::vector<AirplaneId> id;

    std::size_t size() const { return v.size(); }

    /// Sign of phi(a, ctx) - phi(b, ctx).
    int compare_phi(std::size_t a, std::size_t b, const Int& ctx) const {
        const Int lhs = v[a] * c[b] * (c[b] + ctx);
        const Int rhs = v[b] * c[a] * (c[a] + ctx);
        return lhs < rhs ? -1 : (rhs < lhs ? 1 : 0);
    }
    bool phi_le(std::size_t a, std::size_t b, const Int& ctx) const { return compare_phi(a, b, ctx) <= 0; }

    mpq_class leg(std::size_t a, const Int& ctx) const {
        mpq_class q(to_mpz(v[a]), to_mpz(Int(c[a] + ctx)));
        q.canonicalize();
        return q;
    }
};

/// Builds the scaled view and calls `f(fleet)` with __int128 storage when every
/// product in compare_phi provably fits, mpz_class otherwise.
template <class F>
decltype(auto) with_scaled_fleet(const Instance& inst, F&& f) {
    mpz_class l = 1;
    for (const Airplane& a : inst.airplanes()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.v.value().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.c.value().get_den_mpz_t());
    }
    const std::size_t n = inst.size();
    std::vector<mpz_class> v(n), c(n);
    mpz_class vmax = 0, cmax = 0, csum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = inst[i].v.value().get_num() * (l / inst[i].v.value().get_den());
        c[i] = inst[i].c.value().get_num() * (l / inst[i].c.value().get_den());
        if (v[i] > vmax) vmax = v[i];
        if (c[i] > cmax) cmax = c[i];
        csum += c[i];
    }
    const mpz_class widest = cmax + csum;
    const std::size_t bits = mpz_sizeinbase(vmax.get_mpz_t(), 2) + mpz_sizeinbase(cmax.get_mpz_t(), 2) +
                             mpz_sizeinbase(widest.get_mpz_t(), 2);
    auto build = [&]<class Int>(ScaledFleet<Int>& fleet) {
        fleet.v.reserve(n);
        fleet.c.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            fleet.v.push_back(from_mpz<Int>(v[i]));
            fleet.c.push_back(from_mpz<Int>(c[i]));
            fleet.id.push_back(inst[i].id);
        }
    };
    if (bits <= 125) {
        ScaledFleet<int128> fleet;
        build(fleet);
        return f(std::as_const(fleet));
    }
    ScaledFleet<mpz_class> fleet;
    build(fleet);
    return f(std::as_const(fleet));
}

/// Exact sum by pairwise halving, which keeps the operands balanced in size.
inline mpq_class exact_sum(std::span<const mpq_class> terms) {
    if (terms.empty()) return 0;
    if (terms.size() == 1) return terms[0];
    const std::size_t half = terms.size() / 2;
    mpq_class r = exact_sum(terms.subspan(0, half)) + exact_sum(terms.subspan(half));
    return r;
}

/// Greedy backward construction: repeatedly give the next farthest free slot to the
/// unused airplane with maximal phi at the current context (smallest id on ties).
/// `order` receives airplanes from the farthest position inwards.
template <class Int>
void greedy_fill(const ScaledFleet<Int>& fleet, std::vector<char>& used, Int ctx, std::vector<std::size_t>& order) {
    const std::size_t n = fleet.size();
    for (;;) {
        std::size_t best = n;
        for (std::size_t k = 0; k < n; ++k) {
            if (used[k]) continue;
            if (best == n) {
                best = k;
                continue;
            }
            const int s = fleet.compare_phi(k, best, ctx);
            if (s > 0 || (s == 0 && fleet.id[k] < fleet.id[best])) best = k;
        }
        if (best == n) return;
        used[best] = 1;
        order.push_back(best);
        ctx += fleet.c[best];
    }
}

/// Exact distance of an order given farthest-first.
template <class Int>
mpq_class distance_far_first(const ScaledFleet<Int>& fleet, std::span<const std::size_t> far_first) {
    std::vector<mpq_class> legs;
    legs.reserve(far_first.size());
    Int ctx = 0;
    for (std::size_t k : far_first) {
        legs.push_back(fleet.leg(k, ctx));
        ctx += fleet.c[k];
    }
    return exact_sum(legs);
}

}  // namespace arp::detail
