#include "arp/generator.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "arp/error.hpp"

namespace arp {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw invalid_argument("Rng::below needs a positive bound");
    // reject the top partial block so every residue is equally likely
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x < limit) return x % bound;
    }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw invalid_argument("Rng::between: empty range");
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

// Largest/smallest integer k with k/scale <= x (floor) or >= x (ceil).
long floor_scaled(const Scalar& x, long scale) {
    mpz_class num = x.value().get_num() * scale;
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), x.value().get_den_mpz_t());
    return out.get_si();
}
long ceil_scaled(const Scalar& x, long scale) {
    mpz_class num = x.value().get_num() * scale;
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), x.value().get_den_mpz_t());
    return out.get_si();
}

Scalar tenths(long k) { return Scalar(mpq_class(k, 10)); }

}  // namespace

Instance table4_family(std::size_t n, const Table4Options& opts) {
    if (n < 2 || n > 1000) throw invalid_argument("table4 family needs 2 <= n <= 1000");
    if (opts.crossing.sign() <= 0) throw invalid_argument("crossing point must be positive");
    std::vector<Airplane> planes;
    planes.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const Scalar c(static_cast<long>(i + 1));
        Scalar v = c * (c + opts.crossing) / Scalar(1001);
        if (opts.rounded) {
            // half-up at one decimal: floor(10 v + 1/2) / 10
            mpq_class t = v.value() * 10 + mpq_class(1, 2);
            mpz_class k;
            mpz_fdiv_q(k.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
            v = Scalar(mpq_class(k, 10));
        }
        planes.push_back({static_cast<AirplaneId>(i), v, c});
    }
    return Instance(std::move(planes));
}

Instance random_cro(const GeneratorParams& params) {
    const std::size_t n = params.n;
    const AssumptionParams& a = params.assumptions;
    if (n < 2) throw invalid_argument("random CRO instance needs n >= 2");
    a.validate();
    if (a.epsilon * Scalar(static_cast<long>(n)) > a.M)
        throw invalid_argument("infeasible parameters: epsilon * n exceeds M");
    const long c_slots = floor_scaled(a.M1, 10);  // c on the 0.1 grid in [0.1, M1]
    if (c_slots < static_cast<long>(n)) throw invalid_argument("infeasible parameters: M1 leaves fewer than n distinct c values");

    // v/c on a 1e-4 grid, so v = (v/c) * c has at most five decimals
    constexpr long kRatioScale = 10000;
    const long eps_steps = std::max(1L, ceil_scaled(a.epsilon, kRatioScale));
    const long ratio_cap = floor_scaled(a.M, kRatioScale);

    Rng rng(params.seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        // n distinct c values (Floyd's sampling), ascending
        std::vector<long> c;
        for (long j = c_slots - static_cast<long>(n) + 1; j <= c_slots; ++j) {
            const long t = rng.between(1, j);
            if (std::find(c.begin(), c.end(), t) == c.end())
                c.push_back(t);
            else
                c.push_back(j);
        }
        std::sort(c.begin(), c.end());

        std::vector<long> r(n);  // v/c in units of 1e-4
        const long first_hi = ratio_cap - static_cast<long>(n - 1) * eps_steps;
        if (first_hi < 1) continue;
        r[0] = rng.between(std::max(1L, first_hi / 4), first_hi);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < n && ok; ++i) {
            const long lo = r[i] + eps_steps;
            // v/c^2 must fall strictly: r_{i+1} < r_i c_{i+1} / c_i
            const __int128 prod = static_cast<__int128>(r[i]) * c[i + 1];
            long hi = static_cast<long>((prod - 1) / c[i]);
            hi = std::min(hi, ratio_cap - static_cast<long>(n - 2 - i) * eps_steps);
            if (hi < lo) {
                ok = false;
                break;
            }
            r[i + 1] = rng.between(lo, hi);
        }
        if (!ok) continue;

        std::vector<Airplane> planes;
        planes.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Scalar ci = tenths(c[i]);
            const Scalar ratio(mpq_class(r[i], kRatioScale));
            planes.push_back({static_cast<AirplaneId>(i + 1), ratio * ci, ci});
        }
        Instance inst(std::move(planes));
        if (classify(inst).kind == ClassKind::CompleteReverseOrder) return inst;
    }
    throw invalid_argument("could not construct a complete reverse order instance with these parameters");
}

Instance random_general(std::size_t n, std::uint64_t seed, const GeneralRanges& ranges) {
    if (n < 1) throw invalid_argument("random instance needs n >= 1");
    const long v_lo = ceil_scaled(ranges.v_min, 10), v_hi = floor_scaled(ranges.v_max, 10);
    const long c_lo = std::max(1L, ceil_scaled(ranges.c_min, 10)), c_hi = floor_scaled(ranges.c_max, 10);
    if (v_lo < 1 || v_hi < v_lo || c_hi < c_lo) throw invalid_argument("empty or non-positive value range");
    Rng rng(seed);
    std::vector<Airplane> planes;
    planes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long v = rng.between(v_lo, v_hi);
        const long c = rng.between(c_lo, c_hi);
        planes.push_back({static_cast<AirplaneId>(i + 1), tenths(v), tenths(c)});
    }
    return Instance(std::move(planes));
}

Instance random_subset(const Instance& inst, std::size_t k, std::uint64_t seed) {
    const std::size_t n = inst.size();
    if (k < 1 || k > n) throw invalid_argument("subset size must satisfy 1 <= k <= n");
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    Rng rng(seed);
    for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.below(n - i)]);
    idx.resize(k);
    std::vector<Airplane> picked;
    picked.reserve(k);
    for (std::size_t i : idx) picked.push_back(inst[i]);
    Instance tmp(picked);
    std::vector<Airplane> ordered;
    ordered.reserve(k);
    for (std::size_t i : order_by_v_over_c2_desc(tmp)) ordered.push_back(tmp[i]);
    return Instance(std::move(ordered));
}

}  // namespace arp
