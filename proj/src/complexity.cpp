#include "arp/complexity.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "arp/error.hpp"
#include "kernel.hpp"

namespace arp {

using detail::ScaledFleet;

std::string_view to_string(Regime regime) {
    return regime == Regime::Polynomial ? "polynomial" : "exponential";
}

std::size_t ComplexityReport::bound_index() const {
    if (m) return std::max<std::size_t>(*m, 1);
    if (m_prime) return std::max<std::size_t>(*m_prime, 1);
    return 1;
}

BigCount binomial(std::size_t n, std::size_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return BigCount(r);
}

BigCount factorial(std::size_t n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return BigCount(r);
}

BigCount q_star(std::size_t n) {
    if (n < 2) throw invalid_argument("q_star needs n >= 2");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n - 2);
    return BigCount(r);
}

BigCount q_m_exact(std::size_t n, std::size_t m) {
    if (n < 2 || m < 1 || m > n - 1)
        throw invalid_argument("q_m_exact needs 1 <= m <= n-1 (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    mpz_class sum = 0, term = 1;  // term = C(n-2, p)
    for (std::size_t p = 0; p < m; ++p) {
        sum += term;
        term = term * static_cast<unsigned long>(n - 2 - p) / static_cast<unsigned long>(p + 1);
    }
    return BigCount(sum);
}

Scalar q_m_bound(std::size_t n, std::size_t m) {
    if (m < 1 || m > n)
        throw invalid_argument("q_m_bound needs 1 <= m <= n (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    const mpz_class mm = static_cast<unsigned long>(m);
    return Scalar(mpq_class(mm * mm * binomial(n, m).value(), mpz_class(static_cast<unsigned long>(n))));
}

Scalar growth_ratio(std::size_t n, std::size_t m) {
    if (n < m || n == 0) throw invalid_argument("growth_ratio needs n >= m");
    return Scalar(mpq_class(mpz_class(static_cast<unsigned long>(n)), mpz_class(static_cast<unsigned long>(n + 1 - m))));
}

ComplexityReport make_report(std::size_t n, std::size_t index) {
    if (n < 2) throw invalid_argument("complexity report needs n >= 2");
    const std::size_t k = std::clamp<std::size_t>(index, 1, n - 1);
    ComplexityReport r;
    r.n = n;
    r.q_star = q_star(n);
    r.q_m_exact = q_m_exact(n, k);
    r.q_m_bound = q_m_bound(n, k);
    r.regime = n > 2 * k ? Regime::Polynomial : Regime::Exponential;
    return r;
}

namespace {

// What the index argument needs: every airplane is in reverse order relation with
// the last one of the v/c^2-descending labeling (v/c^2 strictly above it, v/c
// strictly below it), so every crossing point C_{i,n} exists and is positive.
// Complete reverse order implies this; the rounded table4 family only has this.
bool reverse_order_against_last(const Instance& inst, const std::vector<std::size_t>& order) {
    const std::size_t n = order.size();
    const Airplane& last = inst[order[n - 1]];
    const Scalar k1_last = last.v / last.c, k2_last = k1_last / last.c;
    for (std::size_t t = 0; t + 1 < n; ++t) {
        const Airplane& a = inst[order[t]];
        const Scalar k1 = a.v / a.c;
        if (!(k1 / a.c > k2_last) || !(k1 < k1_last)) return false;
    }
    return true;
}

}  // namespace

ComplexityReport estimate_m(const Instance& inst) {
    const InstanceClass cls = classify(inst);
    const std::vector<std::size_t> order = order_by_v_over_c2_desc(inst);
    if (inst.size() < 2 ||
        (cls.kind != ClassKind::CompleteReverseOrder && !reverse_order_against_last(inst, order)))
        throw precondition_error(std::string("exact index estimation needs a complete reverse order instance; got ") +
                                 std::string(to_string(cls.kind)) + (cls.ties ? " (ties present)" : "") +
                                 ". Use the heuristic mode instead.");
    const std::size_t n = order.size();
    const std::size_t m = detail::with_scaled_fleet(inst, [&]<class Int>(const ScaledFleet<Int>& fleet) {
        const std::size_t last = order[n - 1];
        // pool holds labels m+1 .. n-1 (1-based) of the v/c^2-descending labeling
        std::size_t m = 1;
        Int ctx = fleet.c[order[0]];
        auto someone_beats_last = [&] {
            for (std::size_t r = m; r + 1 < n; ++r)
                if (fleet.compare_phi(last, order[r], ctx) < 0) return true;
            return false;
        };
        while (m < n - 1 && someone_beats_last()) {
            ++m;
            ctx += fleet.c[order[m - 1]];
        }
        return m;
    });
    ComplexityReport r = make_report(n, m);
    r.m = m;
    return r;
}

ComplexityReport heuristic_m(const Instance& inst, unsigned workers) {
    const std::size_t n = inst.size();
    if (n < 2) throw invalid_argument("heuristic index estimation needs n >= 2");
    const std::vector<std::size_t> order = order_by_v_over_c2_desc(inst);
    const std::size_t m_prime = detail::with_scaled_fleet(inst, [&]<class Int>(const ScaledFleet<Int>& fleet) {
        struct Best {
            bool set = false;
            std::size_t start = 0;
            mpq_class total;
            std::vector<std::size_t> far_first;
        };
        const unsigned w_count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n - 1)));
        std::vector<Best> best(w_count);
        auto work = [&](unsigned w) {
            std::vector<char> used;
            std::vector<std::size_t> far_first;
            for (std::size_t s = w; s + 1 < n; s += w_count) {
                const std::size_t start = order[s];
                used.assign(n, 0);
                used[start] = 1;
                far_first.assign(1, start);
                detail::greedy_fill(fleet, used, Int(fleet.c[start]), far_first);
                mpq_class total = detail::distance_far_first(fleet, far_first);
                // starts are visited in increasing s per worker, so strict > keeps the smallest
                if (!best[w].set || cmp(total, best[w].total) > 0) {
                    best[w] = Best{true, s, std::move(total), far_first};
                }
            }
        };
        if (w_count == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < w_count; ++w) pool.emplace_back(work, w);
        }
        const Best* winner = nullptr;
        for (const Best& b : best) {
            if (!b.set) continue;
            if (!winner || cmp(b.total, winner->total) > 0 || (cmp(b.total, winner->total) == 0 && b.start < winner->start))
                winner = &b;
        }
        // max v/c airplane closest to the far end; count those flying farther than it
        std::size_t top_pos = 0;
        for (std::size_t k = 1; k < n; ++k) {
            const std::size_t a = winner->far_first[k], b = winner->far_first[top_pos];
            if (fleet.v[a] * fleet.c[b] > fleet.v[b] * fleet.c[a]) top_pos = k;
        }
        return top_pos;
    });
    ComplexityReport r = make_report(n, m_prime);
    r.m_prime = m_prime;
    return r;
}

}  // namespace arp
