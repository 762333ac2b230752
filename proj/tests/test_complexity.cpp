#include "doctest.h"

#include <algorithm>

#include "arp/complexity.hpp"
#include "arp/error.hpp"
#include "arp/generator.hpp"
#include "arp/reports.hpp"
#include "common.hpp"

using namespace arp;
using testing::fleet;
using testing::q;

namespace {

mpz_class power(unsigned long base, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// Index from the crossing points directly: the least m whose prefix sum of c (in
// v/c^2-descending labels) reaches C_{r,n} for every m < r < n.
std::size_t index_by_crossing_scan(const Instance& inst) {
    std::vector<std::size_t> order(inst.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Scalar ka = inst[a].v / (inst[a].c * inst[a].c), kb = inst[b].v / (inst[b].c * inst[b].c);
        return ka > kb || (ka == kb && inst[a].id < inst[b].id);
    });
    const std::size_t n = order.size();
    const Airplane& last = inst[order[n - 1]];
    Scalar prefix(0);
    for (std::size_t m = 1; m < n; ++m) {
        prefix += inst[order[m - 1]].c;
        bool reaches = true;
        for (std::size_t r = m; r + 1 < n; ++r)
            if (prefix < *crossing_point(inst[order[r]], last)) reaches = false;
        if (reaches) return m;
    }
    return n - 1;
}

// Algorithm-level restatement of the heuristic on plain rationals.
std::size_t heuristic_by_rationals(const Instance& inst) {
    const std::size_t n = inst.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return inst[a].v / (inst[a].c * inst[a].c) > inst[b].v / (inst[b].c * inst[b].c);
    });
    Scalar best(-1);
    std::vector<std::size_t> best_far;
    for (std::size_t s = 0; s + 1 < n; ++s) {
        std::vector<std::size_t> far{order[s]};
        std::vector<bool> used(n, false);
        used[order[s]] = true;
        Scalar ctx = inst[order[s]].c;
        while (far.size() < n) {
            std::size_t pick = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (used[i]) continue;
                if (pick == n) {
                    pick = i;
                    continue;
                }
                const Scalar a = phi(inst[i], ctx), b = phi(inst[pick], ctx);
                if (a > b || (a == b && inst[i].id < inst[pick].id)) pick = i;
            }
            used[pick] = true;
            far.push_back(pick);
            ctx += inst[pick].c;
        }
        Permutation pi;
        for (auto it = far.rbegin(); it != far.rend(); ++it) pi.push_back(inst[*it].id);
        const Scalar total = total_distance(inst, pi).total;
        if (total > best) best = total, best_far = far;
    }
    std::size_t top = 0;
    for (std::size_t k = 1; k < n; ++k) {
        const Airplane &a = inst[best_far[k]], &b = inst[best_far[top]];
        if (a.v / a.c > b.v / b.c) top = k;
    }
    return top;
}

}  // namespace

TEST_SUITE("complexity") {

TEST_CASE("q_star") {
    CHECK(q_star(2).value() == 1);
    CHECK(q_star(4).value() == 4);
    CHECK(q_star(10).value() == 256);
    CHECK(q_star(1000).scientific(3) == "2.68e300");
    CHECK_THROWS_AS(q_star(1), Error);
}

TEST_CASE("q_m_exact") {
    CHECK(q_m_exact(4, 1).value() == 1);
    CHECK(q_m_exact(10, 3).value() == 37);
    for (std::size_t n = 2; n < 30; ++n) CHECK(q_m_exact(n, n - 1).value() == power(2, n - 2));
    CHECK_THROWS_AS(q_m_exact(10, 0), Error);
    CHECK_THROWS_AS(q_m_exact(10, 10), Error);
}

TEST_CASE("q_m_bound") {
    CHECK(q_m_bound(2, 1) == q(1));
    CHECK(scientific(q_m_bound(1000, 63).value(), 3) == "2.72e101");
    CHECK(scientific(q_m_bound(126, 63).value(), 3) == "1.90e38");
    // exactly 2.27495...e52; the published table prints 2.28e52
    CHECK(scientific(q_m_bound(189, 63).value(), 3) == "2.27e52");
    CHECK(abs(q_m_bound(189, 63).value() - mpq_class(mpz_class(228) * power(10, 50))) * 100 <
          mpq_class(mpz_class(228) * power(10, 50)));
    CHECK(q_m_bound(10, 3) == Scalar(mpq_class(9 * 120, 10)));
    CHECK_THROWS_AS(q_m_bound(10, 0), Error);
    CHECK_THROWS_AS(q_m_bound(10, 11), Error);
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(5, 2).value() == 10);
    CHECK(binomial(5, 0).value() == 1);
    CHECK(binomial(5, 6).value() == 0);
    CHECK(factorial(10).value() == 3628800);
    for (std::size_t n = 0; n <= 64; ++n) {
        mpz_class sum = 0;
        for (std::size_t p = 0; p <= n; ++p) sum += binomial(n, p).value();
        CHECK(sum == power(2, n));
    }
}

TEST_CASE("bound chain for m >= 2") {
    for (std::size_t m = 2; m <= 20; ++m) {
        for (std::size_t n = 2 * m + 1; n <= 200; ++n) {
            for (std::size_t p = 1; p < m; ++p) CHECK(binomial(n - 2, p - 1).value() < binomial(n - 2, p).value());
            const mpq_class exact(q_m_exact(n, m).value());
            const mpq_class mid(mpz_class(m) * binomial(n - 2, m - 1).value());
            const mpq_class bound = q_m_bound(n, m).value();
            mpz_class falling = 1;
            for (std::size_t t = 0; t < m; ++t) falling *= static_cast<unsigned long>(n - t);
            CHECK(exact < mid);
            CHECK(mid < bound);
            CHECK(bound <= mpq_class(falling));
            CHECK(bound < mpq_class(power(n, m)));
        }
    }
}

TEST_CASE("bound chain collapses at m = 1") {
    for (std::size_t n = 3; n <= 50; ++n) {
        CHECK(q_m_exact(n, 1).value() == 1);
        CHECK(binomial(n - 2, 0).value() == 1);
        CHECK(q_m_bound(n, 1) == q(1));
    }
}

TEST_CASE("growth ratio") {
    for (std::size_t n = 1; n < 40; ++n) CHECK(growth_ratio(n, 1) == q(1));
    CHECK(growth_ratio(1000, 63) == q(1000, 938));
    for (std::size_t m = 1; m <= 12; ++m) {
        Scalar previous(1000);
        for (std::size_t n = m; n <= 80; ++n) {
            const Scalar r = growth_ratio(n, m);
            CHECK(q_m_bound(n + 1, m) == r * q_m_bound(n, m));
            CHECK(r - Scalar(1) == Scalar(mpq_class(static_cast<long>(m) - 1, static_cast<long>(n + 1 - m))));
            if (m > 1) CHECK(r < previous);
            previous = r;
        }
    }
}

TEST_CASE("make_report regimes") {
    const ComplexityReport a = make_report(126, 63);
    CHECK(a.regime == Regime::Exponential);
    const ComplexityReport b = make_report(127, 63);
    CHECK(b.regime == Regime::Polynomial);
    CHECK(mpq_class(b.q_m_exact.value()) < b.q_m_bound.value());
    CHECK(b.q_m_exact.value() <= b.q_star.value());
    CHECK(make_report(10, 0).bound_index() == 1);
}

TEST_CASE("estimate_m examples") {
    CHECK(*estimate_m(testing::triple_example()).m == 1);
    CHECK(*estimate_m(testing::pair_example()).m == 1);
    const ComplexityReport r = estimate_m(table4_family(1000));
    CHECK(*r.m == 63);
    CHECK(r.q_m_bound.to_decimal(3) == "2.72e101");
    CHECK(r.regime == Regime::Polynomial);
    CHECK(*estimate_m(table4_family(1000, {false, Scalar(2000)})).m == 62);
}

TEST_CASE("estimate_m rejects instances outside reverse order") {
    try {
        estimate_m(fleet({{"4", "2"}, {"12", "3"}}));
        FAIL("expected a precondition error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Precondition);
    }
    CHECK_THROWS_AS(estimate_m(fleet({{"4", "2"}})), Error);
}

TEST_CASE("estimate_m matches the crossing scan") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        GeneratorParams p;
        p.n = 2 + seed % 40;
        p.seed = seed;
        const Instance inst = random_cro(p);
        CAPTURE(seed);
        CHECK(*estimate_m(inst).m == index_by_crossing_scan(inst));
    }
    for (std::size_t n : {50, 200, 1000}) CHECK(*estimate_m(table4_family(n)).m == index_by_crossing_scan(table4_family(n)));
}

TEST_CASE("heuristic examples") {
    CHECK(*heuristic_m(testing::triple_example()).m_prime == 1);
    CHECK_THROWS_AS(heuristic_m(fleet({{"4", "2"}})), Error);
    CHECK(*heuristic_m(testing::pair_example()).m_prime == 1);
    // aligned pair: the max-v/c airplane is also first in v/c^2 and flies farthest
    const ComplexityReport r = heuristic_m(fleet({{"4", "2"}, {"12", "3"}}));
    CHECK(*r.m_prime == 0);
    CHECK(r.bound_index() == 1);
}

TEST_CASE("heuristic matches the rational restatement") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GeneratorParams p;
        p.n = 3 + seed % 12;
        p.seed = 500 + seed;
        const Instance cro = random_cro(p);
        CHECK(*heuristic_m(cro).m_prime == heuristic_by_rationals(cro));
        const Instance general = random_general(3 + seed % 9, seed);
        CHECK(*heuristic_m(general).m_prime == heuristic_by_rationals(general));
    }
    CHECK(*heuristic_m(table4_family(80)).m_prime == heuristic_by_rationals(table4_family(80)));
}

TEST_CASE("heuristic does not depend on workers") {
    const Instance inst = table4_family(200);
    CHECK(*heuristic_m(inst, 1).m_prime == *heuristic_m(inst, 3).m_prime);
}

TEST_CASE("reports") {
    const auto t2 = table2_report();
    REQUIRE(t2["rows"].size() == 4);
    CHECK(t2["rows"][3]["f_n"]["exact"] == "3628800");
    CHECK(t2["rows"][3]["q_star"]["exact"] == "256");

    const auto t5 = table5_report(1000);
    CHECK(t5["m"] == 63);
    bool saw_189 = false;
    for (const auto& row : t5["rows"]) {
        if (row["n"] == 189) {
            saw_189 = true;
            CHECK(row["q_star"]["sci"] == "1.96e56");
            CHECK(row["q_m_bound"]["sci"] == "2.27e52");
        }
    }
    CHECK(saw_189);

    const auto t6 = table6_report(200);
    CHECK(t6["rows"].size() >= 2);
    CHECK(t6["rows"].back()["n"] == 200);
}

}
