// Acceptance suite: one PASS/FAIL line per criterion.
//
// usage: arp_acceptance [--cli PATH] [--known-failures 3,6]
// Exit status is 0 when the failing set equals the declared known failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arp/complexity.hpp"
#include "arp/core.hpp"
#include "arp/generator.hpp"
#include "arp/io.hpp"
#include "arp/solvers.hpp"

using namespace arp;

namespace {

// Tolerances and sizes, fixed by the criteria.
constexpr int kOptimalityPerN = 200;
constexpr int kEnumerationPerN = 50;
constexpr std::size_t kCroMaxN = 12;
constexpr int kCroPerN = 50;
constexpr std::size_t kTargetM = 63;
constexpr std::size_t kTargetMTolerance = 1;
constexpr double kEstimateSeconds = 1.0;
constexpr double kHeuristicSeconds = 30.0;
constexpr std::size_t kHeuristicTolerance = 2;
constexpr int kMagnitudePercent = 1;
constexpr int kGreedyInstances = 500;
constexpr int kLemmaPairs = 1000;
constexpr double kSearchSeconds = 5.0;
constexpr int kSubsetSeeds = 20;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

std::uint64_t seed_for(std::size_t n, int k, std::uint64_t salt) { return salt * 1000003ULL + n * 1009ULL + k; }

Instance cro(std::size_t n, std::uint64_t seed) {
    GeneratorParams p;
    p.n = n;
    p.seed = seed;
    return random_cro(p);
}

// q_count of every instance seen by criteria 1 and 2, reused by criterion 3.
struct CountRecord {
    std::size_t n;
    BigCount q;
};
std::vector<CountRecord> g_counts;

Outcome oracle_optimality() {
    int mismatches = 0, total = 0;
    for (std::size_t n = 2; n <= 7; ++n) {
        for (int k = 0; k < kOptimalityPerN; ++k) {
            Instance inst = random_general(n, seed_for(n, k, 1));
            Solution s = sequential_search(inst);
            Solution b = brute_force(inst);
            ++total;
            if (s.schedule->total != b.schedule->total) ++mismatches;
            g_counts.push_back({n, *s.q_count});
        }
    }
    return {mismatches == 0, std::to_string(total) + " instances, " + std::to_string(mismatches) + " total mismatches"};
}

Outcome enumeration_equivalence() {
    int mismatches = 0, total = 0;
    SearchOptions opts;
    opts.mode = SearchMode::EnumerateAll;
    for (std::size_t n = 2; n <= 7; ++n) {
        for (int k = 0; k < kEnumerationPerN; ++k) {
            Instance inst = k % 2 == 0 ? random_general(n, seed_for(n, k, 2)) : cro(n, seed_for(n, k, 2));
            Solution s = sequential_search(inst, opts);
            ++total;
            if (s.leaves != enumerate_sfs_oracle(inst)) ++mismatches;
            g_counts.push_back({n, *s.q_count});
        }
    }
    return {mismatches == 0, std::to_string(total) + " instances, " + std::to_string(mismatches) + " leaf-set mismatches"};
}

Outcome theorem4_bound() {
    SearchOptions opts;
    opts.mode = SearchMode::CountOnly;
    std::vector<CountRecord> records = g_counts;
    for (std::size_t n = 2; n <= kCroMaxN; ++n)
        for (int k = 0; k < kCroPerN; ++k) records.push_back({n, *sequential_search(cro(n, seed_for(n, k, 3)), opts).q_count});
    int violations = 0;
    std::string worst;
    for (const CountRecord& r : records) {
        if (r.n >= 2 && r.q.value() > q_star(r.n).value()) {
            if (violations++ == 0) worst = " (first: n=" + std::to_string(r.n) + ", q_count=" + r.q.to_string() + ")";
        }
    }
    return {violations == 0, std::to_string(records.size()) + " instances, " + std::to_string(violations) + " violations" + worst};
}

Instance make(std::vector<std::pair<long, long>> vc) {
    std::vector<Airplane> planes;
    AirplaneId id = 1;
    for (auto [v, c] : vc) planes.push_back({id++, Scalar(v), Scalar(c)});
    return Instance(std::move(planes));
}

Outcome table1_counts() {
    SearchOptions opts;
    opts.mode = SearchMode::CountOnly;
    const BigCount q2 = *sequential_search(make({{4, 2}, {7, 3}}), opts).q_count;
    const BigCount q3 = *sequential_search(make({{4, 2}, {7, 3}, {19, 5}}), opts).q_count;

    // Generator grid: epsilon x M x M1 x seed, four airplanes each.
    mpz_class best = 0;
    int grid = 0;
    for (const char* eps : {"0.0001", "0.01", "0.1", "0.5"})
        for (long M : {5L, 20L, 100L})
            for (long M1 : {5L, 20L, 100L})
                for (int k = 0; k < 40; ++k) {
                    GeneratorParams p;
                    p.n = 4;
                    p.seed = seed_for(4, k, 4) + 7919ULL * grid;
                    p.assumptions.epsilon = Scalar::parse(eps);
                    p.assumptions.M = Scalar(M);
                    p.assumptions.M1 = Scalar(M1);
                    ++grid;
                    best = std::max(best, sequential_search(random_cro(p), opts).q_count->value());
                }
    const bool pass = q2.value() == 1 && q3.value() == 2 && best == 4;
    return {pass, "pair q=" + q2.to_string() + ", triple q=" + q3.to_string() + ", max over " + std::to_string(grid) +
                      " four-airplane instances = " + best.get_str()};
}

Outcome example1_estimate() {
    Instance family = table4_family(1000);
    const auto t0 = std::chrono::steady_clock::now();
    const ComplexityReport r = estimate_m(family);
    const double s = seconds_since(t0);
    const std::size_t m = *r.m;
    const std::size_t diff = m > kTargetM ? m - kTargetM : kTargetM - m;
    return {diff <= kTargetMTolerance && s < kEstimateSeconds, "m=" + std::to_string(m) + " (target 63 +-1) in " + fmt_seconds(s)};
}

Outcome heuristic_series() {
    const std::size_t ns[] = {126, 189, 252, 315, 630, 945, 1000};
    const std::size_t expected[] = {55, 51, 48, 47, 42, 40, 39};
    const auto t0 = std::chrono::steady_clock::now();
    bool within = true;
    std::string got;
    for (int i = 0; i < 7; ++i) {
        const std::size_t mp = *heuristic_m(table4_family(ns[i])).m_prime;
        const std::size_t diff = mp > expected[i] ? mp - expected[i] : expected[i] - mp;
        if (diff > kHeuristicTolerance) within = false;
        got += (i ? "," : "") + std::to_string(mp);
    }
    const double s = seconds_since(t0);
    return {within && s < kHeuristicSeconds, "m'={" + got + "} vs {55,51,48,47,42,40,39} +-2, " + fmt_seconds(s)};
}

mpz_class pow10z(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

bool within_percent(const mpq_class& value, const mpq_class& target, int percent) {
    return abs(value - target) * 100 <= target * percent;
}

Outcome bound_magnitudes() {
    const mpq_class star(q_star(1000).value());
    const mpq_class bound = q_m_bound(1000, 63).value();
    const mpq_class t_star = mpq_class(mpz_class(268) * pow10z(298));
    const mpq_class t_bound = mpq_class(mpz_class(272) * pow10z(99));
    const bool ok = within_percent(star, t_star, kMagnitudePercent) && within_percent(bound, t_bound, kMagnitudePercent) &&
                    q_star(10).value() == 256;
    return {ok, "q_star(1000)=" + q_star(1000).scientific(3) + ", q_m_bound(1000,63)=" + scientific(bound, 3) +
                    ", q_star(10)=" + q_star(10).to_string()};
}

Outcome binomial_identity() {
    int bad = 0;
    for (std::size_t n = 2; n <= 64; ++n) {
        mpz_class sum = 0;
        for (std::size_t p = 0; p <= n - 2; ++p) sum += binomial(n - 2, p).value();
        if (sum != q_star(n).value() || q_m_exact(n, n - 1).value() != sum) ++bad;
    }
    return {bad == 0, "n=2..64, " + std::to_string(bad) + " mismatches"};
}

Outcome lemma7_chain() {
    int checked = 0, bad = 0, bad_above_one = 0;
    std::string first;
    for (std::size_t m = 1; m <= 20; ++m) {
        for (std::size_t n = 2 * m + 1; n <= 200; ++n) {
            ++checked;
            const mpq_class exact(q_m_exact(n, m).value());
            const mpq_class mid(mpz_class(m) * binomial(n - 2, m - 1).value());
            const mpq_class bound = q_m_bound(n, m).value();
            mpz_class nm;
            mpz_ui_pow_ui(nm.get_mpz_t(), n, m);
            if (!(exact < mid && mid < bound && bound < mpq_class(nm))) {
                if (m > 1) ++bad_above_one;
                if (bad++ == 0)
                    first = " (first: m=" + std::to_string(m) + ", n=" + std::to_string(n) + ": " + exact.get_str() + " < " +
                            mid.get_str() + " < " + bound.get_str() + " < " + nm.get_str() + ")";
            }
        }
    }
    return {bad == 0, std::to_string(checked) + " pairs, " + std::to_string(bad) + " strict-chain violations, " +
                           std::to_string(bad_above_one) + " of them with m > 1" + first};
}

Outcome greedy_membership() {
    int failures = 0;
    for (int k = 0; k < kGreedyInstances; ++k) {
        const std::size_t n = 1 + k % 10;
        Instance inst = random_general(n, seed_for(n, k, 10));
        Solution g = greedy_sequential(inst);
        if (!is_sequential_feasible(inst, g.schedule->pi)) ++failures;
    }
    return {failures == 0, std::to_string(kGreedyInstances) + " instances, " + std::to_string(failures) + " failures"};
}

// Expected sign of phi_i - phi_j at context C for one pair, per the four-case table.
int expected_sign(const Airplane& i, const Airplane& j, const Scalar& C, bool& unmatched) {
    const Scalar r2i = i.v / (i.c * i.c), r2j = j.v / (j.c * j.c);
    const Scalar ri = i.v / i.c, rj = j.v / j.c;
    const auto cross = crossing_point(i, j);
    if (r2i >= r2j && ri >= rj) return 1;  // >= everywhere: +1 means "non-negative"
    if (r2i <= r2j && ri < rj) return -2;   // strictly negative everywhere
    if (!cross) {
        unmatched = true;
        return 0;
    }
    if (r2i > r2j && ri < rj) return C < *cross ? 1 : (C == *cross ? 0 : -2);
    if (r2i < r2j && ri > rj) return C < *cross ? -1 : (C == *cross ? 0 : 2);
    unmatched = true;
    return 0;
}

bool sign_matches(int expected, const Scalar& diff) {
    switch (expected) {
        case 2: return diff.sign() > 0;
        case 1: return diff.sign() >= 0;
        case 0: return diff.sign() == 0;
        case -1: return diff.sign() <= 0;
        case -2: return diff.sign() < 0;
    }
    return false;
}

Outcome lemma_properties() {
    int identity_bad = 0;
    for (int k = 0; k < kLemmaPairs; ++k) {
        Instance inst = cro(2, seed_for(2, k, 11));
        const Airplane &a = inst[0], &b = inst[1];
        const auto cross = crossing_point(a, b);
        const Scalar rhs = (b.v - a.v) / delta(a, b) - b.c - a.c;
        if (!cross || *cross != rhs) ++identity_bad;
    }
    int sign_bad = 0, samples = 0, unmatched = 0;
    Rng rng(20241);
    for (int k = 0; k < kLemmaPairs; ++k) {
        Instance inst = random_general(2, seed_for(2, k, 12));
        const Airplane &a = inst[0], &b = inst[1];
        std::vector<Scalar> cs = {Scalar(0), Scalar(mpq_class(1, 1000)), Scalar(1), Scalar(1000)};
        for (int t = 0; t < 4; ++t) cs.push_back(Scalar(mpq_class(rng.between(0, 100000), 100)));
        if (auto cross = crossing_point(a, b)) {
            const Scalar eps(mpq_class(1, 1000000));
            cs.push_back(*cross);
            cs.push_back(*cross + eps);
            if (*cross > eps) cs.push_back(*cross - eps);
            cs.push_back(*cross * Scalar(2));
            cs.push_back(*cross / Scalar(2));
        }
        for (const Scalar& C : cs) {
            bool miss = false;
            const int e = expected_sign(a, b, C, miss);
            ++samples;
            if (miss) {
                ++unmatched;
                continue;
            }
            if (!sign_matches(e, phi(a, C) - phi(b, C))) ++sign_bad;
        }
    }
    const bool ok = identity_bad == 0 && sign_bad == 0 && unmatched == 0;
    return {ok, "crossing identity " + std::to_string(identity_bad) + "/" + std::to_string(kLemmaPairs) +
                    " failures; sign table " + std::to_string(sign_bad) + "/" + std::to_string(samples) +
                    " failures, " + std::to_string(unmatched) + " unclassified"};
}

std::string g_cli;

Outcome performance() {
    auto t0 = std::chrono::steady_clock::now();
    Solution s = sequential_search(table4_family(20));
    const double search_s = seconds_since(t0);

    double cli_s = -1;
    std::string cli_note = "CLI not given";
    if (!g_cli.empty()) {
        const auto path = std::filesystem::temp_directory_path() / "arp_acceptance_table4_1000.json";
        write_file_atomic(path, write_instance(table4_family(1000), InstanceFormat::Json));
        const std::string cmd = "\"" + g_cli + "\" estimate --input \"" + path.string() + "\" > /dev/null";
        t0 = std::chrono::steady_clock::now();
        const int rc = std::system(cmd.c_str());
        cli_s = seconds_since(t0);
        std::filesystem::remove(path);
        cli_note = "estimate CLI n=1000 " + fmt_seconds(cli_s) + (rc == 0 ? "" : " (exit " + std::to_string(rc) + ")");
        if (rc != 0) cli_s = 1e9;
    }
    const bool ok = search_s < kSearchSeconds && cli_s >= 0 && cli_s < kEstimateSeconds;
    return {ok, "table4(20) search " + fmt_seconds(search_s) + " (q_count=" + s.q_count->to_string() + "), " + cli_note};
}

Outcome subset_property() {
    Instance family = table4_family(1000);
    std::size_t worst = 0;
    std::string ms;
    for (int seed = 1; seed <= kSubsetSeeds; ++seed) {
        const std::size_t m = *estimate_m(random_subset(family, 500, seed)).m;
        worst = std::max(worst, m);
        ms += (seed > 1 ? "," : "") + std::to_string(m);
    }
    return {worst <= kTargetM, "m over 20 seeds = {" + ms + "}, max " + std::to_string(worst)};
}

std::set<int> parse_list(const std::string& s) {
    std::set<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> known;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--cli" && i + 1 < argc) g_cli = argv[++i];
        else if (a == "--known-failures" && i + 1 < argc) known = parse_list(argv[++i]);
        else {
            std::cerr << "usage: arp_acceptance [--cli PATH] [--known-failures LIST]\n";
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"oracle optimality", oracle_optimality},
        {"enumeration equivalence", enumeration_equivalence},
        {"sequential feasible count bound 2^(n-2)", theorem4_bound},
        {"worst-case counts n=2,3,4", table1_counts},
        {"exact estimator m on table4(1000)", example1_estimate},
        {"heuristic estimator series", heuristic_series},
        {"bound magnitudes", bound_magnitudes},
        {"binomial identity", binomial_identity},
        {"bound chain", lemma7_chain},
        {"greedy membership", greedy_membership},
        {"crossing identity and sign table", lemma_properties},
        {"performance", performance},
        {"subset property", subset_property},
    };

    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) failed.insert(id);
        std::printf("criterion %2d %s  %s: %s [%s]%s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str(), fmt_seconds(seconds_since(t0)).c_str(),
                    !o.pass && known.count(id) ? " (known failure)" : "");
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
    if (failed != known) {
        std::printf("failing set differs from the declared known failures\n");
        return 1;
    }
    return 0;
}
