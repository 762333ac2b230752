#include "arp/solvers.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "arp/error.hpp"
#include "kernel.hpp"

namespace arp {

using detail::ScaledFleet;

std::string_view to_string(Method method) {
    switch (method) {
        case Method::BruteForce: return "brute";
        case Method::Greedy: return "greedy";
        case Method::SequentialSearch: return "sequential";
    }
    return "sequential";
}

namespace {

void check_guard(const Instance& inst, const SearchOptions& opts, const char* what) {
    if (opts.max_n_guard < 1) throw invalid_argument("max_n_guard must be >= 1");
    if (inst.size() > opts.max_n_guard)
        throw Error(ErrorCode::GuardExceeded, std::string(what) + " refuses n = " + std::to_string(inst.size()) +
                                                  " (> " + std::to_string(opts.max_n_guard) +
                                                  "); n! orders would be enumerated. Raise the guard to force it.");
}

Permutation sorted_ids(const Instance& inst) {
    Permutation ids;
    for (const Airplane& a : inst.airplanes()) ids.push_back(a.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

// Better = larger total, then lexicographically smaller order.
bool better(const mpq_class& s, const Permutation& pi, const mpq_class& best_s, const Permutation& best_pi) {
    const int c = cmp(s, best_s);
    return c > 0 || (c == 0 && pi < best_pi);
}

}  // namespace

Solution brute_force(const Instance& inst, const SearchOptions& opts) {
    check_guard(inst, opts, "brute force");
    const std::size_t n = inst.size();
    Permutation pi = sorted_ids(inst);
    std::vector<const Airplane*> plane(n);
    for (std::size_t l = 0; l < n; ++l) plane[l] = &inst.by_id(pi[l]);
    mpq_class all_c = 0;
    for (const Airplane& a : inst.airplanes()) all_c += a.c.value();
    // prefix[l] = legs of positions < l; after[l] = consumption behind position l.
    // next_permutation only rewrites a suffix, and a position's leg depends only on
    // the set behind it, so legs before the first changed position are reused.
    std::vector<mpq_class> prefix(n + 1), after(n + 1);
    after[0] = all_c;
    Permutation best;
    mpq_class best_s;
    std::uint64_t count = 0;
    std::size_t changed = 0;
    Permutation previous = pi;
    do {
        while (changed < n && previous[changed] == pi[changed]) ++changed;
        if (count == 0) changed = 0;
        for (std::size_t l = changed; l < n; ++l) {
            plane[l] = &inst.by_id(pi[l]);
            after[l + 1] = after[l] - plane[l]->c.value();
            prefix[l + 1] = prefix[l] + plane[l]->v.value() / (plane[l]->c.value() + after[l + 1]);
        }
        const mpq_class& s = prefix[n];
        // lexicographic iteration: the first maximum seen is the smallest
        if (best.empty() || cmp(s, best_s) > 0) {
            best_s = s;
            best = pi;
        }
        ++count;
        previous = pi;
        changed = 0;
    } while (std::next_permutation(pi.begin(), pi.end()));
    Solution sol;
    sol.method = Method::BruteForce;
    sol.schedule = total_distance(inst, best);
    sol.visited_nodes = count;
    return sol;
}

std::vector<Permutation> enumerate_sfs_oracle(const Instance& inst, const SearchOptions& opts) {
    check_guard(inst, opts, "oracle enumeration");
    Permutation pi = sorted_ids(inst);
    std::vector<Permutation> out;
    do {
        if (is_sequential_feasible(inst, pi)) out.push_back(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

Solution greedy_sequential(const Instance& inst) {
    return detail::with_scaled_fleet(inst, [&]<class Int>(const ScaledFleet<Int>& fleet) {
        std::vector<char> used(fleet.size(), 0);
        std::vector<std::size_t> far_first;
        detail::greedy_fill(fleet, used, Int(0), far_first);
        Permutation pi;
        for (auto it = far_first.rbegin(); it != far_first.rend(); ++it) pi.push_back(fleet.id[*it]);
        Solution sol;
        sol.method = Method::Greedy;
        sol.schedule = total_distance(inst, pi);
        sol.visited_nodes = fleet.size();
        return sol;
    });
}

namespace {

template <class Int>
class Enumerator {
public:
    Enumerator(const ScaledFleet<Int>& fleet, SearchMode mode, std::span<const std::size_t> candidate_order)
        : fleet_(fleet), mode_(mode), cand_(candidate_order.begin(), candidate_order.end()) {
        const std::size_t n = fleet.size();
        used_.assign(n, 0);
        placed_.reserve(n);
        ctx_.reserve(n);
        partial_.assign(n + 1, 0);
    }

    /// Explores the subtree with `first` in the farthest position.
    void run_root(std::size_t first) {
        place(first, Int(0));
        descend(fleet_.c[first]);
        unplace();
    }

    std::uint64_t leaves = 0;
    std::uint64_t visited = 0;
    bool has_best = false;
    mpq_class best_total;
    Permutation best_pi;
    std::vector<Permutation> all;

private:
    bool optimizing() const { return mode_ != SearchMode::CountOnly; }

    // New airplane `a` at context `ctx` against every airplane already placed farther.
    bool admissible(std::size_t a, const Int& ctx) const {
        const std::size_t d = placed_.size();
        if (d == 0) return true;
        if (!fleet_.phi_le(a, placed_[d - 1], ctx_[d - 1])) return false;
        for (std::size_t k = 0; k + 1 < d; ++k) {
            if (fleet_.phi_le(a, placed_[k], ctx_[k])) continue;
            if (!fleet_.phi_le(a, placed_[k], ctx)) return false;
        }
        return true;
    }

    void place(std::size_t a, const Int& ctx) {
        const std::size_t d = placed_.size();
        if (optimizing()) partial_[d + 1] = partial_[d] + fleet_.leg(a, ctx);
        placed_.push_back(a);
        ctx_.push_back(ctx);
        used_[a] = 1;
        ++visited;
    }

    void unplace() {
        used_[placed_.back()] = 0;
        placed_.pop_back();
        ctx_.pop_back();
    }

    void descend(const Int& ctx) {
        const std::size_t n = fleet_.size();
        if (placed_.size() == n) {
            on_leaf();
            return;
        }
        for (std::size_t a : cand_) {
            if (used_[a] || !admissible(a, ctx)) continue;
            place(a, ctx);
            descend(Int(ctx + fleet_.c[a]));
            unplace();
        }
    }

    Permutation current() const {
        Permutation pi;
        pi.reserve(placed_.size());
        for (auto it = placed_.rbegin(); it != placed_.rend(); ++it) pi.push_back(fleet_.id[*it]);
        return pi;
    }

    void on_leaf() {
        ++leaves;
        if (mode_ == SearchMode::EnumerateAll) all.push_back(current());
        if (!optimizing()) return;
        const mpq_class& s = partial_[placed_.size()];
        const int c = has_best ? cmp(s, best_total) : 1;
        if (c < 0) return;
        Permutation pi = current();
        if (c > 0 || pi < best_pi) {
            has_best = true;
            best_total = s;
            best_pi = std::move(pi);
        }
    }

    const ScaledFleet<Int>& fleet_;
    SearchMode mode_;
    std::vector<std::size_t> cand_;
    std::vector<char> used_;
    std::vector<std::size_t> placed_;
    std::vector<Int> ctx_;
    std::vector<mpq_class> partial_;
};

}  // namespace

Solution sequential_search(const Instance& inst, const SearchOptions& opts) {
    return detail::with_scaled_fleet(inst, [&]<class Int>(const ScaledFleet<Int>& fleet) {
        const std::size_t n = fleet.size();
        std::vector<std::size_t> by_id(n);
        for (std::size_t i = 0; i < n; ++i) by_id[i] = i;
        std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) { return fleet.id[a] < fleet.id[b]; });

        const unsigned workers = std::max(1u, std::min<unsigned>(opts.worker_hint, static_cast<unsigned>(n)));
        std::vector<Enumerator<Int>> parts;
        parts.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) parts.emplace_back(fleet, opts.mode, by_id);
        // Root branches are dealt round-robin; each worker owns its own state.
        auto work = [&](unsigned w) {
            for (std::size_t r = w; r < n; r += workers) parts[w].run_root(by_id[r]);
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        }

        Solution sol;
        sol.method = Method::SequentialSearch;
        std::uint64_t leaves = 0;
        Enumerator<Int>* best = nullptr;
        for (auto& p : parts) {
            leaves += p.leaves;
            sol.visited_nodes += p.visited;
            if (p.has_best && (!best || better(p.best_total, p.best_pi, best->best_total, best->best_pi))) best = &p;
            if (opts.mode == SearchMode::EnumerateAll)
                sol.leaves.insert(sol.leaves.end(), std::make_move_iterator(p.all.begin()),
                                  std::make_move_iterator(p.all.end()));
        }
        std::sort(sol.leaves.begin(), sol.leaves.end());
        if (opts.mode != SearchMode::OptimizeOnly) sol.q_count = BigCount(leaves);
        if (best) sol.schedule = total_distance(inst, best->best_pi);
        return sol;
    });
}

}  // namespace arp
