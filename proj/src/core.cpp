#include "arp/core.hpp"

#include <algorithm>
#include <string>

#include "arp/error.hpp"

namespace arp {

Instance::Instance(std::vector<Airplane> airplanes) : airplanes_(std::move(airplanes)) {
    if (airplanes_.empty()) throw invalid_argument("instance needs at least one airplane");
    by_id_.reserve(airplanes_.size());
    for (std::size_t i = 0; i < airplanes_.size(); ++i) {
        const Airplane& a = airplanes_[i];
        if (a.id == 0) throw invalid_argument("airplane ids must be positive");
        if (a.v.sign() <= 0 || a.c.sign() <= 0)
            throw invalid_argument("airplane " + std::to_string(a.id) + ": v and c must be positive");
        by_id_.emplace_back(a.id, i);
    }
    std::sort(by_id_.begin(), by_id_.end());
    for (std::size_t i = 1; i < by_id_.size(); ++i)
        if (by_id_[i].first == by_id_[i - 1].first)
            throw invalid_argument("duplicate airplane id " + std::to_string(by_id_[i].first));
}

std::size_t Instance::index_of(AirplaneId id) const {
    auto it = std::lower_bound(by_id_.begin(), by_id_.end(), std::pair<AirplaneId, std::size_t>{id, 0});
    if (it == by_id_.end() || it->first != id) throw invalid_argument("unknown airplane id " + std::to_string(id));
    return it->second;
}

void Instance::check_permutation(std::span<const AirplaneId> pi) const {
    if (pi.size() != size())
        throw invalid_argument("permutation has " + std::to_string(pi.size()) + " entries, instance has " +
                               std::to_string(size()));
    std::vector<char> seen(size(), 0);
    for (AirplaneId id : pi) {
        const std::size_t k = index_of(id);
        if (seen[k]) throw invalid_argument("airplane id " + std::to_string(id) + " repeated in permutation");
        seen[k] = 1;
    }
}

std::string_view to_string(ClassKind kind) {
    switch (kind) {
        case ClassKind::Aligned: return "aligned";
        case ClassKind::CompleteReverseOrder: return "complete-reverse-order";
        case ClassKind::Mixed: return "mixed";
    }
    return "mixed";
}

void AssumptionParams::validate() const {
    if (epsilon.sign() <= 0 || M.sign() <= 0 || M1.sign() <= 0)
        throw invalid_argument("epsilon, M and M1 must be strictly positive");
}

Scalar phi(const Airplane& a, const Scalar& context) {
    if (context.sign() < 0) throw invalid_argument("phi: context must be non-negative");
    return a.v / (a.c * (a.c + context));
}

Schedule total_distance(const Instance& inst, std::span<const AirplaneId> pi) {
    inst.check_permutation(pi);
    const std::size_t n = pi.size();
    Schedule s;
    s.pi.assign(pi.begin(), pi.end());
    s.cumulative.assign(n, Scalar{});
    s.legs.resize(n);
    for (std::size_t l = n - 1; l-- > 0;) s.cumulative[l] = s.cumulative[l + 1] + inst.by_id(pi[l + 1]).c;
    for (std::size_t l = 0; l < n; ++l) {
        const Airplane& a = inst.by_id(pi[l]);
        s.legs[l] = a.v / (a.c + s.cumulative[l]);
        s.total += s.legs[l];
    }
    return s;
}

std::optional<Scalar> crossing_point(const Airplane& a_i, const Airplane& a_j) {
    const Scalar den = a_j.v * a_i.c - a_i.v * a_j.c;
    if (den.sign() == 0) return std::nullopt;
    Scalar cross = (a_i.v * a_j.c * a_j.c - a_j.v * a_i.c * a_i.c) / den;
    if (cross.sign() <= 0) return std::nullopt;
    return cross;
}

Scalar delta(const Airplane& a_i, const Airplane& a_j) { return a_j.v / a_j.c - a_i.v / a_i.c; }

bool is_sequential_feasible(const Instance& inst, std::span<const AirplaneId> pi) {
    inst.check_permutation(pi);
    const std::size_t n = pi.size();
    std::vector<Scalar> ctx(n);
    for (std::size_t l = n - 1; l-- > 0;) ctx[l] = ctx[l + 1] + inst.by_id(pi[l + 1]).c;
    for (std::size_t i = 0; i < n; ++i) {
        const Airplane& a = inst.by_id(pi[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Airplane& b = inst.by_id(pi[j]);
            const bool later_context = phi(a, ctx[j]) <= phi(b, ctx[j]);
            if (j == i + 1) {
                if (!later_context) return false;
                continue;
            }
            if (!later_context && !(phi(a, ctx[i]) <= phi(b, ctx[i]))) return false;
        }
    }
    return true;
}

std::vector<std::size_t> order_by_v_over_c2_desc(const Instance& inst) {
    std::vector<std::size_t> idx(inst.size());
    std::vector<Scalar> key(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) {
        idx[i] = i;
        key[i] = inst[i].v / (inst[i].c * inst[i].c);
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (key[a] != key[b]) return key[a] > key[b];
        return inst[a].id < inst[b].id;
    });
    return idx;
}

InstanceClass classify(const Instance& inst) {
    const std::size_t n = inst.size();
    std::vector<Scalar> k2(n), k1(n);
    for (std::size_t i = 0; i < n; ++i) {
        k1[i] = inst[i].v / inst[i].c;
        k2[i] = k1[i] / inst[i].c;
    }
    InstanceClass out;
    auto has_dup = [](std::vector<Scalar> xs) {
        std::sort(xs.begin(), xs.end());
        return std::adjacent_find(xs.begin(), xs.end()) != xs.end();
    };
    out.ties = has_dup(k2) || has_dup(k1);
    if (out.ties) return out;  // Mixed

    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return k2[a] < k2[b]; });
    bool aligned = true, reverse = true;
    for (std::size_t t = 1; t < n; ++t) {
        // walking v/c^2 upwards: aligned needs v/c to rise too, CRO needs it to fall
        if (k1[idx[t]] < k1[idx[t - 1]]) aligned = false;
        if (k1[idx[t]] > k1[idx[t - 1]]) reverse = false;
    }
    if (aligned)
        out.kind = ClassKind::Aligned;
    else if (reverse)
        out.kind = ClassKind::CompleteReverseOrder;
    return out;
}

}  // namespace arp
