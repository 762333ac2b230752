#include "arp/arp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "arp/complexity.hpp"
#include "arp/error.hpp"
#include "arp/generator.hpp"
#include "arp/io.hpp"
#include "arp/reports.hpp"
#include "arp/solvers.hpp"

struct arp_instance {
    arp::Instance inst;
    std::optional<arp::Provenance> prov;
};

namespace {

thread_local std::string g_last_error;

template <class F>
arp_status guarded(F&& f) {
    try {
        g_last_error.clear();
        f();
        return ARP_OK;
    } catch (const arp::Error& e) {
        g_last_error = e.what();
        return static_cast<arp_status>(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return ARP_E_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ARP_E_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (!p) throw arp::invalid_argument(std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::optional<arp::InstanceFormat> to_format(arp_format f) {
    switch (f) {
        case ARP_FORMAT_JSON: return arp::InstanceFormat::Json;
        case ARP_FORMAT_CSV: return arp::InstanceFormat::Csv;
        case ARP_FORMAT_AUTO: return std::nullopt;
    }
    throw arp::invalid_argument("unknown format");
}

arp_instance* wrap(arp::Instance inst, std::optional<arp::Provenance> prov = std::nullopt) {
    return new arp_instance{std::move(inst), std::move(prov)};
}

arp::Permutation to_perm(const uint32_t* pi, size_t n) {
    require(pi, "pi");
    return arp::Permutation(pi, pi + n);
}

arp::Scalar param_or(const char* text, arp::Scalar fallback) {
    return text ? arp::Scalar::parse(text) : fallback;
}

}  // namespace

extern "C" {

const char* arp_version(void) { return "1.0.0"; }
const char* arp_last_error(void) { return g_last_error.c_str(); }
void arp_string_free(char* s) { std::free(s); }

arp_status arp_instance_create(size_t n, const uint32_t* ids, const char* const* v, const char* const* c,
                               arp_instance** out) {
    return guarded([&] {
        require(out, "out");
        require(ids, "ids");
        require(v, "v");
        require(c, "c");
        std::vector<arp::Airplane> planes;
        for (size_t i = 0; i < n; ++i) {
            require(v[i], "v[i]");
            require(c[i], "c[i]");
            planes.push_back({ids[i], arp::Scalar::parse(v[i]), arp::Scalar::parse(c[i])});
        }
        *out = wrap(arp::Instance(std::move(planes)));
    });
}

arp_status arp_instance_parse(const char* text, arp_format format, arp_instance** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = wrap(arp::parse_instance(text, to_format(format)));
    });
}

arp_status arp_instance_load(const char* path, arp_instance** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = wrap(arp::read_instance_file(path));
    });
}

arp_status arp_instance_serialize(const arp_instance* inst, arp_format format, char** out) {
    return guarded([&] {
        require(inst, "inst");
        require(out, "out");
        const auto f = to_format(format).value_or(arp::InstanceFormat::Json);
        *out = dup_string(arp::write_instance(inst->inst, f, inst->prov));
    });
}

arp_status arp_instance_save(const arp_instance* inst, const char* path, arp_format format) {
    return guarded([&] {
        require(inst, "inst");
        require(path, "path");
        const auto f = to_format(format).value_or(arp::InstanceFormat::Json);
        arp::write_file_atomic(path, arp::write_instance(inst->inst, f, inst->prov));
    });
}

size_t arp_instance_size(const arp_instance* inst) { return inst ? inst->inst.size() : 0; }

void arp_instance_free(arp_instance* inst) { delete inst; }

arp_status arp_generate_table4(size_t n, int rounded, arp_instance** out) {
    return guarded([&] {
        require(out, "out");
        arp::Table4Options opts;
        opts.rounded = rounded != 0;
        arp::Provenance prov{"table4", std::nullopt, {{"n", std::to_string(n)}, {"rounded", rounded ? "true" : "false"}}};
        *out = wrap(arp::table4_family(n, opts), std::move(prov));
    });
}

arp_status arp_generate_cro(const arp_cro_params* params, arp_instance** out) {
    return guarded([&] {
        require(params, "params");
        require(out, "out");
        arp::GeneratorParams gp;
        gp.n = params->n;
        gp.seed = params->seed;
        gp.assumptions.epsilon = param_or(params->epsilon, gp.assumptions.epsilon);
        gp.assumptions.M = param_or(params->max_ratio, gp.assumptions.M);
        gp.assumptions.M1 = param_or(params->max_rate, gp.assumptions.M1);
        arp::Provenance prov{"cro",
                             params->seed,
                             {{"n", std::to_string(gp.n)},
                              {"epsilon", gp.assumptions.epsilon.to_string()},
                              {"M", gp.assumptions.M.to_string()},
                              {"M1", gp.assumptions.M1.to_string()}}};
        *out = wrap(arp::random_cro(gp), std::move(prov));
    });
}

arp_status arp_generate_general(size_t n, uint64_t seed, arp_instance** out) {
    return guarded([&] {
        require(out, "out");
        arp::Provenance prov{"general", seed, {{"n", std::to_string(n)}}};
        *out = wrap(arp::random_general(n, seed), std::move(prov));
    });
}

arp_status arp_generate_subset(const arp_instance* inst, size_t k, uint64_t seed, arp_instance** out) {
    return guarded([&] {
        require(inst, "inst");
        require(out, "out");
        arp::Provenance prov{"subset", seed, {{"k", std::to_string(k)}}};
        *out = wrap(arp::random_subset(inst->inst, k, seed), std::move(prov));
    });
}

arp_status arp_classify(const arp_instance* inst, arp_class_kind* kind, int* ties) {
    return guarded([&] {
        require(inst, "inst");
        require(kind, "kind");
        const arp::InstanceClass cls = arp::classify(inst->inst);
        *kind = static_cast<arp_class_kind>(cls.kind);
        if (ties) *ties = cls.ties ? 1 : 0;
    });
}

arp_status arp_is_sequential_feasible(const arp_instance* inst, const uint32_t* pi, size_t n, int* feasible) {
    return guarded([&] {
        require(inst, "inst");
        require(feasible, "feasible");
        *feasible = arp::is_sequential_feasible(inst->inst, to_perm(pi, n)) ? 1 : 0;
    });
}

arp_status arp_total_distance(const arp_instance* inst, const uint32_t* pi, size_t n, char** exact_out) {
    return guarded([&] {
        require(inst, "inst");
        require(exact_out, "exact_out");
        *exact_out = dup_string(arp::total_distance(inst->inst, to_perm(pi, n)).total.to_string());
    });
}

arp_status arp_solve(const arp_instance* inst, arp_method method, const arp_search_options* opts, char** json_out) {
    return guarded([&] {
        require(inst, "inst");
        require(json_out, "json_out");
        arp::SearchOptions so;
        if (opts) {
            so.mode = static_cast<arp::SearchMode>(opts->mode);
            if (opts->max_n_guard) so.max_n_guard = opts->max_n_guard;
            so.worker_hint = opts->workers ? opts->workers : 1;
        }
        arp::Solution sol;
        switch (method) {
            case ARP_METHOD_BRUTE: sol = arp::brute_force(inst->inst, so); break;
            case ARP_METHOD_GREEDY: sol = arp::greedy_sequential(inst->inst); break;
            case ARP_METHOD_SEQUENTIAL: sol = arp::sequential_search(inst->inst, so); break;
            default: throw arp::invalid_argument("unknown method");
        }
        *json_out = dup_string(arp::to_json(sol).dump());
    });
}

arp_status arp_enumerate_oracle(const arp_instance* inst, size_t max_n_guard, char** json_out) {
    return guarded([&] {
        require(inst, "inst");
        require(json_out, "json_out");
        arp::SearchOptions so;
        if (max_n_guard) so.max_n_guard = max_n_guard;
        const auto leaves = arp::enumerate_sfs_oracle(inst->inst, so);
        nlohmann::json j = {{"count", std::to_string(leaves.size())}, {"leaves", leaves}};
        *json_out = dup_string(j.dump());
    });
}

arp_status arp_write_text(const char* path, const char* text) {
    return guarded([&] {
        require(path, "path");
        require(text, "text");
        arp::write_file_atomic(path, text);
    });
}

arp_status arp_estimate(const arp_instance* inst, arp_estimate_mode mode, unsigned workers, char** json_out) {
    return guarded([&] {
        require(inst, "inst");
        require(json_out, "json_out");
        const arp::ComplexityReport r = mode == ARP_ESTIMATE_EXACT ? arp::estimate_m(inst->inst)
                                                                   : arp::heuristic_m(inst->inst, workers ? workers : 1);
        *json_out = dup_string(arp::to_json(r).dump());
    });
}

arp_status arp_bounds(size_t n, size_t m, char** json_out) {
    return guarded([&] {
        require(json_out, "json_out");
        nlohmann::json j = {{"n", n}, {"m", m}, {"q_star", arp::exact_and_scientific(arp::q_star(n))},
                            {"q_m_exact", arp::exact_and_scientific(arp::q_m_exact(n, m))},
                            {"q_m_bound", arp::exact_and_scientific(arp::q_m_bound(n, m))},
                            {"growth_ratio", arp::growth_ratio(n, m).to_string()}};
        *json_out = dup_string(j.dump());
    });
}

arp_status arp_report(arp_report_kind kind, size_t family_n, unsigned workers, char** json_out) {
    return guarded([&] {
        require(json_out, "json_out");
        const std::size_t fam = family_n ? family_n : 1000;
        nlohmann::json j;
        switch (kind) {
            case ARP_REPORT_TABLE2: j = arp::table2_report(); break;
            case ARP_REPORT_TABLE5: j = arp::table5_report(fam); break;
            case ARP_REPORT_TABLE6: j = arp::table6_report(fam, workers ? workers : 1); break;
            default: throw arp::invalid_argument("unknown report kind");
        }
        *json_out = dup_string(j.dump());
    });
}

}  // extern "C"
