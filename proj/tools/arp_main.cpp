// arp: command-line front end over the C API.
//
// Exit codes: 0 success, 2 usage/parse error, 3 guard refusal, 4 precondition
// (classification) failure, 1 anything else.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arp/arp.h"
#include "json.hpp"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kGuard = 3, kPrecondition = 4 };

struct Failure {
    int code;
    std::string message;
};

int exit_code_for(arp_status s) {
    switch (s) {
        case ARP_OK: return kOk;
        case ARP_E_INVALID:
        case ARP_E_PARSE:
        case ARP_E_IO: return kUsage;
        case ARP_E_GUARD: return kGuard;
        case ARP_E_PRECONDITION: return kPrecondition;
        default: return kFailure;
    }
}

void check(arp_status s) {
    if (s != ARP_OK) throw Failure{exit_code_for(s), arp_last_error()};
}

struct InstanceDeleter {
    void operator()(arp_instance* p) const { arp_instance_free(p); }
};
using InstancePtr = std::unique_ptr<arp_instance, InstanceDeleter>;

std::string take(char* s) {
    std::string out(s);
    arp_string_free(s);
    return out;
}

InstancePtr load(const std::string& path) {
    if (path.empty()) throw Failure{kUsage, "--input is required"};
    arp_instance* p = nullptr;
    check(arp_instance_load(path.c_str(), &p));
    return InstancePtr(p);
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        std::cout.flush();
    } else {
        check(arp_write_text(output.c_str(), text.c_str()));
    }
}

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

std::string class_name(arp_class_kind k) {
    switch (k) {
        case ARP_CLASS_ALIGNED: return "aligned";
        case ARP_CLASS_COMPLETE_REVERSE_ORDER: return "complete-reverse-order";
        default: return "mixed";
    }
}

json classification(const arp_instance* inst) {
    arp_class_kind kind{};
    int ties = 0;
    check(arp_classify(inst, &kind, &ties));
    return {{"n", arp_instance_size(inst)}, {"kind", class_name(kind)}, {"ties", ties != 0}};
}

// Big values in text tables: exact when small, scientific otherwise.
std::string cell(const json& v) {
    if (v.is_object() && v.contains("exact")) {
        const std::string exact = v["exact"].get<std::string>();
        return exact.size() <= 30 && exact.find('/') == std::string::npos ? exact : v["sci"].get<std::string>();
    }
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) {
        std::ostringstream ss;
        ss.precision(1);
        ss << std::fixed << v.get<double>();
        return ss.str();
    }
    return v.dump();
}

std::string render_rows(const json& rows, const std::vector<std::string>& cols, const std::string& format) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back(cols);
    for (const json& r : rows) {
        std::vector<std::string> line;
        for (const std::string& c : cols) line.push_back(r.contains(c) ? cell(r[c]) : "-");
        cells.push_back(std::move(line));
    }
    std::string out;
    if (format == "csv") {
        for (const auto& line : cells) {
            for (std::size_t i = 0; i < line.size(); ++i) out += (i ? "," : "") + line[i];
            out += "\n";
        }
        return out;
    }
    std::vector<std::size_t> width(cols.size(), 0);
    for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            out += line[i] + std::string(width[i] - line[i].size(), ' ');
            out += i + 1 < line.size() ? "  " : "\n";
        }
    }
    return out;
}

struct Options {
    std::string input, output, method = "sequential", mode, format = "json", kind;
    std::optional<std::uint64_t> seed;
    std::size_t n = 0, k = 0;
    bool force = false, unrounded = false;
    unsigned workers = 1;
    std::string epsilon, max_ratio, max_rate;
};

arp_format instance_format(const std::string& f) {
    if (f == "json") return ARP_FORMAT_JSON;
    if (f == "csv") return ARP_FORMAT_CSV;
    throw Failure{kUsage, "instances are written as json or csv, not '" + f + "'"};
}

std::uint64_t need_seed(const Options& o) {
    if (!o.seed) throw Failure{kUsage, "--seed is required for randomized generators"};
    return *o.seed;
}

int cmd_generate(const Options& o) {
    arp_instance* raw = nullptr;
    if (o.kind == "table4") {
        if (!o.n) throw Failure{kUsage, "--n is required"};
        check(arp_generate_table4(o.n, o.unrounded ? 0 : 1, &raw));
    } else if (o.kind == "cro") {
        if (!o.n) throw Failure{kUsage, "--n is required"};
        arp_cro_params p{o.n, need_seed(o), o.epsilon.empty() ? nullptr : o.epsilon.c_str(),
                         o.max_ratio.empty() ? nullptr : o.max_ratio.c_str(),
                         o.max_rate.empty() ? nullptr : o.max_rate.c_str()};
        check(arp_generate_cro(&p, &raw));
    } else if (o.kind == "general") {
        if (!o.n) throw Failure{kUsage, "--n is required"};
        check(arp_generate_general(o.n, need_seed(o), &raw));
    } else if (o.kind == "subset") {
        const std::uint64_t seed = need_seed(o);
        InstancePtr base = load(o.input);
        check(arp_generate_subset(base.get(), o.k, seed, &raw));
    } else {
        throw Failure{kUsage, "unknown generator '" + o.kind + "'"};
    }
    InstancePtr inst(raw);
    char* text = nullptr;
    check(arp_instance_serialize(inst.get(), instance_format(o.format), &text));
    emit(take(text), o.output);
    std::cerr << "classification: " << classification(inst.get()).dump() << "\n";
    return kOk;
}

std::string solution_text(const json& sol) {
    std::string out = "method: " + sol["method"].get<std::string>() + "\n";
    if (sol.contains("pi")) {
        out += "pi:";
        for (const auto& id : sol["pi"]) out += " " + id.dump();
        out += "\ntotal: " + sol["total_exact"].get<std::string>() + " (" + sol["total_decimal"].get<std::string>() + ")\n";
    }
    if (sol.contains("q_count")) out += "q_count: " + sol["q_count"].get<std::string>() + "\n";
    out += "visited_nodes: " + sol["visited_nodes"].dump() + "\n";
    return out;
}

arp_method parse_method(const std::string& m) {
    if (m == "brute") return ARP_METHOD_BRUTE;
    if (m == "greedy") return ARP_METHOD_GREEDY;
    if (m == "sequential") return ARP_METHOD_SEQUENTIAL;
    throw Failure{kUsage, "unknown method '" + m + "'"};
}

int cmd_solve(const Options& o, bool count_only) {
    InstancePtr inst = load(o.input);
    const double t0 = now_ms();
    json sol;
    if (count_only && o.method == "oracle") {
        char* out = nullptr;
        check(arp_enumerate_oracle(inst.get(), o.force ? SIZE_MAX : 0, &out));
        json r = json::parse(take(out));
        sol = {{"method", "oracle"}, {"q_count", r["count"]}, {"visited_nodes", 0}};
    } else {
        arp_method method = parse_method(o.method);
        if (count_only && method != ARP_METHOD_SEQUENTIAL) throw Failure{kUsage, "count supports sequential or oracle"};
        arp_search_options opts{count_only ? ARP_MODE_COUNT : ARP_MODE_OPTIMIZE_AND_COUNT, o.force ? SIZE_MAX : 0,
                                o.workers};
        char* out = nullptr;
        check(arp_solve(inst.get(), method, &opts, &out));
        sol = json::parse(take(out));
    }
    sol["elapsed_ms"] = now_ms() - t0;
    emit(o.format == "text" ? solution_text(sol) : sol.dump(2) + "\n", o.output);
    return kOk;
}

int cmd_estimate(const Options& o) {
    InstancePtr inst = load(o.input);
    const std::string mode = o.mode.empty() ? "exact" : o.mode;
    if (mode != "exact" && mode != "heuristic") throw Failure{kUsage, "--mode must be exact or heuristic"};
    const double t0 = now_ms();
    char* out = nullptr;
    check(arp_estimate(inst.get(), mode == "exact" ? ARP_ESTIMATE_EXACT : ARP_ESTIMATE_HEURISTIC, o.workers, &out));
    json r = json::parse(take(out));
    r["mode"] = mode;
    r["elapsed_ms"] = now_ms() - t0;
    if (o.format == "json") {
        emit(r.dump(2) + "\n", o.output);
    } else {
        const std::vector<std::string> cols = {"n", mode == "exact" ? "m" : "m_prime", "q_star", "q_m_exact",
                                               "q_m_bound", "regime", "elapsed_ms"};
        emit(render_rows(json::array({r}), cols, o.format), o.output);
    }
    return kOk;
}

int cmd_report(const Options& o) {
    arp_report_kind kind;
    std::vector<std::string> cols;
    if (o.kind == "table2") {
        kind = ARP_REPORT_TABLE2;
        cols = {"n", "f_n", "q_star"};
    } else if (o.kind == "table5") {
        kind = ARP_REPORT_TABLE5;
        cols = {"n", "q_star", "q_m_exact", "q_m_bound", "regime"};
    } else if (o.kind == "table6") {
        kind = ARP_REPORT_TABLE6;
        cols = {"n", "m_prime", "q_m_prime_bound", "q_m_bound", "q_star", "elapsed_ms"};
    } else {
        throw Failure{kUsage, "unknown report '" + o.kind + "'"};
    }
    char* out = nullptr;
    check(arp_report(kind, o.n, o.workers, &out));
    json r = json::parse(take(out));
    if (o.format == "json") {
        emit(r.dump(2) + "\n", o.output);
    } else {
        std::string text;
        if (o.format == "text" && r.contains("m")) text = "# m = " + r["m"].dump() + " (family n = " + r["family_n"].dump() + ")\n";
        emit(text + render_rows(r["rows"], cols, o.format), o.output);
    }
    return kOk;
}

int cmd_classify(const Options& o) {
    InstancePtr inst = load(o.input);
    const json c = classification(inst.get());
    emit(o.format == "text" ? c["kind"].get<std::string>() + (c["ties"].get<bool>() ? " (ties)" : "") + "\n"
                            : c.dump(2) + "\n",
         o.output);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Airplane refueling: exact solver and complexity estimates"};
    app.require_subcommand(1);
    Options o;

    auto add_io = [&](CLI::App* sub, const std::string& formats) {
        sub->add_option("--input,-i", o.input, "Instance file (JSON or CSV)");
        sub->add_option("--output,-o", o.output, "Output path (default stdout)");
        sub->add_option("--format", o.format, "Output format: " + formats)->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--workers", o.workers, "Parallel workers")->check(CLI::PositiveNumber);
    };

    CLI::App* gen = app.add_subcommand("generate", "Generate an instance file");
    gen->add_option("kind", o.kind, "table4 | cro | general | subset")->required();
    gen->add_option("--n", o.n, "Number of airplanes");
    gen->add_option("--k", o.k, "Subset size");
    gen->add_option("--seed", o.seed, "PRNG seed (required for cro, general, subset)");
    gen->add_option("--epsilon", o.epsilon, "cro: minimal gap between consecutive v/c");
    gen->add_option("--max-ratio", o.max_ratio, "cro: upper bound M on v/c");
    gen->add_option("--max-rate", o.max_rate, "cro: upper bound M1 on c");
    gen->add_flag("--unrounded", o.unrounded, "table4: keep exact v instead of one decimal");
    add_io(gen, "json | csv");

    CLI::App* solve = app.add_subcommand("solve", "Find an optimal drop-out order");
    solve->add_option("--method", o.method, "brute | greedy | sequential");
    solve->add_flag("--force", o.force, "Lift the brute-force size guard");
    add_io(solve, "json | text");

    CLI::App* count = app.add_subcommand("count", "Count sequential feasible solutions");
    count->add_option("--method", o.method, "sequential | oracle");
    count->add_flag("--force", o.force, "Lift the oracle size guard");
    add_io(count, "json | text");

    CLI::App* est = app.add_subcommand("estimate", "Estimate the index m (exact) or m' (heuristic)");
    est->add_option("--mode", o.mode, "exact | heuristic");
    add_io(est, "json | csv | text");

    CLI::App* rep = app.add_subcommand("report", "Bound tables");
    rep->add_option("kind", o.kind, "table2 | table5 | table6")->required();
    rep->add_option("--n", o.n, "Family size for table5/table6 (default 1000)");
    add_io(rep, "json | csv | text");

    CLI::App* cls = app.add_subcommand("classify", "Classify an instance");
    add_io(cls, "json | text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(o);
        if (solve->parsed()) return cmd_solve(o, false);
        if (count->parsed()) return cmd_solve(o, true);
        if (est->parsed()) return cmd_estimate(o);
        if (rep->parsed()) return cmd_report(o);
        if (cls->parsed()) return cmd_classify(o);
    } catch (const Failure& f) {
        std::cerr << "arp: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "arp: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
