#include "arp/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "arp/error.hpp"
#include "arp/generator.hpp"

namespace arp {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

AirplaneId parse_id(std::string_view text) {
    text = trim(text);
    if (text.empty() || text.size() > 9) throw parse_error("bad airplane id '" + std::string(text) + "'");
    AirplaneId id = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw parse_error("bad airplane id '" + std::string(text) + "'");
        id = id * 10 + static_cast<AirplaneId>(ch - '0');
    }
    return id;
}

Scalar scalar_field(const json& j, const char* key) {
    if (!j.contains(key)) throw parse_error(std::string("airplane entry lacks '") + key + "'");
    const json& f = j.at(key);
    if (f.is_string()) return Scalar::parse(f.get<std::string>());
    if (f.is_number_integer()) return Scalar(f.get<long>());
    throw parse_error(std::string("'") + key + "' must be a decimal string");
}

Instance parse_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("airplanes") || !doc["airplanes"].is_array())
        throw parse_error("instance JSON needs an 'airplanes' array");
    std::vector<Airplane> planes;
    for (const json& a : doc["airplanes"]) {
        if (!a.is_object() || !a.contains("id") || !a["id"].is_number_integer() || a["id"].get<long long>() <= 0 ||
            a["id"].get<long long>() > std::numeric_limits<AirplaneId>::max())
            throw parse_error("each airplane needs a positive 32-bit integer 'id'");
        planes.push_back({static_cast<AirplaneId>(a["id"].get<long long>()), scalar_field(a, "v"), scalar_field(a, "c")});
    }
    try {
        return Instance(std::move(planes));
    } catch (const Error& e) {
        throw parse_error(e.what());
    }
}

Instance parse_csv(std::string_view text) {
    std::vector<Airplane> planes;
    bool header = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        if (!header) {
            if (line != "id,v,c") throw parse_error("CSV header must be 'id,v,c'");
            header = true;
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos)
            throw parse_error("CSV line " + std::to_string(line_no) + ": expected three fields");
        planes.push_back({parse_id(line.substr(0, c1)), Scalar::parse(line.substr(c1 + 1, c2 - c1 - 1)),
                          Scalar::parse(line.substr(c2 + 1))});
    }
    if (!header) throw parse_error("CSV input is empty");
    try {
        return Instance(std::move(planes));
    } catch (const Error& e) {
        throw parse_error(e.what());
    }
}

}  // namespace

Instance parse_instance(std::string_view text, std::optional<InstanceFormat> format) {
    if (!format) {
        std::string_view t = trim(text);
        while (!t.empty() && (t.front() == '\n' || t.front() == ' ')) t.remove_prefix(1);
        format = (!t.empty() && t.front() == '{') ? InstanceFormat::Json : InstanceFormat::Csv;
    }
    return *format == InstanceFormat::Json ? parse_json(text) : parse_csv(text);
}

Instance read_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

std::string write_instance(const Instance& inst, InstanceFormat format, const std::optional<Provenance>& prov) {
    if (format == InstanceFormat::Json) {
        json doc = json::object();
        if (prov) {
            json g = {{"kind", prov->generator}, {"prng", kPrngName}};
            if (prov->seed) g["seed"] = *prov->seed;
            for (const auto& [k, v] : prov->params) g[k] = v;
            doc["generator"] = g;
        }
        json planes = json::array();
        for (const Airplane& a : inst.airplanes())
            planes.push_back({{"id", a.id}, {"v", a.v.to_string()}, {"c", a.c.to_string()}});
        doc["airplanes"] = std::move(planes);
        return doc.dump(2) + "\n";
    }
    std::string out;
    if (prov) {
        out += "# generator=" + prov->generator + " prng=" + kPrngName;
        if (prov->seed) out += " seed=" + std::to_string(*prov->seed);
        for (const auto& [k, v] : prov->params) out += " " + k + "=" + v;
        out += "\n";
    }
    out += "id,v,c\n";
    for (const Airplane& a : inst.airplanes())
        out += std::to_string(a.id) + "," + a.v.to_string() + "," + a.c.to_string() + "\n";
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::Io, "cannot write '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error(ErrorCode::Io, "write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot move output into place: " + ec.message());
}

json exact_and_scientific(const BigCount& value) {
    return {{"exact", value.to_string()}, {"sci", value.scientific(3)}};
}

json exact_and_scientific(const Scalar& value) {
    return {{"exact", value.to_string()}, {"sci", scientific(value.value(), 3)}};
}

json to_json(const Solution& sol) {
    json j = {{"method", std::string(to_string(sol.method))}, {"visited_nodes", sol.visited_nodes}};
    if (sol.schedule) {
        j["pi"] = sol.schedule->pi;
        j["total_exact"] = sol.schedule->total.to_string();
        j["total_decimal"] = sol.schedule->total.to_decimal(12);
    }
    if (sol.q_count) j["q_count"] = sol.q_count->to_string();
    if (!sol.leaves.empty()) j["leaves"] = sol.leaves;
    return j;
}

json to_json(const ComplexityReport& r) {
    json j = {{"n", r.n},
              {"bound_index", r.bound_index()},
              {"q_star", exact_and_scientific(r.q_star)},
              {"q_m_exact", exact_and_scientific(r.q_m_exact)},
              {"q_m_bound", exact_and_scientific(r.q_m_bound)},
              {"regime", std::string(to_string(r.regime))}};
    if (r.m) j["m"] = *r.m;
    if (r.m_prime) j["m_prime"] = *r.m_prime;
    return j;
}

json to_json(const InstanceClass& cls) {
    return {{"kind", std::string(to_string(cls.kind))}, {"ties", cls.ties}};
}

}  // namespace arp
