#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "arp/complexity.hpp"
#include "arp/core.hpp"
#include "arp/solvers.hpp"

namespace arp {

enum class InstanceFormat { Json, Csv };

/// Where a generated instance came from; written into the file header.
struct Provenance {
    std::string generator;  // table4 | cro | general | subset
    std::optional<std::uint64_t> seed;
    std::map<std::string, std::string> params;
};

Instance parse_instance(std::string_view text, std::optional<InstanceFormat> format = std::nullopt);
Instance read_instance_file(const std::filesystem::path& path);
std::string write_instance(const Instance& inst, InstanceFormat format, const std::optional<Provenance>& prov = std::nullopt);

/// Writes through a temporary sibling and renames, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

nlohmann::json exact_and_scientific(const BigCount& value);
nlohmann::json exact_and_scientific(const Scalar& value);

nlohmann::json to_json(const Solution& sol);
nlohmann::json to_json(const ComplexityReport& report);
nlohmann::json to_json(const InstanceClass& cls);

}  // namespace arp
