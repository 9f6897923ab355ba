#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gammaring/report.hpp"

namespace gammaring {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// verdict, falsification, witnesses, counters, hypothesis_notes, notes, seed.
nlohmann::json report_body(const VerdictReport& report);

struct DocumentHeader {
    std::string command;
    std::string instance_name;
    std::string instance_hash; // empty when the command has no single instance
    std::optional<double> elapsed;
};

/// The report body plus tool_version, instance, command and elapsed.
nlohmann::json report_document(const DocumentHeader& header, const VerdictReport& report);

/// Two-space indented text with a trailing newline. Keys come out sorted.
std::string dump_document(const nlohmann::json& doc);

} // namespace gammaring
