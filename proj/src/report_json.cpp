#include "gammaring/report_json.hpp"

namespace gammaring {

namespace {

nlohmann::json witness_json(const Witness& w) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : w.values) values.push_back({{"name", v.name}, {"value", v.coords}});
    nlohmann::json out{{"kind", w.kind}, {"values", std::move(values)}};
    if (!w.instance.empty()) out["instance"] = w.instance;
    return out;
}

} // namespace

nlohmann::json report_body(const VerdictReport& report) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : report.witnesses) witnesses.push_back(witness_json(w));
    nlohmann::json notes = nlohmann::json::object();
    for (const auto& [label, value] : report.hypothesis_notes) notes[label] = value;
    return {
        {"verdict", report.verdict},
        {"falsification", report.falsification},
        {"witnesses", std::move(witnesses)},
        {"counters", report.counters},
        {"hypothesis_notes", std::move(notes)},
        {"notes", report.notes},
        {"seed", report.seed ? nlohmann::json(*report.seed) : nlohmann::json(nullptr)},
    };
}

nlohmann::json report_document(const DocumentHeader& header, const VerdictReport& report) {
    auto doc = report_body(report);
    doc["tool_version"] = kToolVersion;
    doc["command"] = header.command;
    doc["instance"] = header.instance_hash.empty()
                          ? nlohmann::json(nullptr)
                          : nlohmann::json{{"name", header.instance_name}, {"hash", header.instance_hash}};
    doc["elapsed"] = header.elapsed ? nlohmann::json(*header.elapsed) : nlohmann::json(nullptr);
    return doc;
}

std::string dump_document(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

} // namespace gammaring
