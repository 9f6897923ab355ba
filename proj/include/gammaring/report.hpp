#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gammaring/abelian.hpp"

namespace gammaring {

struct NamedValue {
    std::string name;
    std::vector<Coord> coords;

    friend bool operator==(const NamedValue&, const NamedValue&) = default;
};

/// One offending tuple: what was checked and the values involved.
struct Witness {
    std::string kind;
    std::vector<NamedValue> values;
    /// Instance name, set when a report spans several instances.
    std::string instance;

    Witness() = default;
    explicit Witness(std::string k) : kind(std::move(k)) {}

    Witness& with(std::string name, const GroupElement& x) {
        values.push_back({std::move(name), x.coords});
        return *this;
    }
    Witness& with(std::string name, Coord scalar) {
        values.push_back({std::move(name), {scalar}});
        return *this;
    }
    const NamedValue* find(std::string_view name) const {
        for (const auto& v : values)
            if (v.name == name) return &v;
        return nullptr;
    }

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of an analysis or verification. Invariant: !verdict implies at
/// least one witness. `falsification` is set by theorem verifiers when all
/// hypotheses held and the conclusion still failed.
struct VerdictReport {
    bool verdict = true;
    bool falsification = false;
    std::vector<Witness> witnesses;
    std::map<std::string, std::uint64_t> counters;
    std::vector<std::pair<std::string, bool>> hypothesis_notes;
    std::vector<std::string> notes;
    std::optional<std::uint64_t> seed;

    void fail(Witness w) {
        verdict = false;
        witnesses.push_back(std::move(w));
    }
    void note(std::string label, bool value) { hypothesis_notes.emplace_back(std::move(label), value); }
    std::optional<bool> hypothesis(std::string_view label) const {
        for (const auto& [l, v] : hypothesis_notes)
            if (l == label) return v;
        return std::nullopt;
    }
    void count(const std::string& key, std::uint64_t n = 1) { counters[key] += n; }

    explicit operator bool() const noexcept { return verdict; }
};

} // namespace gammaring
