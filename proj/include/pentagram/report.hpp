#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pentagram {

enum class CheckStatus { pass, fail, skipped_degenerate };

inline const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped-degenerate";
    }
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    nlohmann::ordered_json witness; // inputs + both sides, present on fail
};

/// Machine-readable outcome of one verification command. Deterministic byte
/// output given the same seed and flags: timing stays 0 unless explicitly
/// requested.
struct VerificationReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<CheckResult> checks;
    long long timing_ms = 0;

    void add_pass(const std::string& name) { checks.push_back({name, CheckStatus::pass, {}}); }

    void add_fail(const std::string& name, nlohmann::ordered_json witness) {
        checks.push_back({name, CheckStatus::fail, std::move(witness)});
    }

    void add_skipped(const std::string& name) {
        checks.push_back({name, CheckStatus::skipped_degenerate, {}});
    }

    void add(const std::string& name, bool ok, nlohmann::ordered_json witness_on_fail) {
        if (ok)
            add_pass(name);
        else
            add_fail(name, std::move(witness_on_fail));
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }

    std::size_t count(CheckStatus s) const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["command"] = command;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : parameters) params[k] = v;
        j["parameters"] = std::move(params);
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json cj;
            cj["name"] = c.name;
            cj["status"] = status_name(c.status);
            if (c.status == CheckStatus::fail) cj["witness"] = c.witness;
            cs.push_back(std::move(cj));
        }
        j["checks"] = std::move(cs);
        j["timing_ms"] = timing_ms;
        return j;
    }

    std::string to_text() const {
        std::string out = "# " + command + "\n";
        for (const auto& [k, v] : parameters) out += "#   " + k + " = " + v + "\n";
        for (const auto& c : checks) {
            out += std::string(c.status == CheckStatus::pass
                                   ? "PASS "
                                   : (c.status == CheckStatus::fail ? "FAIL " : "SKIP ")) +
                   c.name + "\n";
            if (c.status == CheckStatus::fail) out += "     witness: " + c.witness.dump() + "\n";
        }
        out += "# " + std::to_string(count(CheckStatus::pass)) + " passed, " +
               std::to_string(count(CheckStatus::fail)) + " failed, " +
               std::to_string(count(CheckStatus::skipped_degenerate)) + " skipped\n";
        return out;
    }
};

} // namespace pentagram
