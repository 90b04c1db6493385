#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyface {

/**
 * Uniform result record for the verification routines: which check ran, on
 * what parameters, and either a clean pass or the witnesses refuting it.
 *
 * passed is true iff no witness was ever recorded (witness storage is capped
 * to keep reports readable; the overflow count is preserved in `omitted`).
 * Remarks that do not refute anything — e.g. a parameter combination the
 * check classifies as out of scope — go to notes with passed left true.
 */
struct CheckReport {
    static constexpr std::size_t max_witnesses = 64;

    std::string check;
    std::map<std::string, std::string> params;
    bool passed = true;
    std::vector<std::string> witnesses;
    std::size_t omitted = 0;
    std::string notes;
    std::optional<std::uint64_t> seed;

    void fail(std::string witness) {
        passed = false;
        if (witnesses.size() < max_witnesses)
            witnesses.push_back(std::move(witness));
        else
            ++omitted;
    }

    void note(const std::string& text) {
        if (!notes.empty()) notes += "; ";
        notes += text;
    }

    void set_param(const std::string& key, long long value) { params[key] = std::to_string(value); }
    void set_param(const std::string& key, const std::string& value) { params[key] = value; }
};

} // namespace polyface
