#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minkdef {

/// Named assignment of point literals, serialization-friendly and ordered.
struct Assignment {
    std::vector<std::pair<std::string, std::string>> items;

    void set(const std::string& var, const std::string& literal) {
        items.emplace_back(var, literal);
    }
};

/// Outcome of one check. A Fail always carries a concrete falsifying
/// assignment; sampled universal directions can only report Pass with a
/// "sampling evidence" note, never a proof.
struct Verdict {
    enum class Status { Pass, Fail, Inconclusive };

    std::string id;
    Status status = Status::Pass;
    long trials = 0;
    uint64_t seed = 0;
    std::vector<std::string> notes;
    std::optional<Assignment> witness_sample;
    std::optional<Assignment> counterexample;

    bool passed() const { return status == Status::Pass; }
    void note(std::string text) { notes.push_back(std::move(text)); }
};

const char* verdict_status_name(Verdict::Status s);

} // namespace minkdef
