#pragma once

#include "minkdef/field.hpp"
#include "minkdef/matrix.hpp"
#include "minkdef/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minkdef {

inline constexpr const char* kToolVersion = "0.1.0";

/// Batch result of one command invocation. Rendering is deterministic:
/// re-running with identical arguments and seed yields byte-identical
/// JSON (object keys are emitted sorted, arrays keep plan order, and no
/// wall-clock data is recorded).
struct Report {
    std::string command;
    int n = 2;
    std::string field = "Q";
    uint64_t seed = 0;
    long trials = 0;
    std::vector<Verdict> verdicts;
    std::optional<StatusMatrix> matrix;

    bool all_passed() const {
        for (const auto& v : verdicts)
            if (v.status != Verdict::Status::Pass) return false;
        return true;
    }

    std::string to_json() const;
    std::string to_text() const;
};

} // namespace minkdef
