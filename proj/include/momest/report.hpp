#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <json.hpp>

#include "momest/collision.hpp"
#include "momest/planner.hpp"
#include "momest/regime.hpp"

namespace momest {

inline constexpr int kReportFormatVersion = 1;

// Machine-readable run report emitted by every CLI subcommand. Serializes
// to a single versioned JSON document and round-trips losslessly.
struct RunReport {
    int format_version = kReportFormatVersion;
    std::string command;  // "estimate" | "plan" | "regime"
    EstimatorConfig config;
    std::variant<MomentEstimate, SamplePlan, RegimeResult> result;
    double wall_ms = 0.0;
    std::uint64_t peak_distinct_symbols = 0;

    nlohmann::json to_json() const;
    static RunReport from_json(const nlohmann::json& j);

    std::string to_string() const { return to_json().dump(2); }
};

bool operator==(const RunReport& a, const RunReport& b);

}  // namespace momest
