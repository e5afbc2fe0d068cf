#pragma once
// Command dispatch and reports. JSON reports use the schema tag
// "hopfcy-report/1"; text reports are for people.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfcy/config.hpp"

namespace hopfcy {

inline constexpr const char* kReportSchema = "hopfcy-report/1";

struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> provenance;
    long timing_us = 0;

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);
    bool operator==(const Report& o) const;
};

std::string render_json(const Report& r);
Report parse_report(const std::string& text);

struct RunOptions {
    ObjectKind object = ObjectKind::Hopf;
    std::optional<std::size_t> max_degree;  // overrides the config value
    std::string cartan_type;                // roots without a config
};

struct Outcome {
    Report report;
    std::vector<std::string> text;
    int exit_code = 0;  // 0 success, 1 negative verdict, 2 input error
};

const std::vector<std::string>& command_names();
// config may be null for commands that do not read one
Outcome run_command(const std::string& command, const SessionConfig* config, const RunOptions& opt);

// embedded regression suite
struct RegressRow {
    std::string example, check, expected, computed;
    bool pass = false;
    std::string note;
};

struct BuiltinConfig {
    std::string name, description, yaml;
};
const std::vector<BuiltinConfig>& builtin_configs();
const BuiltinConfig& builtin_config(const std::string& name);
std::vector<RegressRow> run_regress();

}  // namespace hopfcy
