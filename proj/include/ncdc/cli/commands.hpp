#pragma once

#include "ncdc/cli/spec_document.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ncdc::cli {

struct CommandOptions {
    std::optional<std::size_t> max_degree;
    bool truncated = false;
    std::optional<std::string> element;
    std::optional<std::string> emit;
    std::optional<std::string> q_value;
    /// optimal: also report the kernel of d0⊗id_V, the linear condition as
    /// literally written for the switch b0, and whether it differs.
    bool switch_form = false;
};

struct CommandResult {
    int exit_code = 0;  // 0 all pass, 1 a check failed, 2 input error
    std::string text;
    nlohmann::ordered_json json;
};

const std::vector<std::string>& command_names();

/// Runs one command on a parsed document. Never throws for input problems;
/// they are reported with exit code 2.
CommandResult run_command(const std::string& command, SpecDocument doc, const CommandOptions& options);

/// Parses the file at `path` and runs the command.
CommandResult run_command_file(const std::string& command, const std::string& path, const CommandOptions& options);

}  // namespace ncdc::cli
