#ifndef SMB_REPORT_HPP
#define SMB_REPORT_HPP

#include "smb/config.hpp"

#include "json.hpp"

#include <string>

namespace smb {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 2,
    kExitHypothesis = 3,
    kExitMismatch = 4,
    kExitBudget = 5,
};

enum class Command { Smb, Newton, Psi, Conductor, Szpiro, Verify };

Command parse_command(const std::string& s);
std::string to_string(Command c);

struct JobResult {
    nlohmann::json json;
    std::string markdown;
    int exit_code = kExitOk;
};

// Runs one command. Library errors become an "error" object plus an exit code.
JobResult run_job(const JobConfig& cfg, Command command, std::uint64_t budget);

// Deterministic text: sorted keys, two-space indent, trailing newline.
std::string render_json(const nlohmann::json& j);

} // namespace smb

#endif
