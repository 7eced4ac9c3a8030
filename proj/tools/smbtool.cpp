// smbtool: successive minimum bases, Newton polygons, ramification and
// conductors of Drinfeld modules over F_q(t), driven by YAML job files.

#include "smb/config.hpp"
#include "smb/engine.hpp"
#include "smb/errors.hpp"
#include "smb/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;

namespace {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("SMBTOOL_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "smbtool: ignoring malformed SMBTOOL_BUDGET\n";
        }
    }
    return smb::kDefaultBudget;
}

// --budget, then options.budget, then SMBTOOL_BUDGET, then the default.
std::uint64_t effective_budget(const std::optional<std::uint64_t>& flag, const smb::JobConfig& cfg) {
    if (flag) return *flag;
    if (cfg.budget) return *cfg.budget;
    return default_budget();
}

std::string render(const smb::JobResult& r, const std::string& format) {
    return format == "json" ? smb::render_json(r.json) : r.markdown;
}

// Single job: result to --out or stdout.
int run_single(const fs::path& path, smb::Command cmd, const std::optional<std::uint64_t>& budget, const std::string& format,
               const std::string& out) {
    smb::JobConfig cfg;
    try {
        cfg = smb::load_config(path);
    } catch (const smb::ValidationError& e) {
        std::cerr << "smbtool: " << e.what() << "\n";
        return smb::kExitValidation;
    }
    const smb::JobResult r = smb::run_job(cfg, cmd, effective_budget(budget, cfg));
    const std::string text = render(r, format);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "smbtool: cannot write " << out << "\n";
            return smb::kExitValidation;
        }
        f << text;
    }
    if (r.json.contains("error")) std::cerr << "smbtool: " << r.json["error"]["message"].get<std::string>() << "\n";
    return r.exit_code;
}

// Directory of *.yaml jobs, in name order. Each result goes to
// <out>/<stem>-<hash>.<command>.<format>; the exit code is the worst seen.
int run_batch(const fs::path& dir, smb::Command cmd, const std::optional<std::uint64_t>& budget, const std::string& format,
              const std::string& out) {
    std::vector<fs::path> jobs;
    for (auto& e : fs::directory_iterator(dir)) {
        const auto ext = e.path().extension();
        if (e.is_regular_file() && (ext == ".yaml" || ext == ".yml")) jobs.push_back(e.path());
    }
    std::sort(jobs.begin(), jobs.end());
    const fs::path out_dir = out.empty() ? dir : fs::path(out);
    fs::create_directories(out_dir);
    int worst = smb::kExitOk;
    for (auto& path : jobs) {
        int code;
        std::string text;
        std::string hash;
        try {
            const smb::JobConfig cfg = smb::load_config(path);
            const smb::JobResult r = smb::run_job(cfg, cmd, effective_budget(budget, cfg));
            text = render(r, format);
            hash = smb::config_hash(cfg.source);
            code = r.exit_code;
        } catch (const smb::ValidationError& e) {
            std::cerr << "smbtool: " << path.filename().string() << ": " << e.what() << "\n";
            worst = std::max(worst, static_cast<int>(smb::kExitValidation));
            continue;
        }
        const fs::path target =
            out_dir / (path.stem().string() + "-" + hash + "." + smb::to_string(cmd) + "." + format);
        std::ofstream(target) << text;
        std::cout << target.string() << " exit=" << code << "\n";
        worst = std::max(worst, code);
    }
    return worst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Successive minimum bases and conductors of Drinfeld modules"};
    std::string command, config, out, format = "json";
    std::uint64_t budget_flag = 0;
    app.add_option("command", command, "smb | newton | psi | conductor | szpiro | verify")
        ->required()
        ->check(CLI::IsMember({"smb", "newton", "psi", "conductor", "szpiro", "verify"}));
    app.add_option("--config,-c", config, "YAML job file, or a directory of them")->required();
    app.add_option("--out,-o", out, "output file (directory in batch mode)");
    app.add_option("--format,-f", format, "json or md")->check(CLI::IsMember({"json", "md"}));
    auto* budget_opt = app.add_option("--budget", budget_flag, "cap on q^{r n d} for enumerations (env SMBTOOL_BUDGET)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : smb::kExitValidation;
    }
    const smb::Command cmd = smb::parse_command(command);
    std::optional<std::uint64_t> budget;
    if (budget_opt->count() > 0) budget = budget_flag;
    try {
        if (fs::is_directory(config)) return run_batch(config, cmd, budget, format, out);
        return run_single(config, cmd, budget, format, out);
    } catch (const std::exception& e) {
        std::cerr << "smbtool: internal error: " << e.what() << "\n";
        return 1;
    }
}
