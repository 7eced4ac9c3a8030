#ifndef SMB_CONFIG_HPP
#define SMB_CONFIG_HPP

#include "smb/drinfeld.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace smb {

// One job, read from a YAML file:
//
//   field:  {p: 2, k: 1}            # optional modulus: "x^2+x+1"
//   module: {rank: 2, phi_t: [t, t, "1"]}
//   place:  infinite                # or a monic irreducible, e.g. "t"
//   u:      t
//   n:      2
//   options: {E: 1, budget: 65536}
struct JobConfig {
    std::string name;
    std::string source;  // raw text, hashed for batch output names
    FieldPtr field;
    std::optional<DrinfeldModule> module;
    std::optional<Place> place;
    std::optional<Poly> u;
    int n = 1;
    Rational E = 1;
    std::optional<std::uint64_t> budget;
};

JobConfig parse_config(const std::string& text, const std::string& name = "job");
JobConfig load_config(const std::filesystem::path& path);

// FNV-1a of the config text, as 16 hex digits.
std::string config_hash(const std::string& text);

} // namespace smb

#endif
