#include "smb/config.hpp"

#include "smb/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace smb {

namespace {

[[noreturn]] void field_error(const std::string& key, const std::string& msg) {
    throw ValidationError(key + ": " + msg);
}

template <typename T>
T scalar_as(const YAML::Node& node, const std::string& key) {
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        field_error(key, "wrong type");
    }
}

std::string scalar_string(const YAML::Node& node, const std::string& key) {
    if (!node.IsScalar()) field_error(key, "expected a scalar");
    return node.Scalar();
}

template <typename F>
auto with_key(const std::string& key, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ValidationError& e) {
        field_error(key, e.what());
    }
}

} // namespace

JobConfig parse_config(const std::string& text, const std::string& name) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ValidationError(std::string("config: malformed YAML: ") + e.what());
    }
    if (!root.IsMap()) throw ValidationError("config: top level must be a mapping");
    JobConfig cfg;
    cfg.name = name;
    cfg.source = text;

    const YAML::Node field = root["field"];
    if (!field || !field.IsMap()) field_error("field", "missing table");
    if (!field["p"]) field_error("field.p", "missing");
    const unsigned p = scalar_as<unsigned>(field["p"], "field.p");
    const unsigned k = field["k"] ? scalar_as<unsigned>(field["k"], "field.k") : 1;
    cfg.field = with_key("field", [&] {
        if (field["modulus"])
            return FqField::make(p, k, FqField::parse_modulus(p, scalar_string(field["modulus"], "field.modulus")));
        return FqField::make(p, k);
    });

    if (const YAML::Node module = root["module"]) {
        if (!module.IsMap()) field_error("module", "expected a table");
        const YAML::Node coeffs = module["phi_t"];
        if (!coeffs || !coeffs.IsSequence()) field_error("module.phi_t", "expected a list of coefficient strings");
        std::vector<std::string> strs;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            strs.push_back(scalar_string(coeffs[i], "module.phi_t[" + std::to_string(i) + "]"));
        cfg.module = with_key("module.phi_t", [&] { return DrinfeldModule::from_strings(cfg.field, strs); });
        if (module["rank"]) {
            const int rank = scalar_as<int>(module["rank"], "module.rank");
            if (rank != cfg.module->rank())
                field_error("module.rank", "declared rank " + std::to_string(rank) + " but phi_t has rank " +
                                               std::to_string(cfg.module->rank()));
        }
    }
    if (const YAML::Node place = root["place"])
        cfg.place = with_key("place", [&] { return Place::parse(cfg.field, scalar_string(place, "place")); });
    if (const YAML::Node u = root["u"]) {
        cfg.u = with_key("u", [&] { return Poly::parse(cfg.field, scalar_string(u, "u")); });
        if (!cfg.u->is_monic() || !is_irreducible(*cfg.u)) field_error("u", "must be monic irreducible");
    }
    if (const YAML::Node n = root["n"]) {
        cfg.n = scalar_as<int>(n, "n");
        if (cfg.n < 1) field_error("n", "must be at least 1");
    }
    if (const YAML::Node opts = root["options"]) {
        if (!opts.IsMap()) field_error("options", "expected a table");
        if (opts["E"]) cfg.E = with_key("options.E", [&] { return parse_rational(scalar_string(opts["E"], "options.E")); });
        if (opts["budget"]) cfg.budget = scalar_as<std::uint64_t>(opts["budget"], "options.budget");
    }
    return cfg;
}

JobConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config: cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.stem().string());
}

std::string config_hash(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace smb
