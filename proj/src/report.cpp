#include "smb/report.hpp"

#include "smb/conductor.hpp"
#include "smb/engine.hpp"
#include "smb/errors.hpp"
#include "smb/ramification.hpp"

#include <sstream>

namespace smb {

using nlohmann::json;

namespace {

json rat(const Rational& r) { return to_string(r); }
json val(const Valuation& v) { return v.to_string(); }

json profile_json(const SMBProfile& p) {
    json out = json::array();
    for (auto& v : p) out.push_back(rat(v));
    return out;
}

json multiset_json(const ValuationProfile& p) {
    json out = json::array();
    for (auto& [v, c] : p.entries()) out.push_back({{"valuation", rat(v)}, {"count", c}});
    return out;
}

json polygon_json(const NewtonPolygon& poly) {
    json verts = json::array(), segs = json::array();
    for (auto& v : poly.vertices) verts.push_back({v.x, rat(v.y)});
    for (std::size_t i = 0; i < poly.segment_count(); ++i)
        segs.push_back({{"slope", rat(poly.slope(i))}, {"span", poly.span(i)}});
    return {{"vertices", verts}, {"segments", segs}};
}

json lattice_json(const LatticeModel& L) {
    return {{"kind", L.kind == PlaceKind::Infinite ? "infinite" : "finite"},
            {"reduced_rank", L.reduced_rank},
            {"generators", profile_json(L.generators)},
            {"w0", rat(L.w0)}};
}

json closed_form_json(const ClosedForm& cf) {
    json out = {{"branch", cf.branch},
                {"w_j", val(cf.w_j)},
                {"lattice", profile_json(cf.lattice)},
                {"dictionary_applies", cf.dictionary_applies}};
    out["m"] = cf.m ? json(*cf.m) : json(nullptr);
    out["division"] = cf.division ? profile_json(*cf.division) : json(nullptr);
    return out;
}

json reduction_json(const ReductionProfile& r) {
    json cv = json::array(), tv = json::array();
    for (auto& v : r.coefficient_valuations) cv.push_back(val(v));
    for (auto& v : r.twisted_valuations) tv.push_back(val(v));
    return {{"reduced_rank", r.reduced_rank},
            {"twist_valuation", rat(r.twist_valuation)},
            {"stable", r.stable},
            {"integral_model", r.integral_model},
            {"coefficient_valuations", cv},
            {"twisted_valuations", tv}};
}

json conductor_json(const ConductorReport& c) {
    json out = {{"place", c.place},
                {"degree", c.degree},
                {"w_j", val(c.w_j)},
                {"case", to_string(c.conductor_case)},
                {"reason", c.reason}};
    out["f_w"] = c.exponent ? rat(*c.exponent) : json(nullptr);
    out["deg_f_w"] = c.exponent ? rat(*c.exponent * c.degree) : json(nullptr);
    return out;
}

json psi_json(const PiecewiseLinear& psi) {
    json pieces = json::array();
    for (auto& p : psi.pieces()) {
        json piece = {{"from", rat(p.from)}, {"slope", rat(p.slope)}, {"intercept", rat(p.intercept)}};
        piece["to"] = p.to ? rat(*p.to) : json("+inf");
        pieces.push_back(piece);
    }
    const FiltrationReport f = filtration_from_psi(psi);
    json breaks = json::array();
    for (auto& b : f.breaks)
        breaks.push_back({{"upper", rat(b.upper)}, {"lower", rat(b.lower)}, {"order", b.order.get_str()}});
    return {{"pieces", pieces},
            {"convex", psi.is_convex()},
            {"increasing", psi.is_increasing()},
            {"identity_on_unit_interval", psi.is_identity_on_unit_interval()},
            {"filtration", {{"g0_order", f.g0_order.get_str()}, {"breaks", breaks}}}};
}

const DrinfeldModule& need_module(const JobConfig& cfg) {
    if (!cfg.module) throw ValidationError("module: missing");
    return *cfg.module;
}
const Place& need_place(const JobConfig& cfg) {
    if (!cfg.place) throw ValidationError("place: missing");
    return *cfg.place;
}
const Poly& need_u(const JobConfig& cfg) {
    if (!cfg.u) throw ValidationError("u: missing");
    return *cfg.u;
}

json header_json(const JobConfig& cfg, Command command) {
    const FqField& F = *cfg.field;
    json out = {{"command", to_string(command)},
                {"name", cfg.name},
                {"field", {{"p", F.p()}, {"k", F.k()}, {"q", F.q()}, {"modulus", F.modulus_string()}}}};
    out["module"] = cfg.module ? json({{"rank", cfg.module->rank()}, {"phi_t", cfg.module->coefficient_strings()}})
                               : json(nullptr);
    out["place"] = cfg.place ? json(cfg.place->to_string()) : json(nullptr);
    out["u"] = cfg.u ? json(cfg.u->to_string()) : json(nullptr);
    out["n"] = cfg.n;
    return out;
}

std::string md_list(const SMBProfile& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + to_string(p[i]);
    return "[" + s + "]";
}

std::string md_multiset(const ValuationProfile& p) {
    std::string s;
    for (auto& [v, c] : p.entries()) s += (s.empty() ? "" : ", ") + to_string(v) + ": " + std::to_string(c);
    return "{" + s + "}";
}

std::string md_header(const JobConfig& cfg, Command command) {
    std::ostringstream md;
    md << "# " << to_string(command) << ": " << cfg.name << "\n\n";
    md << "- field: F_" << cfg.field->q() << "\n";
    if (cfg.module) {
        md << "- phi_t: [";
        auto cs = cfg.module->coefficient_strings();
        for (std::size_t i = 0; i < cs.size(); ++i) md << (i ? ", " : "") << cs[i];
        md << "]\n";
    }
    if (cfg.place) md << "- place: " << cfg.place->to_string() << "\n";
    if (cfg.u) md << "- u: " << cfg.u->to_string() << "\n- n: " << cfg.n << "\n";
    md << "\n";
    return md.str();
}

std::string md_conductor_table(const std::vector<ConductorReport>& rows) {
    std::ostringstream md;
    md << "| place | w(j) | case | f_w | deg·f_w |\n|---|---|---|---|---|\n";
    for (auto& c : rows) {
        md << "| " << c.place << " | " << c.w_j.to_string() << " | " << to_string(c.conductor_case) << " | "
           << (c.exponent ? to_string(*c.exponent) : "-") << " | "
           << (c.exponent ? to_string(*c.exponent * c.degree) : "-") << " |\n";
    }
    return md.str();
}

JobResult run_smb(const JobConfig& cfg, std::uint64_t budget) {
    const SMBAnalysis a = analyze_smb(need_module(cfg), need_place(cfg), need_u(cfg), cfg.n, budget);
    JobResult r;
    json levels = json::array();
    for (auto& lvl : a.trace.levels) {
        json polys = json::array();
        for (auto& p : lvl.polygons) polys.push_back(polygon_json(p));
        levels.push_back({{"level", lvl.level}, {"valuations", profile_json(lvl.valuations)}, {"polygons", polys}});
    }
    r.json["recursion"] = {{"level_one_roots", multiset_json(a.trace.level_one_profile)}, {"levels", levels}};
    r.json["smb"] = profile_json(a.recursion);
    r.json["closed_form"] = a.closed_form ? closed_form_json(*a.closed_form) : json(nullptr);
    r.json["dictionary"] = a.dictionary ? profile_json(*a.dictionary) : json(nullptr);
    r.json["dictionary_lattice"] = a.dictionary_lattice ? lattice_json(*a.dictionary_lattice) : json(nullptr);
    r.json["reduction"] = a.reduction ? reduction_json(*a.reduction) : json(nullptr);
    r.json["agree"] = a.agree;

    std::ostringstream md;
    md << "## successive minimum basis\n\n";
    md << "| level | valuations |\n|---|---|\n";
    for (auto& lvl : a.trace.levels) md << "| " << lvl.level << " | " << md_list(lvl.valuations) << " |\n";
    md << "\n- level one roots: " << md_multiset(a.trace.level_one_profile) << "\n";
    if (a.closed_form) {
        md << "- closed form (" << a.closed_form->branch << "): "
           << (a.closed_form->division ? md_list(*a.closed_form->division) : std::string("none for this n")) << "\n";
    }
    if (a.dictionary) md << "- dictionary: " << md_list(*a.dictionary) << "\n";
    md << "- agree: " << (a.agree ? "yes" : "no") << "\n";
    r.markdown = md.str();
    if (!a.agree) r.exit_code = kExitMismatch;
    return r;
}

JobResult run_newton(const JobConfig& cfg, std::uint64_t budget) {
    const DrinfeldModule& phi = need_module(cfg);
    const Place& w = need_place(cfg);
    const Poly& u = need_u(cfg);
    check_engine_shape(phi);
    const Poly a = u.pow(static_cast<unsigned>(cfg.n));
    const std::uint64_t exponent = static_cast<std::uint64_t>(phi.rank()) * a.degree();
    std::uint64_t size = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        size *= phi.q();
        if (size > budget)
            throw BudgetExceeded("budget exceeded: q^{r n d} > " + std::to_string(budget));
    }
    const TwistedPoly P = phi_of(phi, a);
    const NewtonPolygon poly = newton_polygon(P, w, std::nullopt);
    const ValuationProfile roots = profile_from_polygon(poly);
    JobResult r;
    r.json["polygon"] = polygon_json(poly);
    r.json["roots"] = multiset_json(roots);
    std::ostringstream md;
    md << "## Newton polygon of phi_{u^n}(X)/X\n\n| slope | span | root valuation |\n|---|---|---|\n";
    for (std::size_t i = 0; i < poly.segment_count(); ++i)
        md << "| " << to_string(poly.slope(i)) << " | " << poly.span(i) << " | " << to_string(-poly.slope(i))
           << " |\n";
    md << "\n- roots: " << md_multiset(roots) << "\n";
    r.markdown = md.str();
    return r;
}

JobResult run_psi(const JobConfig& cfg) {
    const DrinfeldModule& phi = need_module(cfg);
    const Place& w = need_place(cfg);
    if (phi.rank() != 2) throw UnsupportedShape("psi: rank 2 only");
    const ConductorReport c = conductor_local(phi, w);
    JobResult r;
    r.json["conductor"] = conductor_json(c);
    if (c.conductor_case == ConductorCase::HypothesisFailed) {
        r.json["psi"] = nullptr;
        r.markdown = "- case: hypothesis_failed (" + c.reason + ")\n";
        r.exit_code = kExitHypothesis;
        return r;
    }
    PiecewiseLinear psi;
    if (c.conductor_case == ConductorCase::C2Tame) {
        psi = psi_tame(cfg.E);
    } else if (w.is_infinite()) {
        psi = psi_infinite_wild(phi.q(), c.w_j.value(), w.w_t(), cfg.E);
    } else {
        const Rational R = -c.w_j.value() / Rational(phi.q() - 1);
        psi = psi_finite_bad(phi.q(), need_u(cfg).degree(), cfg.n, cfg.E, R);
    }
    r.json["psi"] = psi_json(psi);
    std::ostringstream md;
    md << "- case: " << to_string(c.conductor_case) << "\n\n| from | to | slope | intercept |\n|---|---|---|---|\n";
    for (auto& p : psi.pieces())
        md << "| " << to_string(p.from) << " | " << (p.to ? to_string(*p.to) : "+inf") << " | " << to_string(p.slope)
           << " | " << to_string(p.intercept) << " |\n";
    const FiltrationReport f = filtration_from_psi(psi);
    md << "\n- #G^0: " << f.g0_order.get_str() << "\n";
    for (auto& b : f.breaks)
        md << "- break at upper " << to_string(b.upper) << " (lower " << to_string(b.lower)
           << "), order " << b.order.get_str() << "\n";
    r.markdown = md.str();
    return r;
}

JobResult run_conductor(const JobConfig& cfg) {
    const ConductorReport c = conductor_local(need_module(cfg), need_place(cfg));
    JobResult r;
    r.json["conductor"] = conductor_json(c);
    r.markdown = md_conductor_table({c});
    if (!c.reason.empty()) r.markdown += "\n- reason: " + c.reason + "\n";
    if (c.conductor_case == ConductorCase::HypothesisFailed) r.exit_code = kExitHypothesis;
    return r;
}

JobResult run_szpiro(const JobConfig& cfg) {
    const SzpiroReport s = szpiro_report(need_module(cfg));
    JobResult r;
    json places = json::array();
    for (auto& c : s.conductor.places) places.push_back(conductor_json(c));
    r.json["szpiro"] = {{"h_j", rat(s.h_j)},
                        {"places", places},
                        {"complete", s.conductor.complete},
                        {"conductor_degree", rat(s.conductor.total)}};
    r.json["szpiro"]["bound"] = s.bound ? rat(*s.bound) : json(nullptr);
    r.json["szpiro"]["holds"] = s.holds ? json(*s.holds) : json(nullptr);
    std::ostringstream md;
    md << md_conductor_table(s.conductor.places) << "\n";
    md << "- h(j): " << to_string(s.h_j) << "\n";
    md << "- deg f: " << to_string(s.conductor.total) << (s.conductor.complete ? "" : " (incomplete)") << "\n";
    if (s.bound) md << "- bound: " << to_string(*s.bound) << "\n";
    if (s.holds) md << "- holds: " << (*s.holds ? "yes" : "no") << "\n";
    r.markdown = md.str();
    if (!s.conductor.complete) r.exit_code = kExitHypothesis;
    else if (s.holds && !*s.holds) r.exit_code = kExitMismatch;
    return r;
}

JobResult run_verify(const JobConfig& cfg, std::uint64_t budget) {
    const DrinfeldModule& phi = need_module(cfg);
    const Place& w = need_place(cfg);
    const Poly& u = need_u(cfg);
    const Prediction pred = predict_for_module(phi, w, u, cfg.n, budget);
    const ValuationProfile oracle = oracle_division_multiset(phi, u, cfg.n, w, budget);
    const bool match = pred.multiset == oracle;
    JobResult r;
    r.json["verify"] = {{"smb", profile_json(pred.profile)},
                        {"lattice", lattice_json(pred.lattice)},
                        {"lattice_level", pred.lattice_level},
                        {"predicted", multiset_json(pred.multiset)},
                        {"oracle", multiset_json(oracle)},
                        {"match", match}};
    std::ostringstream md;
    md << "- smb: " << md_list(pred.profile) << "\n";
    md << "- predicted: " << md_multiset(pred.multiset) << "\n";
    md << "- oracle: " << md_multiset(oracle) << "\n";
    md << "- match: " << (match ? "yes" : "no") << "\n";
    r.markdown = md.str();
    if (!match) r.exit_code = kExitMismatch;
    return r;
}

JobResult dispatch(const JobConfig& cfg, Command command, std::uint64_t budget) {
    switch (command) {
    case Command::Smb: return run_smb(cfg, budget);
    case Command::Newton: return run_newton(cfg, budget);
    case Command::Psi: return run_psi(cfg);
    case Command::Conductor: return run_conductor(cfg);
    case Command::Szpiro: return run_szpiro(cfg);
    case Command::Verify: return run_verify(cfg, budget);
    }
    throw std::logic_error("unknown command");
}

JobResult error_result(const char* kind, const std::string& message, int code) {
    JobResult r;
    r.json["error"] = {{"kind", kind}, {"message", message}};
    r.markdown = std::string("- error (") + kind + "): " + message + "\n";
    r.exit_code = code;
    return r;
}

} // namespace

Command parse_command(const std::string& s) {
    if (s == "smb") return Command::Smb;
    if (s == "newton") return Command::Newton;
    if (s == "psi") return Command::Psi;
    if (s == "conductor") return Command::Conductor;
    if (s == "szpiro") return Command::Szpiro;
    if (s == "verify") return Command::Verify;
    throw ValidationError("unknown command: " + s);
}

std::string to_string(Command c) {
    switch (c) {
    case Command::Smb: return "smb";
    case Command::Newton: return "newton";
    case Command::Psi: return "psi";
    case Command::Conductor: return "conductor";
    case Command::Szpiro: return "szpiro";
    case Command::Verify: return "verify";
    }
    return "?";
}

JobResult run_job(const JobConfig& cfg, Command command, std::uint64_t budget) {
    JobResult r;
    try {
        r = dispatch(cfg, command, budget);
    } catch (const BudgetExceeded& e) {
        r = error_result("budget", e.what(), kExitBudget);
    } catch (const HypothesisError& e) {
        r = error_result("hypothesis_failed", e.what(), kExitHypothesis);
    } catch (const UnsupportedShape& e) {
        r = error_result("unsupported", e.what(), kExitValidation);
    } catch (const ValidationError& e) {
        r = error_result("validation", e.what(), kExitValidation);
    } catch (const Error& e) {
        r = error_result("error", e.what(), kExitValidation);
    }
    json head = header_json(cfg, command);
    for (auto& [k, v] : r.json.items()) head[k] = v;
    head["exit_code"] = r.exit_code;
    r.json = std::move(head);
    r.markdown = md_header(cfg, command) + r.markdown;
    return r;
}

std::string render_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace smb
