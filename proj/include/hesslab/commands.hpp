#pragma once

// Command surface shared by the CLI and the tests: each command produces a
// JSON document with a fixed set of top-level keys and a human rendering.

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "apolar.hpp"
#include "catalog.hpp"
#include "config.hpp"
#include "hessian.hpp"
#include "lefschetz.hpp"
#include "parser.hpp"

namespace hesslab {

enum class Command { hilbert, hessian, slp, wlp, element, locus, catalog };

inline Command parse_command(const std::string& name) {
    if (name == "hilbert") return Command::hilbert;
    if (name == "hessian") return Command::hessian;
    if (name == "slp") return Command::slp;
    if (name == "wlp") return Command::wlp;
    if (name == "element") return Command::element;
    if (name == "locus") return Command::locus;
    if (name == "catalog") return Command::catalog;
    throw input_error("unknown command '" + name + "'");
}

inline std::string command_name(Command c) {
    switch (c) {
        case Command::hilbert: return "hilbert";
        case Command::hessian: return "hessian";
        case Command::slp: return "slp";
        case Command::wlp: return "wlp";
        case Command::element: return "element";
        case Command::locus: return "locus";
        case Command::catalog: return "catalog";
    }
    return "?";
}

struct CommandRequest {
    Command command = Command::hilbert;
    ParsedInput input;
    std::optional<unsigned> degree;       // hessian
    bool symbolic = false;                // hessian
    std::vector<Rational> point;          // element
};

struct CommandResult {
    nlohmann::ordered_json json;
    std::string human;
};

namespace report {

using json = nlohmann::ordered_json;

inline json rationals(std::span<const Rational> v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_fraction_string());
    return a;
}

inline std::string monomial_name(const Exponent& e, std::span<const std::string> vars) {
    std::vector<std::string> upper;
    for (const auto& v : vars) {
        std::string u = v;
        for (auto& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        upper.push_back(u);
    }
    return format_poly(Poly::monomial(e), upper);
}

inline json hessian(const HessianReport& r, std::span<const std::string> vars) {
    json h;
    h["d"] = r.d;
    h["size"] = r.basis_used.size();
    json basis = json::array();
    for (const auto& m : r.basis_used.monomials) basis.push_back(monomial_name(m, vars));
    h["basis"] = basis;
    if (auto* w = std::get_if<NonzeroWithWitness>(&r.status)) {
        h["status"] = "nonzero";
        h["witness"] = {{"point", rationals(w->point)}, {"value", w->value.to_fraction_string()}};
    } else if (auto* z = std::get_if<ZeroWithDependence>(&r.status)) {
        h["status"] = "zero";
        json coeffs = json::array();
        for (const auto& c : z->coeffs) coeffs.push_back(format_poly(c, vars));
        h["dependence"] = {{"coeffs", coeffs}, {"certified", z->certified}};
    } else {
        const auto& s = std::get<SymbolicDet>(r.status);
        h["status"] = s.det.is_zero() ? "zero" : "nonzero";
        h["det"] = format_poly(s.det, vars);
    }
    return h;
}

inline json profile(const RankProfile& p) {
    return {{"map_ranks", p.map_ranks},
            {"map_targets", p.map_targets},
            {"power_ranks", p.power_ranks},
            {"power_targets", p.power_targets}};
}

inline json locus(const Locus& l, std::span<const std::string> vars) {
    json polys = json::array();
    for (const auto& e : l.entries) polys.push_back({{"d", e.d}, {"poly", format_poly(e.poly, vars)}});
    json prop = json::array();
    for (const auto& p : l.proportional)
        prop.push_back({{"d", p.first}, {"to", p.second}, {"ratio", p.ratio.to_fraction_string()}});
    return {{"polynomials", polys},
            {"zero_degrees", l.zero_degrees},
            {"constant_degrees", l.constant_degrees},
            {"proportional", prop}};
}

inline json skeleton(const CommandRequest& req) {
    json j;
    j["schema"] = "1";
    j["command"] = command_name(req.command);
    j["input"] = {{"variables", req.input.variables}, {"form", format_poly(req.input.form.poly(), req.input.variables)}};
    j["hilbert"] = nullptr;
    j["socle_degree"] = nullptr;
    j["slp"] = nullptr;
    j["slp_witness"] = nullptr;
    j["wlp"] = nullptr;
    j["hessians"] = json::array();
    j["locus"] = nullptr;
    j["element"] = nullptr;
    j["timings"] = nullptr;
    return j;
}

inline std::string str(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// A "p/q" string without a unit denominator.
inline std::string num(const json& v) {
    std::string s = str(v);
    if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) s.resize(s.size() - 2);
    return s;
}

inline std::string point(const json& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + num(a[i]);
    return s;
}

inline std::string render_human(const json& j) {
    std::ostringstream os;
    os << "form: " << str(j["input"]["form"]) << "\n";
    os << "variables: ";
    for (std::size_t i = 0; i < j["input"]["variables"].size(); ++i)
        os << (i ? "," : "") << str(j["input"]["variables"][i]);
    os << "\n";
    if (!j["hilbert"].is_null()) {
        os << "hilbert: (";
        for (std::size_t i = 0; i < j["hilbert"].size(); ++i) os << (i ? "," : "") << j["hilbert"][i].dump();
        os << ")\nsocle degree: " << j["socle_degree"].dump() << "\n";
    }
    for (const auto& h : j["hessians"]) {
        os << "hess^(" << h["d"].dump() << ") size " << h["size"].dump() << ": " << str(h["status"]);
        if (h.contains("witness"))
            os << " at (" << point(h["witness"]["point"]) << ") value " << num(h["witness"]["value"]);
        if (h.contains("dependence")) {
            os << ", row relation";
            const auto& c = h["dependence"]["coeffs"];
            for (std::size_t i = 0; i < c.size(); ++i)
                if (str(c[i]) != "0") os << " [" << str(h["basis"][i]) << "]: " << str(c[i]) << ";";
            os << (h["dependence"]["certified"].get<bool>() ? " replayed exactly" : " NOT replayed");
        }
        if (h.contains("det")) os << "\n  det = " << str(h["det"]);
        os << "\n";
    }
    if (!j["slp"].is_null()) {
        os << "slp: " << j["slp"].dump();
        if (!j["slp_witness"].is_null()) os << " (witness " << point(j["slp_witness"]) << ")";
        os << "\n";
    }
    if (!j["wlp"].is_null()) {
        const auto& w = j["wlp"];
        os << "wlp: " << w["verdict"].dump();
        if (w.contains("generic")) {
            os << "\n  generic ranks of xL: " << w["generic"]["map_ranks"].dump() << " needed "
               << w["generic"]["map_targets"].dump();
            os << "\n  generic ranks of xL^(D-2i): " << w["generic"]["power_ranks"].dump() << " needed "
               << w["generic"]["power_targets"].dump();
        } else {
            os << " (implied by slp)";
        }
        os << "\n";
    }
    if (!j["locus"].is_null()) {
        const auto& l = j["locus"];
        os << "locus (L is strong Lefschetz iff none of these vanish):\n";
        for (const auto& p : l["polynomials"]) os << "  d=" << p["d"].dump() << ": " << str(p["poly"]) << "\n";
        for (const auto& z : l["zero_degrees"]) os << "  d=" << z.dump() << ": identically zero\n";
        for (const auto& c : l["constant_degrees"]) os << "  d=" << c.dump() << ": nonzero constant\n";
        for (const auto& p : l["proportional"])
            os << "  d=" << p["d"].dump() << " is " << num(p["ratio"]) << " times d=" << p["to"].dump()
               << " (conditions collapse)\n";
    }
    if (!j["element"].is_null()) {
        const auto& e = j["element"];
        os << "F(a) = " << num(e["form_value"]) << "\n";
        for (const auto& h : e["hessian_values"])
            os << "hess^(" << h["d"].dump() << ")(a) = " << num(h["value"]) << "\n";
        os << "strong Lefschetz element: " << e["lefschetz"].dump() << "\n";
        os << "rank oracle: slp " << e["oracle"]["slp"].dump() << ", power ranks "
           << e["oracle"]["power_ranks"].dump() << " of " << e["oracle"]["power_targets"].dump()
           << (e["agree"].get<bool>() ? " (agrees)" : " (DISAGREES)") << "\n";
    }
    if (!j["timings"].is_null()) os << "time: " << j["timings"]["total_ms"].dump() << " ms\n";
    return os.str();
}

} // namespace report

/// Runs one command. Throws input_error / resource_error / invariant_error.
inline CommandResult run_command(const CommandRequest& req, const Config& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    auto j = report::skeleton(req);
    const auto& vars = req.input.variables;
    require_input(vars.size() == req.input.form.arity(), "variable list does not match the form");

    if (req.command != Command::catalog) {
        ApolarAlgebra alg(req.input.form);
        require_invariant(gorenstein_selfcheck(alg.form()), "Poincare duality self-check failed");
        auto hilbert = alg.hilbert();
        j["hilbert"] = hilbert.dims;
        j["socle_degree"] = alg.socle_degree();

        switch (req.command) {
            case Command::hessian: {
                require_input(req.degree.has_value(), "hessian requires --d");
                auto rep = hessian_report(alg.form(), *req.degree, cfg, req.symbolic);
                j["hessians"].push_back(report::hessian(rep, vars));
                break;
            }
            case Command::slp: {
                auto rep = analyze(alg, cfg, true);
                j["slp"] = rep.slp;
                if (rep.witness) j["slp_witness"] = report::rationals(*rep.witness);
                nlohmann::ordered_json w = {{"verdict", rep.wlp}};
                if (rep.wlp_detail) w["generic"] = report::profile(rep.wlp_detail->generic);
                j["wlp"] = w;
                for (const auto& h : rep.hessian_reports) j["hessians"].push_back(report::hessian(h, vars));
                if (rep.slp && rep.locus) j["locus"] = report::locus(*rep.locus, vars);
                break;
            }
            case Command::wlp: {
                MultiplicationMaps maps(alg);
                auto w = has_wlp(alg, maps, hessian_matrices(alg), cfg);
                j["wlp"] = {{"verdict", w.verdict}, {"generic", report::profile(w.generic)}};
                break;
            }
            case Command::element: {
                require_input(req.point.size() == alg.arity(),
                              "point has " + std::to_string(req.point.size()) + " coordinates, expected " +
                                  std::to_string(alg.arity()));
                auto hessians = hessian_matrices(alg);
                auto check = check_element(alg.form(), hessians, req.point);
                MultiplicationMaps maps(alg);
                auto oracle = rank_oracle(alg, maps, req.point);
                nlohmann::ordered_json values = nlohmann::ordered_json::array();
                for (std::size_t d = 0; d < check.hessian_values.size(); ++d)
                    values.push_back({{"d", d + 1}, {"value", check.hessian_values[d].to_fraction_string()}});
                nlohmann::ordered_json o = report::profile(oracle.profile);
                o["slp"] = oracle.slp;
                o["wlp"] = oracle.wlp;
                j["element"] = {{"point", report::rationals(req.point)},
                                {"form_value", check.form_value.to_fraction_string()},
                                {"hessian_values", values},
                                {"lefschetz", check.lefschetz},
                                {"oracle", o},
                                {"agree", check.lefschetz == oracle.slp}};
                require_invariant(check.lefschetz == oracle.slp, "Hessian criterion and rank oracle disagree");
                break;
            }
            case Command::locus: {
                auto l = lefschetz_locus(alg.form(), hessian_matrices(alg), cfg);
                j["locus"] = report::locus(l, vars);
                break;
            }
            case Command::hilbert:
            case Command::catalog:
                break;
        }
    }

    if (cfg.record_timings) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        j["timings"] = {{"total_ms", ms}};
    }
    CommandResult out;
    out.human = report::render_human(j);
    out.json = std::move(j);
    return out;
}

} // namespace hesslab
