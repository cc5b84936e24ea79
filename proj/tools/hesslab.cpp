// hesslab: Artinian Gorenstein algebras from a dual generator, higher
// Hessians, and strong/weak Lefschetz decisions.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hesslab/hesslab.hpp"

namespace {

struct Options {
    std::string vars, poly, input_path, family, n, s, point;
    std::vector<std::string> params;
    bool json = false, symbolic = false, timings = false;
    std::optional<std::uint64_t> seed;
    unsigned d = 0;
    std::size_t max_det = 14, witness_budget = 1000, term_budget = 10'000'000;
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--vars", o.vars, "Declared variable order, e.g. x,y,z");
    sub->add_option("--poly", o.poly, "Homogeneous polynomial, e.g. \"x^3+y^3+z^3\"");
    sub->add_option("--input", o.input_path, "Read the polynomial from a file");
    sub->add_option("--family", o.family, "Catalog family instead of --poly");
    sub->add_option("--n", o.n, "Family parameter n");
    sub->add_option("--s", o.s, "Family parameter s (rational p/q)");
    sub->add_option("--param", o.params, "Family parameter k=v (repeatable)");
    sub->add_flag("--json", o.json, "Emit the JSON report");
    sub->add_option("--seed", o.seed, "Seed for witness sampling (overrides HESSLAB_SEED)");
    sub->add_option("--max-det-size", o.max_det, "Largest matrix expanded symbolically")->capture_default_str();
    sub->add_option("--witness-budget", o.witness_budget, "Sample points tried per decision")->capture_default_str();
    sub->add_option("--term-budget", o.term_budget, "Polynomial terms allowed per certificate")->capture_default_str();
    sub->add_flag("--timings", o.timings, "Include wall-clock timings (breaks byte-identical output)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hesslab::input_error("cannot read input file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
    return text;
}

hesslab::ParsedInput resolve_input(const Options& o) {
    if (!o.family.empty()) {
        hesslab::require_input(o.poly.empty() && o.input_path.empty(), "--family excludes --poly and --input");
        hesslab::require_input(o.vars.empty(), "--family fixes its own variables; drop --vars");
        hesslab::FamilySpec spec{o.family, {}};
        if (!o.n.empty()) spec.parameters["n"] = o.n;
        if (!o.s.empty()) spec.parameters["s"] = o.s;
        for (const auto& kv : o.params) {
            auto eq = kv.find('=');
            hesslab::require_input(eq != std::string::npos && eq > 0, "--param expects key=value, got '" + kv + "'");
            spec.parameters[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        return hesslab::build(spec);
    }
    hesslab::require_input(!o.vars.empty(), "--vars is required with --poly/--input");
    hesslab::require_input(o.poly.empty() != o.input_path.empty(), "give exactly one of --poly, --input, --family");
    auto vars = hesslab::parse_variable_list(o.vars);
    std::string text = o.poly.empty() ? read_file(o.input_path) : o.poly;
    return {vars, hesslab::parse_poly(text, vars)};
}

int run(const std::string& name, const Options& o) {
    hesslab::Config cfg;
    cfg.max_symbolic_det_size = o.max_det;
    cfg.witness_attempt_budget = o.witness_budget;
    cfg.term_budget = o.term_budget;
    cfg.record_timings = o.timings;
    cfg.output_format = o.json ? hesslab::OutputFormat::json : hesslab::OutputFormat::human;
    if (auto env = hesslab::seed_from_environment()) cfg.seed = *env;
    if (o.seed) cfg.seed = *o.seed;

    hesslab::CommandRequest req{hesslab::parse_command(name), resolve_input(o), std::nullopt, false, {}};
    if (req.command == hesslab::Command::hessian) req.degree = o.d;
    req.symbolic = o.symbolic;
    if (req.command == hesslab::Command::element) {
        hesslab::require_input(!o.point.empty(), "element requires --point");
        req.point = hesslab::parse_point(o.point);
    }
    auto result = hesslab::run_command(req, cfg);
    if (req.command == hesslab::Command::catalog && !o.json)
        std::cout << result.json["input"]["form"].get<std::string>() << "\n";
    else if (o.json)
        std::cout << result.json.dump(2) << "\n";
    else
        std::cout << result.human;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hesslab: Lefschetz properties of Artinian Gorenstein algebras via higher Hessians"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"hilbert", "Hilbert function of A = Q/Ann(F)"},
        {"hessian", "Decide or compute the d-th Hessian"},
        {"slp", "Strong Lefschetz property with certificates"},
        {"wlp", "Weak Lefschetz property via generic ranks"},
        {"element", "Test whether a point gives a strong Lefschetz element"},
        {"locus", "Polynomials cutting out the non-Lefschetz locus"},
        {"catalog", "Print a catalog form"}};
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub, o);
        if (name == "hessian") {
            sub->add_option("--d", o.d, "Hessian degree")->required();
            sub->add_flag("--symbolic", o.symbolic, "Compute the full symbolic determinant");
        }
        if (name == "element") sub->add_option("--point", o.point, "Coefficients a1,...,an of L")->required();
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return run(name, o);
    } catch (const hesslab::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const hesslab::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const hesslab::invariant_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 3;
    }
}
