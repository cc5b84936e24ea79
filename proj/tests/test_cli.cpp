#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "support.hpp"

using namespace hesslab;
using json = nlohmann::ordered_json;

namespace {

CommandResult run(Command c, ParsedInput in, Config cfg = {}) {
    return run_command(CommandRequest{c, std::move(in), std::nullopt, false, {}}, cfg);
}

struct Exec {
    int code;
    std::string out;
};

Exec exec(const std::string& args, const std::string& env = "") {
    const std::string out_path = "hesslab_cli_test.out";
    std::string cmd = env + " " + HESSLAB_CLI + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

} // namespace

TEST_CASE("JSON report layout", "[cli]") {
    auto r = run(Command::slp, fermat(3, Rational(1, 2)));
    const auto& j = r.json;
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"schema", "command", "input", "hilbert", "socle_degree", "slp",
                                           "slp_witness", "wlp", "hessians", "locus", "element", "timings"});
    CHECK(j["schema"] == "1");
    CHECK(j["hilbert"] == json({1, 3, 3, 1}));
    CHECK(j["slp"] == true);
    CHECK(j["wlp"]["verdict"] == true);
    CHECK(j["timings"].is_null());
    REQUIRE(j["hessians"].size() == 2);
    for (const auto& h : j["hessians"]) {
        CHECK(h["status"] == "nonzero");
        for (const auto& c : h["witness"]["point"]) CHECK(c.get<std::string>().find('/') != std::string::npos);
        CHECK(h["witness"]["value"].is_string());
    }
    REQUIRE(j["locus"]["proportional"].size() == 1);

    auto z = run_command(CommandRequest{Command::hessian, stacked_squares(3), 2u, false, {}}, Config{});
    REQUIRE(z.json["hessians"].size() == 1);
    const auto& h = z.json["hessians"][0];
    CHECK(h["d"] == 2);
    CHECK(h["status"] == "zero");
    CHECK(h["dependence"]["certified"] == true);
    CHECK(h["dependence"]["coeffs"].size() == h["size"].get<std::size_t>());

    auto s = run_command(CommandRequest{Command::hessian, s3_coinvariant(), 1u, true, {}}, Config{});
    CHECK(s.json["hessians"][0]["det"] == "-4*x^2+4*x*y-4*y^2+4*x*z+4*y*z-4*z^2");
}

TEST_CASE("commands", "[cli]") {
    CHECK(run(Command::hilbert, stanley()).json["hilbert"] == json({1, 13, 12, 13, 1}));
    auto w = run(Command::wlp, stacked_squares(3)).json;
    CHECK(w["wlp"]["verdict"] == false);
    CHECK(w["wlp"]["generic"]["map_ranks"] == json({1, 6, 12, 6, 1}));
    CHECK(w["slp"].is_null());

    auto e = run_command(CommandRequest{Command::element, s3_coinvariant(), std::nullopt, false,
                                        {Rational(2), Rational(1), Rational(0)}},
                         Config{});
    CHECK(e.json["element"]["lefschetz"] == true);
    CHECK(e.json["element"]["agree"] == true);
    CHECK(e.json["element"]["hessian_values"][0]["value"] == "-12/1");
    CHECK_THROWS_AS(run_command(CommandRequest{Command::element, s3_coinvariant(), std::nullopt, false,
                                               {Rational(1)}},
                                Config{}),
                    input_error);

    auto l = run(Command::locus, quintic5()).json;
    CHECK(l["locus"]["zero_degrees"] == json({2}));
    CHECK(run(Command::catalog, ikeda()).json["hilbert"].is_null());

    Config tiny;
    tiny.max_symbolic_det_size = 2;
    CHECK_THROWS_AS(run_command(CommandRequest{Command::hessian, fermat(3, Rational(1)), 1u, true, {}}, tiny),
                    resource_error);
    Config bad;
    bad.witness_attempt_budget = 0;
    CHECK_THROWS_AS(run(Command::hilbert, ikeda(), bad), input_error);
}

TEST_CASE("reports are byte-identical for identical inputs", "[cli][property]") {
    for (auto c : {Command::slp, Command::wlp, Command::locus, Command::hilbert}) {
        for (const auto& in : {fermat(4, Rational(1, 2)), ikeda(), stacked_squares(3), s3_coinvariant()}) {
            Config cfg;
            cfg.seed = 9;
            CHECK(run(c, in, cfg).json.dump(2) == run(c, in, cfg).json.dump(2));
            CHECK(run(c, in, cfg).human == run(c, in, cfg).human);
        }
    }
}

TEST_CASE("CLI binary", "[cli]") {
    auto hilbert = exec("hilbert --family stanley --json");
    CHECK(hilbert.code == 0);
    CHECK(json::parse(hilbert.out)["hilbert"] == json({1, 13, 12, 13, 1}));

    auto wlp = exec("wlp --family stacked_squares --n 3 --json");
    CHECK(wlp.code == 0);
    CHECK(json::parse(wlp.out)["wlp"]["verdict"] == false);

    auto slp = exec("slp --family fermat --n 3 --s 1/2 --json");
    CHECK(slp.code == 0);
    auto sj = json::parse(slp.out);
    CHECK(sj["slp"] == true);
    CHECK(sj["locus"]["proportional"].size() == 1);

    CHECK(exec("catalog --family fermat --n 3 --s 1").out == "x^3+y^3-6*x*y*z+z^3\n");
    CHECK(exec("catalog --family stanley --param ordering=reversed").code == 0);
    CHECK(exec("hilbert --vars x,y,z --poly \"(x-y)*(x-z)*(y-z)\"").out.find("hilbert: (1,2,2,1)") != std::string::npos);
    CHECK(exec("element --vars x,y,z --poly \"x^3+y^3+z^3\" --point 1,1,1").code == 0);
    CHECK(exec("hessian --vars x,y,z --poly \"x^3+y^3+z^3\" --d 1 --symbolic --json").code == 0);

    {
        std::ofstream f("hesslab_cli_input.txt");
        f << "x0^2*u^3+x1^2*u^2*v+x2^2*u*v^2+x3^2*v^3\n";
    }
    auto file = exec("wlp --vars u,v,x0,x1,x2,x3 --input hesslab_cli_input.txt --json");
    std::remove("hesslab_cli_input.txt");
    CHECK(file.code == 0);
    CHECK(json::parse(file.out)["wlp"]["verdict"] == false);

    // Exit codes.
    CHECK(exec("hilbert --vars x,y --poly \"x^2+y\"").code == 1);
    CHECK(exec("hilbert --vars x,y --poly \"x^2+2y^2\"").code == 1);
    CHECK(exec("hilbert --poly \"x^2\"").code == 1);
    CHECK(exec("hilbert --family fermat --n 1 --s 1").code == 1);
    CHECK(exec("hilbert --family nope").code == 1);
    CHECK(exec("hilbert --input /nonexistent --vars x").code == 1);
    CHECK(exec("bogus").code == 1);
    CHECK(exec("hessian --family fermat --n 3 --s 1").code == 1);
    CHECK(exec("hessian --family fermat --n 3 --s 1 --d 1 --symbolic --max-det-size 2").code == 2);
    CHECK(exec("slp --family quintic5 --witness-budget 1 --term-budget 1").code == 2);
}

TEST_CASE("CLI determinism and seeds", "[cli][property]") {
    const std::string args = "slp --family ikeda --json";
    auto a = exec(args), b = exec(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(exec(args + " --seed 5").out == exec(args, "HESSLAB_SEED=5").out);
    CHECK(exec(args + " --seed 5").out == exec(args + " --seed 5", "HESSLAB_SEED=6").out);
    CHECK(exec("slp --family fermat --n 4 --s 2 --json", "HESSLAB_SEED=3").out ==
          exec("slp --family fermat --n 4 --s 2 --json", "HESSLAB_SEED=3").out);
    auto timed = json::parse(exec(args + " --timings").out);
    CHECK(timed["timings"]["total_ms"].is_number());
}
