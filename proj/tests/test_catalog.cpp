#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace hesslab;

namespace {
const std::vector<std::string> xyz{"x", "y", "z"};

std::string error_of(std::string_view text, std::span<const std::string> vars) {
    try {
        parse_poly(text, vars);
    } catch (const input_error& e) {
        return e.what();
    }
    return {};
}
} // namespace

TEST_CASE("catalog forms", "[catalog]") {
    CHECK(fermat(3, Rational(1)).form.poly() == parse_polynomial("x^3+y^3+z^3-6*x*y*z", xyz));
    CHECK(fermat(3, Rational(0)).form.poly() == parse_polynomial("x^3+y^3+z^3", xyz));
    CHECK(fermat(4, Rational(1, 2)).variables == std::vector<std::string>{"x", "y", "z", "w"});
    CHECK(fermat(5, Rational(1)).variables.back() == "x5");

    auto st = stacked_squares(3);
    CHECK(st.variables == std::vector<std::string>{"u", "v", "x0", "x1", "x2", "x3"});
    CHECK(st.form.poly() == parse_polynomial("x0^2*u^3+x1^2*u^2*v+x2^2*u*v^2+x3^2*v^3", st.variables));

    // Expanded by hand.
    CHECK(s3_coinvariant().form.poly() == parse_polynomial("x^2*y-x*y^2-x^2*z+x*z^2+y^2*z-y*z^2", xyz));

    auto wz = wz_zero_hessian();
    CHECK(wz.variables == std::vector<std::string>{"x0", "x1", "x3", "u", "v"});

    auto stan = stanley();
    CHECK(stan.variables.size() == 13);
    CHECK(stan.form.poly().terms().size() == 10);
    for (const auto& [e, c] : stan.form.poly().terms()) {
        CHECK(c == Rational(1));
        CHECK(e[0] + e[1] + e[2] == 3);
    }
    CHECK(stanley(CubicOrdering::reversed).form.poly() != stan.form.poly());
}

TEST_CASE("catalog degrees", "[catalog][property]") {
    const std::vector<std::pair<ParsedInput, unsigned>> forms{
        {fermat(3, Rational(2)), 3}, {fermat(4, Rational(1, 2)), 4}, {fermat(6, Rational(1)), 6},
        {stanley(), 4},           {stacked_squares(2), 4},        {stacked_squares(5), 7},
        {quintic5(), 5},          {ikeda(), 5},                   {s3_coinvariant(), 3},
        {wz_zero_hessian(), 3}};
    for (const auto& [in, deg] : forms) {
        CHECK(in.form.poly().is_homogeneous());
        CHECK(in.form.degree() == deg);
        CHECK(in.variables.size() == in.form.arity());
    }
}

TEST_CASE("catalog build by name", "[catalog]") {
    CHECK(build({"fermat", {{"n", "3"}, {"s", "1/2"}}}).form.poly() == fermat(3, Rational(1, 2)).form.poly());
    CHECK(build({"stanley", {{"ordering", "reversed"}}}).form.poly() ==
          stanley(CubicOrdering::reversed).form.poly());
    CHECK(build({"stacked_squares", {{"n", "4"}}}).form.poly() == stacked_squares(4).form.poly());
    for (const auto& name : family_names()) {
        if (name == "fermat" || name == "stacked_squares") continue;
        CHECK_NOTHROW(build({name, {}}));
    }
    CHECK_THROWS_AS(build({"fermat", {{"n", "1"}, {"s", "1"}}}), input_error);
    CHECK_THROWS_AS(build({"fermat", {{"n", "3"}}}), input_error);
    CHECK_THROWS_AS(build({"fermat", {{"n", "3"}, {"s", "1/0"}}}), input_error);
    CHECK_THROWS_AS(build({"fermat", {{"n", "three"}, {"s", "1"}}}), input_error);
    CHECK_THROWS_AS(build({"stacked_squares", {{"n", "0"}}}), input_error);
    CHECK_THROWS_AS(build({"stanley", {{"ordering", "lex"}}}), input_error);
    CHECK_THROWS_AS(build({"ikeda", {{"n", "3"}}}), input_error);
    CHECK_THROWS_AS(build({"h4", {}}), input_error);
}

TEST_CASE("parser accepts the grammar", "[parser]") {
    CHECK(parse_poly("x^3+y^3+z^3-6*x*y*z", xyz).poly() == fermat(3, Rational(1)).form.poly());
    CHECK(parse_poly("(x-y)*(x-z)*(y-z)", xyz).poly() == s3_coinvariant().form.poly());
    CHECK(parse_polynomial(" 2 * x ^ 2 ", xyz) == parse_polynomial("2*x^2", xyz));
    CHECK(parse_polynomial("-x^2", xyz) == parse_polynomial("-(x^2)", xyz));
    CHECK(parse_polynomial("-2^2", xyz) == Poly::constant(3, Rational(-4)));
    CHECK(parse_polynomial("1/2*x-3/4*y", xyz).coefficient(Exponent{0, 1, 0}) == Rational(-3, 4));
    CHECK(parse_polynomial("(x+y)^0", xyz) == Poly::constant(3, Rational(1)));
    CHECK(parse_polynomial("x-y-z", xyz) == parse_polynomial("x-(y+z)", xyz));
    CHECK(parse_polynomial("x*y^2", xyz) == parse_polynomial("x*(y^2)", xyz));
    const std::vector<std::string> longer{"x_1", "alpha", "b2"};
    CHECK(parse_poly("x_1*alpha+b2^2", longer).degree() == 2);
}

TEST_CASE("parser errors", "[parser]") {
    CHECK(error_of("x^2+y", std::vector<std::string>{"x", "y"}).find("not homogeneous") != std::string::npos);
    CHECK(error_of("x-x", xyz).find("zero") != std::string::npos);
    CHECK(error_of("x^2+q*y", xyz).find("undeclared variable 'q'") != std::string::npos);
    CHECK(error_of("x^2+q*y", xyz).find("column 5") != std::string::npos);
    // No juxtaposition.
    CHECK(error_of("2x", xyz).find("column 2") != std::string::npos);
    CHECK(error_of("x y", xyz).find("syntax error") != std::string::npos);
    CHECK(error_of("x^-1", xyz).find("syntax error") != std::string::npos);
    CHECK(error_of("x^1/2", xyz).find("syntax error") != std::string::npos);
    CHECK(error_of("(x+y", xyz).find("syntax error") != std::string::npos);
    CHECK(error_of("x+", xyz).find("syntax error") != std::string::npos);
    CHECK(error_of("", xyz).find("syntax error") != std::string::npos);
    CHECK(error_of("x/0", xyz).find("syntax error") != std::string::npos);
    CHECK_THROWS_AS(parse_variable_list("x,,y"), input_error);
    CHECK_THROWS_AS(parse_variable_list("x,y,x"), input_error);
    CHECK_THROWS_AS(parse_variable_list("1x"), input_error);
    CHECK(parse_variable_list("x, y ,z") == xyz);
    CHECK(parse_point("1,-2, 1/3") ==
          std::vector<Rational>{Rational(1), Rational(-2), Rational(1, 3)});
    CHECK_THROWS_AS(parse_point("1,,2"), input_error);
}

TEST_CASE("canonical text round-trips", "[parser][property]") {
    CHECK(format_poly(fermat(3, Rational(1, 2)).form.poly(), xyz) == "x^3+y^3-3*x*y*z+z^3");
    CHECK(format_poly(parse_polynomial("-1/2*y*x+3", xyz), xyz) == "-1/2*x*y+3");
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const unsigned D = static_cast<unsigned>(rng() % 6);
        Form f = hesslab::testing::random_form(rng, n, D, 8, 9);
        Poly scaled = f.poly() * Rational(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 7) + 1);
        auto vars = default_variable_names(n);
        std::string text = format_poly(scaled, vars);
        Form back = parse_poly(text, vars);
        CHECK(back.poly() == scaled);
        CHECK(format_poly(back.poly(), vars) == text);
    }
    for (const auto& name : family_names()) {
        FamilySpec spec{name, {}};
        if (name == "fermat") spec.parameters = {{"n", "4"}, {"s", "2/3"}};
        if (name == "stacked_squares") spec.parameters = {{"n", "3"}};
        auto in = build(spec);
        CHECK(parse_poly(format_poly(in.form.poly(), in.variables), in.variables).poly() == in.form.poly());
    }
}
