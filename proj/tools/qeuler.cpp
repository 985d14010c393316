#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "qeuler/dirichlet.hpp"
#include "qeuler/emit.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/measure.hpp"
#include "qeuler/verify.hpp"
#include "qeuler/zeta.hpp"

namespace {

using namespace qeuler;

struct GlobalOptions {
    double q = 0.5;
    unsigned alpha = 1;
    unsigned beta = 1;
    unsigned n = 0;
    double x = 0.0;
    double s = 0.0;
    double s_imag = 0.0;
    std::string character;
    double tol = 1e-10;
    std::uint64_t prime = 5;
    unsigned precision = 12;
    unsigned level = 1;
    std::string out;
    std::string format;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

void add_global_flags(CLI::App* app, GlobalOptions& g) {
    app->add_option("--q", g.q, "deformation parameter in (0,1)");
    app->add_option("--alpha", g.alpha, "first weight");
    app->add_option("--beta", g.beta, "second weight");
    app->add_option("--n", g.n, "degree");
    app->add_option("--x", g.x, "argument");
    app->add_option("--s", g.s, "complex variable, real part");
    app->add_option("--s-imag", g.s_imag, "complex variable, imaginary part");
    app->add_option("--char", g.character,
                    "character spec: trivial:d, quadratic:d, or table:d:v0,v1,...");
    app->add_option("--tol", g.tol, "series tolerance");
    app->add_option("--prime", g.prime, "p for p-adic commands");
    app->add_option("--precision", g.precision, "p-adic working precision");
    app->add_option("--level", g.level, "p-adic level / ball depth");
    app->add_option("--out", g.out, "write output to this file instead of stdout");
    app->add_option("--format", g.format, "json or csv or table");
    app->add_option("--seed", g.seed, "seed for randomized verification grids");
    app->add_option("--jobs", g.jobs, "worker threads for suites and grids");
}

DirichletCharacter character_or_trivial(const GlobalOptions& g) {
    if (g.character.empty()) return DirichletCharacter::principal(1);
    return DirichletCharacter::parse(g.character);
}

void write_output(const GlobalOptions& g, const std::string& payload) {
    if (g.out.empty()) {
        std::fputs(payload.c_str(), stdout);
        if (!payload.empty() && payload.back() != '\n') std::fputc('\n', stdout);
        return;
    }
    std::ofstream file(g.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + g.out);
    file << payload;
}

std::map<std::string, std::string> base_params(const GlobalOptions& g) {
    return {{"q", num_str(g.q)},
            {"alpha", std::to_string(g.alpha)},
            {"beta", std::to_string(g.beta)}};
}

int run(int argc, char** argv) {
    CLI::App app{"weighted q-Euler families, their zeta functions, and the p-adic measure"};
    app.require_subcommand(1);
    GlobalOptions g;
    add_global_flags(&app, g);

    auto* compute = app.add_subcommand("compute", "evaluate one family member");
    compute->require_subcommand(1);
    add_global_flags(compute, g);

    std::string method = "closed";
    double w_arg = 0.0;
    unsigned residue = 0;
    unsigned class_modulus = 1;

    auto* c_number = compute->add_subcommand("number", "weighted q-Euler number");
    auto* c_poly = compute->add_subcommand("poly", "weighted q-Euler polynomial");
    c_poly->add_option("--method", method, "closed, series, or umbral");
    auto* c_dirichlet =
        compute->add_subcommand("dirichlet", "character-twisted (alpha,beta) polynomial");
    auto* c_zeta = compute->add_subcommand("zeta", "number-level zeta series");
    auto* c_hurwitz = compute->add_subcommand("hurwitz", "shifted zeta series");
    auto* c_lfunction = compute->add_subcommand("lfunction", "character series");
    auto* c_partial = compute->add_subcommand("partial-zeta", "one residue class of the series");
    c_partial->add_option("--residue", residue, "class representative a");
    c_partial->add_option("--modulus", class_modulus, "class modulus F (odd)");
    c_partial->add_option("--method", method, "direct or binomial");
    auto* c_cont = compute->add_subcommand("continuation", "two-variable real continuation");
    c_cont->add_option("--w", w_arg, "second variable of the continuation");
    for (auto* sub : {c_number, c_poly, c_dirichlet, c_zeta, c_hurwitz, c_lfunction, c_partial,
                      c_cont})
        add_global_flags(sub, g);

    auto* curve = app.add_subcommand("curve", "sample the continuation surface");
    std::vector<double> s_range{1.0, 2.0};
    std::vector<double> w_range{-0.5, 0.5};
    std::vector<unsigned> steps{41, 41};
    curve->add_option("--s-range", s_range, "s_min s_max")->expected(2);
    curve->add_option("--w-range", w_range, "w_min w_max")->expected(2);
    curve->add_option("--steps", steps, "points per axis: steps_s steps_w")->expected(2);
    add_global_flags(curve, g);

    auto* padic = app.add_subcommand("padic", "p-adic commands");
    padic->require_subcommand(1);
    add_global_flags(padic, g);
    long long q_offset = 0;
    unsigned k_arg = 1;
    std::vector<long long> ball;
    std::string rational_value = "0";
    std::string domain = "X";
    long long twist = 1;

    auto* p_integrate = padic->add_subcommand("integrate", "measure integral over X or pX");
    p_integrate->add_option("--q-offset", q_offset, "q = 1 + offset (offset divisible by p)");
    p_integrate->add_option("--k", k_arg, "bracket power");
    p_integrate->add_option("--domain", domain, "X or pX");
    p_integrate->add_option("--twist", twist, "twist unit c (coprime to d p)");
    auto* p_measure = padic->add_subcommand("measure", "measure of one ball");
    p_measure->add_option("--q-offset", q_offset, "q = 1 + offset (offset divisible by p)");
    p_measure->add_option("--k", k_arg, "bracket power");
    p_measure->add_option("--ball", ball, "ball address: base level")->expected(2);
    auto* p_ord = padic->add_subcommand("ord", "p-adic valuation of a rational");
    p_ord->add_option("--value", rational_value, "rational, e.g. 75/4");
    auto* p_digits = padic->add_subcommand("digits", "Hensel digits of a rational");
    p_digits->add_option("--value", rational_value, "rational, e.g. 75/4");
    for (auto* sub : {p_integrate, p_measure, p_ord, p_digits}) add_global_flags(sub, g);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    verify->add_option("suite", suite, "euler, dirichlet, zeta, partial-zeta, padic, "
                                       "continuation, or all");
    add_global_flags(verify, g);

    CLI11_PARSE(app, argc, argv);

    const Complex s(g.s, g.s_imag);
    const WeightParams weights{g.alpha, g.beta};

    if (c_number->parsed()) {
        auto params = base_params(g);
        params["n"] = std::to_string(g.n);
        write_output(g, scalar_json(Complex(euler_number(g.n, weights, g.q), 0.0), params));
        return 0;
    }
    if (c_poly->parsed()) {
        auto params = base_params(g);
        params["n"] = std::to_string(g.n);
        params["x"] = num_str(g.x);
        params["method"] = method;
        QParam qp = QParam::real(g.q);
        if (method == "series") {
            write_output(g, truncation_json(euler_poly_series(g.n, g.x, weights, qp, g.tol),
                                            params));
        } else if (method == "umbral") {
            write_output(g, scalar_json(euler_poly_umbral(g.n, g.x, weights, qp), params));
        } else if (method == "closed") {
            write_output(g, scalar_json(euler_poly_closed(g.n, g.x, weights, qp), params));
        } else {
            throw CLI::ValidationError("--method", "unknown method: " + method);
        }
        return 0;
    }
    if (c_dirichlet->parsed()) {
        DirichletEulerQuery query;
        query.n = g.n;
        query.x = g.x;
        query.character = character_or_trivial(g);
        query.weights = weights;
        query.q = QParam::real(g.q);
        auto params = base_params(g);
        params["n"] = std::to_string(g.n);
        params["x"] = num_str(g.x);
        params["character"] = query.character.describe();
        write_output(g, scalar_json(dirichlet_euler_closed(query), params));
        return 0;
    }
    if (c_zeta->parsed() || c_hurwitz->parsed() || c_lfunction->parsed()) {
        auto params = base_params(g);
        params["s"] = num_str(s);
        TruncationReport rep;
        if (c_zeta->parsed()) {
            rep = zeta_weighted(s, weights, g.q, g.tol);
        } else if (c_hurwitz->parsed()) {
            params["x"] = num_str(g.x);
            rep = zeta_hurwitz_weighted(s, g.x, weights, g.q, g.tol);
        } else {
            auto chi = character_or_trivial(g);
            params["x"] = num_str(g.x);
            params["character"] = chi.describe();
            rep = l_function(s, g.x, weights, g.q, chi, g.tol);
        }
        write_output(g, truncation_json(rep, params));
        return 0;
    }
    if (c_partial->parsed()) {
        auto chi = character_or_trivial(g);
        auto params = base_params(g);
        params["s"] = num_str(s);
        params["x"] = num_str(g.x);
        params["residue"] = std::to_string(residue);
        params["modulus"] = std::to_string(class_modulus);
        params["character"] = chi.describe();
        params["method"] = method;
        TruncationReport rep;
        if (method == "binomial")
            rep = partial_zeta_binomial(s, g.x, residue, class_modulus, weights, g.q, chi);
        else if (method == "direct" || method == "closed")
            rep = partial_zeta(s, g.x, residue, class_modulus, weights, g.q, chi, g.tol);
        else
            throw CLI::ValidationError("--method", "unknown method: " + method);
        write_output(g, truncation_json(rep, params));
        return 0;
    }
    if (c_cont->parsed()) {
        auto params = base_params(g);
        params["s"] = num_str(g.s);
        params["w"] = num_str(w_arg);
        write_output(g, scalar_json(continuation_poly({g.s, w_arg, weights, g.q}), params));
        return 0;
    }

    if (curve->parsed()) {
        auto grid = curve_sample(s_range[0], s_range[1], w_range[0], w_range[1], steps[0],
                                 steps[1], weights, g.q, g.jobs);
        if (g.format == "json") {
            auto params = base_params(g);
            params["steps_s"] = std::to_string(steps[0]);
            params["steps_w"] = std::to_string(steps[1]);
            write_output(g, curve_json(grid, params));
        } else {
            write_output(g, curve_csv(grid));
        }
        return 0;
    }

    if (p_ord->parsed() || p_digits->parsed()) {
        Rational value = parse_rational(rational_value);
        if (p_ord->parsed()) {
            auto params = std::map<std::string, std::string>{
                {"prime", std::to_string(g.prime)}, {"value", rational_value}};
            auto ord = padic_ord(value, g.prime);
            std::string payload = "{\"prime\": " + std::to_string(g.prime) +
                                  ", \"value\": \"" + json_escape(rational_value) +
                                  "\", \"ord\": " + (ord ? std::to_string(*ord) : std::string("null")) +
                                  ", \"norm\": " +
                                  json_number(padic_norm(value, g.prime).convert_to<double>()) + "}";
            (void)params;
            write_output(g, payload);
            return 0;
        }
        PadicInt lifted = PadicInt::from_rational(g.prime, g.precision, value);
        write_output(g, padic_json(lifted, 0, {{"value", rational_value}}));
        return 0;
    }
    if (p_integrate->parsed() || p_measure->parsed()) {
        if (q_offset == 0) q_offset = static_cast<long long>(g.prime);
        PadicInt q(g.prime, g.precision, BigInt(1 + q_offset));
        auto chi = character_or_trivial(g);
        MeasureQuery mq(k_arg, weights, q, chi);
        std::map<std::string, std::string> params{{"prime", std::to_string(g.prime)},
                                                  {"k", std::to_string(k_arg)},
                                                  {"alpha", std::to_string(g.alpha)},
                                                  {"beta", std::to_string(g.beta)},
                                                  {"character", chi.describe()}};
        if (p_measure->parsed()) {
            if (ball.size() != 2)
                throw CLI::ValidationError("--ball", "expected: --ball base level");
            BallAddress addr{ball[0], static_cast<unsigned>(ball[1]), chi.modulus()};
            auto [value, budget] = measure_on_ball(addr, mq);
            params["base"] = std::to_string(ball[0]);
            params["level"] = std::to_string(ball[1]);
            write_output(g, padic_json(value, budget.loss_incurred, params));
            return 0;
        }
        params["level"] = std::to_string(g.level);
        params["domain"] = domain;
        std::pair<PadicInt, PrecisionBudget> result{q, PrecisionBudget{}};
        TwistDomain td;
        if (domain == "X" || domain == "x")
            td = TwistDomain::full_x;
        else if (domain == "pX" || domain == "px")
            td = TwistDomain::p_multiples;
        else
            throw CLI::ValidationError("--domain", "expected X or pX");
        if (twist != 1) {
            params["twist"] = std::to_string(twist);
            result = twisted_integral(mq, twist, td, g.level);
        } else if (td == TwistDomain::p_multiples) {
            result = integrate_over_pX(mq, g.level);
        } else {
            result = integrate_over_X(mq, g.level);
        }
        write_output(g, padic_json(result.first, result.second.loss_incurred, params));
        return 0;
    }

    if (verify->parsed()) {
        SuiteConfig cfg{suite, g.tol, g.seed, g.jobs};
        auto records = run_suite(cfg);
        std::map<std::string, std::string> meta{{"suite", suite},
                                                {"seed", std::to_string(g.seed)},
                                                {"tol", num_str(g.tol)}};
        if (g.format == "table")
            write_output(g, records_table(records));
        else
            write_output(g, records_json(records, meta));
        return suite_passed(records) ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
