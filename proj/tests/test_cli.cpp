#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>
#include <qeuler/euler.hpp>
#include <qeuler/measure.hpp>
#include <qeuler/padic.hpp>
#include <qeuler/zeta.hpp>

using nlohmann::json;
using namespace qeuler;

namespace {

struct cmd_result {
    std::string out;
    int code = -1;
};

// runs the installed binary with the given arguments, stderr discarded
cmd_result run_cli(const std::string& args) {
    const char* bin = std::getenv("QEULER_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "QEULER_BIN must point at the command-line binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    cmd_result res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int raw = pclose(pipe);
    res.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return res;
}

json run_json(const std::string& args) {
    auto res = run_cli(args);
    REQUIRE(res.code == 0);
    return json::parse(res.out);
}

}  // namespace

TEST_CASE("scalar compute output matches the library") {
    auto j = run_json("compute number --n 1 --q 0.5");
    CHECK(j["value"].get<double>() == doctest::Approx(euler_number(1, {1, 1}, 0.5)).epsilon(1e-15));
    CHECK(j["parameters"]["n"] == "1");

    auto j3 = run_json("compute number --n 3 --q 0.3 --alpha 2");
    CHECK(j3["value"].get<double>() ==
          doctest::Approx(euler_number(3, {2, 1}, 0.3)).epsilon(1e-15));
}

TEST_CASE("series output carries the truncation report fields") {
    auto j = run_json("compute poly --n 2 --x 0.5 --q 0.5 --method series --tol 1e-9");
    REQUIRE(j.contains("terms_used"));
    REQUIRE(j.contains("tail_bound"));
    REQUIRE(j.contains("converged"));
    CHECK(j["converged"].get<bool>());
    CHECK(j["tail_bound"].get<double>() <= 1e-9);
    auto rep = euler_poly_series(2, 0.5, {1, 1}, QParam::real(0.5), 1e-9);
    CHECK(j["value"].get<double>() == doctest::Approx(rep.real()).epsilon(1e-14));
}

TEST_CASE("partial zeta routes agree through the command line") {
    std::string base = "compute partial-zeta --s 1.5 --x 1 --residue 1 --modulus 3 "
                       "--char quadratic:3 --q 0.5";
    auto direct = run_json(base + " --method direct");
    auto binom = run_json(base + " --method binomial");
    CHECK(direct["value"].get<double>() ==
          doctest::Approx(binom["value"].get<double>()).epsilon(1e-8));
}

TEST_CASE("curve emits one csv row per grid point") {
    auto res = run_cli("curve --steps 2 2 --s-range 1 2 --w-range -0.5 0.5");
    REQUIRE(res.code == 0);
    std::istringstream lines(res.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line))
        if (!line.empty()) rows.push_back(line);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "s,w,value");
    // every data row has exactly two commas
    for (size_t i = 1; i < rows.size(); ++i) {
        long commas = std::count(rows[i].begin(), rows[i].end(), ',');
        CHECK(commas == 2);
    }

    auto j = run_json("curve --steps 2 2 --s-range 1 2 --w-range -0.5 0.5 --format json");
    CHECK(j["points"].size() == 4);
}

TEST_CASE("digit expansions round-trip through the emitted json") {
    auto j = run_json("padic digits --value 7/3 --prime 5 --precision 6");
    REQUIRE(j["prime"].get<unsigned>() == 5);
    REQUIRE(j["precision"].get<unsigned>() == 6);
    std::vector<unsigned> digits = j["digits"].get<std::vector<unsigned>>();
    PadicInt rebuilt = from_hensel_digits(5, digits);
    CHECK(rebuilt == PadicInt::from_rational(5, 6, Rational(7, 3)));
}

TEST_CASE("ord output reports valuation and norm") {
    auto j = run_json("padic ord --value 50/3 --prime 5");
    CHECK(j["ord"].get<long long>() == 2);
    CHECK(j["norm"].get<double>() == doctest::Approx(0.04));

    auto z = run_json("padic ord --value 0 --prime 7");
    CHECK(z["ord"].is_null());
    CHECK(z["norm"].get<double>() == 0.0);
}

TEST_CASE("measure output is a full digit record") {
    auto j = run_json("padic measure --prime 5 --ball 2 1 --k 1 --precision 10");
    REQUIRE(j.contains("prime"));
    REQUIRE(j.contains("precision"));
    REQUIRE(j.contains("digits"));
    REQUIRE(j.contains("valuation"));
    REQUIRE(j.contains("loss"));
    CHECK(j["digits"].size() == j["precision"].get<size_t>());

    // spot check against the library
    PadicInt q(5, 10, BigInt(6));
    MeasureQuery mq(1, {1, 1}, q, DirichletCharacter::principal(1));
    auto expect = measure_on_ball({2, 1, 1}, mq);
    std::vector<unsigned> digits = j["digits"].get<std::vector<unsigned>>();
    CHECK(from_hensel_digits(5, digits) == expect.first);
    CHECK(j["loss"].get<unsigned>() == expect.second.loss_incurred);
}

TEST_CASE("verify exits zero on a passing suite and rejects unknown names") {
    auto ok = run_cli("verify euler");
    CHECK(ok.code == 0);
    auto bad = run_cli("verify no-such-suite");
    CHECK(bad.code == 2);
}

TEST_CASE("verify output is byte-identical across seeds and worker counts") {
    std::string args = "verify zeta --seed 11 --tol 1e-10";
    auto a = run_cli(args + " --jobs 1");
    auto b = run_cli(args + " --jobs 4");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);

    auto j = json::parse(a.out);
    bool saw_printed = false;
    for (const auto& rec : j["records"]) {
        if (rec["identity_id"] == "eq21-printed") {
            saw_printed = true;
            CHECK(rec["status"] == "expected-fail");
        }
    }
    CHECK(saw_printed);
}

TEST_CASE("malformed input exits with a usage error") {
    auto res = run_cli("compute partial-zeta --s 1 --x 1 --residue 7 --modulus 3 --q 0.5");
    CHECK(res.code == 2);
    auto parse = run_cli("padic ord --value nonsense --prime 5");
    CHECK(parse.code == 2);
}
