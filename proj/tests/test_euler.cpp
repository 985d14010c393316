#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qeuler/euler.hpp"

using namespace qeuler;

TEST_CASE("frozen number values at q = 1/2") {
    // hand-computed from the closed form: (3/2)/(1/2) * (2/3 - 4/5) = -2/5
    CHECK(euler_number_exact(1, 1, Rational(1, 2)) == Rational(-2, 5));
    // 6 * (2/3 - 8/5 + 8/9) = -4/15
    CHECK(euler_number_exact(2, 1, Rational(1, 2)) == Rational(-4, 15));
    CHECK(euler_number_exact(0, 1, Rational(1, 2)) == 1);
    CHECK(euler_number_exact(0, 3, Rational(9, 10)) == 1);

    auto q = QParam::real(0.5);
    CHECK(euler_poly_closed(1, 0.0, {1, 1}, q).real() == doctest::Approx(-0.4).epsilon(1e-14));
    CHECK(euler_poly_closed(2, 0.0, {1, 1}, q).real() ==
          doctest::Approx(-4.0 / 15.0).epsilon(1e-14));
    CHECK(euler_number(2, {1, 1}, 0.5) == doctest::Approx(-4.0 / 15.0));

    // polynomial spot value: closed form at n=1, x=1 gives 4/5
    CHECK(euler_poly_closed_exact(1, 1, 1, Rational(1, 2)) == Rational(4, 5));
    CHECK(euler_poly_closed(1, 1.0, {1, 1}, q).real() == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("n = 0 collapses to 1 on every route") {
    for (double qd : {0.1, 0.5, 0.9}) {
        auto q = QParam::real(qd);
        for (double x : {0.0, 0.5, 2.0}) {
            CHECK(euler_poly_closed(0, x, {2, 1}, q).real() == doctest::Approx(1.0));
            CHECK(euler_poly_umbral(0, x, {2, 1}, q).real() == doctest::Approx(1.0));
            CHECK(euler_ab_poly(0, x, {2, 3}, q).real() == doctest::Approx(1.0));
            auto rep = euler_poly_series(0, x, {2, 1}, q, 1e-12);
            CHECK(rep.converged);
            CHECK(rep.value.real() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("three routes agree on the standard grid") {
    for (double qd : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        auto q = QParam::real(qd);
        for (unsigned alpha : {1u, 2u, 3u}) {
            WeightParams w{alpha, 1};
            for (unsigned n = 0; n <= 8; ++n) {
                for (double x : {0.0, 0.5, 1.0, 2.0}) {
                    double closed = euler_poly_closed(n, x, w, q).real();
                    double umbral = euler_poly_umbral(n, x, w, q).real();
                    auto series = euler_poly_series(n, x, w, q, 1e-12);
                    REQUIRE(series.converged);
                    CHECK(std::abs(closed - umbral) <= 1e-10);
                    CHECK(std::abs(closed - series.value.real()) <= 1e-10);
                    CHECK(std::abs(umbral - series.value.real()) <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("series reports a rigorous tail") {
    auto rep = euler_poly_series(1, 0.0, {1, 1}, QParam::real(0.5), 1e-12);
    CHECK(rep.converged);
    CHECK(rep.tail_bound <= 1e-12);
    CHECK(rep.value.real() == doctest::Approx(-0.4).epsilon(1e-11));
    CHECK(rep.terms_used > 10);

    // very near q = 1 the bound decays too slowly to converge before the cap
    auto hard = euler_poly_series(2, 0.0, {1, 1}, QParam::real(1.0 - 1e-6), 1e-10);
    CHECK_FALSE(hard.converged);
    CHECK(hard.terms_used == 1000000);
    CHECK(hard.tail_bound > 1e-10);
}

TEST_CASE("umbral route degenerates to the number at x = 0") {
    for (double qd : {0.3, 0.7}) {
        auto q = QParam::real(qd);
        for (unsigned n : {1u, 3u, 6u}) {
            double num = euler_poly_closed(n, 0.0, {2, 1}, q).real();
            CHECK(euler_poly_umbral(n, 0.0, {2, 1}, q).real() == doctest::Approx(num));
        }
    }
}

TEST_CASE("two-weight family") {
    auto q = QParam::real(0.5);
    // hand-computed: (5/4)/(1/2) * (4/5 - 8/9) = -2/9
    CHECK(euler_ab_number_exact(1, 1, 2, Rational(1, 2)) == Rational(-2, 9));
    CHECK(euler_ab_poly(1, 0.0, {1, 2}, q).real() == doctest::Approx(-2.0 / 9.0).epsilon(1e-14));

    // beta = 1 recovers the single-weight family
    for (double qd : {0.2, 0.6, 0.9}) {
        auto qp = QParam::real(qd);
        for (unsigned n : {0u, 1u, 4u, 7u}) {
            for (double x : {0.0, 1.5}) {
                CHECK(euler_ab_poly(n, x, {2, 1}, qp).real() ==
                      doctest::Approx(euler_poly_closed(n, x, {2, 1}, qp).real()).epsilon(1e-13));
            }
        }
    }
    CHECK(euler_ab_number_exact(3, 2, 1, Rational(3, 10)) ==
          euler_number_exact(3, 2, Rational(3, 10)));
}

TEST_CASE("rescaled exact evaluation stays a rational function of q") {
    // base q^M at x = a/M: cross-check against the 50-digit floating route
    for (long long M : {3, 5, 15}) {
        for (long long a : {0, 1, 2}) {
            Rational exact = euler_ab_scaled_exact(2, a, M, 1, 1, Rational(1, 2));
            double qM = std::pow(0.5, static_cast<double>(M));
            double direct = euler_ab_poly(2, static_cast<double>(a) / static_cast<double>(M),
                                          {1, 1}, QParam::real(qM))
                                .real();
            CHECK(to_double(exact) == doctest::Approx(direct).epsilon(1e-12));
        }
    }
    // M = 1 is the plain polynomial
    CHECK(euler_ab_scaled_exact(4, 2, 1, 2, 1, Rational(2, 5)) ==
          euler_poly_closed_exact(4, 2, 2, Rational(2, 5)));
}

TEST_CASE("classical polynomials from the doubling recurrence") {
    CHECK(classical_euler_poly(0, 0.7) == 1.0);
    CHECK(classical_euler_poly_exact(1, Rational(0)) == Rational(-1, 2));
    CHECK(classical_euler_poly_exact(3, Rational(0)) == Rational(1, 4));
    CHECK(classical_euler_poly_exact(2, Rational(1, 2)) == Rational(-1, 4));
    CHECK(classical_euler_poly(1, 1.0) == doctest::Approx(0.5));
    // reflection E_n(1-x) = (-1)^n E_n(x)
    for (unsigned n = 0; n <= 6; ++n) {
        Rational lhs = classical_euler_poly_exact(n, Rational(3, 4));
        Rational rhs = classical_euler_poly_exact(n, Rational(1, 4));
        CHECK(lhs == (n % 2 == 0 ? rhs : -rhs));
    }
}

TEST_CASE("classical limit as q tends to 1") {
    for (unsigned n = 0; n <= 4; ++n) {
        for (double x : {0.0, 0.5, 1.0}) {
            double target = classical_euler_poly(n, x);
            std::vector<double> dev;
            for (int j = 1; j <= 4; ++j) {
                double qd = 1.0 - std::pow(10.0, -j);
                dev.push_back(
                    std::abs(euler_poly_closed(n, x, {1, 1}, QParam::real(qd)).real() - target));
            }
            bool tiny = true;
            for (double d : dev) tiny = tiny && d <= 1e-13;
            bool decreasing = dev[0] > dev[1] && dev[1] > dev[2] && dev[2] > dev[3];
            CHECK((tiny || decreasing));
        }
    }
}

TEST_CASE("alternating power-sum identities, even cutoff") {
    // n = 0: both sides collapse to 1 - q^k
    auto rec0 = check_even_identity(2, 0, {1, 1}, Rational(1, 2));
    CHECK(rec0.status == CheckStatus::pass);
    CHECK(rec0.residual == 0.0);

    for (auto [k, n, alpha, q] :
         {std::tuple<long long, unsigned, unsigned, Rational>{2, 3, 1, Rational(1, 2)},
          {4, 5, 2, Rational(3, 10)},
          {6, 2, 3, Rational(7, 10)},
          {2, 8, 1, Rational(9, 10)}}) {
        auto rec = check_even_identity(k, n, {alpha, 1}, q);
        CAPTURE(k); CAPTURE(n); CAPTURE(alpha);
        CHECK(rec.status == CheckStatus::pass);
        CHECK(rec.residual == 0.0);
    }
    CHECK_THROWS_AS(check_even_identity(3, 1, {1, 1}, Rational(1, 2)), std::domain_error);
}

TEST_CASE("alternating power-sum identities, odd cutoff") {
    auto rec0 = check_odd_identity(1, 0, {1, 1}, Rational(1, 2));
    CHECK(rec0.status == CheckStatus::pass);

    for (auto [k, n, alpha, q] :
         {std::tuple<long long, unsigned, unsigned, Rational>{3, 4, 1, Rational(1, 2)},
          {5, 2, 3, Rational(7, 10)},
          {1, 6, 2, Rational(2, 5)},
          {7, 3, 1, Rational(1, 3)}}) {
        auto rec = check_odd_identity(k, n, {alpha, 1}, q);
        CAPTURE(k); CAPTURE(n); CAPTURE(alpha);
        CHECK(rec.status == CheckStatus::pass);
        CHECK(rec.residual == 0.0);
    }
    CHECK_THROWS_AS(check_odd_identity(2, 1, {1, 1}, Rational(1, 2)), std::domain_error);
}

TEST_CASE("shift-by-k raw identities in exact arithmetic") {
    // even k: E_n - q^k E_n(k) equals the alternating power sum below k;
    // odd k: E_n + q^k E_n(k) does.
    for (unsigned alpha : {1u, 2u}) {
        for (Rational q : {Rational(1, 2), Rational(3, 10)}) {
            Rational qa = rpow(q, alpha);
            for (unsigned n = 0; n <= 6; ++n) {
                for (long long k = 1; k <= 6; ++k) {
                    Rational lhs = 0;
                    for (long long l = 0; l < k; ++l) {
                        Rational bracket = (1 - rpow(qa, l)) / (1 - qa);
                        Rational term = rpow(q, l) * rpow(bracket, n);
                        lhs += (l % 2 == 0) ? term : -term;
                    }
                    lhs *= (1 + q);
                    Rational en = euler_number_exact(n, alpha, q);
                    Rational ek = euler_poly_closed_exact(n, k, alpha, q);
                    Rational rhs =
                        (k % 2 == 0) ? en - rpow(q, k) * ek : en + rpow(q, k) * ek;
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("domain errors") {
    auto q = QParam::real(0.5);
    CHECK_THROWS_AS(euler_poly_closed(1, 0.0, {0, 1}, q), std::domain_error);
    CHECK_THROWS_AS(euler_ab_poly(1, 0.0, {1, 0}, q), std::domain_error);
    CHECK_THROWS_AS(euler_poly_series(1, -1.0, {1, 1}, q, 1e-10), std::domain_error);
    CHECK_THROWS_AS(euler_poly_series(1, 0.0, {1, 1}, q, -1.0), std::domain_error);
    CHECK_THROWS_AS(euler_poly_series(1, 0.0, {1, 1}, QParam::complex_disk(Complex(0.1, 0.1)), 1e-10),
                    std::domain_error);
    CHECK_THROWS_AS(euler_poly_umbral(2, 0.5, {1, 1}, QParam::complex_disk(Complex(0.1, 0.1))),
                    std::domain_error);
    // alpha = 0 is fine at n = 0
    CHECK(euler_poly_closed(0, 0.0, {0, 1}, q).real() == doctest::Approx(1.0));
}

TEST_CASE("complex q keeps closed and umbral routes consistent") {
    auto q = QParam::complex_disk(Complex(0.3, 0.25));
    for (unsigned n : {1u, 3u, 5u}) {
        Complex closed = euler_poly_closed(n, 2.0, {2, 1}, q);
        Complex umbral = euler_poly_umbral(n, 2.0, {2, 1}, q);
        CHECK(std::abs(closed - umbral) < 1e-12);
    }
}
