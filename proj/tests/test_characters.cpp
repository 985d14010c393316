#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qeuler/characters.hpp"

using namespace qeuler;

TEST_CASE("jacobi symbol") {
    CHECK(jacobi_symbol(2, 3) == -1);
    CHECK(jacobi_symbol(4, 5) == 1);
    CHECK(jacobi_symbol(2, 5) == -1);
    CHECK(jacobi_symbol(3, 9) == 0);
    CHECK(jacobi_symbol(7, 1) == 1);
    CHECK(jacobi_symbol(-1, 3) == -1);
    // multiplicative in the top argument
    for (long long d : {3, 5, 7, 9, 15}) {
        for (long long m = 0; m < 20; ++m)
            for (long long n = 0; n < 20; ++n)
                CHECK(jacobi_symbol(m * n, d) == jacobi_symbol(m, d) * jacobi_symbol(n, d));
    }
}

TEST_CASE("principal and quadratic characters") {
    auto triv1 = DirichletCharacter::principal(1);
    CHECK(triv1(0) == Complex(1, 0));
    CHECK(triv1(12345) == Complex(1, 0));
    CHECK(triv1.is_principal());
    CHECK(triv1.is_sign_valued());

    auto q1 = DirichletCharacter::quadratic(1);
    CHECK(q1.is_principal());

    auto chi3 = DirichletCharacter::quadratic(3);
    CHECK(chi3(2) == Complex(-1, 0));
    CHECK(chi3(1) == Complex(1, 0));
    CHECK(chi3(3) == Complex(0, 0));
    CHECK(chi3.sign_at(2) == -1);
    CHECK(chi3.sign_at(5) == -1);
    CHECK_FALSE(chi3.is_principal());

    auto chi5 = DirichletCharacter::quadratic(5);
    CHECK(chi5(4) == Complex(1, 0));
    CHECK(chi5(2) == Complex(-1, 0));

    auto triv9 = DirichletCharacter::principal(9);
    CHECK(triv9(3) == Complex(0, 0));
    CHECK(triv9(4) == Complex(1, 0));

    CHECK_THROWS_AS(DirichletCharacter::principal(4), std::domain_error);
    CHECK_THROWS_AS(DirichletCharacter::principal(0), std::domain_error);
}

TEST_CASE("table construction and validation") {
    auto chi = DirichletCharacter::from_table(3, {Complex(0), Complex(1), Complex(-1)});
    CHECK(chi.sign_at(2) == -1);
    CHECK(chi.is_sign_valued());

    auto principal3 = DirichletCharacter::from_table(3, {Complex(0), Complex(1), Complex(1)});
    CHECK(principal3.is_principal());

    // nonzero at a non-unit
    CHECK_THROWS_AS(DirichletCharacter::from_table(3, {Complex(1), Complex(1), Complex(1)}),
                    std::domain_error);
    // multiplicativity violation: chi(2)^2 should be chi(4 mod 5) = chi(4)
    CHECK_THROWS_AS(
        DirichletCharacter::from_table(
            5, {Complex(0), Complex(1), Complex(-1), Complex(-1), Complex(-1)}),
        std::domain_error);
    // wrong length
    CHECK_THROWS_AS(DirichletCharacter::from_table(3, {Complex(0), Complex(1)}),
                    std::domain_error);
    // off-circle unit value
    CHECK_THROWS_AS(DirichletCharacter::from_table(3, {Complex(0), Complex(1), Complex(0.5)}),
                    std::domain_error);
}

TEST_CASE("periodicity and multiplicativity on constructed characters") {
    for (long long d : {3, 5, 7, 9, 15}) {
        auto chi = DirichletCharacter::quadratic(d);
        for (long long n = -10; n < 25; ++n) CHECK(chi(n + d) == chi(n));
        for (long long m = 0; m < d; ++m)
            for (long long n = 0; n < d; ++n)
                CHECK(std::abs(chi(m * n) - chi(m) * chi(n)) < 1e-14);
    }
}

TEST_CASE("enumeration covers the full dual group") {
    CHECK(enumerate_characters(1).size() == 1);
    CHECK(enumerate_characters(3).size() == 2);
    CHECK(enumerate_characters(5).size() == 4);
    CHECK(enumerate_characters(9).size() == 6);
    CHECK(enumerate_characters(15).size() == 8);

    for (long long d : {3, 5, 9, 15}) {
        auto all = enumerate_characters(d);
        // exactly one principal character, all tables distinct
        int principal_count = 0;
        for (const auto& chi : all) principal_count += chi.is_principal() ? 1 : 0;
        CHECK(principal_count == 1);
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                double dist = 0;
                for (long long n = 0; n < d; ++n) dist += std::abs(all[i](n) - all[j](n));
                CHECK(dist > 1e-6);
            }
        }
        // orthogonality: sum over residues vanishes for non-principal characters
        for (const auto& chi : all) {
            if (chi.is_principal()) continue;
            Complex total = 0;
            for (long long n = 0; n < d; ++n) total += chi(n);
            CHECK(std::abs(total) < 1e-12);
        }
    }

    // quadratic character mod 5 appears in the enumeration
    auto all5 = enumerate_characters(5);
    auto quad5 = DirichletCharacter::quadratic(5);
    bool found = false;
    for (const auto& chi : all5) {
        double dist = 0;
        for (long long n = 0; n < 5; ++n) dist += std::abs(chi(n) - quad5(n));
        if (dist < 1e-12) found = true;
    }
    CHECK(found);
}

TEST_CASE("principal character sums to phi(d)") {
    for (long long d : {3, 5, 9, 15}) {
        auto chi = DirichletCharacter::principal(d);
        Complex total = 0;
        long long phi = 0;
        for (long long n = 0; n < d; ++n) {
            total += chi(n);
            if (std::gcd(n, d) == 1) ++phi;
        }
        CHECK(total.real() == doctest::Approx(static_cast<double>(phi)));
    }
}

TEST_CASE("sign access is restricted to sign-valued characters") {
    auto all9 = enumerate_characters(9);
    bool saw_complex = false;
    for (const auto& chi : all9) {
        if (!chi.is_sign_valued()) {
            saw_complex = true;
            CHECK_THROWS_AS(chi.sign_at(2), std::domain_error);
        }
    }
    CHECK(saw_complex);
}

TEST_CASE("parsing character specs") {
    auto chi = DirichletCharacter::parse("quadratic:5");
    CHECK(chi(2) == Complex(-1, 0));
    auto triv = DirichletCharacter::parse("trivial:3");
    CHECK(triv.is_principal());
    auto tab = DirichletCharacter::parse("table:3:0,1,-1");
    CHECK(tab.sign_at(2) == -1);
    CHECK_THROWS_AS(DirichletCharacter::parse("nonsense:3"), std::domain_error);
    CHECK_THROWS_AS(DirichletCharacter::parse("quadratic"), std::domain_error);
}
