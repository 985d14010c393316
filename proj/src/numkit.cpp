#include "qeuler/numkit.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qeuler {

QParam QParam::real(double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("QParam: real q must satisfy 0 < q < 1");
    return QParam(Complex(q, 0.0), QDomain::real_unit_interval);
}

QParam QParam::complex_disk(Complex q) {
    if (!(std::abs(q) < 1.0)) throw std::domain_error("QParam: complex q must satisfy |q| < 1");
    return QParam(q, QDomain::complex_open_disk);
}

QParam QParam::padic_marker() { return QParam(Complex(0, 0), QDomain::padic_unit); }

double QParam::real_value() const {
    if (domain_ != QDomain::real_unit_interval)
        throw std::domain_error("QParam: not a real parameter");
    return value_.real();
}

Complex QParam::value() const {
    if (domain_ == QDomain::padic_unit)
        throw std::domain_error("QParam: p-adic marker has no archimedean value");
    return value_;
}

double qbracket(double x, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("qbracket: real q must satisfy 0 < q < 1");
    // (q^x - 1)/(q - 1) with both factors formed cancellation-free
    return std::expm1(x * std::log(q)) / (q - 1.0);
}

static bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

Complex qbracket(Complex x, const QParam& q) {
    if (q.domain() == QDomain::padic_unit)
        throw std::domain_error("qbracket: p-adic q has no archimedean bracket");
    if (q.is_real() && x.imag() == 0.0) return Complex(qbracket(x.real(), q.real_value()), 0.0);
    if (x.imag() != 0.0 || !is_integer(x.real()))
        throw std::domain_error("qbracket: non-integer exponent needs real q in (0,1)");
    // integer x with complex q: finite geometric sum via (q^x - 1)/(q - 1)
    Complex qq = q.value();
    if (qq == Complex(1.0, 0.0)) throw std::domain_error("qbracket: q = 1 rejected");
    long long n = static_cast<long long>(x.real());
    Complex num = std::pow(qq, Complex(static_cast<double>(n), 0.0)) - 1.0;
    return num / (qq - 1.0);
}

Complex qbracket(double x, const QParam& q) { return qbracket(Complex(x, 0.0), q); }

Rational qbracket_exact(long long x, const Rational& q) {
    if (q == 1) throw std::domain_error("qbracket_exact: q = 1 rejected");
    if (x < 0) {
        // (q^x - 1)/(q - 1) for negative integer x
        return (rpow(q, x) - 1) / (q - 1);
    }
    Rational sum = 0, pw = 1;
    for (long long i = 0; i < x; ++i) {
        sum += pw;
        pw *= q;
    }
    return sum;
}

BigInt binom(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

Complex gen_binom(Complex s, unsigned k) {
    Complex acc = 1.0;
    for (unsigned i = 0; i < k; ++i) acc *= (s - static_cast<double>(i)) / (i + 1.0);
    return acc;
}

Rational gen_binom_exact(const Rational& s, unsigned k) {
    Rational acc = 1;
    for (unsigned i = 0; i < k; ++i) acc *= (s - i) / Rational(i + 1);
    return acc;
}

BigInt stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (n == 0) return 1;  // S(0,0) = 1
    if (k == 0) return 0;
    std::vector<BigInt> row(k + 1, 0);
    row[0] = 1;  // row for n' = 0
    for (unsigned i = 1; i <= n; ++i) {
        unsigned top = std::min(i, k);
        for (unsigned j = top; j >= 1; --j) row[j] = BigInt(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

static bool is_nonpositive_integer(double s) { return is_integer(s) && s <= 0.0; }

double gamma_fn(double s) {
    if (is_nonpositive_integer(s)) throw std::domain_error("gamma_fn: pole at nonpositive integer");
    return std::tgamma(s);
}

// Lanczos, g = 7, 9 coefficients; reflection for Re s < 0.5.
static const double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

Complex gamma_fn(Complex s) {
    if (s.imag() == 0.0) {
        if (is_nonpositive_integer(s.real()))
            throw std::domain_error("gamma_fn: pole at nonpositive integer");
        return Complex(std::tgamma(s.real()), 0.0);
    }
    if (s.real() < 0.5) {
        // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s))
        const double pi = 3.14159265358979323846;
        return pi / (std::sin(pi * s) * gamma_fn(1.0 - s));
    }
    Complex z = s - 1.0;
    Complex a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
    Complex t = z + 7.5;
    const double sqrt_two_pi = 2.5066282746310005024;
    return sqrt_two_pi * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double reciprocal_gamma(double s) {
    if (is_nonpositive_integer(s)) return 0.0;
    return 1.0 / std::tgamma(s);
}

Complex reciprocal_gamma(Complex s) {
    if (s.imag() == 0.0) return Complex(reciprocal_gamma(s.real()), 0.0);
    return 1.0 / gamma_fn(s);
}

}  // namespace qeuler
