#include "qeuler/euler.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qeuler {

namespace {

using mpf = boost::multiprecision::cpp_bin_float_50;

void require_weights(unsigned n, WeightParams w, bool need_beta) {
    if (n >= 1 && w.alpha == 0)
        throw std::domain_error("euler: alpha = 0 degenerates the closed form for n >= 1");
    if (need_beta && w.beta == 0) throw std::domain_error("euler: beta must be positive");
}

mpf mp_pow(const mpf& q, const mpf& e) { return exp(e * log(q)); }

// (alpha,beta) closed form at real x, 50-digit internals. The alternating
// binomial sum cancels to order (1-q^alpha)^n near q = 1, which double
// arithmetic cannot survive; the extra digits make the division benign.
double closed_ab_real(unsigned n, double x, unsigned alpha, unsigned beta, double q) {
    mpf mq(q);
    mpf qa = mp_pow(mq, mpf(alpha));
    mpf qb = mp_pow(mq, mpf(beta));
    mpf sum = 0;
    for (unsigned j = 0; j <= n; ++j) {
        mpf coeff(binom(n, j).str());
        mpf top = mp_pow(mq, mpf(alpha) * j * mpf(x));
        mpf term = coeff * top / (1 + mp_pow(qa, mpf(j)) * qb);
        sum += (j % 2 == 0) ? term : -term;
    }
    mpf bracket2 = 1 + qb;  // [2 : q^beta]
    mpf value = bracket2 * sum / pow(1 - qa, static_cast<int>(n));
    return value.convert_to<double>();
}

Complex cpow_int(Complex base, long long e) {
    if (e < 0) return 1.0 / cpow_int(base, -e);
    Complex acc = 1.0;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

Complex closed_ab_complex(unsigned n, double x, unsigned alpha, unsigned beta, Complex q) {
    if (!is_integer(x))
        throw std::domain_error("euler: non-integer x with complex q is branch-ambiguous");
    long long xi = static_cast<long long>(x);
    Complex qa = cpow_int(q, alpha);
    Complex qb = cpow_int(q, beta);
    Complex sum = 0.0;
    for (unsigned j = 0; j <= n; ++j) {
        Complex term = to_double(binom(n, j)) * cpow_int(q, static_cast<long long>(alpha) * j * xi) /
                       (1.0 + cpow_int(qa, j) * qb);
        sum += (j % 2 == 0) ? term : -term;
    }
    return (1.0 + qb) * sum / cpow_int(1.0 - qa, n);
}

}  // namespace

Complex euler_poly_closed(unsigned n, double x, WeightParams w, const QParam& q) {
    require_weights(n, w, false);
    if (q.is_real()) return Complex(closed_ab_real(n, x, w.alpha, 1, q.real_value()), 0.0);
    return closed_ab_complex(n, x, w.alpha, 1, q.value());
}

Complex euler_ab_poly(unsigned n, double x, WeightParams w, const QParam& q) {
    require_weights(n, w, true);
    if (q.is_real()) return Complex(closed_ab_real(n, x, w.alpha, w.beta, q.real_value()), 0.0);
    return closed_ab_complex(n, x, w.alpha, w.beta, q.value());
}

double euler_number(unsigned n, WeightParams w, double q) {
    return euler_poly_closed(n, 0.0, w, QParam::real(q)).real();
}

TruncationReport euler_poly_series(unsigned n, double x, WeightParams w, const QParam& q,
                                   double tol) {
    require_weights(n, w, false);
    if (!q.is_real())
        throw std::domain_error("euler series: tail bound needs real q in (0,1)");
    if (x < 0) throw std::domain_error("euler series: x must be nonnegative");
    if (tol <= 0) throw std::domain_error("euler series: tolerance must be positive");
    double qd = q.real_value();

    mpf mq(qd);
    mpf qa = mp_pow(mq, mpf(w.alpha));
    mpf denom = 1 - qa;
    mpf qpow = 1;                                    // q^m
    mpf rpow = mp_pow(mq, mpf(w.alpha) * mpf(x));    // q^{alpha(m+x)}
    mpf sum = 0;
    double bracket2 = 1.0 + qd;
    double big = std::pow(2.0 / (1.0 - std::pow(qd, static_cast<double>(w.alpha))),
                          static_cast<double>(n));
    const std::size_t cap = 1000000;

    TruncationReport rep;
    for (std::size_t m = 0;; ++m) {
        double tail = bracket2 * big * qpow.convert_to<double>() / (1.0 - qd);
        if (tail <= tol) {
            rep.value = Complex((bracket2 * sum).convert_to<double>(), 0.0);
            rep.terms_used = m;
            rep.tail_bound = tail;
            rep.converged = true;
            return rep;
        }
        if (m >= cap) {
            rep.value = Complex((bracket2 * sum).convert_to<double>(), 0.0);
            rep.terms_used = m;
            rep.tail_bound = tail;
            rep.converged = false;
            return rep;
        }
        mpf bracket = (1 - rpow) / denom;
        mpf term = qpow * pow(bracket, static_cast<int>(n));
        sum += (m % 2 == 0) ? term : -term;
        qpow *= mq;
        rpow *= qa;
    }
}

Complex euler_poly_umbral(unsigned n, double x, WeightParams w, const QParam& q) {
    require_weights(n, w, false);
    if (q.is_real()) {
        double qd = q.real_value();
        double qax = std::pow(qd, static_cast<double>(w.alpha) * x);
        double bx = qbracket(x, std::pow(qd, static_cast<double>(w.alpha)));
        NeumaierSum acc;
        double qpow = 1.0;  // q^{alpha k x}
        for (unsigned k = 0; k <= n; ++k) {
            double num = closed_ab_real(k, 0.0, w.alpha, 1, qd);
            double br = (n - k == 0) ? 1.0 : std::pow(bx, static_cast<double>(n - k));
            acc.add(to_double(binom(n, k)) * qpow * num * br);
            qpow *= qax;
        }
        return Complex(acc.value(), 0.0);
    }
    if (!is_integer(x))
        throw std::domain_error("euler: non-integer x with complex q is branch-ambiguous");
    Complex qq = q.value();
    Complex qa = cpow_int(qq, w.alpha);
    long long xi = static_cast<long long>(x);
    Complex bx = (cpow_int(qa, xi) - 1.0) / (qa - 1.0);
    Complex acc = 0.0;
    for (unsigned k = 0; k <= n; ++k) {
        Complex num = closed_ab_complex(k, 0.0, w.alpha, 1, qq);
        acc += to_double(binom(n, k)) * cpow_int(qq, static_cast<long long>(w.alpha) * k * xi) *
               num * cpow_int(bx, n - k);
    }
    return acc;
}

double classical_euler_poly(unsigned n, double x) {
    return to_double(classical_euler_poly_exact(n, Rational(x)));
}

Rational classical_euler_poly_exact(unsigned n, const Rational& x) {
    std::vector<Rational> e(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        Rational s = 0;
        for (unsigned k = 0; k < m; ++k) s += Rational(binom(m, k)) * e[k];
        e[m] = rpow(x, m) - s / 2;
    }
    return e[n];
}

Rational euler_number_exact(unsigned n, unsigned alpha, const Rational& q) {
    return euler_ab_scaled_exact(n, 0, 1, alpha, 1, q);
}

Rational euler_poly_closed_exact(unsigned n, long long x, unsigned alpha, const Rational& q) {
    return euler_ab_scaled_exact(n, x, 1, alpha, 1, q);
}

Rational euler_ab_number_exact(unsigned n, unsigned alpha, unsigned beta, const Rational& q) {
    return euler_ab_scaled_exact(n, 0, 1, alpha, beta, q);
}

Rational euler_ab_scaled_exact(unsigned n, long long a, long long M, unsigned alpha,
                               unsigned beta, const Rational& q) {
    if (n >= 1 && alpha == 0)
        throw std::domain_error("euler: alpha = 0 degenerates the closed form for n >= 1");
    if (beta == 0) throw std::domain_error("euler: beta must be positive");
    if (M < 1) throw std::domain_error("euler: scale must be positive");
    if (q == 1) throw std::domain_error("euler: q = 1 rejected");
    Rational qMa = rpow(q, static_cast<long long>(alpha) * M);
    Rational qMb = rpow(q, static_cast<long long>(beta) * M);
    Rational sum = 0;
    for (unsigned j = 0; j <= n; ++j) {
        Rational term = Rational(binom(n, j)) * rpow(q, static_cast<long long>(alpha) * j * a) /
                        (1 + rpow(qMa, j) * qMb);
        sum += (j % 2 == 0) ? term : -term;
    }
    return (1 + qMb) * sum / rpow(1 - qMa, n);
}

namespace {

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Shared core of the two alternating power-sum identities. sign = -1 gives
// the even-cutoff statement, sign = +1 the odd one.
VerificationRecord check_power_sum(const char* id, int sign, long long k, unsigned n,
                                   WeightParams w, const Rational& q) {
    if (q <= 0 || q >= 1) throw std::domain_error("check: rational q must lie in (0,1)");
    unsigned alpha = w.alpha;
    if (alpha == 0) throw std::domain_error("check: alpha must be positive");

    Rational qa = rpow(q, alpha);
    Rational lhs = 0;
    for (long long l = 0; l < k; ++l) {
        Rational bracket = (1 - rpow(qa, l)) / (1 - qa);
        Rational term = rpow(q, l) * rpow(bracket, n);
        lhs += (l % 2 == 0) ? term : -term;
    }
    lhs *= (1 + q);

    Rational en = euler_number_exact(n, alpha, q);
    Rational head = rpow(q, k * (1 + static_cast<long long>(alpha) * n));
    Rational rhs = (sign < 0) ? Rational((1 - head) * en) : Rational((head + 1) * en);
    Rational bracket_k = (1 - rpow(qa, k)) / (1 - qa);
    Rational tail = 0;
    for (unsigned l = 0; l < n; ++l) {
        tail += Rational(binom(n, l)) * rpow(q, static_cast<long long>(alpha) * l * k) *
                euler_number_exact(l, alpha, q) * rpow(bracket_k, n - l);
    }
    rhs += Rational(sign) * rpow(q, k) * tail;

    Rational diff = lhs - rhs;
    VerificationRecord rec;
    rec.identity_id = id;
    rec.parameters = {{"k", std::to_string(k)},
                      {"n", std::to_string(n)},
                      {"alpha", std::to_string(alpha)},
                      {"q", rat_str(q)}};
    rec.lhs = rat_str(lhs);
    rec.rhs = rat_str(rhs);
    rec.residual = std::abs(to_double(diff));
    rec.status = (diff == 0) ? CheckStatus::pass : CheckStatus::fail;
    if (rec.status == CheckStatus::fail) rec.note = "exact residual is nonzero";
    return rec;
}

}  // namespace

VerificationRecord check_even_identity(long long k, unsigned n, WeightParams w,
                                       const Rational& q) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("check_even_identity: k must be even >= 2");
    return check_power_sum("euler-even-sum-identity", -1, k, n, w, q);
}

VerificationRecord check_odd_identity(long long k, unsigned n, WeightParams w,
                                      const Rational& q) {
    if (k < 1 || k % 2 != 1) throw std::domain_error("check_odd_identity: k must be odd >= 1");
    return check_power_sum("euler-odd-sum-identity", 1, k, n, w, q);
}

VerificationRecord check_even_identity(long long k, unsigned n, WeightParams w, const QParam& q) {
    return check_even_identity(k, n, w, Rational(q.real_value()));
}

VerificationRecord check_odd_identity(long long k, unsigned n, WeightParams w, const QParam& q) {
    return check_odd_identity(k, n, w, Rational(q.real_value()));
}

}  // namespace qeuler
