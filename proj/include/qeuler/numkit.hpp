#pragma once

#include "qeuler/rational.hpp"

#include <complex>
#include <cstdint>

namespace qeuler {

using Complex = std::complex<double>;

enum class QDomain { real_unit_interval, complex_open_disk, padic_unit };

// The deformation parameter q together with the domain it lives in.
// The domain tag gates which powers q^x are legal: non-integer exponents
// need a real base in (0,1) so the principal power is unambiguous.
class QParam {
  public:
    static QParam real(double q);
    static QParam complex_disk(Complex q);
    static QParam padic_marker();

    QDomain domain() const { return domain_; }
    bool is_real() const { return domain_ == QDomain::real_unit_interval; }
    double real_value() const;
    Complex value() const;

  private:
    QParam(Complex v, QDomain d) : value_(v), domain_(d) {}
    Complex value_;
    QDomain domain_;
};

// [x:q] = (q^x - 1)/(q - 1). Stable for real q via expm1/log.
double qbracket(double x, double q);
Complex qbracket(double x, const QParam& q);
Complex qbracket(Complex x, const QParam& q);
Rational qbracket_exact(long long x, const Rational& q);  // integer x, geometric sum

BigInt binom(long long n, long long k);  // 0 when k > n or k < 0
Complex gen_binom(Complex s, unsigned k);
Rational gen_binom_exact(const Rational& s, unsigned k);
BigInt stirling2(unsigned n, unsigned k);

double gamma_fn(double s);
Complex gamma_fn(Complex s);
double reciprocal_gamma(double s);  // entire; 0 at nonpositive integers
Complex reciprocal_gamma(Complex s);

// Neumaier-compensated accumulator: the series evaluators sum terms whose
// partial sums can exceed the final value by several orders of magnitude.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

struct NeumaierSumComplex {
    NeumaierSum re, im;
    void add(Complex z) {
        re.add(z.real());
        im.add(z.imag());
    }
    Complex value() const { return {re.value(), im.value()}; }
};

}  // namespace qeuler
