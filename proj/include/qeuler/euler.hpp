#pragma once

#include "qeuler/numkit.hpp"
#include "qeuler/rational.hpp"
#include "qeuler/report.hpp"

namespace qeuler {

// Weight pair for the q-Euler families. The single-weight family reads only
// alpha; beta enters through the second-weight generalization.
struct WeightParams {
    unsigned alpha = 1;
    unsigned beta = 1;
};

// Closed finite-sum evaluation of the weighted q-Euler polynomial; x = 0
// gives the weighted q-Euler number. Uses alpha only.
Complex euler_poly_closed(unsigned n, double x, WeightParams w, const QParam& q);

// Alternating-series route with a rigorous tail bound.
TruncationReport euler_poly_series(unsigned n, double x, WeightParams w, const QParam& q,
                                   double tol);

// Binomial expansion over the q-Euler numbers (the symbolic-power identity,
// expanded): sum_k C(n,k) q^{alpha k x} E_k (x-bracket)^{n-k}.
Complex euler_poly_umbral(unsigned n, double x, WeightParams w, const QParam& q);

// Two-weight (alpha, beta) family.
Complex euler_ab_poly(unsigned n, double x, WeightParams w, const QParam& q);

double euler_number(unsigned n, WeightParams w, double q);

double classical_euler_poly(unsigned n, double x);
Rational classical_euler_poly_exact(unsigned n, const Rational& x);

// Exact-rational oracles (integer arguments keep everything in Q(q)).
Rational euler_number_exact(unsigned n, unsigned alpha, const Rational& q);
Rational euler_poly_closed_exact(unsigned n, long long x, unsigned alpha, const Rational& q);
Rational euler_ab_number_exact(unsigned n, unsigned alpha, unsigned beta, const Rational& q);
// Value of the (alpha,beta) polynomial at x = a/M in base q^M; the rescaling
// cancels all fractional exponents, so the result is a rational function of q.
Rational euler_ab_scaled_exact(unsigned n, long long a, long long M, unsigned alpha,
                               unsigned beta, const Rational& q);

// Alternating power-sum identities: for a multiple-of-2 (resp. odd) cutoff k,
// [2:q] sum_{l<k} (-1)^l q^l [l:q^alpha]^n telescopes against the numbers.
// Verified in exact rational arithmetic; residual is exactly zero on success.
VerificationRecord check_even_identity(long long k, unsigned n, WeightParams w,
                                       const Rational& q);
VerificationRecord check_odd_identity(long long k, unsigned n, WeightParams w, const Rational& q);
VerificationRecord check_even_identity(long long k, unsigned n, WeightParams w, const QParam& q);
VerificationRecord check_odd_identity(long long k, unsigned n, WeightParams w, const QParam& q);

}  // namespace qeuler
