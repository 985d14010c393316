#pragma once

#include "qeuler/characters.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/numkit.hpp"
#include "qeuler/report.hpp"

namespace qeuler {

// One evaluation point of the character-twisted weighted q-Euler family.
struct DirichletEulerQuery {
    unsigned n = 0;
    double x = 0.0;
    DirichletCharacter character = DirichletCharacter::principal(1);
    WeightParams weights{1, 1};
    QParam q = QParam::real(0.5);
};

TruncationReport dirichlet_euler_series(const DirichletEulerQuery& query, double tol);
Complex dirichlet_euler_closed(const DirichletEulerQuery& query);
Complex dirichlet_euler_umbral(const DirichletEulerQuery& query);

enum class DistributionVariant { single_weight, alpha_beta };

// Multiplication theorem: the twisted value decomposes over residues mod d
// into rescaled untwisted values at base q^d. Verified against the series.
VerificationRecord distribution_check(const DirichletEulerQuery& query,
                                      DistributionVariant variant, double tol);

// The same theorem exactly as printed (scale factor to the first power,
// argument x + a/d, lhs at dx). Inconsistent for n >= 2; kept as a ledger
// entry with its measured residual.
VerificationRecord distribution_printed_record(const DirichletEulerQuery& query);

// Bracket power via the negative-binomial times exponential-Stirling double
// series, both indices truncated at cap.
double bracket_power_stirling(unsigned k, double x, unsigned alpha, double q, unsigned cap);

VerificationRecord stirling_expansion_check(unsigned n, double x,
                                            const DirichletCharacter& character, WeightParams w,
                                            double q, unsigned cap);

// Shift-by-d consistency: q^d E(x+d) + E(x) equals the finite alternating
// boundary sum over residues below d.
VerificationRecord shift_consistency_check(const DirichletEulerQuery& query, double tol);

}  // namespace qeuler
