#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qeuler/rational.hpp"
#include "qeuler/report.hpp"

namespace qeuler {

// Truncated p-adic integer: a residue mod p^N for an odd prime p. The residue
// fits in 64 bits, so N is capped at the largest power of p below 2^63.
class PadicInt {
  public:
    PadicInt(std::uint64_t prime, unsigned precision, const BigInt& value);
    static PadicInt from_rational(std::uint64_t prime, unsigned precision, const Rational& x);

    std::uint64_t prime() const { return p_; }
    unsigned precision() const { return n_; }
    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return mod_; }

    // Exponent of p dividing the residue; empty when the residue vanishes
    // mod p^N (valuation at least N, indistinguishable from +infinity here).
    std::optional<unsigned> valuation() const;
    bool is_unit() const { return r_ % p_ != 0; }
    bool is_zero() const { return r_ == 0; }

    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator*(const PadicInt& o) const;
    PadicInt operator-() const;
    bool operator==(const PadicInt& o) const;

    // Same value reinterpreted at a lower precision.
    PadicInt truncate(unsigned precision) const;

  private:
    PadicInt(std::uint64_t p, unsigned n, std::uint64_t mod, std::uint64_t r)
        : p_(p), n_(n), mod_(mod), r_(r) {}
    std::uint64_t p_;
    unsigned n_;
    std::uint64_t mod_;
    std::uint64_t r_;

    friend PadicInt padic_raw(std::uint64_t p, unsigned n, std::uint64_t mod, std::uint64_t r);
};

// Largest M with p^M < 2^63.
unsigned padic_capacity(std::uint64_t p);

bool padic_equal_mod(const PadicInt& a, const PadicInt& b, unsigned m);

std::optional<long long> padic_ord(const Rational& x, std::uint64_t p);
Rational padic_norm(const Rational& x, std::uint64_t p);

PadicInt padic_inv(const PadicInt& a);

// a/b with explicit precision-loss accounting: quotient is correct mod
// p^{N - val(b)} and carries that reduced precision.
std::pair<PadicInt, PrecisionBudget> divide_tracking_loss(const PadicInt& a, const PadicInt& b);

std::vector<unsigned> hensel_digits(const PadicInt& a);
PadicInt from_hensel_digits(std::uint64_t p, const std::vector<unsigned>& digits);

// "R mod p^N" rendering for reports and logs.
std::string padic_str(const PadicInt& a);

// Series losses from dividing by k (log) or k! (exp) are absorbed by guard
// digits; delta() is the precision the final result may still be missing.
struct SeriesLoss {
    unsigned guard = 0;
    unsigned worst_divisor_valuation = 0;
    unsigned delta() const {
        return worst_divisor_valuation > guard ? worst_divisor_valuation - guard : 0;
    }
};

PadicInt padic_log(const PadicInt& a, SeriesLoss* loss = nullptr);
PadicInt padic_exp(const PadicInt& a, SeriesLoss* loss = nullptr);

// q^e for rational e with denominator coprime to p; q must be 1 mod p.
PadicInt padic_power(const PadicInt& q, const Rational& e, SeriesLoss* loss = nullptr);

PadicInt padic_pow(const PadicInt& q, const BigInt& e);

// [x : q] = 1 + q + ... + q^{x-1}, by binary doubling in O(log x) ring ops.
PadicInt qbracket_padic(const BigInt& x, const PadicInt& q);

}  // namespace qeuler
