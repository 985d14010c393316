#include "qeuler/padic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qeuler {

namespace {

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    while (e) {
        if (e & 1) acc = mulmod(acc, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return acc;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    // extended Euclid; caller guarantees gcd(a, m) = 1
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
    while (nr != 0) {
        long long qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    if (r != 1) throw std::domain_error("invmod: not invertible");
    if (t < 0) t += static_cast<long long>(m);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t pow_u64(std::uint64_t p, unsigned n) {
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < n; ++i) acc *= p;
    return acc;
}

std::uint64_t reduce_bigint(const BigInt& v, std::uint64_t mod) {
    BigInt r = v % BigInt(mod);
    if (r < 0) r += BigInt(mod);
    return r.convert_to<std::uint64_t>();
}

}  // namespace

unsigned padic_capacity(std::uint64_t p) {
    const std::uint64_t limit = (std::uint64_t(1) << 63) - 1;
    unsigned m = 0;
    std::uint64_t acc = 1;
    while (acc <= limit / p) {
        acc *= p;
        ++m;
    }
    return m;
}

PadicInt padic_raw(std::uint64_t p, unsigned n, std::uint64_t mod, std::uint64_t r) {
    return PadicInt(p, n, mod, r);
}

PadicInt::PadicInt(std::uint64_t prime, unsigned precision, const BigInt& value)
    : p_(prime), n_(precision) {
    if (!is_odd_prime(prime)) throw std::domain_error("PadicInt: p must be an odd prime");
    if (precision == 0) throw std::domain_error("PadicInt: precision must be positive");
    if (precision > padic_capacity(prime))
        throw std::domain_error("PadicInt: p^precision exceeds the 63-bit residue");
    mod_ = pow_u64(prime, precision);
    r_ = reduce_bigint(value, mod_);
}

PadicInt PadicInt::from_rational(std::uint64_t prime, unsigned precision, const Rational& x) {
    PadicInt shell(prime, precision, 0);
    BigInt num = numerator(x), den = denominator(x);
    if (den % prime == 0)
        throw std::domain_error("PadicInt: rational has negative valuation (denominator not a unit)");
    std::uint64_t n = reduce_bigint(num, shell.mod_);
    std::uint64_t d = reduce_bigint(den, shell.mod_);
    shell.r_ = mulmod(n, invmod(d, shell.mod_), shell.mod_);
    return shell;
}

std::optional<unsigned> PadicInt::valuation() const {
    if (r_ == 0) return std::nullopt;
    unsigned v = 0;
    std::uint64_t r = r_;
    while (r % p_ == 0) {
        r /= p_;
        ++v;
    }
    return v;
}

static void check_same_prime(const PadicInt& a, const PadicInt& b) {
    if (a.prime() != b.prime()) throw std::domain_error("PadicInt: prime mismatch");
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
    check_same_prime(*this, o);
    unsigned n = std::min(n_, o.n_);
    std::uint64_t mod = pow_u64(p_, n);
    return PadicInt(p_, n, mod, (r_ % mod + o.r_ % mod) % mod);
}

PadicInt PadicInt::operator-(const PadicInt& o) const { return *this + (-o); }

PadicInt PadicInt::operator*(const PadicInt& o) const {
    check_same_prime(*this, o);
    unsigned n = std::min(n_, o.n_);
    std::uint64_t mod = pow_u64(p_, n);
    return PadicInt(p_, n, mod, mulmod(r_ % mod, o.r_ % mod, mod));
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, n_, mod_, r_ == 0 ? 0 : mod_ - r_); }

bool PadicInt::operator==(const PadicInt& o) const {
    return p_ == o.p_ && n_ == o.n_ && r_ == o.r_;
}

PadicInt PadicInt::truncate(unsigned precision) const {
    if (precision > n_) throw std::domain_error("PadicInt::truncate: cannot raise precision");
    std::uint64_t mod = pow_u64(p_, precision);
    return PadicInt(p_, precision, mod, r_ % mod);
}

bool padic_equal_mod(const PadicInt& a, const PadicInt& b, unsigned m) {
    check_same_prime(a, b);
    if (m > a.precision() || m > b.precision())
        throw std::domain_error("padic_equal_mod: precision too low for requested comparison");
    std::uint64_t mod = pow_u64(a.prime(), m);
    return a.residue() % mod == b.residue() % mod;
}

std::optional<long long> padic_ord(const Rational& x, std::uint64_t p) {
    if (!is_odd_prime(p)) throw std::domain_error("padic_ord: p must be an odd prime");
    if (x == 0) return std::nullopt;
    long long v = 0;
    BigInt num = numerator(x), den = denominator(x);
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    return v;
}

Rational padic_norm(const Rational& x, std::uint64_t p) {
    auto v = padic_ord(x, p);
    if (!v) return 0;
    return rpow(Rational(BigInt(p)), -*v);
}

PadicInt padic_inv(const PadicInt& a) {
    if (!a.is_unit())
        throw std::domain_error("padic_inv: non-unit (use divide_tracking_loss for this)");
    return padic_raw(a.prime(), a.precision(), a.modulus(), invmod(a.residue(), a.modulus()));
}

std::pair<PadicInt, PrecisionBudget> divide_tracking_loss(const PadicInt& a, const PadicInt& b) {
    check_same_prime(a, b);
    if (b.is_zero()) throw std::domain_error("divide_tracking_loss: divisor vanishes mod p^N");
    unsigned vb = *b.valuation();
    auto va = a.valuation();
    if (va && *va < vb)
        throw std::domain_error("divide_tracking_loss: quotient is not a p-adic integer");
    unsigned n = std::min(a.precision(), b.precision());
    if (vb >= n) throw std::domain_error("divide_tracking_loss: divisor consumes all precision");
    std::uint64_t pv = pow_u64(a.prime(), vb);
    std::uint64_t mod = pow_u64(a.prime(), n - vb);
    std::uint64_t ra = (a.residue() / pv) % mod;
    std::uint64_t rb = (b.residue() / pv) % mod;
    std::uint64_t q = mulmod(ra, invmod(rb, mod), mod);
    return {padic_raw(a.prime(), n - vb, mod, q), PrecisionBudget{n, vb}};
}

std::vector<unsigned> hensel_digits(const PadicInt& a) {
    std::vector<unsigned> out(a.precision());
    std::uint64_t r = a.residue();
    for (unsigned i = 0; i < a.precision(); ++i) {
        out[i] = static_cast<unsigned>(r % a.prime());
        r /= a.prime();
    }
    return out;
}

PadicInt from_hensel_digits(std::uint64_t p, const std::vector<unsigned>& digits) {
    if (digits.empty()) throw std::domain_error("from_hensel_digits: no digits");
    BigInt acc = 0, pw = 1;
    for (unsigned d : digits) {
        if (d >= p) throw std::domain_error("from_hensel_digits: digit out of range");
        acc += BigInt(d) * pw;
        pw *= p;
    }
    return PadicInt(p, static_cast<unsigned>(digits.size()), acc);
}

std::string padic_str(const PadicInt& a) {
    std::ostringstream os;
    os << a.residue() << " mod " << a.prime() << "^" << a.precision();
    return os.str();
}

namespace {

unsigned guard_digits(std::uint64_t p, unsigned n) {
    unsigned cap = padic_capacity(p);
    unsigned want = std::max(4u, n);
    return std::min(want, cap > n ? cap - n : 0);
}

unsigned vp_u64(std::uint64_t x, std::uint64_t p) {
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace

PadicInt padic_log(const PadicInt& a, SeriesLoss* loss) {
    std::uint64_t p = a.prime();
    unsigned n = a.precision();
    if (a.residue() % p != 1) throw std::domain_error("padic_log: argument must be 1 mod p");
    unsigned g = guard_digits(p, n);
    unsigned w = n + g;
    std::uint64_t mod = pow_u64(p, w);
    std::uint64_t x = (a.residue() - 1) % mod;  // valuation >= 1
    std::uint64_t acc = 0, xpow = 1;
    unsigned worst = 0;
    for (std::uint64_t k = 1;; ++k) {
        xpow = mulmod(xpow, x, mod);
        unsigned vk = vp_u64(k, p);
        worst = std::max(worst, vk);
        if (xpow == 0) break;
        std::uint64_t pv = pow_u64(p, vk);
        std::uint64_t term = mulmod(xpow / pv, invmod(k / pv, mod), mod);
        if (k % 2 == 0) term = term == 0 ? 0 : mod - term;
        acc = (acc + term) % mod;
        if (k > 4 * w) throw std::logic_error("padic_log: series failed to terminate");
    }
    if (loss) *loss = SeriesLoss{g, worst};
    std::uint64_t outmod = pow_u64(p, n);
    return padic_raw(p, n, outmod, acc % outmod);
}

PadicInt padic_exp(const PadicInt& a, SeriesLoss* loss) {
    std::uint64_t p = a.prime();
    unsigned n = a.precision();
    if (a.residue() % p != 0) throw std::domain_error("padic_exp: argument needs valuation >= 1");
    unsigned g = guard_digits(p, n);
    unsigned w = n + g;
    std::uint64_t mod = pow_u64(p, w);
    std::uint64_t x = a.residue() % mod;
    std::uint64_t acc = 1 % mod, xpow = 1 % mod;
    unsigned vfact = 0;  // valuation of k!
    std::uint64_t ufact = 1;  // unit part of k! mod p^w
    unsigned worst = 0;
    for (std::uint64_t k = 1;; ++k) {
        xpow = mulmod(xpow, x, mod);
        unsigned vk = vp_u64(k, p);
        vfact += vk;
        ufact = mulmod(ufact, (k / pow_u64(p, vk)) % mod, mod);
        worst = std::max(worst, vfact);
        if (xpow == 0) break;
        // x^k has valuation >= k >= vfact, so the power of p divides exactly
        std::uint64_t term = mulmod(xpow / pow_u64(p, std::min(vfact, w)), invmod(ufact, mod), mod);
        acc = (acc + term) % mod;
        if (k > 8 * w) throw std::logic_error("padic_exp: series failed to terminate");
    }
    if (loss) *loss = SeriesLoss{g, worst};
    std::uint64_t outmod = pow_u64(p, n);
    return padic_raw(p, n, outmod, acc % outmod);
}

PadicInt padic_power(const PadicInt& q, const Rational& e, SeriesLoss* loss) {
    BigInt den = denominator(e);
    if (den % q.prime() == 0)
        throw std::domain_error("padic_power: exponent denominator must be coprime to p");
    SeriesLoss l1{}, l2{};
    PadicInt lg = padic_log(q, &l1);
    PadicInt scaled = lg * PadicInt::from_rational(q.prime(), q.precision(), e);
    PadicInt out = padic_exp(scaled, &l2);
    if (loss)
        *loss = SeriesLoss{std::min(l1.guard, l2.guard),
                           std::max(l1.worst_divisor_valuation, l2.worst_divisor_valuation)};
    return out;
}

PadicInt padic_pow(const PadicInt& q, const BigInt& e) {
    if (e < 0) return padic_pow(padic_inv(q), -e);
    PadicInt acc = padic_raw(q.prime(), q.precision(), q.modulus(), 1 % q.modulus());
    PadicInt base = q;
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) == 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

PadicInt qbracket_padic(const BigInt& x, const PadicInt& q) {
    if (x < 0) throw std::domain_error("qbracket_padic: negative length");
    // scan bits of x from the top, tracking ([m : q], q^m)
    PadicInt bracket = padic_raw(q.prime(), q.precision(), q.modulus(), 0);
    PadicInt qpow = padic_raw(q.prime(), q.precision(), q.modulus(), 1 % q.modulus());
    PadicInt one = qpow;
    if (x == 0) return bracket;
    long long top = static_cast<long long>(msb(x));
    for (long long i = top; i >= 0; --i) {
        // double: [2m] = [m](1 + q^m)
        bracket = bracket * (one + qpow);
        qpow = qpow * qpow;
        if (bit_test(x, static_cast<unsigned>(i))) {
            // increment: [m+1] = q[m] + 1
            bracket = bracket * q + one;
            qpow = qpow * q;
        }
    }
    return bracket;
}

}  // namespace qeuler
