#include "qeuler/characters.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qeuler {

namespace {

constexpr double kPi = 3.14159265358979323846;

long long mod_pos(long long n, long long d) { return ((n % d) + d) % d; }

void require_odd_modulus(long long d) {
    if (d < 1 || d % 2 == 0)
        throw std::domain_error("DirichletCharacter: modulus must be odd and positive");
}

}  // namespace

int jacobi_symbol(long long n, long long d) {
    require_odd_modulus(d);
    n = mod_pos(n, d);
    if (d == 1) return 1;
    int sign = 1;
    while (n != 0) {
        while (n % 2 == 0) {
            n /= 2;
            long long r = d % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(n, d);
        if (n % 4 == 3 && d % 4 == 3) sign = -sign;
        n %= d;
    }
    return d == 1 ? sign : 0;
}

DirichletCharacter::DirichletCharacter(long long d, std::vector<Complex> values,
                                       std::string description)
    : d_(d), values_(std::move(values)), description_(std::move(description)) {
    require_odd_modulus(d);
    if (static_cast<long long>(values_.size()) != d)
        throw std::domain_error("DirichletCharacter: table length must equal the modulus");

    const double tol = 1e-9;
    for (long long n = 0; n < d; ++n) {
        bool unit = std::gcd(n, d) == 1;
        if (!unit && std::abs(values_[n]) > tol)
            throw std::domain_error("DirichletCharacter: nonzero value at a non-unit residue");
        if (unit && std::abs(std::abs(values_[n]) - 1.0) > tol)
            throw std::domain_error("DirichletCharacter: unit value is not on the unit circle");
        if (!unit) values_[n] = Complex(0, 0);
    }
    if (std::abs(values_[1 % d] - Complex(1, 0)) > tol)
        throw std::domain_error("DirichletCharacter: value at 1 must be 1");
    for (long long m = 0; m < d; ++m) {
        for (long long n = m; n < d; ++n) {
            Complex lhs = values_[(m * n) % d];
            Complex rhs = values_[m] * values_[n];
            if (std::abs(lhs - rhs) > tol)
                throw std::domain_error("DirichletCharacter: multiplicativity violated");
        }
    }

    sign_valued_ = true;
    signs_.assign(values_.size(), 0);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        Complex v = values_[i];
        if (std::abs(v.imag()) > 1e-12) {
            sign_valued_ = false;
            break;
        }
        double re = v.real();
        if (std::abs(re - 1.0) <= 1e-12)
            signs_[i] = 1;
        else if (std::abs(re + 1.0) <= 1e-12)
            signs_[i] = -1;
        else if (std::abs(re) <= 1e-12)
            signs_[i] = 0;
        else {
            sign_valued_ = false;
            break;
        }
    }
    if (sign_valued_)
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = Complex(signs_[i], 0);
    else
        signs_.clear();
}

DirichletCharacter DirichletCharacter::principal(long long d) {
    require_odd_modulus(d);
    std::vector<Complex> vals(d);
    for (long long n = 0; n < d; ++n) vals[n] = std::gcd(n, d) == 1 ? 1.0 : 0.0;
    return DirichletCharacter(d, std::move(vals), "trivial:" + std::to_string(d));
}

DirichletCharacter DirichletCharacter::quadratic(long long d) {
    require_odd_modulus(d);
    std::vector<Complex> vals(d);
    for (long long n = 0; n < d; ++n) vals[n] = static_cast<double>(jacobi_symbol(n, d));
    return DirichletCharacter(d, std::move(vals), "quadratic:" + std::to_string(d));
}

DirichletCharacter DirichletCharacter::from_table(long long d, const std::vector<Complex>& values) {
    return DirichletCharacter(d, values, "table:" + std::to_string(d));
}

Complex DirichletCharacter::operator()(long long n) const { return values_[mod_pos(n, d_)]; }

int DirichletCharacter::sign_at(long long n) const {
    if (!sign_valued_)
        throw std::domain_error("DirichletCharacter: p-adic use needs a sign-valued character");
    return signs_[mod_pos(n, d_)];
}

bool DirichletCharacter::is_principal() const {
    for (long long n = 0; n < d_; ++n)
        if (std::gcd(n, d_) == 1 && std::abs(values_[n] - Complex(1, 0)) > 1e-12) return false;
    return true;
}

DirichletCharacter DirichletCharacter::parse(const std::string& text) {
    auto c1 = text.find(':');
    if (c1 == std::string::npos) throw std::domain_error("character spec: expected kind:modulus");
    std::string kind = text.substr(0, c1);
    std::string rest = text.substr(c1 + 1);
    if (kind == "trivial" || kind == "principal") return principal(std::stoll(rest));
    if (kind == "quadratic") return quadratic(std::stoll(rest));
    if (kind == "table") {
        auto c2 = rest.find(':');
        if (c2 == std::string::npos)
            throw std::domain_error("character spec: expected table:d:v0,v1,...");
        long long d = std::stoll(rest.substr(0, c2));
        std::vector<Complex> vals;
        std::stringstream ss(rest.substr(c2 + 1));
        std::string item;
        while (std::getline(ss, item, ',')) vals.emplace_back(std::stod(item), 0.0);
        return from_table(d, vals);
    }
    throw std::domain_error("character spec: unknown kind '" + kind + "'");
}

namespace {

struct CyclicFactor {
    long long pk;      // odd prime power
    long long phi;     // order of the unit group
    long long gen;     // a generator
    std::vector<long long> dlog;  // discrete log table indexed by residue (units only)
};

CyclicFactor make_factor(long long pk, long long p) {
    CyclicFactor f;
    f.pk = pk;
    f.phi = pk / p * (p - 1);
    f.dlog.assign(pk, -1);
    for (long long g = 2; g < pk; ++g) {
        if (std::gcd(g, pk) != 1) continue;
        long long order = 1, acc = g % pk;
        while (acc != 1) {
            acc = acc * g % pk;
            ++order;
        }
        if (order == f.phi) {
            f.gen = g;
            break;
        }
    }
    long long acc = 1;
    for (long long t = 0; t < f.phi; ++t) {
        f.dlog[acc] = t;
        acc = acc * f.gen % pk;
    }
    return f;
}

}  // namespace

std::vector<DirichletCharacter> enumerate_characters(long long d) {
    require_odd_modulus(d);
    if (d > 15) throw std::domain_error("enumerate_characters: modulus capped at 15");
    if (d == 1) return {DirichletCharacter::principal(1)};

    std::vector<CyclicFactor> factors;
    long long rem = d;
    for (long long p = 3; p <= rem; p += 2) {
        if (rem % p != 0) continue;
        long long pk = 1;
        while (rem % p == 0) {
            rem /= p;
            pk *= p;
        }
        factors.push_back(make_factor(pk, p));
    }

    std::vector<long long> index(factors.size(), 0);
    std::vector<DirichletCharacter> out;
    while (true) {
        std::vector<Complex> vals(d, Complex(0, 0));
        for (long long n = 0; n < d; ++n) {
            if (std::gcd(n, d) != 1) continue;
            double angle = 0.0;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                long long t = factors[i].dlog[n % factors[i].pk];
                angle += 2.0 * kPi * static_cast<double>(index[i] * t) /
                         static_cast<double>(factors[i].phi);
            }
            vals[n] = Complex(std::cos(angle), std::sin(angle));
        }
        out.push_back(DirichletCharacter::from_table(d, vals));

        std::size_t pos = 0;
        while (pos < index.size() && ++index[pos] == factors[pos].phi) index[pos++] = 0;
        if (pos == index.size()) break;
    }
    return out;
}

}  // namespace qeuler
