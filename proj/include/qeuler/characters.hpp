#pragma once

#include <string>
#include <vector>

#include "qeuler/numkit.hpp"

namespace qeuler {

// Dirichlet character of odd modulus d, stored as its dense value table.
class DirichletCharacter {
  public:
    static DirichletCharacter principal(long long d);
    static DirichletCharacter quadratic(long long d);
    static DirichletCharacter from_table(long long d, const std::vector<Complex>& values);
    // "trivial:d", "quadratic:d", or "table:d:v0,v1,..."
    static DirichletCharacter parse(const std::string& text);

    long long modulus() const { return d_; }
    Complex operator()(long long n) const;
    bool is_sign_valued() const { return sign_valued_; }
    // -1 / 0 / +1 for sign-valued characters; rejects complex-valued ones.
    int sign_at(long long n) const;
    bool is_principal() const;
    const std::vector<Complex>& table() const { return values_; }
    std::string describe() const { return description_; }

  private:
    DirichletCharacter(long long d, std::vector<Complex> values, std::string description);
    long long d_;
    std::vector<Complex> values_;
    std::vector<int> signs_;
    bool sign_valued_ = false;
    std::string description_;
};

// All phi(d) characters mod d; kept deliberately small-scale.
std::vector<DirichletCharacter> enumerate_characters(long long d);

int jacobi_symbol(long long n, long long d);

}  // namespace qeuler
