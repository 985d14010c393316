#pragma once

#include <complex>
#include <cstdio>
#include <map>
#include <optional>
#include <string>

namespace qeuler {

// %.17g round-trips every double exactly; all reports and JSON use it.
inline std::string num_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string num_str(std::complex<double> v) {
    if (v.imag() == 0.0) return num_str(v.real());
    return num_str(v.real()) + (v.imag() < 0 ? "" : "+") + num_str(v.imag()) + "i";
}

// Every infinite-series evaluator returns its value together with the number
// of terms it actually summed and a rigorous bound on the discarded tail.
struct TruncationReport {
    std::complex<double> value{0.0, 0.0};
    std::size_t terms_used = 0;
    double tail_bound = 0.0;
    bool converged = false;

    double real() const { return value.real(); }
};

// Precision bookkeeping for p-adic divisions by non-units.
struct PrecisionBudget {
    unsigned requested = 0;
    unsigned loss_incurred = 0;
    unsigned surviving() const { return requested > loss_incurred ? requested - loss_incurred : 0; }
};

enum class CheckStatus { pass, fail, expected_fail };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "expected-fail";
    }
}

// One verified identity at one parameter point. For archimedean checks the
// residual is |lhs-rhs| (or a relative ratio where noted); p-adic checks
// report the valuation of the difference instead.
struct VerificationRecord {
    std::string identity_id;
    std::map<std::string, std::string> parameters;
    std::string lhs;
    std::string rhs;
    double residual = 0.0;
    std::optional<long long> residual_valuation;
    CheckStatus status = CheckStatus::fail;
    std::string note;
};

}  // namespace qeuler
