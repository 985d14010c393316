#pragma once

#include <map>
#include <string>
#include <vector>

#include "qeuler/padic.hpp"
#include "qeuler/report.hpp"
#include "qeuler/zeta.hpp"

namespace qeuler {

// Hand-rolled JSON emission: every real uses %.17g so values round-trip
// exactly, p-adic values are emitted as Hensel digit arrays, and key order is
// fixed so identical inputs yield byte-identical output.

std::string json_escape(const std::string& s);
std::string json_number(double v);  // non-finite values become null

// {"value": ..., "terms_used": ..., "tail_bound": ..., "converged": ...,
//  "parameters": {...}}  (complex values become {"re": ..., "im": ...})
std::string scalar_json(Complex value, const std::map<std::string, std::string>& params);
std::string truncation_json(const TruncationReport& report,
                            const std::map<std::string, std::string>& params);

// {"prime": ..., "precision": ..., "digits": [...], "valuation": ..., "loss": ...}
std::string padic_json(const PadicInt& value, unsigned loss,
                       const std::map<std::string, std::string>& params);

std::string record_json(const VerificationRecord& rec);
std::string records_json(const std::vector<VerificationRecord>& records,
                         const std::map<std::string, std::string>& meta);
std::string records_table(const std::vector<VerificationRecord>& records);

// header "s,w,value", one row per grid point, 17 significant digits
std::string curve_csv(const std::vector<CurvePoint>& grid);
std::string curve_json(const std::vector<CurvePoint>& grid,
                       const std::map<std::string, std::string>& params);

}  // namespace qeuler
