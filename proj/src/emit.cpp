#include "qeuler/emit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qeuler {

namespace {

std::string kv(const std::string& key, const std::string& rendered_value) {
    return "\"" + json_escape(key) + "\": " + rendered_value;
}

std::string str_value(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string params_json(const std::map<std::string, std::string>& params) {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, value] : params) {
        if (!first) out += ", ";
        first = false;
        out += kv(key, str_value(value));
    }
    return out + "}";
}

std::string complex_json(Complex v) {
    if (v.imag() == 0.0) return json_number(v.real());
    return "{" + kv("re", json_number(v.real())) + ", " + kv("im", json_number(v.imag())) +
           "}";
}

}  // namespace

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return num_str(v);
}

std::string scalar_json(Complex value, const std::map<std::string, std::string>& params) {
    std::string out = "{";
    out += kv("value", complex_json(value));
    out += ", " + kv("parameters", params_json(params));
    return out + "}";
}

std::string truncation_json(const TruncationReport& report,
                            const std::map<std::string, std::string>& params) {
    std::string out = "{";
    out += kv("value", complex_json(report.value));
    out += ", " + kv("terms_used", std::to_string(report.terms_used));
    out += ", " + kv("tail_bound", json_number(report.tail_bound));
    out += ", " + kv("converged", report.converged ? "true" : "false");
    out += ", " + kv("parameters", params_json(params));
    return out + "}";
}

std::string padic_json(const PadicInt& value, unsigned loss,
                       const std::map<std::string, std::string>& params) {
    std::string out = "{";
    out += kv("prime", std::to_string(value.prime()));
    out += ", " + kv("precision", std::to_string(value.precision()));
    out += ", " + kv("digits", [&] {
        std::string arr = "[";
        auto digits = hensel_digits(value);
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (i) arr += ", ";
            arr += std::to_string(digits[i]);
        }
        return arr + "]";
    }());
    auto val = value.valuation();
    out += ", " + kv("valuation", val ? std::to_string(*val) : std::string("null"));
    out += ", " + kv("loss", std::to_string(loss));
    if (!params.empty()) out += ", " + kv("parameters", params_json(params));
    return out + "}";
}

std::string record_json(const VerificationRecord& rec) {
    std::string out = "{";
    out += kv("identity_id", str_value(rec.identity_id));
    out += ", " + kv("parameters", params_json(rec.parameters));
    out += ", " + kv("lhs", str_value(rec.lhs));
    out += ", " + kv("rhs", str_value(rec.rhs));
    out += ", " + kv("residual", json_number(rec.residual));
    out += ", " + kv("residual_valuation", rec.residual_valuation
                                               ? std::to_string(*rec.residual_valuation)
                                               : std::string("null"));
    out += ", " + kv("status", str_value(to_string(rec.status)));
    if (!rec.note.empty()) out += ", " + kv("note", str_value(rec.note));
    return out + "}";
}

std::string records_json(const std::vector<VerificationRecord>& records,
                         const std::map<std::string, std::string>& meta) {
    std::string out = "{";
    for (const auto& [key, value] : meta) out += kv(key, str_value(value)) + ", ";
    std::size_t passed = 0, failed = 0, expected = 0;
    for (const auto& rec : records) {
        if (rec.status == CheckStatus::pass) ++passed;
        else if (rec.status == CheckStatus::fail) ++failed;
        else ++expected;
    }
    out += kv("passed", std::to_string(passed));
    out += ", " + kv("failed", std::to_string(failed));
    out += ", " + kv("expected_fail", std::to_string(expected));
    out += ", \"records\": [";
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i) out += ", ";
        out += record_json(records[i]);
    }
    return out + "]}";
}

std::string records_table(const std::vector<VerificationRecord>& records) {
    std::size_t id_width = 8;
    for (const auto& rec : records) id_width = std::max(id_width, rec.identity_id.size());
    std::ostringstream os;
    for (const auto& rec : records) {
        os << rec.identity_id;
        os << std::string(id_width - rec.identity_id.size() + 2, ' ');
        const char* st = to_string(rec.status);
        os << st << std::string(std::size_t(14) - std::string(st).size(), ' ');
        if (rec.residual_valuation)
            os << "valuation " << *rec.residual_valuation;
        else
            os << "residual " << num_str(rec.residual);
        bool first = true;
        for (const auto& [key, value] : rec.parameters) {
            os << (first ? "   [" : ", ") << key << "=" << value;
            first = false;
        }
        if (!first) os << "]";
        os << "\n";
    }
    std::size_t failed = 0;
    for (const auto& rec : records)
        if (rec.status == CheckStatus::fail) ++failed;
    os << records.size() << " checks, " << failed << " failed\n";
    return os.str();
}

std::string curve_csv(const std::vector<CurvePoint>& grid) {
    std::string out = "s,w,value\n";
    for (const auto& pt : grid) {
        out += num_str(pt.s);
        out += ',';
        out += num_str(pt.w);
        out += ',';
        out += num_str(pt.value);
        out += '\n';
    }
    return out;
}

std::string curve_json(const std::vector<CurvePoint>& grid,
                       const std::map<std::string, std::string>& params) {
    std::string out = "{";
    out += kv("parameters", params_json(params));
    out += ", \"points\": [";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i) out += ", ";
        out += "{" + kv("s", json_number(grid[i].s)) + ", " + kv("w", json_number(grid[i].w)) +
               ", " + kv("value", json_number(grid[i].value)) + "}";
    }
    return out + "]}";
}

}  // namespace qeuler
