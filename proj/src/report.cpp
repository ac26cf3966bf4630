#include "rankkl/report.hpp"

#include <cstdio>

namespace rankkl {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string json_escape(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (char ch : raw) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string to_json_line(const VerificationReport& r) {
    std::string line = "{\"case\":\"" + json_escape(r.case_id) + "\"";
    line += ",\"p\":" + std::to_string(r.p);
    line += ",\"ell\":" + std::to_string(r.ell);
    line += ",\"n\":" + std::to_string(r.n);
    line += ",\"c\":" + std::to_string(r.c);
    line += ",\"exact_zero\":";
    line += r.exact_zero ? "true" : "false";
    line += ",\"float_abs\":" + format_double(r.float_abs);
    line += ",\"terms\":" + std::to_string(r.terms);
    line += ",\"elapsed_ms\":" + format_double(r.elapsed_ms);
    if (r.skipped) line += ",\"skipped\":true";
    if (!r.note.empty()) line += ",\"note\":\"" + json_escape(r.note) + "\"";
    line += "}";
    return line;
}

}  // namespace rankkl
