#pragma once
// Verification reports shared by the certification and argument-geometry
// modules, with a deterministic JSON Lines serialization (doubles printed
// with %.17g so output is byte-stable across runs).

#include <string>

namespace rankkl {

struct VerificationReport {
    std::string case_id;      // emitted as "case"
    int p = 0;
    int ell = 0;              // 0 when the case aggregates several ell
    long n = -1;              // outer index of the arithmetic progression; -1 if n/a
    long c = 0;
    bool exact_zero = false;
    double float_abs = 0.0;   // magnitude of the numeric embedding
    long terms = 0;           // number of summands handled
    double elapsed_ms = 0.0;
    bool skipped = false;     // side condition excluded this instance
    std::string note;         // skip reason / extra detail, empty if none
};

// One-line JSON object, no trailing newline.
std::string to_json_line(const VerificationReport& report);

// Doubles rendered with %.17g (round-trip exact for IEEE doubles).
std::string format_double(double value);

std::string json_escape(const std::string& raw);

}  // namespace rankkl
