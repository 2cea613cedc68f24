#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "combprob/bridges.hpp"
#include "combprob/oracle.hpp"

namespace combprob {

inline constexpr const char* tool_name = "combprob";
inline constexpr const char* tool_version = "1.0.0";

/*
 * Measure documents.  The text form is line-based:
 *
 *   # comment (anywhere; rest of line)
 *   kind digitalized            | explicit | conventional | extended
 *   atoms w v u
 *   value w 1/5                 # digitalized only, one line per atom
 *   event w,-v 1/3              # the other kinds; "empty" names the empty event
 *
 * The kind line comes first, the atoms line exactly once before any value
 * or event line.  Labels match [A-Za-z_][A-Za-z0-9_]*, never "empty", and
 * never start with '-' (reserved for negation in event specs).  Rationals
 * are exact: "3", "-3", "3/4", "-3/4".
 *
 * The JSON form is detected by a leading '{':
 *   {"kind":"digitalized","atoms":["w","v"],"values":{"w":"1/5","v":"0"}}
 *   {"kind":"explicit","atoms":["w"],"events":{"empty":"0","w,-w":"0"}}
 */
enum class document_kind { digitalized, explicit_table, conventional, extended };

std::string to_string(document_kind k);

struct measure_document {
    document_kind kind = document_kind::digitalized;
    std::vector<std::string> atoms;
    std::vector<std::pair<std::string, rational>> atom_values;  // digitalized
    std::vector<std::pair<std::string, rational>> events;       // other kinds
};

struct parse_error_info {
    int line = 0;  // 0 when the error is not tied to a line (JSON, document level)
    std::string message;
};

// Text or JSON (sniffed).  On failure returns nullopt and fills err.
std::optional<measure_document> parse_document(std::string_view text,
                                               parse_error_info* err);

std::string to_text(const measure_document& doc);
std::string to_json_text(const measure_document& doc);

// Materialization; atom_limit guards against oversized documents (the CLI
// exposes it as --max-atoms).  Kind mismatches, oversized documents, and
// bad event specs throw std::runtime_error / std::invalid_argument with a
// readable message.
combined_measure to_combined(const measure_document& doc, int atom_limit);
conventional_measure to_conventional(const measure_document& doc, int atom_limit);
extended_measure to_extended(const measure_document& doc, int atom_limit);

measure_document from_combined(const combined_measure& m);
measure_document from_conventional(const conventional_measure& m);
measure_document from_extended(const extended_measure& m);

// FNV-1a 64-bit digest, rendered "fnv1a64:<16 hex digits>".
std::string digest(std::string_view bytes);

/*
 * Report rendering.  The text form is for terminals; the machine form is a
 * JSON document that is byte-identical across runs for identical inputs
 * (fixed tool version, insertion-ordered keys, no timestamps).
 */
struct report_options {
    bool machine = false;
    std::string command;
    std::string input_digest;  // empty when there is no input document
};

std::string render_report(const std::vector<clause_result>& clauses,
                          const report_options& opt);
std::string render_report(const std::vector<check_result>& checks,
                          const report_options& opt);
std::string render_sweep_report(const sweep_summary& sum,
                                const report_options& opt);

}  // namespace combprob
