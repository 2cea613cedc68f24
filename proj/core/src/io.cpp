#include "combprob/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace combprob {

namespace {

using ordered_json = nlohmann::ordered_json;

bool is_label_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool is_label_char(char c) { return is_label_start(c) || (c >= '0' && c <= '9'); }

// Labels never collide with the empty-event token and never start with '-',
// which event specs reserve for negation.
bool valid_label(std::string_view s) {
    if (s.empty() || s == "empty" || !is_label_start(s[0])) return false;
    for (char c : s.substr(1))
        if (!is_label_char(c)) return false;
    return true;
}

std::optional<document_kind> parse_kind(std::string_view s) {
    if (s == "digitalized") return document_kind::digitalized;
    if (s == "explicit") return document_kind::explicit_table;
    if (s == "conventional") return document_kind::conventional;
    if (s == "extended") return document_kind::extended;
    return std::nullopt;
}

std::optional<measure_document> fail(parse_error_info* err, int line,
                                     std::string message) {
    if (err) *err = parse_error_info{line, std::move(message)};
    return std::nullopt;
}

std::optional<measure_document> parse_text_document(std::string_view text,
                                                    parse_error_info* err) {
    measure_document doc;
    bool have_kind = false, have_atoms = false;
    std::istringstream input{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(input, raw)) {
        ++line_no;
        if (std::size_t hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream line{raw};
        std::vector<std::string> tok;
        for (std::string t; line >> t;) tok.push_back(std::move(t));
        if (tok.empty()) continue;

        if (!have_kind && tok[0] != "kind")
            return fail(err, line_no, "the first directive must be 'kind'");
        if (tok[0] == "kind") {
            if (have_kind) return fail(err, line_no, "duplicate 'kind' directive");
            if (tok.size() != 2)
                return fail(err, line_no, "expected 'kind <digitalized|explicit|conventional|extended>'");
            auto k = parse_kind(tok[1]);
            if (!k) return fail(err, line_no, "unknown kind '" + tok[1] + "'");
            doc.kind = *k;
            have_kind = true;
        } else if (tok[0] == "atoms") {
            if (have_atoms) return fail(err, line_no, "duplicate 'atoms' directive");
            if (tok.size() < 2)
                return fail(err, line_no, "'atoms' needs at least one label");
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (!valid_label(tok[i]))
                    return fail(err, line_no,
                                "invalid atom label '" + tok[i] +
                                    "' (labels match [A-Za-z_][A-Za-z0-9_]* and "
                                    "'empty' is reserved)");
                if (std::find(doc.atoms.begin(), doc.atoms.end(), tok[i]) !=
                    doc.atoms.end())
                    return fail(err, line_no, "duplicate atom '" + tok[i] + "'");
                doc.atoms.push_back(tok[i]);
            }
            have_atoms = true;
        } else if (tok[0] == "value") {
            if (doc.kind != document_kind::digitalized)
                return fail(err, line_no,
                            "'value' lines belong to digitalized documents; this "
                            "document is '" +
                                to_string(doc.kind) + "'");
            if (!have_atoms)
                return fail(err, line_no, "'atoms' must come before 'value' lines");
            if (tok.size() != 3)
                return fail(err, line_no, "expected 'value <atom> <rational>'");
            if (std::find(doc.atoms.begin(), doc.atoms.end(), tok[1]) ==
                doc.atoms.end())
                return fail(err, line_no, "unknown atom '" + tok[1] + "'");
            for (const auto& [label, value] : doc.atom_values)
                if (label == tok[1])
                    return fail(err, line_no,
                                "duplicate value for atom '" + tok[1] + "'");
            auto r = rational::parse(tok[2]);
            if (!r) return fail(err, line_no, "invalid rational '" + tok[2] + "'");
            doc.atom_values.emplace_back(tok[1], *r);
        } else if (tok[0] == "event") {
            if (doc.kind == document_kind::digitalized)
                return fail(err, line_no,
                            "digitalized documents use 'value' lines, not 'event'");
            if (!have_atoms)
                return fail(err, line_no, "'atoms' must come before 'event' lines");
            if (tok.size() != 3)
                return fail(err, line_no,
                            "expected 'event <spec> <rational>' (the spec is "
                            "comma-joined without spaces)");
            for (const auto& [spec, value] : doc.events)
                if (spec == tok[1])
                    return fail(err, line_no, "duplicate event '" + tok[1] + "'");
            auto r = rational::parse(tok[2]);
            if (!r) return fail(err, line_no, "invalid rational '" + tok[2] + "'");
            doc.events.emplace_back(tok[1], *r);
        } else {
            return fail(err, line_no, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!have_kind) return fail(err, 0, "missing 'kind' directive");
    if (!have_atoms) return fail(err, 0, "missing 'atoms' directive");
    if (doc.kind == document_kind::digitalized)
        for (const auto& a : doc.atoms) {
            bool found = false;
            for (const auto& [label, value] : doc.atom_values)
                if (label == a) found = true;
            if (!found) return fail(err, 0, "atom '" + a + "' has no value line");
        }
    return doc;
}

std::optional<measure_document> parse_json_document(std::string_view text,
                                                    parse_error_info* err) {
    ordered_json j = ordered_json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) return fail(err, 0, "invalid JSON");
    if (!j.is_object()) return fail(err, 0, "the JSON document must be an object");
    for (const auto& [key, value] : j.items())
        if (key != "kind" && key != "atoms" && key != "values" && key != "events")
            return fail(err, 0, "unknown key '" + key + "'");

    measure_document doc;
    if (!j.contains("kind") || !j["kind"].is_string())
        return fail(err, 0, "'kind' must be a string");
    auto k = parse_kind(j["kind"].get<std::string>());
    if (!k) return fail(err, 0, "unknown kind '" + j["kind"].get<std::string>() + "'");
    doc.kind = *k;

    if (!j.contains("atoms") || !j["atoms"].is_array())
        return fail(err, 0, "'atoms' must be an array of labels");
    for (const auto& a : j["atoms"]) {
        if (!a.is_string()) return fail(err, 0, "'atoms' must be an array of labels");
        std::string label = a.get<std::string>();
        if (!valid_label(label))
            return fail(err, 0,
                        "invalid atom label '" + label +
                            "' (labels match [A-Za-z_][A-Za-z0-9_]* and 'empty' "
                            "is reserved)");
        if (std::find(doc.atoms.begin(), doc.atoms.end(), label) != doc.atoms.end())
            return fail(err, 0, "duplicate atom '" + label + "'");
        doc.atoms.push_back(std::move(label));
    }
    if (doc.atoms.empty()) return fail(err, 0, "'atoms' needs at least one label");

    const bool digitalized = doc.kind == document_kind::digitalized;
    const char* wanted = digitalized ? "values" : "events";
    const char* unwanted = digitalized ? "events" : "values";
    if (j.contains(unwanted))
        return fail(err, 0,
                    std::string("'") + to_string(doc.kind) + "' documents use '" +
                        wanted + "', not '" + unwanted + "'");
    if (!j.contains(wanted) || !j[wanted].is_object())
        return fail(err, 0, std::string("'") + wanted + "' must be an object");
    for (const auto& [key, value] : j[wanted].items()) {
        if (!value.is_string())
            return fail(err, 0,
                        "value for '" + key + "' must be a rational string");
        auto r = rational::parse(value.get<std::string>());
        if (!r)
            return fail(err, 0, "invalid rational '" + value.get<std::string>() +
                                    "' for '" + key + "'");
        if (digitalized) {
            if (std::find(doc.atoms.begin(), doc.atoms.end(), key) ==
                doc.atoms.end())
                return fail(err, 0, "unknown atom '" + key + "'");
            doc.atom_values.emplace_back(key, *r);
        } else {
            doc.events.emplace_back(key, *r);
        }
    }
    if (digitalized)
        for (const auto& a : doc.atoms) {
            bool found = false;
            for (const auto& [label, value] : doc.atom_values)
                if (label == a) found = true;
            if (!found) return fail(err, 0, "atom '" + a + "' has no value");
        }
    return doc;
}

// Canonical event spec: members by atom order, the positive atom before its
// negation, comma-joined; the empty event is "empty".  Mirrors to_string.
std::string spec_of(const event& e, const space& s) {
    if (e.is_empty()) return "empty";
    std::string out;
    for (int i = 0; i < s.n(); ++i) {
        if (e.contains(i)) {
            if (!out.empty()) out += ",";
            out += s.atom(i);
        }
        if (e.contains(s.n() + i)) {
            if (!out.empty()) out += ",";
            out += "-" + s.atom(i);
        }
    }
    return out;
}

void check_atom_budget(const measure_document& doc, int atom_limit) {
    if (doc.atoms.empty())
        throw std::runtime_error("document declares no atoms");
    if (atom_limit < 1 || atom_limit > max_atoms) atom_limit = max_atoms;
    if ((int)doc.atoms.size() > atom_limit)
        throw std::runtime_error("document has " + std::to_string(doc.atoms.size()) +
                                 " atoms, exceeding the limit of " +
                                 std::to_string(atom_limit));
}

// Shared by the conventional and extended materializers.
template <class M>
M parse_event_table(const measure_document& doc, bool signed_labels) {
    space s{doc.atoms};
    std::vector<std::pair<event, rational>> entries;
    entries.reserve(doc.events.size());
    for (const auto& [spec, value] : doc.events) {
        std::string perr;
        auto e = parse_event(s, spec, signed_labels, &perr);
        if (!e) throw std::runtime_error("event '" + spec + "': " + perr);
        entries.emplace_back(*e, value);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].first == entries[i - 1].first)
            throw std::runtime_error("duplicate event " +
                                     to_string(entries[i].first, s));
    M m{s, {}, {}};
    for (auto& [e, v] : entries) {
        m.family.push_back(e);
        m.values.push_back(v);
    }
    return m;
}

// ---- report rendering ------------------------------------------------------

struct status_tally {
    long long pass = 0, fail = 0, flagged = 0, not_applicable = 0;
    void add(clause_status s) {
        switch (s) {
            case clause_status::pass: ++pass; break;
            case clause_status::fail: ++fail; break;
            case clause_status::flagged: ++flagged; break;
            case clause_status::not_applicable: ++not_applicable; break;
        }
    }
    std::string line() const {
        return "summary: " + std::to_string(pass) + " pass, " +
               std::to_string(fail) + " fail, " + std::to_string(flagged) +
               " flagged, " + std::to_string(not_applicable) + " not-applicable";
    }
};

void append_witness_text(std::string& out, const witness& w,
                         const std::string& indent) {
    for (const auto& [name, value] : w.bindings)
        out += indent + name + " = " + value + "\n";
    if (w.expected) out += indent + "expected: " + *w.expected + "\n";
    if (w.actual) out += indent + "actual:   " + *w.actual + "\n";
}

void append_clause_text(std::string& out, const clause_result& c,
                        const std::string& indent) {
    out += indent + c.id + ": " + to_string(c.status);
    if (!c.detail.empty()) out += " -- " + c.detail;
    out += "\n";
    if (c.w) append_witness_text(out, *c.w, indent + "    ");
}

void append_check_text(std::string& out, const check_result& c,
                       const std::string& indent) {
    out += indent + c.id + ": " + to_string(c.status);
    if (!c.detail.empty()) out += " -- " + c.detail;
    out += "\n";
    if (c.w) append_witness_text(out, *c.w, indent + "    ");
    for (const auto& sub : c.subresults)
        append_clause_text(out, sub, indent + "  ");
}

ordered_json witness_json(const witness& w) {
    ordered_json jw = ordered_json::object();
    if (!w.bindings.empty()) {
        ordered_json jb = ordered_json::object();
        for (const auto& [name, value] : w.bindings) jb[name] = value;
        jw["bindings"] = std::move(jb);
    }
    if (w.expected) jw["expected"] = *w.expected;
    if (w.actual) jw["actual"] = *w.actual;
    return jw;
}

ordered_json clause_json(const clause_result& c) {
    ordered_json jc = ordered_json::object();
    jc["clause"] = c.id;
    jc["status"] = to_string(c.status);
    if (!c.detail.empty()) jc["detail"] = c.detail;
    if (c.w) jc["witness"] = witness_json(*c.w);
    return jc;
}

ordered_json check_json(const check_result& c) {
    ordered_json jc = ordered_json::object();
    jc["clause"] = c.id;
    jc["status"] = to_string(c.status);
    if (!c.detail.empty()) jc["detail"] = c.detail;
    if (c.w) jc["witness"] = witness_json(*c.w);
    if (!c.subresults.empty()) {
        ordered_json subs = ordered_json::array();
        for (const auto& sub : c.subresults) subs.push_back(clause_json(sub));
        jc["subresults"] = std::move(subs);
    }
    return jc;
}

ordered_json report_frame(const report_options& opt) {
    ordered_json j = ordered_json::object();
    j["tool"] = ordered_json{{"name", tool_name}, {"version", tool_version}};
    if (!opt.command.empty()) j["command"] = opt.command;
    if (!opt.input_digest.empty())
        j["input"] = ordered_json{{"digest", opt.input_digest}};
    return j;
}

ordered_json tally_json(const status_tally& t) {
    ordered_json j = ordered_json::object();
    j["pass"] = t.pass;
    j["fail"] = t.fail;
    j["flagged"] = t.flagged;
    j["not_applicable"] = t.not_applicable;
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_string(document_kind k) {
    switch (k) {
        case document_kind::digitalized: return "digitalized";
        case document_kind::explicit_table: return "explicit";
        case document_kind::conventional: return "conventional";
        case document_kind::extended: return "extended";
    }
    return "?";
}

std::optional<measure_document> parse_document(std::string_view text,
                                               parse_error_info* err) {
    for (char c : text) {
        if (std::isspace((unsigned char)c)) continue;
        if (c == '{') return parse_json_document(text, err);
        break;
    }
    return parse_text_document(text, err);
}

std::string to_text(const measure_document& doc) {
    std::string out = "kind " + to_string(doc.kind) + "\natoms";
    for (const auto& a : doc.atoms) out += " " + a;
    out += "\n";
    if (doc.kind == document_kind::digitalized)
        for (const auto& [label, value] : doc.atom_values)
            out += "value " + label + " " + value.str() + "\n";
    else
        for (const auto& [spec, value] : doc.events)
            out += "event " + spec + " " + value.str() + "\n";
    return out;
}

std::string to_json_text(const measure_document& doc) {
    ordered_json j = ordered_json::object();
    j["kind"] = to_string(doc.kind);
    j["atoms"] = doc.atoms;
    ordered_json table = ordered_json::object();
    if (doc.kind == document_kind::digitalized) {
        for (const auto& [label, value] : doc.atom_values)
            table[label] = value.str();
        j["values"] = std::move(table);
    } else {
        for (const auto& [spec, value] : doc.events) table[spec] = value.str();
        j["events"] = std::move(table);
    }
    return dump(j);
}

combined_measure to_combined(const measure_document& doc, int atom_limit) {
    if (doc.kind != document_kind::digitalized &&
        doc.kind != document_kind::explicit_table)
        throw std::invalid_argument("document kind '" + to_string(doc.kind) +
                                    "' does not describe a combined measure");
    check_atom_budget(doc, atom_limit);
    space s{doc.atoms};
    const int n = s.n();
    if (doc.kind == document_kind::explicit_table) {
        std::vector<std::pair<event, rational>> entries;
        entries.reserve(doc.events.size());
        for (const auto& [spec, value] : doc.events) {
            std::string perr;
            auto e = parse_event(s, spec, /*signed_labels=*/true, &perr);
            if (!e) throw std::runtime_error("event '" + spec + "': " + perr);
            entries.emplace_back(*e, value);
        }
        return make_explicit(s, std::move(entries));
    }
    // Digitalized: materialize the full event table from the atom values and
    // go through the explicit constructor, which performs no range check, so
    // an out-of-range document still loads and is then reported as a range
    // axiom failure instead of dying in the constructor.
    if (n > max_digitalized_atoms)
        throw std::runtime_error(
            "digitalized documents materialize the full event table; " +
            std::to_string(n) + " atoms exceeds the supported " +
            std::to_string(max_digitalized_atoms));
    std::vector<std::optional<rational>> slot((std::size_t)n);
    for (const auto& [label, value] : doc.atom_values) {
        auto idx = s.atom_index(label);
        if (!idx) throw std::runtime_error("value for unknown atom '" + label + "'");
        if (slot[(std::size_t)*idx])
            throw std::runtime_error("duplicate value for atom '" + label + "'");
        slot[(std::size_t)*idx] = value;
    }
    std::vector<rational> vals;
    vals.reserve((std::size_t)n);
    for (int i = 0; i < n; ++i) {
        if (!slot[(std::size_t)i])
            throw std::runtime_error("atom '" + s.atom(i) + "' has no value");
        vals.push_back(*slot[(std::size_t)i]);
    }
    const std::uint32_t total = 1u << (2 * n);
    std::vector<std::pair<event, rational>> entries;
    entries.reserve(total);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        rational v;
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) v += vals[(std::size_t)i];
            if ((mask >> (n + i)) & 1u) v -= vals[(std::size_t)i];
        }
        entries.emplace_back(event(mask, n), v);
    }
    return make_explicit(s, std::move(entries));
}

conventional_measure to_conventional(const measure_document& doc, int atom_limit) {
    if (doc.kind != document_kind::conventional)
        throw std::invalid_argument("document kind '" + to_string(doc.kind) +
                                    "' does not describe a conventional measure");
    check_atom_budget(doc, atom_limit);
    return parse_event_table<conventional_measure>(doc, /*signed_labels=*/false);
}

extended_measure to_extended(const measure_document& doc, int atom_limit) {
    if (doc.kind != document_kind::extended)
        throw std::invalid_argument("document kind '" + to_string(doc.kind) +
                                    "' does not describe an extended measure");
    check_atom_budget(doc, atom_limit);
    return parse_event_table<extended_measure>(doc, /*signed_labels=*/true);
}

measure_document from_combined(const combined_measure& m) {
    measure_document doc;
    doc.atoms = m.sp.atoms();
    if (m.digitalized) {
        doc.kind = document_kind::digitalized;
        for (int i = 0; i < m.sp.n(); ++i)
            doc.atom_values.emplace_back(m.sp.atom(i),
                                         m.atom_values[(std::size_t)i]);
    } else {
        doc.kind = document_kind::explicit_table;
        for (std::size_t i = 0; i < m.family.size(); ++i)
            doc.events.emplace_back(spec_of(m.family[i], m.sp), m.values[i]);
    }
    return doc;
}

measure_document from_conventional(const conventional_measure& m) {
    measure_document doc;
    doc.kind = document_kind::conventional;
    doc.atoms = m.sp.atoms();
    for (std::size_t i = 0; i < m.family.size(); ++i)
        doc.events.emplace_back(spec_of(m.family[i], m.sp), m.values[i]);
    return doc;
}

measure_document from_extended(const extended_measure& m) {
    measure_document doc;
    doc.kind = document_kind::extended;
    doc.atoms = m.sp.atoms();
    for (std::size_t i = 0; i < m.family.size(); ++i)
        doc.events.emplace_back(spec_of(m.family[i], m.sp), m.values[i]);
    return doc;
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (char c : bytes) {
        h ^= (std::uint8_t)c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return std::string("fnv1a64:") + buf;
}

std::string render_report(const std::vector<clause_result>& clauses,
                          const report_options& opt) {
    status_tally tally;
    for (const auto& c : clauses) tally.add(c.status);
    if (!opt.machine) {
        std::string out;
        for (const auto& c : clauses) append_clause_text(out, c, "");
        out += tally.line() + "\n";
        return out;
    }
    ordered_json j = report_frame(opt);
    ordered_json results = ordered_json::array();
    for (const auto& c : clauses) results.push_back(clause_json(c));
    j["results"] = std::move(results);
    j["summary"] = tally_json(tally);
    return dump(j);
}

std::string render_report(const std::vector<check_result>& checks,
                          const report_options& opt) {
    status_tally tally;
    for (const auto& c : checks) tally.add(c.status);
    if (!opt.machine) {
        std::string out;
        for (const auto& c : checks) append_check_text(out, c, "");
        out += tally.line() + "\n";
        return out;
    }
    ordered_json j = report_frame(opt);
    ordered_json results = ordered_json::array();
    for (const auto& c : checks) results.push_back(check_json(c));
    j["results"] = std::move(results);
    j["summary"] = tally_json(tally);
    return dump(j);
}

std::string render_sweep_report(const sweep_summary& sum,
                                const report_options& opt) {
    if (!opt.machine) {
        std::string out = "sweep: atoms 1.." + std::to_string(sum.max_atoms) + ", grid {";
        for (std::size_t i = 0; i < sum.grid.size(); ++i) {
            if (i) out += ", ";
            out += sum.grid[i].str();
        }
        out += "}\ncandidates: " + std::to_string(sum.candidates) + " (invalid: " +
               std::to_string(sum.invalid) +
               ", measures checked: " + std::to_string(sum.measures) + ")\n";
        for (const auto& line : sum.lines) {
            out += line.id + ": pass " + std::to_string(line.pass) + ", fail " +
                   std::to_string(line.fail) + ", flagged " +
                   std::to_string(line.flagged) + ", n/a " +
                   std::to_string(line.not_applicable) + "\n";
            if (line.first_failure)
                append_check_text(out, *line.first_failure, "  ");
        }
        out += std::string("verdict: ") + (sum.ok ? "ok" : "FAIL") + "\n";
        return out;
    }
    ordered_json j = report_frame(opt);
    ordered_json grid = ordered_json::array();
    for (const auto& g : sum.grid) grid.push_back(g.str());
    j["sweep"] = ordered_json{{"max_atoms", sum.max_atoms},
                              {"grid", std::move(grid)},
                              {"candidates", sum.candidates},
                              {"invalid", sum.invalid},
                              {"measures", sum.measures}};
    ordered_json results = ordered_json::array();
    for (const auto& line : sum.lines) {
        ordered_json jl = ordered_json::object();
        jl["clause"] = line.id;
        jl["pass"] = line.pass;
        jl["fail"] = line.fail;
        jl["flagged"] = line.flagged;
        jl["not_applicable"] = line.not_applicable;
        if (line.first_failure) jl["first_failure"] = check_json(*line.first_failure);
        results.push_back(std::move(jl));
    }
    j["results"] = std::move(results);
    j["ok"] = sum.ok;
    return dump(j);
}

}  // namespace combprob
