// combprob: validate, evaluate, classify, convert, and property-check finite
// signed probability measures from measure documents.
//
// Exit codes: 0 success, 1 axiom/property failure, 2 parse or usage error,
// 3 I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "combprob/bridges.hpp"
#include "combprob/io.hpp"
#include "combprob/measure.hpp"
#include "combprob/oracle.hpp"

namespace {

using namespace combprob;
using ordered_json = nlohmann::ordered_json;

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

struct cli_error {
    int code;
    std::string message;
};

struct cli_config {
    bool machine = false;
    int atom_limit = 6;
};

struct loaded_document {
    measure_document doc;
    std::string input_digest;
};

loaded_document load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cli_error{exit_io, "cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw cli_error{exit_io, "cannot read '" + path + "'"};
    std::string content = buf.str();
    parse_error_info perr;
    auto doc = parse_document(content, &perr);
    if (!doc) {
        std::string where = perr.line > 0 ? " (line " + std::to_string(perr.line) + ")" : "";
        throw cli_error{exit_usage, path + where + ": " + perr.message};
    }
    return {*doc, digest(content)};
}

bool is_combined_kind(document_kind k) {
    return k == document_kind::digitalized || k == document_kind::explicit_table;
}

// Wraps the materializers so document-level defects (kind mismatch, too many
// atoms, bad event specs, duplicates) surface as usage errors, not aborts.
template <class Fn>
auto materialize(Fn&& fn) {
    try {
        return fn();
    } catch (const cli_error&) {
        throw;
    } catch (const std::exception& ex) {
        throw cli_error{exit_usage, ex.what()};
    }
}

report_options make_options(const cli_config& cfg, std::string command,
                            const loaded_document& ld) {
    report_options opt;
    opt.machine = cfg.machine;
    opt.command = std::move(command);
    opt.input_digest = ld.input_digest;
    return opt;
}

int cmd_validate(const cli_config& cfg, const std::string& path) {
    loaded_document ld = load_document(path);
    validation_report rep;
    switch (ld.doc.kind) {
        case document_kind::digitalized:
        case document_kind::explicit_table:
            rep = validate_axioms(
                materialize([&] { return to_combined(ld.doc, cfg.atom_limit); }));
            break;
        case document_kind::conventional:
            rep = check_kolmogorov(materialize(
                [&] { return to_conventional(ld.doc, cfg.atom_limit); }));
            break;
        case document_kind::extended:
            rep = check_extended_axioms(
                materialize([&] { return to_extended(ld.doc, cfg.atom_limit); }));
            break;
    }
    std::cout << render_report(rep.clauses, make_options(cfg, "validate", ld));
    return rep.ok ? 0 : exit_failure;
}

int cmd_eval(const cli_config& cfg, const std::string& path,
             const std::string& spec) {
    loaded_document ld = load_document(path);
    const bool signed_labels = ld.doc.kind != document_kind::conventional;
    try {
        rational value;
        if (is_combined_kind(ld.doc.kind)) {
            combined_measure m =
                materialize([&] { return to_combined(ld.doc, cfg.atom_limit); });
            std::string perr;
            auto e = parse_event(m.sp, spec, signed_labels, &perr);
            if (!e) throw cli_error{exit_usage, "event '" + spec + "': " + perr};
            value = eval(m, *e);
        } else if (ld.doc.kind == document_kind::conventional) {
            conventional_measure m = materialize(
                [&] { return to_conventional(ld.doc, cfg.atom_limit); });
            std::string perr;
            auto e = parse_event(m.sp, spec, signed_labels, &perr);
            if (!e) throw cli_error{exit_usage, "event '" + spec + "': " + perr};
            value = eval(m, *e);
        } else {
            extended_measure m =
                materialize([&] { return to_extended(ld.doc, cfg.atom_limit); });
            std::string perr;
            auto e = parse_event(m.sp, spec, signed_labels, &perr);
            if (!e) throw cli_error{exit_usage, "event '" + spec + "': " + perr};
            value = eval(m, *e);
        }
        std::cout << value.str() << "\n";
        return 0;
    } catch (const not_in_family_error& ex) {
        throw cli_error{exit_failure, ex.what()};
    }
}

int cmd_classify(const cli_config& cfg, const std::string& path) {
    loaded_document ld = load_document(path);
    if (!is_combined_kind(ld.doc.kind))
        throw cli_error{exit_usage,
                        "classify applies to combined measure documents (kind "
                        "digitalized or explicit); this document is '" +
                            to_string(ld.doc.kind) + "'"};
    combined_measure m =
        materialize([&] { return to_combined(ld.doc, cfg.atom_limit); });
    validation_report rep = validate_axioms(m);
    if (!rep.ok) {
        std::cout << render_report(rep.clauses, make_options(cfg, "classify", ld));
        return exit_failure;
    }
    normalization nz = classify_normalization(m);
    completeness_report comp = is_complete(m);
    family_partition fp = family_sign_classes(m);
    int atoms_pos = 0, atoms_neg = 0, atoms_zero = 0, atoms_unknown = 0;
    for (int i = 0; i < m.sp.universe_size(); ++i) {
        auto sign = atom_sign(m, i);
        if (!sign) ++atoms_unknown;
        else if (*sign > 0) ++atoms_pos;
        else if (*sign < 0) ++atoms_neg;
        else ++atoms_zero;
    }

    auto completeness_note = [&](completeness c, const event& omega,
                                 const std::optional<rational>& p) {
        std::string rendered = to_string(omega, m.sp);
        if (c == completeness::undecidable)
            return rendered + " is not in the family";
        return "p(" + rendered + ") = " + (p ? p->str() : std::string("?"));
    };

    if (!cfg.machine) {
        std::cout << "kind: " << to_string(ld.doc.kind) << "\n";
        std::cout << "digitalized: " << (m.digitalized ? "yes" : "no") << "\n";
        std::cout << "positively normalized: "
                  << (nz.positive_witness
                          ? "yes (witness " + to_string(*nz.positive_witness, m.sp) + ")"
                          : std::string("no"))
                  << "\n";
        std::cout << "negatively normalized: "
                  << (nz.negative_witness
                          ? "yes (witness " + to_string(*nz.negative_witness, m.sp) + ")"
                          : std::string("no"))
                  << "\n";
        std::cout << "positively complete: " << to_string(comp.positive) << " ("
                  << completeness_note(comp.positive, comp.omega_plus, comp.p_plus)
                  << ")\n";
        std::cout << "negatively complete: " << to_string(comp.negative) << " ("
                  << completeness_note(comp.negative, comp.omega_minus, comp.p_minus)
                  << ")\n";
        std::cout << "atom sign classes: positive " << atoms_pos << ", negative "
                  << atoms_neg << ", zero " << atoms_zero << ", unknown "
                  << atoms_unknown << "\n";
        std::cout << "family sign classes: positive " << fp.positive.size()
                  << ", zero " << fp.zero.size() << ", negative "
                  << fp.negative.size() << "\n";
        return 0;
    }

    ordered_json j = ordered_json::object();
    j["tool"] = ordered_json{{"name", tool_name}, {"version", tool_version}};
    j["command"] = "classify";
    j["input"] = ordered_json{{"digest", ld.input_digest}};
    ordered_json cls = ordered_json::object();
    cls["kind"] = to_string(ld.doc.kind);
    cls["digitalized"] = m.digitalized;
    auto norm_json = [&](const std::optional<event>& w) {
        ordered_json jn = ordered_json::object();
        jn["value"] = w.has_value();
        if (w) jn["witness"] = to_string(*w, m.sp);
        return jn;
    };
    cls["positively_normalized"] = norm_json(nz.positive_witness);
    cls["negatively_normalized"] = norm_json(nz.negative_witness);
    auto comp_json = [&](completeness c, const event& omega,
                         const std::optional<rational>& p) {
        ordered_json jc = ordered_json::object();
        jc["value"] = to_string(c);
        jc["omega"] = to_string(omega, m.sp);
        if (p) jc["p"] = p->str();
        return jc;
    };
    cls["positively_complete"] = comp_json(comp.positive, comp.omega_plus, comp.p_plus);
    cls["negatively_complete"] = comp_json(comp.negative, comp.omega_minus, comp.p_minus);
    cls["atom_sign_classes"] = ordered_json{{"positive", atoms_pos},
                                            {"negative", atoms_neg},
                                            {"zero", atoms_zero},
                                            {"unknown", atoms_unknown}};
    cls["family_sign_classes"] = ordered_json{{"positive", (long long)fp.positive.size()},
                                              {"zero", (long long)fp.zero.size()},
                                              {"negative", (long long)fp.negative.size()}};
    j["classification"] = std::move(cls);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_convert(const cli_config& cfg, const std::string& path,
                const std::string& target) {
    loaded_document ld = load_document(path);
    const document_kind src = ld.doc.kind;
    report_options opt = make_options(cfg, "convert", ld);

    auto emit = [&](const auto& conv, const measure_document& out) {
        if (conv.ok) {
            std::cout << (cfg.machine ? to_json_text(out) : to_text(out));
            return 0;
        }
        std::cout << render_report(conv.checks, opt);
        return exit_failure;
    };

    if (is_combined_kind(src) && target == "extended") {
        combined_measure m =
            materialize([&] { return to_combined(ld.doc, cfg.atom_limit); });
        auto conv = combined_to_extended(m);
        return emit(conv, conv.ok ? from_extended(*conv.result) : measure_document{});
    }
    if (is_combined_kind(src) && target == "conventional") {
        combined_measure m =
            materialize([&] { return to_combined(ld.doc, cfg.atom_limit); });
        auto conv = restrict_positive(m);
        return emit(conv, conv.ok ? from_conventional(*conv.result) : measure_document{});
    }
    if (src == document_kind::conventional && target == "combined") {
        conventional_measure m =
            materialize([&] { return to_conventional(ld.doc, cfg.atom_limit); });
        auto conv = conventional_to_combined(m);
        return emit(conv, conv.ok ? from_combined(*conv.result) : measure_document{});
    }
    if (src == document_kind::extended && target == "combined") {
        extended_measure m =
            materialize([&] { return to_extended(ld.doc, cfg.atom_limit); });
        auto conv = extended_to_combined(m);
        return emit(conv, conv.ok ? from_combined(*conv.result) : measure_document{});
    }
    throw cli_error{exit_usage, "no conversion from '" + to_string(src) +
                                    "' documents to target '" + target + "'"};
}

int cmd_check_file(const cli_config& cfg, const std::string& path) {
    loaded_document ld = load_document(path);
    if (!is_combined_kind(ld.doc.kind))
        throw cli_error{exit_usage,
                        "check applies to combined measure documents (kind "
                        "digitalized or explicit); this document is '" +
                            to_string(ld.doc.kind) + "'"};
    combined_measure m =
        materialize([&] { return to_combined(ld.doc, cfg.atom_limit); });
    report_options opt = make_options(cfg, "check", ld);
    validation_report rep = validate_axioms(m);
    if (!rep.ok) {
        // The catalog's hypotheses assume a valid measure; report the axiom
        // violations (with witnesses) instead.
        std::cout << render_report(rep.clauses, opt);
        return exit_failure;
    }
    std::vector<check_result> results = check_catalog(m);
    std::cout << render_report(results, opt);
    for (const auto& r : results)
        if (r.status == clause_status::fail) return exit_failure;
    return 0;
}

int cmd_check_sweep(const cli_config& cfg, int sweep_atoms,
                    const std::string& grid_text) {
    std::vector<rational> grid;
    std::string token;
    std::istringstream split(grid_text);
    while (std::getline(split, token, ',')) {
        auto r = rational::parse(token);
        if (!r) throw cli_error{exit_usage, "invalid grid value '" + token + "'"};
        grid.push_back(*r);
    }
    report_options opt;
    opt.machine = cfg.machine;
    opt.command = "check";
    sweep_summary sum;
    try {
        sum = sweep_measures(sweep_atoms, grid);
    } catch (const std::invalid_argument& ex) {
        throw cli_error{exit_usage, ex.what()};
    }
    std::cout << render_sweep_report(sum, opt);
    return sum.ok ? 0 : exit_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for finite signed (combined) probability measures"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "machine"}));
    int atom_limit = 6;
    app.add_option("--max-atoms", atom_limit,
                   "largest accepted document atom count")
        ->check(CLI::Range(1, max_atoms));

    std::string file, event_spec, target;
    int sweep_atoms = 0;
    std::string grid_text = "-1/2,-1/4,0,1/4,1/2";

    CLI::App* validate = app.add_subcommand(
        "validate", "check the axioms of the measure in a document");
    validate->add_option("file", file, "measure document")->required();

    CLI::App* evalc = app.add_subcommand(
        "eval", "print the exact value of an event (\"w,-v\"; \"empty\")");
    evalc->add_option("file", file, "measure document")->required();
    evalc->add_option("event", event_spec, "event spec")->required();

    CLI::App* classify = app.add_subcommand(
        "classify", "digitalization, normalization, completeness, sign classes");
    classify->add_option("file", file, "measure document")->required();

    CLI::App* convert = app.add_subcommand(
        "convert", "convert between measure kinds, or refuse with the failed "
                   "hypothesis");
    convert->add_option("file", file, "measure document")->required();
    convert->add_option("--target", target, "target kind")
        ->required()
        ->check(CLI::IsMember({"extended", "conventional", "combined"}));

    CLI::App* check = app.add_subcommand(
        "check", "run the property catalog on a document or a sweep");
    CLI::Option* check_file_opt =
        check->add_option("file", file, "measure document");
    CLI::Option* sweep_opt = check->add_option(
        "--sweep", sweep_atoms, "sweep all digitalized measures up to this "
                                "many atoms over the value grid");
    check->add_option("--grid", grid_text,
                      "comma-separated sweep values (sign-symmetric)");
    sweep_opt->excludes(check_file_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "combprob: " << e.what() << "\n";
        return exit_usage;
    }

    cli_config cfg{format == "machine", atom_limit};
    try {
        if (validate->parsed()) return cmd_validate(cfg, file);
        if (evalc->parsed()) return cmd_eval(cfg, file, event_spec);
        if (classify->parsed()) return cmd_classify(cfg, file);
        if (convert->parsed()) return cmd_convert(cfg, file, target);
        if (check->parsed()) {
            if (sweep_opt->count() > 0) return cmd_check_sweep(cfg, sweep_atoms, grid_text);
            if (check_file_opt->count() > 0) return cmd_check_file(cfg, file);
            throw cli_error{exit_usage, "check needs a document or --sweep"};
        }
    } catch (const cli_error& ex) {
        std::cerr << "combprob: " << ex.message << "\n";
        return ex.code;
    } catch (const std::exception& ex) {
        std::cerr << "combprob: " << ex.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
