#include "combprob/bridges.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace combprob {

namespace {

const rational* find_value(const event_family& fam,
                           const std::vector<rational>& values, const event& e) {
    auto it = std::lower_bound(fam.begin(), fam.end(), e);
    if (it == fam.end() || !(*it == e)) return nullptr;
    return &values[(std::size_t)(it - fam.begin())];
}

bool canonical_family(const event_family& fam, std::size_t n_values) {
    if (fam.size() != n_values) return false;
    for (std::size_t i = 1; i < fam.size(); ++i)
        if (!(fam[i - 1] < fam[i])) return false;
    return true;
}

witness event_witness(const space& s,
                      std::initializer_list<std::pair<const char*, event>> evs) {
    witness w;
    for (const auto& [name, e] : evs) w.bindings.emplace_back(name, to_string(e, s));
    return w;
}

rational atom_sum(const std::vector<rational>& atom_values, const event& e) {
    rational total;
    int n = e.n();
    for (int i = 0; i < n; ++i) {
        if (e.contains(i)) total += atom_values[(std::size_t)i];
        if (e.contains(i + n)) total -= atom_values[(std::size_t)i];
    }
    return total;
}

clause_result pass_clause(std::string id, std::string detail) {
    return clause_result{std::move(id), clause_status::pass, std::move(detail),
                         std::nullopt};
}

clause_result fail_clause(std::string id, std::string detail,
                          std::optional<witness> w = std::nullopt) {
    return clause_result{std::move(id), clause_status::fail, std::move(detail),
                         std::move(w)};
}

clause_result na_clause(std::string id, std::string detail) {
    return clause_result{std::move(id), clause_status::not_applicable,
                         std::move(detail), std::nullopt};
}

}  // namespace

const rational& eval(const extended_measure& m, const event& e) {
    const rational* v = find_value(m.family, m.values, e);
    if (!v) throw not_in_family_error(e, to_string(e, m.sp));
    return *v;
}

const rational& eval(const conventional_measure& m, const event& e) {
    const rational* v = find_value(m.family, m.values, e);
    if (!v) throw not_in_family_error(e, to_string(e, m.sp));
    return *v;
}

validation_report check_extended_axioms(const extended_measure& m) {
    validation_report rep;
    const space& s = m.sp;
    const int n = s.n();
    const event carrier(carrier_mask(n), n);

    // EP7 doubles as the structural sanity gate: without a canonical family
    // and parallel values the remaining quantifiers are meaningless.
    if (!canonical_family(m.family, m.values.size())) {
        rep.clauses.push_back(fail_clause(
            "EP7", "the measure is not a single-valued map: the family is not "
                   "canonical or values do not run parallel to it"));
        for (const char* id : {"EP1", "EP2", "EP3", "EP4", "EP5", "EP6", "EP8"})
            rep.clauses.push_back(na_clause(id, "family is malformed"));
        std::sort(rep.clauses.begin(), rep.clauses.end(),
                  [](const clause_result& a, const clause_result& b) {
                      return a.id < b.id;
                  });
        rep.ok = false;
        return rep;
    }

    // EP1: negation is an involution exchanging the carrier halves.
    {
        bool ok = true;
        for (int i = 0; i < 2 * n && ok; ++i) {
            event sing((std::uint32_t)1u << i, n);
            int mirror = i < n ? i + n : i - n;
            ok = negate(sing) == event((std::uint32_t)1u << mirror, n) &&
                 negate(negate(sing)) == sing;
        }
        rep.clauses.push_back(
            ok ? pass_clause("EP1", "negation is an involution exchanging the "
                                    "carrier and its mirror")
               : fail_clause("EP1", "negation fails to be a graded involution"));
    }

    // Carrier-pure members: the positive half of the structure.
    event_family carrier_members;
    for (const event& e : m.family)
        if (subset(e, carrier)) carrier_members.push_back(e);

    // EP2: the carrier-pure members form a set algebra containing the carrier.
    {
        structure_check sc = is_set_algebra(carrier_members);
        if (!sc.ok) {
            witness w;
            if (sc.violation) {
                w = event_witness(s, {{"A", sc.violation->a},
                                      {"B", sc.violation->b},
                                      {"result", sc.violation->result}});
                w.bindings.emplace_back("operation", to_string(sc.violation->op));
            }
            rep.clauses.push_back(fail_clause(
                "EP2", "the carrier-pure members do not form a set algebra: " +
                           sc.note, sc.violation ? std::optional<witness>(w)
                                                 : std::nullopt));
        } else if (!(*sc.unit == carrier)) {
            witness w = event_witness(s, {{"unit", *sc.unit}, {"carrier", carrier}});
            rep.clauses.push_back(fail_clause(
                "EP2", "the carrier-pure members form a set algebra, but its "
                       "unit is not the carrier", w));
        } else {
            rep.clauses.push_back(pass_clause(
                "EP2", "the carrier-pure members form a set algebra with the "
                       "carrier as unit (" +
                           std::to_string(carrier_members.size()) + " members)"));
        }
    }

    // EP3: the carrier has measure 1.
    {
        const rational* v = find_value(m.family, m.values, carrier);
        if (!v) {
            rep.clauses.push_back(fail_clause(
                "EP3", "the carrier is not a member",
                event_witness(s, {{"carrier", carrier}})));
        } else if (!(*v == rational(1))) {
            witness w = event_witness(s, {{"carrier", carrier}});
            w.expected = "1";
            w.actual = v->str();
            rep.clauses.push_back(
                fail_clause("EP3", "the carrier has measure " + v->str() +
                                       ", not 1", w));
        } else {
            rep.clauses.push_back(pass_clause("EP3", "the carrier has measure 1"));
        }
    }

    // EP4: the family is exactly the disjoint compositions A cup -B of
    // carrier-pure members.
    {
        std::map<std::uint32_t, std::pair<event, event>> compositions;
        for (const event& a : carrier_members)
            for (const event& b : carrier_members) {
                if (!disjoint(a, b)) continue;
                std::uint32_t x = a.bits() | (b.bits() << n);
                compositions.emplace(x, std::make_pair(a, b));
            }
        std::optional<clause_result> failure;
        // Members that are not compositions (walk both sorted sequences).
        for (const event& e : m.family) {
            if (compositions.find(e.bits()) == compositions.end()) {
                failure = fail_clause(
                    "EP4", "a member is not a disjoint composition of "
                           "carrier-pure members",
                    event_witness(s, {{"member", e}}));
                break;
            }
        }
        if (!failure) {
            for (const auto& [x, ab] : compositions) {
                event e(x, n);
                if (!family_contains(m.family, e)) {
                    witness w = event_witness(
                        s, {{"A", ab.first}, {"B", ab.second}, {"composition", e}});
                    failure = fail_clause(
                        "EP4", "a disjoint composition of carrier-pure members "
                               "is missing from the family", w);
                    break;
                }
            }
        }
        rep.clauses.push_back(failure ? *failure
                                      : pass_clause("EP4",
                                            "the family is exactly the " +
                                                std::to_string(compositions.size()) +
                                                " disjoint compositions"));
    }

    // EP5: additivity with annihilation over disjoint member pairs.
    {
        std::optional<clause_result> failure;
        long long pairs = 0;
        for (std::size_t i = 0; i < m.family.size() && !failure; ++i)
            for (std::size_t j = i; j < m.family.size() && !failure; ++j) {
                const event &a = m.family[i], &b = m.family[j];
                if (!disjoint(a, b)) continue;
                ++pairs;
                event u = reduced_union(a, b);
                const rational* pu = find_value(m.family, m.values, u);
                if (!pu) {
                    failure = fail_clause(
                        "EP5", "the reduced union of disjoint members escapes "
                               "the family",
                        event_witness(s, {{"A", a}, {"B", b}, {"reduced union", u}}));
                    break;
                }
                rational want = m.values[i] + m.values[j];
                if (!(*pu == want)) {
                    witness w = event_witness(
                        s, {{"A", a}, {"B", b}, {"reduced union", u}});
                    w.expected = want.str();
                    w.actual = pu->str();
                    failure = fail_clause(
                        "EP5", "additivity with annihilation fails: P(A u_R B) "
                               "differs from P(A) + P(B)", w);
                }
            }
        rep.clauses.push_back(failure ? *failure
                                      : pass_clause("EP5",
                                            "additivity with annihilation holds "
                                            "over " + std::to_string(pairs) +
                                                " disjoint pairs"));
    }

    // EP6: every member is reduced.
    {
        std::optional<clause_result> failure;
        for (const event& e : m.family)
            if (!is_reduced(e)) {
                failure = fail_clause("EP6", "a member is not reduced",
                                      event_witness(s, {{"member", e}}));
                break;
            }
        rep.clauses.push_back(
            failure ? *failure : pass_clause("EP6", "every member is reduced"));
    }

    rep.clauses.push_back(pass_clause(
        "EP7", "the measure is a single-valued map on a canonical family"));

    // EP8: carrier-pure members have non-negative measure.
    {
        std::optional<clause_result> failure;
        for (std::size_t i = 0; i < m.family.size(); ++i) {
            if (!subset(m.family[i], carrier)) continue;
            if (m.values[i].sign() < 0) {
                witness w = event_witness(s, {{"member", m.family[i]}});
                w.expected = ">= 0";
                w.actual = m.values[i].str();
                failure = fail_clause(
                    "EP8", "a carrier-pure member has negative measure " +
                               m.values[i].str(), w);
                break;
            }
        }
        rep.clauses.push_back(failure ? *failure
                                      : pass_clause("EP8",
                                            "every carrier-pure member has "
                                            "non-negative measure"));
    }

    std::sort(rep.clauses.begin(), rep.clauses.end(),
              [](const clause_result& a, const clause_result& b) {
                  return a.id < b.id;
              });
    rep.ok = std::all_of(rep.clauses.begin(), rep.clauses.end(),
                         [](const clause_result& c) {
                             return c.status == clause_status::pass;
                         });
    return rep;
}

validation_report check_kolmogorov(const conventional_measure& m) {
    validation_report rep;
    const space& s = m.sp;
    const int n = s.n();
    const event universe(carrier_mask(n), n);

    // Structural clause: canonical carrier-pure family forming a set algebra
    // whose unit is the universe.
    {
        std::optional<clause_result> failure;
        if (!canonical_family(m.family, m.values.size())) {
            failure = fail_clause(
                "family-structure",
                "the family is not canonical or values do not run parallel");
        }
        if (!failure)
            for (const event& e : m.family)
                if (!subset(e, universe)) {
                    failure = fail_clause(
                        "family-structure", "a member leaves the universe",
                        event_witness(s, {{"member", e}}));
                    break;
                }
        if (!failure) {
            structure_check sc = is_set_algebra(m.family);
            if (!sc.ok) {
                witness w;
                if (sc.violation) {
                    w = event_witness(s, {{"A", sc.violation->a},
                                          {"B", sc.violation->b},
                                          {"result", sc.violation->result}});
                    w.bindings.emplace_back("operation",
                                            to_string(sc.violation->op));
                }
                failure = fail_clause(
                    "family-structure",
                    "the family is not a set algebra: " + sc.note,
                    sc.violation ? std::optional<witness>(w) : std::nullopt);
            } else if (!(*sc.unit == universe)) {
                failure = fail_clause(
                    "family-structure",
                    "the family's unit is not the universe",
                    event_witness(s, {{"unit", *sc.unit}, {"universe", universe}}));
            }
        }
        rep.clauses.push_back(failure ? *failure
                                      : pass_clause("family-structure",
                                            "the family is a set algebra with "
                                            "the universe as unit (" +
                                                std::to_string(m.family.size()) +
                                                " members)"));
        if (failure) {
            for (const char* id : {"K1", "K2", "K3"})
                rep.clauses.push_back(na_clause(id, "family is malformed"));
            rep.ok = false;
            return rep;
        }
    }

    // K1: non-negativity.
    {
        std::optional<clause_result> failure;
        for (std::size_t i = 0; i < m.family.size(); ++i)
            if (m.values[i].sign() < 0) {
                witness w = event_witness(s, {{"member", m.family[i]}});
                w.expected = ">= 0";
                w.actual = m.values[i].str();
                failure = fail_clause(
                    "K1", "a member has negative measure " + m.values[i].str(), w);
                break;
            }
        rep.clauses.push_back(failure ? *failure
                                      : pass_clause("K1",
                                            "every member has non-negative "
                                            "measure"));
    }

    // K2: unit mass on the universe.
    {
        const rational* v = find_value(m.family, m.values, universe);
        if (!v) {
            rep.clauses.push_back(fail_clause(
                "K2", "the universe is not a member",
                event_witness(s, {{"universe", universe}})));
        } else if (!(*v == rational(1))) {
            witness w = event_witness(s, {{"universe", universe}});
            w.expected = "1";
            w.actual = v->str();
            rep.clauses.push_back(fail_clause(
                "K2", "the universe has measure " + v->str() + ", not 1", w));
        } else {
            rep.clauses.push_back(
                pass_clause("K2", "the universe has measure 1"));
        }
    }

    // K3: additivity over disjoint pairs.
    {
        std::optional<clause_result> failure;
        long long pairs = 0;
        for (std::size_t i = 0; i < m.family.size() && !failure; ++i)
            for (std::size_t j = i; j < m.family.size() && !failure; ++j) {
                const event &a = m.family[i], &b = m.family[j];
                if (!disjoint(a, b)) continue;
                ++pairs;
                event u = unite(a, b);
                const rational* pu = find_value(m.family, m.values, u);
                if (!pu) {
                    failure = fail_clause(
                        "K3", "the union of disjoint members escapes the family",
                        event_witness(s, {{"A", a}, {"B", b}, {"union", u}}));
                    break;
                }
                rational want = m.values[i] + m.values[j];
                if (!(*pu == want)) {
                    witness w = event_witness(s, {{"A", a}, {"B", b}, {"union", u}});
                    w.expected = want.str();
                    w.actual = pu->str();
                    failure = fail_clause(
                        "K3", "additivity fails: P(A u B) differs from "
                              "P(A) + P(B)", w);
                }
            }
        rep.clauses.push_back(failure ? *failure
                                      : pass_clause("K3",
                                            "additivity holds over " +
                                                std::to_string(pairs) +
                                                " disjoint pairs"));
    }

    rep.ok = std::all_of(rep.clauses.begin(), rep.clauses.end(),
                         [](const clause_result& c) {
                             return c.status == clause_status::pass;
                         });
    return rep;
}

conversion<combined_measure> extended_to_combined(const extended_measure& m) {
    conversion<combined_measure> out;
    validation_report pre = check_extended_axioms(m);
    if (!pre.ok) {
        const clause_result* bad = nullptr;
        for (const auto& c : pre.clauses)
            if (c.status == clause_status::fail) { bad = &c; break; }
        out.checks.push_back(fail_clause(
            "input-valid",
            "the extended axioms fail at " + (bad ? bad->id : std::string("?")) +
                ": " + (bad ? bad->detail : std::string()),
            bad ? bad->w : std::nullopt));
        return out;
    }
    out.checks.push_back(
        pass_clause("input-valid", "the extended axioms hold"));

    const int n = m.sp.n();
    const event carrier(carrier_mask(n), n);
    event_family carrier_members;
    for (const event& e : m.family)
        if (subset(e, carrier)) carrier_members.push_back(e);

    std::vector<std::pair<event, rational>> entries;
    entries.reserve(carrier_members.size() * carrier_members.size());
    for (const event& a : carrier_members)
        for (const event& b : carrier_members) {
            event x(a.bits() | (b.bits() << n), n);
            event rx((a.bits() & ~b.bits()) | ((b.bits() & ~a.bits()) << n), n);
            const rational* v = find_value(m.family, m.values, rx);
            if (!v)
                throw std::logic_error(
                    "extended_to_combined: reduced representative escaped a "
                    "family that passed the axioms");
            entries.emplace_back(x, *v);
        }
    out.result = make_explicit(m.sp, std::move(entries));
    out.ok = true;
    return out;
}

conversion<extended_measure> combined_to_extended(const combined_measure& m) {
    conversion<extended_measure> out;
    const space& s = m.sp;
    const int n = s.n();

    validation_report pre = validate_axioms(m);
    if (!pre.ok) {
        const clause_result* bad = nullptr;
        for (const auto& c : pre.clauses)
            if (c.status == clause_status::fail) { bad = &c; break; }
        out.checks.push_back(fail_clause(
            "input-valid",
            "the combined axioms fail at " + (bad ? bad->id : std::string("?")) +
                ": " + (bad ? bad->detail : std::string()),
            bad ? bad->w : std::nullopt));
        for (const char* id : {"digitalized", "normalized", "all-reduced",
                               "sign-alignment-positive", "sign-alignment-negative"})
            out.checks.push_back(na_clause(id, "input is not a valid measure"));
        return out;
    }
    out.checks.push_back(pass_clause("input-valid", "the combined axioms hold"));

    bool digit = m.digitalized;
    out.checks.push_back(
        digit ? pass_clause("digitalized", "every singleton is a valued member")
              : fail_clause("digitalized",
                            "not-digitalized: the construction needs atom "
                            "values, so every signed singleton must be a "
                            "valued member"));

    {
        normalization nz = classify_normalization(m);
        if (nz.positive_witness || nz.negative_witness) {
            std::string which =
                nz.positive_witness
                    ? "value 1 on " + to_string(*nz.positive_witness, s)
                    : "value -1 on " + to_string(*nz.negative_witness, s);
            out.checks.push_back(pass_clause("normalized", which));
        } else {
            out.checks.push_back(fail_clause(
                "normalized",
                "not-normalized: no member has value 1 or -1"));
        }
    }

    if (digit) {
        out.checks.push_back(pass_clause(
            "all-reduced",
            "satisfied under the documented reading: values quantify over "
            "reduced representatives, and the digitalized family contains "
            "every reduced event"));
    } else {
        out.checks.push_back(
            na_clause("all-reduced", "needs the digitalized hypothesis"));
    }

    if (digit) {
        std::optional<clause_result> bad_pos;
        for (int i = 0; i < n && !bad_pos; ++i) {
            if (m.atom_values[(std::size_t)i].sign() < 0) {
                event sing((std::uint32_t)1u << i, n);
                witness w = event_witness(s, {{"atom", sing}});
                w.expected = ">= 0";
                w.actual = m.atom_values[(std::size_t)i].str();
                bad_pos = fail_clause(
                    "sign-alignment-positive",
                    "sign-alignment: carrier atom '" + s.atom(i) +
                        "' has value " + m.atom_values[(std::size_t)i].str() +
                        " < 0; its extended image would violate non-negativity "
                        "of the carrier-pure class (EP8)", w);
            }
        }
        out.checks.push_back(bad_pos ? *bad_pos
                                     : pass_clause("sign-alignment-positive",
                                           "every carrier atom has value >= 0"));

        std::optional<clause_result> bad_neg;
        for (int i = 0; i < n && !bad_neg; ++i) {
            event sing((std::uint32_t)1u << (i + n), n);
            const rational& v = eval(m, sing);
            if (v.sign() > 0) {
                witness w = event_witness(s, {{"atom", sing}});
                w.expected = "<= 0";
                w.actual = v.str();
                bad_neg = fail_clause(
                    "sign-alignment-negative",
                    "sign-alignment: negated atom '-" + s.atom(i) +
                        "' has value " + v.str() +
                        " > 0; its mirror would need a negative carrier value, "
                        "violating non-negativity of the carrier-pure class "
                        "(EP8)", w);
            }
        }
        out.checks.push_back(bad_neg ? *bad_neg
                                     : pass_clause("sign-alignment-negative",
                                           "every negated atom has value <= 0"));
    } else {
        out.checks.push_back(na_clause("sign-alignment-positive",
                                       "needs the digitalized hypothesis"));
        out.checks.push_back(na_clause("sign-alignment-negative",
                                       "needs the digitalized hypothesis"));
    }

    for (const auto& c : out.checks)
        if (c.status == clause_status::fail) return out;

    extended_measure em{s, {}, {}};
    for (const event& e : all_events(s))
        if (is_reduced(e)) {
            em.family.push_back(e);
            em.values.push_back(atom_sum(m.atom_values, e));
        }
    out.result = std::move(em);
    out.ok = true;
    return out;
}

conversion<combined_measure> conventional_to_combined(const conventional_measure& m) {
    conversion<combined_measure> out;
    validation_report pre = check_kolmogorov(m);
    if (!pre.ok) {
        const clause_result* bad = nullptr;
        for (const auto& c : pre.clauses)
            if (c.status == clause_status::fail) { bad = &c; break; }
        out.checks.push_back(fail_clause(
            "input-valid",
            "the measure is not Kolmogorov-valid: fails at " +
                (bad ? bad->id : std::string("?")) + ": " +
                (bad ? bad->detail : std::string()),
            bad ? bad->w : std::nullopt));
        return out;
    }
    out.checks.push_back(
        pass_clause("input-valid", "the measure is Kolmogorov-valid"));

    const int n = m.sp.n();
    std::vector<std::pair<event, rational>> entries;
    entries.reserve(m.family.size() * m.family.size());
    for (std::size_t i = 0; i < m.family.size(); ++i)
        for (std::size_t j = 0; j < m.family.size(); ++j) {
            event x(m.family[i].bits() | (m.family[j].bits() << n), n);
            entries.emplace_back(x, m.values[i] - m.values[j]);
        }
    // Distinct pairs can collide only by producing the same mask from the
    // same (A, B) decomposition, which is impossible; make_explicit would
    // reject duplicates if that reasoning were wrong.
    out.result = make_explicit(m.sp, std::move(entries));
    out.ok = true;
    return out;
}

conversion<conventional_measure> restrict_positive(const combined_measure& m) {
    conversion<conventional_measure> out;
    const space& s = m.sp;
    const int n = s.n();
    const event carrier(carrier_mask(n), n);

    validation_report pre = validate_axioms(m);
    if (!pre.ok) {
        const clause_result* bad = nullptr;
        for (const auto& c : pre.clauses)
            if (c.status == clause_status::fail) { bad = &c; break; }
        out.checks.push_back(fail_clause(
            "input-valid",
            "the combined axioms fail at " + (bad ? bad->id : std::string("?")) +
                ": " + (bad ? bad->detail : std::string()),
            bad ? bad->w : std::nullopt));
        for (const char* id : {"positively-normalized", "positive-class-algebra",
                               "restriction-kolmogorov"})
            out.checks.push_back(na_clause(id, "input is not a valid measure"));
        return out;
    }
    out.checks.push_back(pass_clause("input-valid", "the combined axioms hold"));

    normalization nz = classify_normalization(m);
    bool normalized = nz.positive_witness.has_value();
    out.checks.push_back(
        normalized
            ? pass_clause("positively-normalized",
                          "value 1 on " + to_string(*nz.positive_witness, s))
            : fail_clause("positively-normalized",
                          "not-positively-normalized: no member has value 1"));

    // The strictly positive class: carrier-pure members of positive value,
    // with the empty event adjoined.
    event_family positive_class;
    positive_class.push_back(event::empty(s));
    for (std::size_t i = 0; i < m.family.size(); ++i)
        if (subset(m.family[i], carrier) && m.values[i].sign() > 0)
            positive_class.push_back(m.family[i]);

    bool algebra_ok = false;
    {
        structure_check sc = is_set_algebra(positive_class);
        if (!sc.ok) {
            witness w;
            if (sc.violation) {
                w = event_witness(s, {{"A", sc.violation->a},
                                      {"B", sc.violation->b},
                                      {"result", sc.violation->result}});
                w.bindings.emplace_back("operation", to_string(sc.violation->op));
            }
            out.checks.push_back(fail_clause(
                "positive-class-algebra",
                "family-not-algebra: the strictly positive class is not a set "
                "algebra: " + sc.note,
                sc.violation ? std::optional<witness>(w) : std::nullopt));
        } else if (!(*sc.unit == carrier)) {
            out.checks.push_back(fail_clause(
                "positive-class-algebra",
                "family-not-algebra: the strictly positive class is a set "
                "algebra, but its unit is not the carrier",
                event_witness(s, {{"unit", *sc.unit}, {"carrier", carrier}})));
        } else {
            algebra_ok = true;
            out.checks.push_back(pass_clause(
                "positive-class-algebra",
                "the strictly positive class is a set algebra with the carrier "
                "as unit (" + std::to_string(positive_class.size()) +
                    " members)"));
        }
    }

    if (!normalized || !algebra_ok) {
        out.checks.push_back(
            na_clause("restriction-kolmogorov", "earlier clauses failed"));
        return out;
    }

    conventional_measure cm{s, positive_class, {}};
    cm.values.reserve(positive_class.size());
    for (const event& e : positive_class) cm.values.push_back(eval(m, e));

    validation_report kol = check_kolmogorov(cm);
    if (!kol.ok) {
        const clause_result* bad = nullptr;
        for (const auto& c : kol.clauses)
            if (c.status == clause_status::fail) { bad = &c; break; }
        out.checks.push_back(fail_clause(
            "restriction-kolmogorov",
            "the restricted measure fails " + (bad ? bad->id : std::string("?")) +
                ": " + (bad ? bad->detail : std::string()),
            bad ? bad->w : std::nullopt));
        return out;
    }
    out.checks.push_back(pass_clause(
        "restriction-kolmogorov", "the restricted measure satisfies K1-K3"));

    out.result = std::move(cm);
    out.ok = true;
    return out;
}

}  // namespace combprob
