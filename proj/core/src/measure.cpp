#include "combprob/measure.hpp"

#include <algorithm>

namespace combprob {

namespace {

rational atom_sum(const space& s, const std::vector<rational>& pos_values,
                  const event& e) {
    rational sum;
    for (int i = 0; i < s.n(); ++i) {
        if (e.contains(i)) sum += pos_values[i];
        if (e.contains(i + s.n())) sum -= pos_values[i];
    }
    return sum;
}

const rational one = rational(1);
const rational minus_one = rational(-1);

}  // namespace

combined_measure make_digitalized(const space& s,
                                  const std::vector<rational>& positive_atom_values) {
    if ((int)positive_atom_values.size() != s.n())
        throw std::invalid_argument("make_digitalized: one value per positive atom");
    if (s.n() > max_digitalized_atoms)
        throw std::invalid_argument("make_digitalized: more than " +
                                    std::to_string(max_digitalized_atoms) + " atoms");
    combined_measure m{s, {}, {}, true, positive_atom_values};
    m.family = all_events(s);
    m.values.reserve(m.family.size());
    for (const event& e : m.family) {
        rational v = atom_sum(s, positive_atom_values, e);
        if (v < minus_one || v > one)
            throw range_violation_error(e, v, to_string(e, s));
        m.values.push_back(v);
    }
    return m;
}

combined_measure make_explicit(const space& s,
                               std::vector<std::pair<event, rational>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].first == entries[i - 1].first)
            throw std::invalid_argument("make_explicit: duplicate event " +
                                        to_string(entries[i].first, s));
    combined_measure m{s, {}, {}, false, {}};
    m.family.reserve(entries.size());
    m.values.reserve(entries.size());
    for (auto& [e, v] : entries) {
        m.family.push_back(e);
        m.values.push_back(v);
    }
    // Digitalized after all: all 2n singletons valued.  Then the family is
    // the full power set whenever the measure validates; deriving
    // atom_values makes the sign-class machinery available.
    bool all_singletons = true;
    for (int i = 0; i < 2 * s.n() && all_singletons; ++i)
        all_singletons = family_contains(m.family, event(1u << i, s.n()));
    if (all_singletons) {
        m.digitalized = true;
        for (int i = 0; i < s.n(); ++i)
            m.atom_values.push_back(eval(m, event(1u << i, s.n())));
    }
    return m;
}

const rational& eval(const combined_measure& m, const event& e) {
    auto it = std::lower_bound(m.family.begin(), m.family.end(), e);
    if (it == m.family.end() || !(*it == e))
        throw not_in_family_error(e, to_string(e, m.sp));
    return m.values[(std::size_t)(it - m.family.begin())];
}

std::string to_string(clause_status s) {
    switch (s) {
        case clause_status::pass: return "pass";
        case clause_status::fail: return "fail";
        case clause_status::flagged: return "flagged";
        case clause_status::not_applicable: return "not-applicable";
    }
    return "?";
}

namespace {

witness event_witness(const combined_measure& m,
                      std::initializer_list<std::pair<const char*, event>> evs) {
    witness w;
    for (const auto& [name, e] : evs) w.bindings.emplace_back(name, to_string(e, m.sp));
    return w;
}

}  // namespace

validation_report validate_axioms(const combined_measure& m) {
    validation_report rep;
    const space& s = m.sp;
    const event omega = event::universe(s);

    // CP1: set ring containing the universe.  A ring with the universe as a
    // member is a set algebra whose unit is the universe.
    {
        clause_result c{"CP1", clause_status::pass,
                        "the family is a set algebra with the universe as unit", {}};
        structure_check ring = is_set_ring(m.family);
        if (!ring.ok) {
            c.status = clause_status::fail;
            c.detail = "the family is not a set ring (" + ring.note + ")";
            if (ring.violation) {
                witness w = event_witness(m, {{"A", ring.violation->a},
                                              {"B", ring.violation->b},
                                              {"escape", ring.violation->result}});
                w.bindings.emplace_back("operation", to_string(ring.violation->op));
                c.w = w;
            }
        } else if (!family_contains(m.family, omega)) {
            c.status = clause_status::fail;
            c.detail = "the universe is not a member of the family";
            c.w = event_witness(m, {{"universe", omega}});
        }
        rep.clauses.push_back(std::move(c));
    }

    // CP2: all values in [-1, 1].
    {
        clause_result c{"CP2", clause_status::pass, "all values lie in [-1, 1]", {}};
        std::size_t bad = 0;
        std::optional<std::size_t> first;
        for (std::size_t i = 0; i < m.values.size(); ++i) {
            if (m.values[i] < minus_one || m.values[i] > one) {
                ++bad;
                if (!first) first = i;
            }
        }
        if (bad) {
            c.status = clause_status::fail;
            c.detail = std::to_string(bad) + " value(s) outside [-1, 1]";
            witness w = event_witness(m, {{"A", m.family[*first]}});
            w.expected = "a value in [-1, 1]";
            w.actual = m.values[*first].str();
            c.w = w;
        }
        rep.clauses.push_back(std::move(c));
    }

    // CP3: p(A cup B) = p(A) + p(B) whenever A cap B and A cap -B are both
    // empty; the union must itself be a member.
    {
        clause_result c{"CP3", clause_status::pass,
                        "additivity over doubly disjoint pairs", {}};
        for (std::size_t i = 0; i < m.family.size() && c.status == clause_status::pass;
             ++i) {
            const event& a = m.family[i];
            const event na = negate(a);
            for (std::size_t j = i; j < m.family.size(); ++j) {
                const event& b = m.family[j];
                if (!disjoint(a, b) || !disjoint(na, b)) continue;
                const event u = unite(a, b);
                auto it = std::lower_bound(m.family.begin(), m.family.end(), u);
                if (it == m.family.end() || !(*it == u)) {
                    c.status = clause_status::fail;
                    c.detail = "the union of a doubly disjoint pair is missing";
                    c.w = event_witness(m, {{"A", a}, {"B", b}, {"A cup B", u}});
                    break;
                }
                const rational& pu = m.values[(std::size_t)(it - m.family.begin())];
                rational sum = m.values[i] + m.values[j];
                if (!(pu == sum)) {
                    c.status = clause_status::fail;
                    c.detail = "additivity fails on a doubly disjoint pair";
                    witness w = event_witness(m, {{"A", a}, {"B", b}, {"A cup B", u}});
                    w.expected = sum.str();
                    w.actual = pu.str();
                    c.w = w;
                    break;
                }
            }
        }
        rep.clauses.push_back(std::move(c));
    }

    // CP4: closure under negation.
    {
        clause_result c{"CP4", clause_status::pass,
                        "the family is closed under negation", {}};
        for (const event& a : m.family) {
            if (!family_contains(m.family, negate(a))) {
                c.status = clause_status::fail;
                c.detail = "a member's negation is missing";
                c.w = event_witness(m, {{"A", a}, {"-A", negate(a)}});
                break;
            }
        }
        rep.clauses.push_back(std::move(c));
    }

    // CP5: p(A) = -p(-A) on every member whose negation is a member (pairs
    // missing entirely are CP4's failure, not CP5's).
    {
        clause_result c{"CP5", clause_status::pass,
                        "sign antisymmetry p(A) = -p(-A)", {}};
        std::size_t skipped = 0;
        for (std::size_t i = 0; i < m.family.size(); ++i) {
            const event na = negate(m.family[i]);
            auto it = std::lower_bound(m.family.begin(), m.family.end(), na);
            if (it == m.family.end() || !(*it == na)) {
                ++skipped;
                continue;
            }
            const rational& pn = m.values[(std::size_t)(it - m.family.begin())];
            if (!(pn == -m.values[i])) {
                c.status = clause_status::fail;
                c.detail = "sign antisymmetry fails";
                witness w = event_witness(m, {{"A", m.family[i]}, {"-A", na}});
                w.expected = (-m.values[i]).str();
                w.actual = pn.str();
                c.w = w;
                break;
            }
        }
        if (skipped && c.status == clause_status::pass)
            c.detail += " (" + std::to_string(skipped) +
                        " member(s) without a negation skipped; see CP4)";
        rep.clauses.push_back(std::move(c));
    }

    rep.ok = std::all_of(rep.clauses.begin(), rep.clauses.end(), [](const auto& c) {
        return c.status == clause_status::pass;
    });
    return rep;
}

space_partition partition_space(const combined_measure& m) {
    if (!m.digitalized)
        throw std::invalid_argument("partition_space: measure is not digitalized");
    const int n = m.sp.n();
    std::uint32_t plus = 0, minus = 0, zero = 0;
    for (int i = 0; i < n; ++i) {
        int sg = m.atom_values[i].sign();
        if (sg > 0) {
            plus |= 1u << i;
            minus |= 1u << (i + n);
        } else if (sg < 0) {
            minus |= 1u << i;
            plus |= 1u << (i + n);
        } else {
            zero |= 1u << i;
            zero |= 1u << (i + n);
        }
    }
    return {event(plus, n), event(minus, n), event(zero, n)};
}

std::optional<int> atom_sign(const combined_measure& m, int signed_atom) {
    const int n = m.sp.n();
    if (m.digitalized) {
        int sg = m.atom_values[signed_atom % n].sign();
        return signed_atom < n ? sg : -sg;
    }
    event singleton(1u << signed_atom, n);
    if (!in_family(m, singleton)) return std::nullopt;
    return eval(m, singleton).sign();
}

std::optional<event_parts> sign_parts(const combined_measure& m, const event& e) {
    const int n = m.sp.n();
    std::uint32_t plus = 0, minus = 0, zero = 0;
    for (int i = 0; i < 2 * n; ++i) {
        if (!e.contains(i)) continue;
        auto sg = atom_sign(m, i);
        if (!sg) return std::nullopt;
        if (*sg > 0)
            plus |= 1u << i;
        else if (*sg < 0)
            minus |= 1u << i;
        else
            zero |= 1u << i;
    }
    return event_parts{event(plus, n), event(minus, n), event(zero, n)};
}

std::pair<rational, rational> decompose(const combined_measure& m, const event& e) {
    if (!m.digitalized)
        throw std::invalid_argument("decompose: measure is not digitalized");
    if (!is_reduced(e))
        throw std::invalid_argument("decompose: event " + to_string(e, m.sp) +
                                    " is not reduced");
    auto parts = sign_parts(m, e);
    return {eval(m, parts->plus), eval(m, parts->minus)};
}

normalization classify_normalization(const combined_measure& m) {
    normalization out;
    for (std::size_t i = 0; i < m.family.size(); ++i) {
        if (!out.positive_witness && m.values[i] == one)
            out.positive_witness = m.family[i];
        if (!out.negative_witness && m.values[i] == minus_one)
            out.negative_witness = m.family[i];
    }
    out.coincide = out.positive_witness.has_value() == out.negative_witness.has_value();
    return out;
}

std::string to_string(completeness c) {
    switch (c) {
        case completeness::yes: return "yes";
        case completeness::no: return "no";
        case completeness::undecidable: return "undecidable-in-family";
    }
    return "?";
}

completeness_report is_complete(const combined_measure& m) {
    completeness_report out{completeness::undecidable, completeness::undecidable,
                            event::empty(m.sp), event::empty(m.sp), {}, {}};
    const int n = m.sp.n();
    std::uint32_t plus = 0, minus = 0;
    for (int i = 0; i < 2 * n; ++i) {
        auto sg = atom_sign(m, i);
        if (sg && *sg > 0) plus |= 1u << i;
        if (sg && *sg < 0) minus |= 1u << i;
    }
    out.omega_plus = event(plus, n);
    out.omega_minus = event(minus, n);
    if (in_family(m, out.omega_plus)) {
        out.p_plus = eval(m, out.omega_plus);
        out.positive = *out.p_plus == one ? completeness::yes : completeness::no;
    }
    if (in_family(m, out.omega_minus)) {
        out.p_minus = eval(m, out.omega_minus);
        out.negative = *out.p_minus == minus_one ? completeness::yes : completeness::no;
    }
    return out;
}

family_partition family_sign_classes(const combined_measure& m) {
    family_partition out;
    for (std::size_t i = 0; i < m.family.size(); ++i) {
        int sg = m.values[i].sign();
        (sg > 0 ? out.positive : sg < 0 ? out.negative : out.zero)
            .push_back(m.family[i]);
    }
    return out;
}

combined_measure scale_measure(const combined_measure& m, const rational& c) {
    if (c.abs() > one)
        throw std::invalid_argument("scale_measure: |factor| must be <= 1");
    combined_measure out = m;
    for (rational& v : out.values) v = v * c;
    for (rational& v : out.atom_values) v = v * c;
    return out;
}

}  // namespace combprob
