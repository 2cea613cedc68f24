#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combprob/event.hpp"
#include "combprob/rational.hpp"
#include "combprob/set_structures.hpp"

namespace combprob {

// Digitalized construction materializes the full power set of the universe;
// beyond this many atoms the 2^(2n) tables stop being desk-scale.
inline constexpr int max_digitalized_atoms = 10;

/*
 * A signed measure on an explicitly enumerated event family over a symmetric
 * universe.  family is canonical (ascending mask) and values runs parallel
 * to it.  A measure is digitalized when every signed singleton is a valued
 * member; the family is then the full power set and every value is the sum
 * of its atoms' values.  For digitalized measures atom_values caches the
 * positive atoms' values (negative atoms carry the negated value).
 */
struct combined_measure {
    space sp;
    event_family family;
    std::vector<rational> values;
    bool digitalized = false;
    std::vector<rational> atom_values;
};

// Thrown by make_digitalized when some event's value leaves [-1, 1].
struct range_violation_error : std::runtime_error {
    range_violation_error(event e, rational v, const std::string& rendered)
        : std::runtime_error("value out of range on " + rendered + ": " + v.str()),
          ev(e),
          value(v) {}
    event ev;
    rational value;
};

struct not_in_family_error : std::runtime_error {
    not_in_family_error(event e, const std::string& rendered)
        : std::runtime_error("event " + rendered + " is not in the family"), ev(e) {}
    event ev;
};

/*
 * Digitalized measure from the positive atoms' values; each negative atom
 * receives the negated value, so atom-level sign antisymmetry holds by
 * construction, and every event's value is its atom sum.  Throws
 * range_violation_error with the canonical-smallest offending event if any
 * sum leaves [-1, 1].
 */
combined_measure make_digitalized(const space& s,
                                  const std::vector<rational>& positive_atom_values);

// Explicit measure from (event, value) pairs.  Duplicate events are
// rejected (std::invalid_argument).  If all signed singletons are present
// the measure is marked digitalized and atom_values is derived.
combined_measure make_explicit(const space& s,
                               std::vector<std::pair<event, rational>> entries);

// Stored value of an event; throws not_in_family_error for non-members.
const rational& eval(const combined_measure& m, const event& e);

inline bool in_family(const combined_measure& m, const event& e) {
    return family_contains(m.family, e);
}

enum class clause_status { pass, fail, flagged, not_applicable };

std::string to_string(clause_status s);

// A replayable witness: named bindings rendered in canonical string form
// (events as "{w, -v}", rationals exact), plus expected/actual values when
// the violated clause is an equation or a bound.
struct witness {
    std::vector<std::pair<std::string, std::string>> bindings;
    std::optional<std::string> expected;
    std::optional<std::string> actual;
};

struct clause_result {
    std::string id;
    clause_status status = clause_status::pass;
    std::string detail;
    std::optional<witness> w;
};

struct validation_report {
    std::vector<clause_result> clauses;
    bool ok = false;
};

/*
 * Checks the five structural axioms, one clause each, with a witness on
 * failure:
 *   CP1  the family is a set ring containing the full universe (hence a set
 *        algebra with the universe as unit),
 *   CP2  every value lies in [-1, 1],
 *   CP3  additivity over doubly disjoint pairs (A cap B and A cap -B both
 *        empty), with the union required to be a member,
 *   CP4  the family is closed under negation,
 *   CP5  p(A) = -p(-A) wherever both sides are members.
 */
validation_report validate_axioms(const combined_measure& m);

// Sign classes of the universe's atoms (digitalized only): atoms of
// strictly positive, strictly negative, and zero value.
struct space_partition {
    event plus;
    event minus;
    event zero;
};
space_partition partition_space(const combined_measure& m);

// Sign of the signed atom's value: for digitalized measures always known;
// for explicit measures known only when its singleton is a valued member.
std::optional<int> atom_sign(const combined_measure& m, int signed_atom);

// (A+p, A-p, A0p): the sign-class parts of A.  nullopt when some atom of A
// has unknown sign.
struct event_parts {
    event plus;
    event minus;
    event zero;
};
std::optional<event_parts> sign_parts(const combined_measure& m, const event& e);

// For a digitalized measure and reduced A: (p(A+p), p(A-p)).  Throws
// std::invalid_argument when m is not digitalized or A is not reduced.
std::pair<rational, rational> decompose(const combined_measure& m, const event& e);

struct normalization {
    std::optional<event> positive_witness;  // first member with value 1
    std::optional<event> negative_witness;  // first member with value -1
    bool coincide = false;  // both present or both absent (expected always)
};
normalization classify_normalization(const combined_measure& m);

enum class completeness { yes, no, undecidable };

std::string to_string(completeness c);

// Whether p(Omega_+p) = 1 (resp. p(Omega_-p) = -1).  For explicit measures
// Omega_+p collects the valued singletons of positive value; if that event
// is not itself a member the question is undecidable in this family.
struct completeness_report {
    completeness positive = completeness::undecidable;
    completeness negative = completeness::undecidable;
    event omega_plus;
    event omega_minus;
    std::optional<rational> p_plus;   // value of omega_plus when a member
    std::optional<rational> p_minus;  // value of omega_minus when a member
};
completeness_report is_complete(const combined_measure& m);

// F partitioned by value sign.
struct family_partition {
    event_family positive;
    event_family zero;
    event_family negative;
};
family_partition family_sign_classes(const combined_measure& m);

// Pointwise rescaling by c with |c| <= 1 (std::invalid_argument otherwise:
// larger factors can push values outside [-1, 1]).
combined_measure scale_measure(const combined_measure& m, const rational& c);

}  // namespace combprob
