#pragma once

#include <optional>
#include <string>
#include <vector>

#include "combprob/event.hpp"

namespace combprob {

// A finite family of events in canonical form: ascending mask, no duplicates.
using event_family = std::vector<event>;

// Sorts and deduplicates into canonical form.
event_family make_family(std::vector<event> members);

// Binary search by mask; the family must be canonical.
bool family_contains(const event_family& fam, const event& e);

enum class set_op { intersection, symmetric_difference, union_, difference, complement };

std::string to_string(set_op op);

// A closure violation: applying op to (a, b) escapes the family.  For
// complement checks b is the algebra's unit.
struct structure_violation {
    set_op op;
    event a;
    event b;
    event result;
};

struct structure_check {
    bool ok = false;
    std::optional<event> unit;                      // set for algebras/fields
    std::optional<structure_violation> violation;   // set when closure fails
    std::string note;                               // e.g. "family has no unit"
};

/*
 * A set ring is closed under intersection and symmetric difference;
 * equivalently, under union, intersection and difference.  Both
 * characterizations are evaluated and must agree (they are provably
 * equivalent; a disagreement would be an internal error and throws).  The
 * reported violation is the canonical-smallest escape: minimal escaping
 * result mask, then operation (intersection before symmetric difference),
 * then the realizing pair (a, b) in ascending mask order.
 */
structure_check is_set_ring(const event_family& fam);

// A set algebra is a set ring with a unit: a member E with A cap E = A for
// every member A.  The unit, if any, is the union of all members.
structure_check is_set_algebra(const event_family& fam);

// A set field is a set algebra closed under complement about its unit.
structure_check is_set_field(const event_family& fam);

/*
 * Smallest set algebra over the given unit containing the seed events:
 * the fixpoint of closure under union, intersection and difference with the
 * unit adjoined.  Every seed must be a subset of the unit
 * (std::invalid_argument otherwise).  The result is canonical and its size
 * is bounded by 2^|unit|; the hard cap of 2^|universe| events is enforced.
 */
event_family generate_algebra(const event_family& seed, const event& unit);

}  // namespace combprob
