#pragma once

#include <optional>
#include <string>
#include <vector>

#include "combprob/measure.hpp"

namespace combprob {

/*
 * An extended measure: a signed measure over the symmetric universe whose
 * family contains reduced events only (annihilation is baked into the
 * family) and whose carrier-pure members form a non-negatively valued set
 * algebra of full measure.  The eight axioms are enumerated in
 * check_extended_axioms.
 */
struct extended_measure {
    space sp;
    event_family family;
    std::vector<rational> values;
};

/*
 * A conventional measure: a non-negative normalized measure on a set
 * algebra over an unsigned universe.  The universe is represented by a
 * space whose positive atoms are the points; events use carrier bits only.
 */
struct conventional_measure {
    space sp;
    event_family family;
    std::vector<rational> values;
};

const rational& eval(const extended_measure& m, const event& e);
const rational& eval(const conventional_measure& m, const event& e);

/*
 * EP1  the universe carries a graded involution (negation; verified as an
 *      involution exchanging the carrier halves),
 * EP2  the carrier-pure members form a set algebra containing the carrier,
 * EP3  the carrier has measure 1,
 * EP4  the family is exactly the set of disjoint compositions A cup -B of
 *      carrier-pure members,
 * EP5  additivity with annihilation: for disjoint members the reduced union
 *      is a member carrying the sum,
 * EP6  every member is reduced (annihilation leaves nothing to cancel),
 * EP7  the measure is a single-valued map on the family (structural),
 * EP8  carrier-pure members have non-negative measure.
 */
validation_report check_extended_axioms(const extended_measure& m);

// K1 non-negativity, K2 unit mass on the universe, K3 additivity over
// disjoint pairs; plus a structural clause requiring the family to be a set
// algebra whose unit is the universe.
validation_report check_kolmogorov(const conventional_measure& m);

/*
 * Conversion outcome: checks lists every hypothesis clause in order with
 * pass/fail status; result is present iff all clauses pass.  Refusals are
 * typed by the failing clause's id.
 */
template <class T>
struct conversion {
    std::optional<T> result;
    std::vector<clause_result> checks;
    bool ok = false;
    const clause_result* failure() const {
        for (const auto& c : checks)
            if (c.status == clause_status::fail) return &c;
        return nullptr;
    }
};

/*
 * Extended -> combined.  Requires the input to satisfy the extended axioms
 * (clause "input-valid").  The combined family is every composition
 * A cup -B of carrier-pure members (overlapping pairs included; they
 * produce the unreduced members), valued by the reduced representative:
 * p(X) = P(RX).  The result agrees with P on every member of the input
 * family and satisfies the combined axioms.
 */
conversion<combined_measure> extended_to_combined(const extended_measure& m);

/*
 * Combined -> extended.  Hypotheses, one clause each:
 *   "input-valid"     the combined axioms hold,
 *   "digitalized"     atom values exist (the construction needs them),
 *   "normalized"      some member has value 1,
 *   "all-reduced"     satisfied under the documented reading: values are
 *                     quantified over reduced representatives, which always
 *                     exist in a digitalized family,
 *   "sign-alignment-positive"  every carrier atom has value >= 0 (a strictly
 *                     negative carrier atom would violate non-negativity on
 *                     the extended side: axiom EP8),
 *   "sign-alignment-negative"  mirror condition on negated atoms.
 * On success: family = all reduced events, values = atom sums.
 */
conversion<extended_measure> combined_to_extended(const combined_measure& m);

/*
 * Conventional -> combined.  Requires K-validity ("input-valid").  The
 * image family is every composition A cup -B of members; p = P(A) - P(B).
 * The image is a valid combined measure, positively normalized, with no
 * positively valued event inside the negated half.
 */
conversion<combined_measure> conventional_to_combined(const conventional_measure& m);

/*
 * Combined -> conventional: restriction to the strictly positive class.
 * Clauses:
 *   "input-valid"                the combined axioms hold,
 *   "positively-normalized"      some member has value 1,
 *   "positive-class-algebra"     C := { X in F : X carrier-pure, p(X) > 0 }
 *                                plus the empty event is a set algebra whose
 *                                unit is the full carrier (witness: the
 *                                canonical-smallest closure escape, or the
 *                                missing carrier),
 *   "restriction-kolmogorov"     the restricted measure satisfies K1-K3
 *                                (provable from the first two clauses for
 *                                digitalized inputs; re-checked as defense
 *                                in depth).
 * On success the result's universe is the carrier with the same labels.
 */
conversion<conventional_measure> restrict_positive(const combined_measure& m);

}  // namespace combprob
