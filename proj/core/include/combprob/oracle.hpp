#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combprob/bridges.hpp"
#include "combprob/measure.hpp"

namespace combprob {

enum class check_domain { per_measure, per_space, standalone };

enum class check_mode { checked, flagged };

/*
 * One numbered entry of the property catalog.  Identifiers are the
 * catalog's own nomenclature (a conventional lemma / proposition /
 * corollary / theorem numbering); each entry paraphrases the property it
 * checks.  Flagged entries have a literal reading that provably fails and a
 * repaired reading that holds; both run and are reported as subresults, and
 * a flagged entry never reports plain pass or fail.
 */
struct catalog_entry {
    std::string id;
    std::string statement;
    check_mode mode;
    check_domain domain;
};

const std::vector<catalog_entry>& property_catalog();

struct check_result {
    std::string id;
    clause_status status = clause_status::pass;
    std::string detail;
    std::optional<witness> w;
    std::vector<clause_result> subresults;  // flagged readings, theorem branches
};

/*
 * Runs every catalog entry against the measure: per-measure entries on the
 * measure itself, per-space entries on its space, standalone entries on
 * their own deterministic instance suites.  The measure must satisfy the
 * combined axioms (std::invalid_argument otherwise); entries whose
 * hypotheses the measure does not meet report not-applicable with the
 * reason.  Exact arithmetic throughout; quantifiers run over their full
 * stated domains.
 */
std::vector<check_result> check_catalog(const combined_measure& m);

// Deterministic generative suite behind the extended-embedding theorem
// entry: `count` seeded random extended measures (up to four atoms,
// denominators at most twelve) are validated, converted, and re-validated.
check_result check_extended_embedding_suite(int count = 100,
                                            std::uint32_t seed = 20260822);

// Fixed conventional-measure suite behind the conventional-embedding
// theorem entry (includes a measure with a null event, whose restriction
// round-trip is refused and asserted as such).
check_result check_conventional_embedding_suite();

/*
 * Smallest escape of the strictly positive family class under the given
 * operation (intersection, union or difference).  Operands range over the
 * REDUCED members of the strictly positive class; an escape is a result
 * with non-positive value whose reduction is nonempty.  Returns the escape
 * with minimal result mask, then minimal operand pair, or nullopt when the
 * class is closed.  Requires a digitalized measure.
 */
struct sign_class_witness {
    set_op op;
    event a, b, result;
    rational p_a, p_b, p_result;
};
std::optional<sign_class_witness> find_sign_class_counterexample(
    const combined_measure& m, set_op op);

/*
 * Non-monotonicity of reduction and of the reduced union, witnessed on the
 * bare space: a subset pair B <= A with RB not a subset of RA, and a triple
 * with C <= B but A u_R C not a subset of A u_R B.  Both witnesses are the
 * lexicographically first in canonical order and are verified before being
 * returned.  Requires at least two atoms (std::invalid_argument otherwise).
 */
struct nonmonotonicity_witness {
    event subset_a, subset_b;          // B <= A, RB not <= RA
    event union_a, union_b, union_c;   // C <= B, A u_R C not <= A u_R B
};
nonmonotonicity_witness find_reduction_nonmonotonicity(const space& s);

/*
 * Exhaustive digitalized sweep: for every atom count 1..max_atoms and every
 * assignment of grid values to the positive atoms, candidates violating the
 * range axiom (sum of absolute atom values above 1) are counted invalid and
 * skipped; every remaining candidate must validate, and the full catalog
 * runs on it.  The grid must be sign-symmetric (every value present with
 * its negation); it is canonicalized (sorted, deduplicated) first, so the
 * enumeration and the aggregation order are deterministic.
 */
struct sweep_line {
    std::string id;
    long long pass = 0, fail = 0, flagged = 0, not_applicable = 0;
    std::optional<check_result> first_failure;
};
struct sweep_summary {
    int max_atoms = 0;
    std::vector<rational> grid;
    long long candidates = 0;
    long long invalid = 0;
    long long measures = 0;
    std::vector<sweep_line> lines;  // one per catalog entry, catalog order
    bool ok = false;                // no non-flagged failures
};
sweep_summary sweep_measures(int max_atoms, std::vector<rational> grid);

}  // namespace combprob
