#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "combprob/oracle.hpp"
#include "test_util.hpp"

using namespace combprob;
using testutil::ev;

namespace {

std::vector<std::string> expected_catalog_ids() {
    std::vector<std::string> ids;
    for (int i = 1; i <= 11; ++i) ids.push_back("Lemma 2." + std::to_string(i));
    for (int i = 1; i <= 14; ++i)
        ids.push_back("Proposition 2." + std::to_string(i));
    for (int i = 1; i <= 15; ++i)
        ids.push_back("Corollary 2." + std::to_string(i));
    for (int i = 1; i <= 4; ++i) ids.push_back("Theorem 3." + std::to_string(i));
    return ids;
}

const check_result& result_by_id(const std::vector<check_result>& results,
                                 const std::string& id) {
    for (const auto& r : results)
        if (r.id == id) return r;
    REQUIRE(false);
    return results.front();
}

std::map<clause_status, int> status_tally(
    const std::vector<check_result>& results) {
    std::map<clause_status, int> tally;
    for (const auto& r : results) ++tally[r.status];
    return tally;
}

}  // namespace

TEST_CASE("the catalog manifest is fixed: 44 entries, order, modes, domains") {
    const std::vector<catalog_entry>& cat = property_catalog();
    std::vector<std::string> want = expected_catalog_ids();
    REQUIRE(cat.size() == 44);
    for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK(cat[i].id == want[i]);
        CHECK_FALSE(cat[i].statement.empty());
    }

    std::set<std::string> flagged, per_space, standalone;
    for (const auto& e : cat) {
        if (e.mode == check_mode::flagged) flagged.insert(e.id);
        if (e.domain == check_domain::per_space) per_space.insert(e.id);
        if (e.domain == check_domain::standalone) standalone.insert(e.id);
    }
    CHECK(flagged == std::set<std::string>{"Lemma 2.11", "Proposition 2.7",
                                           "Corollary 2.13"});
    CHECK(per_space ==
          std::set<std::string>{"Lemma 2.3", "Lemma 2.4", "Lemma 2.6",
                                "Lemma 2.8", "Lemma 2.9", "Lemma 2.11",
                                "Proposition 2.7", "Corollary 2.5",
                                "Corollary 2.6", "Corollary 2.7",
                                "Corollary 2.14"});
    CHECK(standalone == std::set<std::string>{"Theorem 3.1", "Theorem 3.3"});
}

TEST_CASE("the full catalog passes on the four-atom measure") {
    std::vector<check_result> results = check_catalog(testutil::mixed_four());
    REQUIRE(results.size() == 44);
    std::vector<std::string> want = expected_catalog_ids();
    for (std::size_t i = 0; i < results.size(); ++i) CHECK(results[i].id == want[i]);

    auto tally = status_tally(results);
    CHECK(tally[clause_status::pass] == 41);
    CHECK(tally[clause_status::flagged] == 3);
    CHECK(tally[clause_status::fail] == 0);
    CHECK(tally[clause_status::not_applicable] == 0);

    const check_result& l211 = result_by_id(results, "Lemma 2.11");
    REQUIRE(l211.subresults.size() == 2);
    CHECK(l211.subresults[0].id == "literal");
    CHECK(l211.subresults[0].status == clause_status::fail);
    REQUIRE(l211.subresults[0].w.has_value());
    CHECK(l211.subresults[0].w->bindings.at(0) ==
          std::pair<std::string, std::string>("A", "{w}"));
    CHECK(l211.subresults[1].id == "complement");
    CHECK(l211.subresults[1].status == clause_status::pass);

    const check_result& p27 = result_by_id(results, "Proposition 2.7");
    REQUIRE(p27.subresults.size() == 3);
    CHECK(p27.subresults[0].id == "commutativity");
    CHECK(p27.subresults[0].status == clause_status::pass);
    CHECK(p27.subresults[1].id == "associativity-general");
    CHECK(p27.subresults[1].status == clause_status::fail);
    CHECK(p27.subresults[1].w.has_value());
    CHECK(p27.subresults[2].id == "associativity-disjoint");
    CHECK(p27.subresults[2].status == clause_status::pass);

    const check_result& c213 = result_by_id(results, "Corollary 2.13");
    REQUIRE(c213.subresults.size() == 2);
    CHECK(c213.subresults[0].id == "literal");
    CHECK(c213.subresults[0].status == clause_status::fail);
    CHECK(c213.subresults[1].id == "complement");
    CHECK(c213.subresults[1].status == clause_status::pass);
}

TEST_CASE("the catalog passes on the explicit partition measure") {
    std::vector<check_result> results =
        check_catalog(testutil::partition_explicit());
    REQUIRE(results.size() == 44);
    auto tally = status_tally(results);
    CHECK(tally[clause_status::fail] == 0);
    CHECK(tally[clause_status::flagged] == 3);
    CHECK(tally[clause_status::not_applicable] == 3);
    CHECK(tally[clause_status::pass] == 38);
    CHECK(result_by_id(results, "Proposition 2.4").status ==
          clause_status::not_applicable);
    CHECK(result_by_id(results, "Proposition 2.5").status ==
          clause_status::not_applicable);
    CHECK(result_by_id(results, "Proposition 2.12").status ==
          clause_status::not_applicable);
}

TEST_CASE("the catalog refuses a measure that fails the axioms") {
    space s({"w"});
    combined_measure broken =
        make_explicit(s, {{ev(s, 0), rational(0)},
                          {ev(s, 1), rational(1, 2)},
                          {ev(s, 2), rational(-1, 2)},
                          {ev(s, 3), rational(1, 2)}});
    CHECK_THROWS_AS(check_catalog(broken), std::invalid_argument);
}

TEST_CASE("sign-class escapes are found with canonical-smallest witnesses") {
    combined_measure five = testutil::mixed_five();
    auto cap = find_sign_class_counterexample(five, set_op::intersection);
    REQUIRE(cap.has_value());
    CHECK(cap->a == ev(five.sp, 7));
    CHECK(cap->b == ev(five.sp, 28));
    CHECK(cap->result == ev(five.sp, 4));
    CHECK(cap->p_a == rational(1, 5));
    CHECK(cap->p_b == rational(1, 5));
    CHECK(cap->p_result == rational(-1, 5));

    combined_measure four = testutil::mixed_four();
    auto cup = find_sign_class_counterexample(four, set_op::union_);
    REQUIRE(cup.has_value());
    CHECK(cup->a == ev(four.sp, 7));
    CHECK(cup->b == ev(four.sp, 11));
    CHECK(cup->result == ev(four.sp, 15));
    CHECK(cup->p_result == rational(0));

    auto diff = find_sign_class_counterexample(four, set_op::difference);
    REQUIRE(diff.has_value());
    CHECK(diff->a == ev(four.sp, 7));
    CHECK(diff->b == ev(four.sp, 3));
    CHECK(diff->result == ev(four.sp, 4));
    CHECK(diff->p_result == rational(-1, 5));
}

TEST_CASE("the embedded fair coin has a closed positive class") {
    conversion<combined_measure> embedded =
        conventional_to_combined(testutil::fair_coin());
    REQUIRE(embedded.ok);
    for (set_op op :
         {set_op::intersection, set_op::union_, set_op::difference})
        CHECK_FALSE(find_sign_class_counterexample(*embedded.result, op)
                        .has_value());
}

TEST_CASE("the sign-class search validates its arguments") {
    CHECK_THROWS_AS(find_sign_class_counterexample(
                        testutil::partition_explicit(), set_op::intersection),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_sign_class_counterexample(
                        testutil::mixed_four(), set_op::symmetric_difference),
                    std::invalid_argument);
}

TEST_CASE("reduction and the reduced union are non-monotone") {
    space s({"w", "v"});
    nonmonotonicity_witness w = find_reduction_nonmonotonicity(s);
    CHECK(w.subset_a == ev(s, 5));  // {w, -w}
    CHECK(w.subset_b == ev(s, 1));  // {w} inside it, yet R{w} escapes R(A)
    CHECK(subset(w.subset_b, w.subset_a));
    CHECK_FALSE(subset(reduce(w.subset_b), reduce(w.subset_a)));

    CHECK(w.union_a == ev(s, 0));
    CHECK(w.union_b == ev(s, 5));
    CHECK(w.union_c == ev(s, 1));
    CHECK(subset(w.union_c, w.union_b));
    CHECK_FALSE(subset(reduced_union(w.union_a, w.union_c),
                       reduced_union(w.union_a, w.union_b)));

    CHECK_THROWS_AS(find_reduction_nonmonotonicity(space({"w"})),
                    std::invalid_argument);
}

TEST_CASE("hand-built witnesses satisfy the non-monotonicity predicates") {
    // Two atoms: B = {a1, a2} inside A = {a1, a2, -a2}, RB escapes RA.
    space s2({"a1", "a2"});
    event a2(11, 2), b2(3, 2);
    CHECK(subset(b2, a2));
    CHECK_FALSE(subset(reduce(b2), reduce(a2)));

    // Three atoms: C = {-a1} inside B = {-a1, -a2}; joining with
    // A = {a1, a2, a3} shows the reduced union reversing inclusion.
    space s3({"a1", "a2", "a3"});
    event a3(7, 3), b3(24, 3), c3(8, 3);
    CHECK(subset(c3, b3));
    CHECK(reduced_union(a3, c3) == event(6, 3));
    CHECK(reduced_union(a3, b3) == event(4, 3));
    CHECK_FALSE(subset(reduced_union(a3, c3), reduced_union(a3, b3)));
}

TEST_CASE("the generative embedding suites pass deterministically") {
    check_result ext = check_extended_embedding_suite();
    CHECK(ext.id == "Theorem 3.1");
    CHECK(ext.status == clause_status::pass);

    check_result ext2 = check_extended_embedding_suite();
    CHECK(ext.detail == ext2.detail);

    check_result conv = check_conventional_embedding_suite();
    CHECK(conv.id == "Theorem 3.3");
    CHECK(conv.status == clause_status::pass);

    check_result small = check_extended_embedding_suite(5);
    CHECK(small.status == clause_status::pass);
}

TEST_CASE("a small grid sweep passes every catalog line") {
    sweep_summary sum =
        sweep_measures(2, {rational(-1, 2), rational(0), rational(1, 2)});
    CHECK(sum.candidates == 12);
    CHECK(sum.invalid == 0);
    CHECK(sum.measures == 12);
    CHECK(sum.ok);
    REQUIRE(sum.lines.size() == 44);
    std::vector<std::string> want = expected_catalog_ids();
    for (std::size_t i = 0; i < sum.lines.size(); ++i) {
        const sweep_line& line = sum.lines[i];
        CHECK(line.id == want[i]);
        CHECK(line.fail == 0);
        CHECK_FALSE(line.first_failure.has_value());
        if (line.id == "Theorem 3.1" || line.id == "Theorem 3.3") {
            CHECK(line.pass == 1);
        } else if (line.id == "Lemma 2.11" || line.id == "Proposition 2.7" ||
                   line.id == "Corollary 2.13") {
            CHECK(line.flagged == 12);
            CHECK(line.pass == 0);
        } else {
            CHECK(line.pass + line.not_applicable == 12);
        }
    }
}

TEST_CASE("the quarters sweep on three atoms is fully valid") {
    sweep_summary sum =
        sweep_measures(3, {rational(-1, 4), rational(0), rational(1, 4)});
    CHECK(sum.candidates == 39);
    CHECK(sum.invalid == 0);
    CHECK(sum.measures == 39);
    CHECK(sum.ok);
}

TEST_CASE("the sweep validates grid and size") {
    CHECK_THROWS_AS(sweep_measures(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(sweep_measures(2, {rational(1, 2)}), std::invalid_argument);
    try {
        sweep_measures(2, {rational(0), rational(1, 2)});
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& ex) {
        CHECK(std::string(ex.what()).find("1/2 lacks its negation") !=
              std::string::npos);
    }
    CHECK_THROWS_AS(
        sweep_measures(0, {rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(
        sweep_measures(7, {rational(0)}), std::invalid_argument);
}

TEST_CASE("repeated sweeps agree line by line") {
    std::vector<rational> grid = {rational(-1, 2), rational(0), rational(1, 2)};
    sweep_summary a = sweep_measures(2, grid);
    sweep_summary b = sweep_measures(2, grid);
    CHECK(a.candidates == b.candidates);
    CHECK(a.invalid == b.invalid);
    CHECK(a.measures == b.measures);
    REQUIRE(a.lines.size() == b.lines.size());
    for (std::size_t i = 0; i < a.lines.size(); ++i) {
        CHECK(a.lines[i].id == b.lines[i].id);
        CHECK(a.lines[i].pass == b.lines[i].pass);
        CHECK(a.lines[i].fail == b.lines[i].fail);
        CHECK(a.lines[i].flagged == b.lines[i].flagged);
        CHECK(a.lines[i].not_applicable == b.lines[i].not_applicable);
    }
}
