#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "combprob/bridges.hpp"
#include "test_util.hpp"

using namespace combprob;
using testutil::ev;

namespace {

// Extended measure on two atoms from a finitely additive set function on the
// carrier algebra: family = all disjoint compositions A u -B, value
// mu(A) - mu(B).  With mu({a}) < 0 every axiom holds except carrier-class
// non-negativity.
extended_measure two_atom_composition_measure(const space& s, rational mu_a,
                                              rational mu_b) {
    std::vector<rational> mu = {rational(0), mu_a, mu_b, mu_a + mu_b};
    std::vector<std::pair<std::uint32_t, rational>> entries;
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b) {
            if ((a & b) != 0) continue;
            entries.emplace_back(a | (b << 2), mu[a] - mu[b]);
        }
    std::sort(entries.begin(), entries.end());
    extended_measure m{s, {}, {}};
    for (const auto& [mask, value] : entries) {
        m.family.push_back(ev(s, mask));
        m.values.push_back(value);
    }
    return m;
}

const clause_result& clause_by_id(const std::vector<clause_result>& clauses,
                                  const std::string& id) {
    for (const auto& c : clauses)
        if (c.id == id) return c;
    REQUIRE(false);
    return clauses.front();
}

}  // namespace

TEST_CASE("the uniform three-atom extended measure satisfies all eight axioms") {
    extended_measure m = testutil::uniform_three();
    validation_report rep = check_extended_axioms(m);
    CHECK(rep.ok);
    REQUIRE(rep.clauses.size() == 8);
    for (int i = 0; i < 8; ++i) {
        CHECK(rep.clauses[(std::size_t)i].id == "EP" + std::to_string(i + 1));
        CHECK(rep.clauses[(std::size_t)i].status == clause_status::pass);
    }
}

TEST_CASE("a negative carrier atom trips exactly the non-negativity axiom") {
    space s({"a", "b"});
    extended_measure m =
        two_atom_composition_measure(s, rational(-1, 2), rational(3, 2));
    validation_report rep = check_extended_axioms(m);
    CHECK_FALSE(rep.ok);
    for (const auto& c : rep.clauses) {
        if (c.id == "EP8") {
            CHECK(c.status == clause_status::fail);
            REQUIRE(c.w.has_value());
            CHECK(c.w->bindings.at(0).second == "{a}");
            CHECK(c.w->actual == "-1/2");
        } else {
            CHECK(c.status == clause_status::pass);
        }
    }
}

TEST_CASE("an unreduced member is caught by reducedness and exactness") {
    extended_measure m = testutil::uniform_three();
    // Splice in {a, -a} (sorted position right after mask 8).
    event bad = ev(m.sp, 9);
    auto it = std::lower_bound(m.family.begin(), m.family.end(), bad);
    m.values.insert(m.values.begin() + (it - m.family.begin()), rational(0));
    m.family.insert(it, bad);
    validation_report rep = check_extended_axioms(m);
    CHECK_FALSE(rep.ok);
    const clause_result& ep6 = clause_by_id(rep.clauses, "EP6");
    CHECK(ep6.status == clause_status::fail);
    REQUIRE(ep6.w.has_value());
    CHECK(ep6.w->bindings.at(0).second == "{a, -a}");
    CHECK(clause_by_id(rep.clauses, "EP4").status == clause_status::fail);
}

TEST_CASE("removing the carrier breaks the carrier-class algebra") {
    extended_measure m = testutil::uniform_three();
    event carrier = ev(m.sp, 7);
    auto it = std::lower_bound(m.family.begin(), m.family.end(), carrier);
    REQUIRE(*it == carrier);
    m.values.erase(m.values.begin() + (it - m.family.begin()));
    m.family.erase(it);
    validation_report rep = check_extended_axioms(m);
    CHECK_FALSE(rep.ok);
    const clause_result& ep2 = clause_by_id(rep.clauses, "EP2");
    CHECK(ep2.status == clause_status::fail);
    CHECK(ep2.detail.find("do not form a set algebra") != std::string::npos);
    CHECK(clause_by_id(rep.clauses, "EP3").status == clause_status::fail);
}

TEST_CASE("a malformed family reports single-valuedness and suspends the rest") {
    extended_measure m = testutil::uniform_three();
    m.values.pop_back();
    validation_report rep = check_extended_axioms(m);
    CHECK_FALSE(rep.ok);
    CHECK(clause_by_id(rep.clauses, "EP7").status == clause_status::fail);
    CHECK(clause_by_id(rep.clauses, "EP1").status ==
          clause_status::not_applicable);
}

TEST_CASE("the fair coin is Kolmogorov-valid and renders four clauses") {
    validation_report rep = check_kolmogorov(testutil::fair_coin());
    CHECK(rep.ok);
    REQUIRE(rep.clauses.size() == 4);
    CHECK(rep.clauses[0].id == "family-structure");
    CHECK(rep.clauses[1].id == "K1");
    CHECK(rep.clauses[2].id == "K2");
    CHECK(rep.clauses[3].id == "K3");
}

TEST_CASE("each Kolmogorov clause fails on a targeted defect") {
    space s({"h", "t"});
    auto coin = [&](rational ph, rational pt, rational pu) {
        conventional_measure m{s, {}, {}};
        for (std::uint32_t mask = 0; mask < 4; ++mask) m.family.push_back(ev(s, mask));
        m.values = {rational(0), ph, pt, pu};
        return m;
    };

    // Missing universe: not an algebra any more.
    conventional_measure trunc{s,
                               {ev(s, 0), ev(s, 1), ev(s, 2)},
                               {rational(0), rational(1, 2), rational(1, 2)}};
    validation_report fs = check_kolmogorov(trunc);
    CHECK_FALSE(fs.ok);
    CHECK(fs.clauses[0].id == "family-structure");
    CHECK(fs.clauses[0].status == clause_status::fail);
    CHECK(fs.clauses[1].status == clause_status::not_applicable);
    REQUIRE(fs.clauses.size() == 4);

    // A member outside the carrier.
    conventional_measure stray{
        s,
        {ev(s, 0), ev(s, 1), ev(s, 2), ev(s, 3), ev(s, 4)},
        {rational(0), rational(1, 2), rational(1, 2), rational(1), rational(0)}};
    validation_report sv = check_kolmogorov(stray);
    CHECK_FALSE(sv.ok);
    CHECK(sv.clauses[0].status == clause_status::fail);
    CHECK(sv.clauses[0].detail == "a member leaves the universe");

    validation_report k1 =
        check_kolmogorov(coin(rational(-1, 2), rational(3, 2), rational(1)));
    CHECK_FALSE(k1.ok);
    CHECK(clause_by_id(k1.clauses, "K1").status == clause_status::fail);
    CHECK(clause_by_id(k1.clauses, "K2").status == clause_status::pass);
    CHECK(clause_by_id(k1.clauses, "K3").status == clause_status::pass);

    validation_report k2 =
        check_kolmogorov(coin(rational(1, 4), rational(1, 4), rational(1, 2)));
    CHECK_FALSE(k2.ok);
    const clause_result& c2 = clause_by_id(k2.clauses, "K2");
    CHECK(c2.status == clause_status::fail);
    CHECK(c2.detail == "the universe has measure 1/2, not 1");
    CHECK(clause_by_id(k2.clauses, "K1").status == clause_status::pass);
    // Additivity is consistent with the deflated total, so K3 still passes.
    CHECK(clause_by_id(k2.clauses, "K3").status == clause_status::pass);

    validation_report k3 =
        check_kolmogorov(coin(rational(1, 2), rational(1, 4), rational(1)));
    CHECK_FALSE(k3.ok);
    const clause_result& c3 = clause_by_id(k3.clauses, "K3");
    CHECK(c3.status == clause_status::fail);
    REQUIRE(c3.w.has_value());
    CHECK(c3.w->expected == "3/4");
    CHECK(c3.w->actual == "1");
    CHECK(clause_by_id(k3.clauses, "K1").status == clause_status::pass);
    CHECK(clause_by_id(k3.clauses, "K2").status == clause_status::pass);
}

TEST_CASE("the fair coin embeds as a digitalized combined measure") {
    conventional_measure fair = testutil::fair_coin();
    conversion<combined_measure> conv = conventional_to_combined(fair);
    REQUIRE(conv.ok);
    REQUIRE(conv.result.has_value());
    const combined_measure& m = *conv.result;
    space s = m.sp;
    CHECK(m.digitalized);
    CHECK(m.family.size() == 16);
    CHECK(eval(m, ev(s, 1)) == rational(1, 2));    // {h}
    CHECK(eval(m, ev(s, 9)) == rational(0));       // {h, -t}
    CHECK(eval(m, ev(s, 15)) == rational(0));      // full universe
    CHECK(eval(m, ev(s, 3)) == rational(1));       // {h, t}
    CHECK(eval(m, ev(s, 4)) == rational(-1, 2));   // {-h}
    CHECK(validate_axioms(m).ok);
    normalization nz = classify_normalization(m);
    REQUIRE(nz.positive_witness.has_value());
    CHECK(*nz.positive_witness == ev(s, 3));

    // An invalid conventional input is refused at the hypothesis clause.
    conventional_measure trunc{s,
                               {ev(s, 0), ev(s, 1), ev(s, 2)},
                               {rational(0), rational(1, 2), rational(1, 2)}};
    conversion<combined_measure> bad = conventional_to_combined(trunc);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.result.has_value());
    REQUIRE(bad.failure() != nullptr);
    CHECK(bad.failure()->id == "input-valid");
}

TEST_CASE("the uniform extended measure embeds and agrees on every member") {
    extended_measure em = testutil::uniform_three();
    conversion<combined_measure> conv = extended_to_combined(em);
    REQUIRE(conv.ok);
    const combined_measure& m = *conv.result;
    CHECK(m.digitalized);
    CHECK(m.family.size() == 64);
    for (std::size_t i = 0; i < em.family.size(); ++i)
        CHECK(eval(m, em.family[i]) == em.values[i]);
    CHECK(validate_axioms(m).ok);

    extended_measure bad =
        two_atom_composition_measure(space({"a", "b"}), rational(-1, 2),
                                     rational(3, 2));
    conversion<combined_measure> refused = extended_to_combined(bad);
    CHECK_FALSE(refused.ok);
    REQUIRE(refused.failure() != nullptr);
    CHECK(refused.failure()->id == "input-valid");
    CHECK(refused.failure()->detail.find("EP8") != std::string::npos);
}

TEST_CASE("extraction refuses unnormalized and sign-misaligned measures") {
    conversion<extended_measure> four = combined_to_extended(testutil::mixed_four());
    CHECK_FALSE(four.ok);
    REQUIRE(four.failure() != nullptr);
    CHECK(four.failure()->id == "normalized");
    CHECK(four.failure()->detail.rfind("not-normalized:", 0) == 0);

    combined_measure neg = make_digitalized(space({"w"}), {rational(-1)});
    conversion<extended_measure> unit = combined_to_extended(neg);
    CHECK_FALSE(unit.ok);
    REQUIRE(unit.failure() != nullptr);
    CHECK(unit.failure()->id == "sign-alignment-positive");
    CHECK(unit.failure()->detail.find("(EP8)") != std::string::npos);

    conversion<extended_measure> five = combined_to_extended(testutil::mixed_five());
    CHECK_FALSE(five.ok);
    REQUIRE(five.failure() != nullptr);
    CHECK(five.failure()->id == "sign-alignment-positive");

    conversion<extended_measure> part =
        combined_to_extended(testutil::partition_explicit());
    CHECK_FALSE(part.ok);
    REQUIRE(part.failure() != nullptr);
    CHECK(part.failure()->id == "digitalized");
    CHECK(part.failure()->detail.rfind("not-digitalized:", 0) == 0);
    CHECK(clause_by_id(part.checks, "all-reduced").status ==
          clause_status::not_applicable);
    CHECK(clause_by_id(part.checks, "normalized").status == clause_status::pass);
}

TEST_CASE("extraction succeeds on the embedded fair coin and round-trips") {
    conversion<combined_measure> embedded =
        conventional_to_combined(testutil::fair_coin());
    REQUIRE(embedded.ok);
    conversion<extended_measure> ext = combined_to_extended(*embedded.result);
    REQUIRE(ext.ok);
    const extended_measure& em = *ext.result;
    CHECK(em.family.size() == 9);  // reduced events over two atoms
    CHECK(check_extended_axioms(em).ok);
    for (std::size_t i = 0; i < em.family.size(); ++i)
        CHECK(eval(*embedded.result, em.family[i]) == em.values[i]);

    conversion<combined_measure> back = extended_to_combined(em);
    REQUIRE(back.ok);
    CHECK(back.result->family == embedded.result->family);
    CHECK(back.result->values == embedded.result->values);
}

TEST_CASE("restriction refuses the five-atom measure at the algebra clause") {
    conversion<conventional_measure> conv =
        restrict_positive(testutil::mixed_five());
    CHECK_FALSE(conv.ok);
    CHECK(clause_by_id(conv.checks, "positively-normalized").status ==
          clause_status::pass);
    REQUIRE(conv.failure() != nullptr);
    const clause_result& bad = *conv.failure();
    CHECK(bad.id == "positive-class-algebra");
    CHECK(bad.detail.rfind("family-not-algebra:", 0) == 0);
    REQUIRE(bad.w.has_value());
    REQUIRE(bad.w->bindings.size() == 4);
    CHECK(bad.w->bindings[0] ==
          std::pair<std::string, std::string>("A", "{w, v, u}"));
    CHECK(bad.w->bindings[1] ==
          std::pair<std::string, std::string>("B", "{u, a, b}"));
    CHECK(bad.w->bindings[2] ==
          std::pair<std::string, std::string>("result", "{u}"));
    CHECK(bad.w->bindings[3] ==
          std::pair<std::string, std::string>("operation", "intersection"));
    CHECK(clause_by_id(conv.checks, "restriction-kolmogorov").status ==
          clause_status::not_applicable);
}

TEST_CASE("restriction refuses an all-zero measure for want of a unit value") {
    combined_measure zero = make_digitalized(space({"w"}), {rational(0)});
    conversion<conventional_measure> conv = restrict_positive(zero);
    CHECK_FALSE(conv.ok);
    REQUIRE(conv.failure() != nullptr);
    CHECK(conv.failure()->id == "positively-normalized");
    CHECK(conv.failure()->detail.rfind("not-positively-normalized:", 0) == 0);
    const clause_result& alg = clause_by_id(conv.checks, "positive-class-algebra");
    CHECK(alg.status == clause_status::fail);
    CHECK(alg.detail.find("unit is not the carrier") != std::string::npos);
}

TEST_CASE("restriction recovers a conventional measure from the partition") {
    conversion<conventional_measure> conv =
        restrict_positive(testutil::partition_explicit());
    REQUIRE(conv.ok);
    const conventional_measure& cm = *conv.result;
    space s = cm.sp;
    REQUIRE(cm.family.size() == 4);
    CHECK(cm.family[0] == ev(s, 0));
    CHECK(cm.family[1] == ev(s, 1));
    CHECK(cm.family[2] == ev(s, 6));
    CHECK(cm.family[3] == ev(s, 7));
    CHECK(cm.values[0] == rational(0));
    CHECK(cm.values[1] == rational(1, 3));
    CHECK(cm.values[2] == rational(2, 3));
    CHECK(cm.values[3] == rational(1));
    CHECK(check_kolmogorov(cm).ok);
}

TEST_CASE("the embedded fair coin restricts back to itself exactly") {
    conventional_measure fair = testutil::fair_coin();
    conversion<combined_measure> embedded = conventional_to_combined(fair);
    REQUIRE(embedded.ok);
    conversion<conventional_measure> back = restrict_positive(*embedded.result);
    REQUIRE(back.ok);
    CHECK(back.result->family == fair.family);
    CHECK(back.result->values == fair.values);
}

TEST_CASE("a null atom makes the embedding non-invertible by restriction") {
    conventional_measure null_coin = testutil::null_coin();
    CHECK(check_kolmogorov(null_coin).ok);
    conversion<combined_measure> embedded = conventional_to_combined(null_coin);
    REQUIRE(embedded.ok);
    CHECK(validate_axioms(*embedded.result).ok);
    conversion<conventional_measure> back = restrict_positive(*embedded.result);
    CHECK_FALSE(back.ok);
    REQUIRE(back.failure() != nullptr);
    CHECK(back.failure()->id == "positive-class-algebra");
    CHECK(back.failure()->detail.find("family-not-algebra") != std::string::npos);
    REQUIRE(back.failure()->w.has_value());
    bool mentions_h = false;
    for (const auto& b : back.failure()->w->bindings)
        if (b.first == "result" && b.second == "{h}") mentions_h = true;
    CHECK(mentions_h);
}

TEST_CASE("family lookups outside the family throw for all three kinds") {
    extended_measure em = testutil::uniform_three();
    CHECK_THROWS_AS(eval(em, ev(em.sp, 9)), not_in_family_error);
    conventional_measure fair = testutil::fair_coin();
    CHECK_THROWS_AS(eval(fair, ev(fair.sp, 4)), not_in_family_error);
}
