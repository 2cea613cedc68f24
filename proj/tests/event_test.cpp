#include <doctest.h>

#include <stdexcept>
#include <string>

#include "combprob/event.hpp"

using namespace combprob;

TEST_CASE("space validates its atom labels") {
    CHECK(space({"w"}).n() == 1);
    CHECK(space({"w", "v"}).universe_size() == 4);
    CHECK_THROWS_AS(space({}), std::invalid_argument);
    CHECK_THROWS_AS(space({"w", "w"}), std::invalid_argument);
    CHECK_THROWS_AS(space({"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9",
                           "a10", "a11", "a12", "a13"}),
                    std::invalid_argument);
    space s({"w", "v"});
    CHECK(s.atom_index("v") == 1);
    CHECK_FALSE(s.atom_index("z").has_value());
}

TEST_CASE("event masks are confined to the universe") {
    CHECK_THROWS_AS(event(1u << 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(event(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(event(0, 13), std::invalid_argument);
    space s({"w", "v"});
    CHECK(event::empty(s).is_empty());
    CHECK(event::universe(s).bits() == 0xfu);
    CHECK(event(5, 2).size() == 2);
    CHECK(event(5, 2).contains(0));
    CHECK(event(5, 2).contains(2));
    CHECK_FALSE(event(5, 2).contains(1));
}

TEST_CASE("negation swaps the halves and is an involution") {
    space s({"w", "v", "u"});
    for (const event& e : all_events(s)) {
        CHECK(negate(negate(e)) == e);
        CHECK(negate(e).size() == e.size());
    }
    // -{w, -v} = {-w, v}
    CHECK(negate(event(1u | (1u << 4), 3)) == event((1u << 3) | 2u, 3));
}

TEST_CASE("reduction removes exactly the annihilating pairs") {
    space s({"w", "u"});
    // {u, w, -w} reduces to {u}.
    event e(0b0111, 2);
    CHECK(reduce(e) == event(0b0010, 2));
    CHECK(reducible_part(e) == event(0b0101, 2));
    CHECK_FALSE(is_reduced(e));
    CHECK(is_reduced(reduce(e)));

    space s3({"w", "v", "u"});
    for (const event& a : all_events(s3)) {
        event r = reduce(a);
        CHECK(is_reduced(r));
        CHECK(reduce(r) == r);                       // idempotent
        CHECK(subset(r, a));
        CHECK(equivalent(a, r));
        CHECK(unite(r, reducible_part(a)) == a);     // exact split
        CHECK(disjoint(r, reducible_part(a)));
        CHECK(reduce(negate(a)) == negate(reduce(a)));
        // Double difference removes the other event and its negation.
        for (const event& b : all_events(s3))
            if (b.bits() % 13 == 0)  // thinned inner loop, still many pairs
                CHECK(double_difference(a, b) ==
                      difference(a, unite(b, negate(b))));
    }
}

TEST_CASE("positive and negative parts split the mask") {
    space s({"w", "v"});
    for (const event& e : all_events(s)) {
        CHECK(unite(positive_part(e), negative_part(e)) == e);
        CHECK(disjoint(positive_part(e), negative_part(e)));
    }
}

TEST_CASE("reduced union commutes but does not associate in general") {
    space s({"w", "v"});
    std::vector<event> all = all_events(s);
    for (const event& a : all)
        for (const event& b : all)
            CHECK(reduced_union(a, b) == reduced_union(b, a));

    // Counterexample with overlap: A={w}, B={-w}, C={-w}.
    event a(0b0001, 2), b(0b0100, 2), c(0b0100, 2);
    CHECK(reduced_union(reduced_union(a, b), c) == event(0b0100, 2));
    CHECK(reduced_union(a, reduced_union(b, c)) == event::empty(s));

    // For pairwise disjoint arguments both groupings equal R(A u B u C).
    for (const event& x : all)
        for (const event& y : all) {
            if (!disjoint(x, y)) continue;
            for (const event& z : all) {
                if (!disjoint(x, z) || !disjoint(y, z)) continue;
                event full = reduce(unite(unite(x, y), z));
                CHECK(reduced_union(reduced_union(x, y), z) == full);
                CHECK(reduced_union(x, reduced_union(y, z)) == full);
            }
        }
}

TEST_CASE("rendering is canonical") {
    space s({"w", "v"});
    CHECK(to_string(event(0, 2), s) == "{}");
    CHECK(to_string(event(0b1001, 2), s) == "{w, -v}");
    CHECK(to_string(event(0b0101, 2), s) == "{w, -w}");
    CHECK(to_string(event::universe(s), s) == "{w, -w, v, -v}");
}

TEST_CASE("parse_event accepts signed comma-joined labels") {
    space s({"w", "v"});
    std::string err;
    CHECK(parse_event(s, "w,-v", true, &err) == event(0b1001, 2));
    CHECK(parse_event(s, "-v,w", true, &err) == event(0b1001, 2));
    CHECK(parse_event(s, "w,-w", true, &err) == event(0b0101, 2));
    CHECK(parse_event(s, "empty", true, &err) == event(0, 2));
    CHECK(parse_event(s, "", true, &err) == event(0, 2));
    CHECK(parse_event(s, "w", false, &err) == event(1, 2));

    CHECK_FALSE(parse_event(s, "-w", false, &err).has_value());
    CHECK(err == "signed label '-w' in an unsigned universe");
    CHECK_FALSE(parse_event(s, "w,,v", true, &err).has_value());
    CHECK(err == "empty atom label in event");
    CHECK_FALSE(parse_event(s, "z", true, &err).has_value());
    CHECK(err == "unknown atom 'z'");
    CHECK_FALSE(parse_event(s, "w,w", true, &err).has_value());
    CHECK(err == "duplicate atom 'w' in event");
    CHECK_FALSE(parse_event(s, "-w,-w", true, &err).has_value());
    CHECK_FALSE(parse_event(s, "w,", true, &err).has_value());
    CHECK(err == "trailing comma in event");
    CHECK_FALSE(parse_event(s, "w, v", true, &err).has_value());  // no spaces
}

TEST_CASE("all_events enumerates the full power set in mask order") {
    space s({"w", "v"});
    std::vector<event> all = all_events(s);
    REQUIRE(all.size() == 16);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].bits() == i);
}
