#include "combprob/set_structures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace combprob {

event_family make_family(std::vector<event> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

bool family_contains(const event_family& fam, const event& e) {
    return std::binary_search(fam.begin(), fam.end(), e);
}

std::string to_string(set_op op) {
    switch (op) {
        case set_op::intersection: return "intersection";
        case set_op::symmetric_difference: return "symmetric-difference";
        case set_op::union_: return "union";
        case set_op::difference: return "difference";
        case set_op::complement: return "complement";
    }
    return "?";
}

namespace {

// Rank for the canonical-smallest violation: escaping result first, then
// operation, then pair.
int op_rank(set_op op) {
    switch (op) {
        case set_op::intersection: return 0;
        case set_op::symmetric_difference: return 1;
        case set_op::union_: return 2;
        case set_op::difference: return 3;
        case set_op::complement: return 4;
    }
    return 5;
}

struct violation_picker {
    std::optional<structure_violation> best;

    void offer(set_op op, const event& a, const event& b, const event& r) {
        if (!best) {
            best = structure_violation{op, a, b, r};
            return;
        }
        auto key = [](const structure_violation& v) {
            return std::tuple(v.result.bits(), op_rank(v.op), v.a.bits(), v.b.bits());
        };
        structure_violation cand{op, a, b, r};
        if (key(cand) < key(*best)) best = cand;
    }
};

}  // namespace

structure_check is_set_ring(const event_family& fam) {
    violation_picker pick;
    bool closed_char1 = true;  // intersection + symmetric difference
    bool closed_char2 = true;  // union + intersection + difference
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i; j < fam.size(); ++j) {
            const event& a = fam[i];
            const event& b = fam[j];
            event cap = intersect(a, b);
            if (!family_contains(fam, cap)) {
                closed_char1 = closed_char2 = false;
                pick.offer(set_op::intersection, a, b, cap);
            }
            event delta = symmetric_difference(a, b);
            if (!family_contains(fam, delta)) {
                closed_char1 = false;
                pick.offer(set_op::symmetric_difference, a, b, delta);
            }
            event cup = unite(a, b);
            if (!family_contains(fam, cup)) closed_char2 = false;
            if (!family_contains(fam, difference(a, b)) ||
                !family_contains(fam, difference(b, a)))
                closed_char2 = false;
        }
    }
    if (closed_char1 != closed_char2)
        throw std::logic_error(
            "is_set_ring: the two ring characterizations disagree");
    structure_check out;
    out.ok = closed_char1;
    if (!out.ok) {
        out.violation = pick.best;
        out.note = "not closed under intersection and symmetric difference";
    }
    return out;
}

namespace {

// The only possible unit is the union of all members: it must absorb every
// member under intersection, hence contain them all, and be a member itself.
std::optional<event> find_unit(const event_family& fam) {
    if (fam.empty()) return std::nullopt;
    std::uint32_t all = 0;
    for (const event& e : fam) all |= e.bits();
    event u(all, fam.front().n());
    if (family_contains(fam, u)) return u;
    return std::nullopt;
}

}  // namespace

structure_check is_set_algebra(const event_family& fam) {
    structure_check out = is_set_ring(fam);
    if (!out.ok) return out;
    out.unit = find_unit(fam);
    if (!out.unit) {
        out.ok = false;
        out.note = fam.empty() ? "empty family has no unit"
                               : "the union of all members is not a member";
    }
    return out;
}

structure_check is_set_field(const event_family& fam) {
    structure_check out = is_set_algebra(fam);
    if (!out.ok) return out;
    violation_picker pick;
    for (const event& a : fam) {
        event c = difference(*out.unit, a);
        if (!family_contains(fam, c)) {
            out.ok = false;
            pick.offer(set_op::complement, a, *out.unit, c);
        }
    }
    if (!out.ok) {
        out.violation = pick.best;
        out.note = "not closed under complement about the unit";
    }
    return out;
}

event_family generate_algebra(const event_family& seed, const event& unit) {
    for (const event& s : seed)
        if (!subset(s, unit))
            throw std::invalid_argument(
                "generate_algebra: seed event is not a subset of the unit");
    std::set<std::uint32_t> masks;
    masks.insert(unit.bits());
    for (const event& s : seed) masks.insert(s.bits());
    int n = unit.n();
    std::uint32_t cap = universe_mask(n) + 1u;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint32_t> cur(masks.begin(), masks.end());
        for (std::size_t i = 0; i < cur.size(); ++i) {
            for (std::size_t j = i; j < cur.size(); ++j) {
                for (std::uint32_t r : {cur[i] | cur[j], cur[i] & cur[j],
                                        cur[i] & ~cur[j], cur[j] & ~cur[i]}) {
                    if (masks.insert(r).second) grew = true;
                }
            }
        }
        if (masks.size() > cap)
            throw std::logic_error("generate_algebra: closure exceeded 2^|universe|");
    }
    std::vector<event> out;
    out.reserve(masks.size());
    for (std::uint32_t m : masks) out.emplace_back(m, n);
    return out;  // std::set iterates ascending: already canonical
}

}  // namespace combprob
