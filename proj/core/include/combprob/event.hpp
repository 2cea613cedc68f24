#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace combprob {

// Maximum number of positive atoms per space.  The symmetric universe then
// has 2*max_atoms signed atoms and any event fits a 32-bit mask.
inline constexpr int max_atoms = 12;

/*
 * A finite symmetric universe.  The space is declared by its positive atom
 * labels a_1..a_n; the universe consists of the 2n signed atoms
 * a_1, .., a_n, -a_1, .., -a_n.  Signed atom index i in [0, 2n) denotes the
 * positive atom i for i < n and the negated atom i - n otherwise, so
 * negation of an index is i +- n.
 */
class space {
public:
    explicit space(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
        if (atoms_.empty())
            throw std::invalid_argument("space: needs at least one atom");
        if ((int)atoms_.size() > max_atoms)
            throw std::invalid_argument("space: more than " +
                                        std::to_string(max_atoms) + " atoms");
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            for (std::size_t j = i + 1; j < atoms_.size(); ++j)
                if (atoms_[i] == atoms_[j])
                    throw std::invalid_argument("space: duplicate atom '" +
                                                atoms_[i] + "'");
    }

    int n() const { return (int)atoms_.size(); }
    int universe_size() const { return 2 * n(); }
    const std::vector<std::string>& atoms() const { return atoms_; }
    const std::string& atom(int i) const { return atoms_[i]; }

    std::optional<int> atom_index(std::string_view label) const {
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            if (atoms_[i] == label) return (int)i;
        return std::nullopt;
    }

    friend bool operator==(const space& a, const space& b) {
        return a.atoms_ == b.atoms_;
    }

private:
    std::vector<std::string> atoms_;
};

/*
 * An event is a subset of the 2n signed atoms, stored as a bit mask with the
 * layout [a_1 .. a_n | -a_1 .. -a_n].  The atom count travels with the mask
 * so that negation and complement know the layout without a space argument.
 * Events over the same space order canonically by ascending mask.
 */
class event {
public:
    event() = default;
    event(std::uint32_t bits, int n_atoms) : bits_(bits), n_((std::uint8_t)n_atoms) {
        if (n_atoms < 1 || n_atoms > max_atoms)
            throw std::invalid_argument("event: bad atom count");
        if (bits >> (2 * n_atoms))
            throw std::invalid_argument("event: mask has bits outside the universe");
    }
    static event empty(const space& s) { return event(0, s.n()); }
    static event universe(const space& s) {
        return event((std::uint32_t)((1u << (2 * s.n())) - 1), s.n());
    }

    std::uint32_t bits() const { return bits_; }
    int n() const { return n_; }
    bool is_empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }
    bool contains(int signed_atom) const { return (bits_ >> signed_atom) & 1u; }

    friend bool operator==(const event& a, const event& b) {
        return a.bits_ == b.bits_ && a.n_ == b.n_;
    }
    friend bool operator!=(const event& a, const event& b) { return !(a == b); }
    friend bool operator<(const event& a, const event& b) { return a.bits_ < b.bits_; }

private:
    std::uint32_t bits_ = 0;
    std::uint8_t n_ = 1;
};

inline std::uint32_t carrier_mask(int n) { return (1u << n) - 1u; }
inline std::uint32_t universe_mask(int n) { return (1u << (2 * n)) - 1u; }

// -X = { -w : w in X }: swaps the positive and negative halves of the mask.
inline event negate(const event& e) {
    int n = e.n();
    std::uint32_t lo = e.bits() & carrier_mask(n);
    std::uint32_t hi = e.bits() >> n;
    return event((lo << n) | hi, n);
}

// X+ = X with the negative half cleared; X- keeps only the negative half.
inline event positive_part(const event& e) {
    return event(e.bits() & carrier_mask(e.n()), e.n());
}
inline event negative_part(const event& e) {
    return event(e.bits() & (carrier_mask(e.n()) << e.n()), e.n());
}

inline event intersect(const event& a, const event& b) {
    return event(a.bits() & b.bits(), a.n());
}
inline event unite(const event& a, const event& b) {
    return event(a.bits() | b.bits(), a.n());
}
inline event difference(const event& a, const event& b) {
    return event(a.bits() & ~b.bits(), a.n());
}
inline event symmetric_difference(const event& a, const event& b) {
    return event(a.bits() ^ b.bits(), a.n());
}
// Set complement within the universe (not negation).
inline event complement(const event& e) {
    return event(~e.bits() & universe_mask(e.n()), e.n());
}
inline bool subset(const event& a, const event& b) {
    return (a.bits() & ~b.bits()) == 0;
}
inline bool disjoint(const event& a, const event& b) {
    return (a.bits() & b.bits()) == 0;
}

// Mask of positive atoms i whose annihilating pair {a_i, -a_i} lies in e.
inline std::uint32_t pair_mask(const event& e) {
    return e.bits() & (e.bits() >> e.n()) & carrier_mask(e.n());
}

// An event is reduced when it contains no pair {w, -w}.
inline bool is_reduced(const event& e) { return pair_mask(e) == 0; }

// X cap -X: the reducible part, the union of all annihilating pairs in X.
inline event reducible_part(const event& e) {
    std::uint32_t p = pair_mask(e);
    return event(p | (p << e.n()), e.n());
}

// RX = X minus its reducible part; the largest reduced subset.
inline event reduce(const event& e) {
    std::uint32_t p = pair_mask(e);
    return event(e.bits() & ~(p | (p << e.n())), e.n());
}

// Reduced union: unite, then annihilate.  Commutative; associativity holds
// for pairwise disjoint arguments but fails in general (staged annihilation
// can lose elements that a later argument would have restored).
inline event reduced_union(const event& a, const event& b) {
    return reduce(unite(a, b));
}

// Double difference A || B = A minus (B union -B).
inline event double_difference(const event& a, const event& b) {
    return difference(a, unite(b, negate(b)));
}

// A ~ B iff RA = RB.
inline bool equivalent(const event& a, const event& b) {
    return reduce(a) == reduce(b);
}

// "{w, -v}" with members listed by atom order, positive sign first: the
// rendering is canonical and parses back losslessly.
std::string to_string(const event& e, const space& s);

// Accepts "w,-v", the empty-event token "empty", and "".  Unsigned labels
// only when signed_labels is false (conventional universes).  On failure
// returns nullopt and, when error is non-null, stores the reason.
std::optional<event> parse_event(const space& s, std::string_view text,
                                 bool signed_labels, std::string* error);

// All 2^(2n) events of the space in canonical (ascending mask) order.
std::vector<event> all_events(const space& s);

}  // namespace combprob
