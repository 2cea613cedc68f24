#include "combprob/event.hpp"

namespace combprob {

std::string to_string(const event& e, const space& s) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < s.n(); ++i) {
        for (int sign = 0; sign < 2; ++sign) {
            int idx = i + sign * s.n();
            if (!e.contains(idx)) continue;
            if (!first) out += ", ";
            if (sign) out += "-";
            out += s.atom(i);
            first = false;
        }
    }
    out += "}";
    return out;
}

std::optional<event> parse_event(const space& s, std::string_view text,
                                 bool signed_labels, std::string* error) {
    auto fail = [&](const std::string& m) -> std::optional<event> {
        if (error) *error = m;
        return std::nullopt;
    };
    if (text.empty() || text == "empty") return event::empty(s);
    std::uint32_t bits = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(
            pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
        if (tok.empty()) return fail("empty atom label in event");
        bool neg = tok[0] == '-';
        if (neg) {
            if (!signed_labels)
                return fail("signed label '" + std::string(tok) +
                            "' in an unsigned universe");
            tok.remove_prefix(1);
        }
        auto idx = s.atom_index(tok);
        if (!idx) return fail("unknown atom '" + std::string(tok) + "'");
        int bit = *idx + (neg ? s.n() : 0);
        if ((bits >> bit) & 1u)
            return fail("duplicate atom '" + std::string(tok) + "' in event");
        bits |= 1u << bit;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == text.size()) return fail("trailing comma in event");
    }
    return event(bits, s.n());
}

std::vector<event> all_events(const space& s) {
    std::vector<event> out;
    std::uint32_t total = universe_mask(s.n()) + 1u;
    out.reserve(total);
    for (std::uint32_t m = 0; m < total; ++m) out.emplace_back(m, s.n());
    return out;
}

}  // namespace combprob
