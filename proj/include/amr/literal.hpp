#pragma once

#include <compare>
#include <string>

namespace amr {

/// A literal over an atomic proposition: either `p` or `!p`.
struct Literal {
    std::string prop;
    bool negated = false;

    Literal() = default;
    Literal(std::string p, bool neg = false) : prop(std::move(p)), negated(neg) {}

    Literal complement() const { return Literal(prop, !negated); }

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Identifiers for propositions, states and blocks: [A-Za-z_][A-Za-z0-9_.]*
bool is_valid_identifier(const std::string& s);

/// Ids starting with "_n" are reserved for states created during repair.
bool is_reserved_identifier(const std::string& s);

std::string to_string(const Literal& lit);

} // namespace amr
