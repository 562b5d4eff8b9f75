#pragma once

#include "amr/literal.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace amr {

enum class CtlKind { True, False, Lit, Not, And, Or, AX, EX, AF, EF, AG, EG, AU, EU };

/// Immutable CTL syntax tree; subtrees are shared.
class CtlFormula;
using CtlPtr = std::shared_ptr<const CtlFormula>;

class CtlFormula {
public:
    CtlKind kind;
    Literal lit;       // Lit only
    CtlPtr left;       // unary operand / left operand
    CtlPtr right;      // And/Or/AU/EU only

    static CtlPtr make_true();
    static CtlPtr make_false();
    static CtlPtr make_lit(Literal l);
    static CtlPtr make_unary(CtlKind k, CtlPtr f);
    static CtlPtr make_binary(CtlKind k, CtlPtr a, CtlPtr b);

    int size() const; // node count
    bool is_literal() const { return kind == CtlKind::Lit; }

private:
    explicit CtlFormula(CtlKind k) : kind(k) {}
    friend struct CtlFactory;
};

bool equal(const CtlFormula& a, const CtlFormula& b);
bool equal(const CtlPtr& a, const CtlPtr& b);

/// Canonical printing: minimal parentheses, single spaces, `!p` literals,
/// `A[f U g]` for until forms.
std::string print_ctl(const CtlFormula& f);
std::string print_ctl(const CtlPtr& f);

struct CtlParseError : std::runtime_error {
    int line;
    int column;
    std::vector<std::string> expected;
    CtlParseError(std::string msg, int line, int column, std::vector<std::string> expected);
};

/// Grammar (precedence low to high: -> | & prefix):
///   phi ::= "true" | "false" | ident | "!" phi | phi "&" phi | phi "|" phi
///         | phi "->" phi | OP phi | "A[" phi "U" phi "]" | "E[" phi "U" phi "]"
///         | "(" phi ")"
///   OP  ::= AX | EX | AF | EF | AG | EG
/// `a -> b` is sugar for `!a | b`; `&` and `|` are left-associative.
CtlPtr parse_ctl(const std::string& text);

/// Positive normal form: negation occurs only inside literals. Temporal
/// negations are pushed through the usual dualities; negated until forms are
/// rewritten with the weak-until expansion, e.g.
///   !A[f U g]  =>  E[!g U (!f & !g)] | EG !g
CtlPtr to_pnf(const CtlPtr& f);

bool is_pnf(const CtlPtr& f);

/// The fragment for which repair is complete: boolean combinations without
/// conjunction, temporal operators applied to bare propositions only, no
/// nested path quantifiers.
bool is_mr_ctl(const CtlPtr& f);

} // namespace amr
