#include "amr/ctl.hpp"

#include <cctype>
#include <sstream>

namespace amr {

struct CtlFactory {
    static CtlPtr make(CtlKind k) { return CtlPtr(new CtlFormula(k)); }
};

CtlPtr CtlFormula::make_true() { return CtlFactory::make(CtlKind::True); }
CtlPtr CtlFormula::make_false() { return CtlFactory::make(CtlKind::False); }

CtlPtr CtlFormula::make_lit(Literal l) {
    auto f = CtlFactory::make(CtlKind::Lit);
    const_cast<CtlFormula*>(f.get())->lit = std::move(l);
    return f;
}

CtlPtr CtlFormula::make_unary(CtlKind k, CtlPtr sub) {
    auto f = CtlFactory::make(k);
    const_cast<CtlFormula*>(f.get())->left = std::move(sub);
    return f;
}

CtlPtr CtlFormula::make_binary(CtlKind k, CtlPtr a, CtlPtr b) {
    auto f = CtlFactory::make(k);
    const_cast<CtlFormula*>(f.get())->left = std::move(a);
    const_cast<CtlFormula*>(f.get())->right = std::move(b);
    return f;
}

int CtlFormula::size() const {
    int n = 1;
    if (left) n += left->size();
    if (right) n += right->size();
    return n;
}

bool equal(const CtlFormula& a, const CtlFormula& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == CtlKind::Lit) return a.lit == b.lit;
    if ((a.left == nullptr) != (b.left == nullptr)) return false;
    if ((a.right == nullptr) != (b.right == nullptr)) return false;
    if (a.left && !equal(*a.left, *b.left)) return false;
    if (a.right && !equal(*a.right, *b.right)) return false;
    return true;
}

bool equal(const CtlPtr& a, const CtlPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return equal(*a, *b);
}

namespace {

// Precedence used by the printer; higher binds tighter.
int precedence(CtlKind k) {
    switch (k) {
    case CtlKind::Or: return 1;
    case CtlKind::And: return 2;
    case CtlKind::Not:
    case CtlKind::AX:
    case CtlKind::EX:
    case CtlKind::AF:
    case CtlKind::EF:
    case CtlKind::AG:
    case CtlKind::EG: return 3;
    default: return 4;
    }
}

const char* unary_name(CtlKind k) {
    switch (k) {
    case CtlKind::AX: return "AX";
    case CtlKind::EX: return "EX";
    case CtlKind::AF: return "AF";
    case CtlKind::EF: return "EF";
    case CtlKind::AG: return "AG";
    case CtlKind::EG: return "EG";
    default: return "";
    }
}

void print_rec(const CtlFormula& f, std::ostream& os, int parent_prec) {
    int prec = precedence(f.kind);
    bool parens = prec < parent_prec;
    if (parens) os << "(";
    switch (f.kind) {
    case CtlKind::True: os << "true"; break;
    case CtlKind::False: os << "false"; break;
    case CtlKind::Lit: os << to_string(f.lit); break;
    case CtlKind::Not:
        os << "!";
        print_rec(*f.left, os, prec + 1);
        break;
    case CtlKind::And:
        print_rec(*f.left, os, prec);
        os << " & ";
        print_rec(*f.right, os, prec + 1);
        break;
    case CtlKind::Or:
        print_rec(*f.left, os, prec);
        os << " | ";
        print_rec(*f.right, os, prec + 1);
        break;
    case CtlKind::AU:
    case CtlKind::EU:
        os << (f.kind == CtlKind::AU ? "A[" : "E[");
        print_rec(*f.left, os, 0);
        os << " U ";
        print_rec(*f.right, os, 0);
        os << "]";
        break;
    default:
        os << unary_name(f.kind) << " ";
        print_rec(*f.left, os, prec);
        break;
    }
    if (parens) os << ")";
}

} // namespace

std::string print_ctl(const CtlFormula& f) {
    std::ostringstream os;
    print_rec(f, os, 0);
    return os.str();
}

std::string print_ctl(const CtlPtr& f) { return print_ctl(*f); }

CtlParseError::CtlParseError(std::string msg, int line_, int column_, std::vector<std::string> expected_)
    : std::runtime_error(std::move(msg)), line(line_), column(column_), expected(std::move(expected_)) {}

namespace {

struct Token {
    enum Kind { Ident, True, False, Bang, Amp, Pipe, Arrow, LParen, RParen,
                UnaryOp, ABracket, EBracket, Until, RBracket, End } kind;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) step();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::End;
            tok_.text = "<end>";
            return;
        }
        char c = text_[pos_];
        switch (c) {
        case '!': step(); set(Token::Bang, "!"); return;
        case '&': step(); set(Token::Amp, "&"); return;
        case '|': step(); set(Token::Pipe, "|"); return;
        case '(': step(); set(Token::LParen, "("); return;
        case ')': step(); set(Token::RParen, ")"); return;
        case ']': step(); set(Token::RBracket, "]"); return;
        case '-':
            step();
            if (pos_ < text_.size() && text_[pos_] == '>') {
                step();
                set(Token::Arrow, "->");
                return;
            }
            fail("'>'");
        default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                    text_[pos_] == '.')) {
                word.push_back(text_[pos_]);
                step();
            }
            if (word == "true") return set(Token::True, word);
            if (word == "false") return set(Token::False, word);
            if (word == "U") return set(Token::Until, word);
            if (word == "AX" || word == "EX" || word == "AF" || word == "EF" || word == "AG" ||
                word == "EG")
                return set(Token::UnaryOp, word);
            if ((word == "A" || word == "E") && pos_ < text_.size() && text_[pos_] == '[') {
                step();
                return set(word == "A" ? Token::ABracket : Token::EBracket, word + "[");
            }
            if (word == "A" || word == "E") fail("'['");
            return set(Token::Ident, word);
        }
        fail("a formula token");
    }

    void set(Token::Kind k, std::string text) {
        tok_.kind = k;
        tok_.text = std::move(text);
    }

    [[noreturn]] void fail(const std::string& expected) {
        std::ostringstream msg;
        msg << "syntax error at " << line_ << ":" << col_ << ": unexpected character, expected "
            << expected;
        throw CtlParseError(msg.str(), line_, col_, {expected});
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    CtlPtr parse() {
        CtlPtr f = parse_impl();
        expect(Token::End, "end of input");
        return f;
    }

private:
    // impl -> or ("->" impl)?       (right-associative, lowest precedence)
    CtlPtr parse_impl() {
        CtlPtr a = parse_or();
        if (lex_.peek().kind == Token::Arrow) {
            lex_.take();
            CtlPtr b = parse_impl();
            return CtlFormula::make_binary(CtlKind::Or, CtlFormula::make_unary(CtlKind::Not, a), b);
        }
        return a;
    }

    CtlPtr parse_or() {
        CtlPtr a = parse_and();
        while (lex_.peek().kind == Token::Pipe) {
            lex_.take();
            a = CtlFormula::make_binary(CtlKind::Or, a, parse_and());
        }
        return a;
    }

    CtlPtr parse_and() {
        CtlPtr a = parse_unary();
        while (lex_.peek().kind == Token::Amp) {
            lex_.take();
            a = CtlFormula::make_binary(CtlKind::And, a, parse_unary());
        }
        return a;
    }

    CtlPtr parse_unary() {
        const Token& t = lex_.peek();
        switch (t.kind) {
        case Token::Bang:
            lex_.take();
            return CtlFormula::make_unary(CtlKind::Not, parse_unary());
        case Token::UnaryOp: {
            Token op = lex_.take();
            CtlKind k = op.text == "AX"   ? CtlKind::AX
                        : op.text == "EX" ? CtlKind::EX
                        : op.text == "AF" ? CtlKind::AF
                        : op.text == "EF" ? CtlKind::EF
                        : op.text == "AG" ? CtlKind::AG
                                          : CtlKind::EG;
            return CtlFormula::make_unary(k, parse_unary());
        }
        default: return parse_atom();
        }
    }

    CtlPtr parse_atom() {
        Token t = lex_.take();
        switch (t.kind) {
        case Token::True: return CtlFormula::make_true();
        case Token::False: return CtlFormula::make_false();
        case Token::Ident:
            if (!is_valid_identifier(t.text)) err(t, "a proposition name");
            return CtlFormula::make_lit(Literal(t.text));
        case Token::LParen: {
            CtlPtr f = parse_impl();
            expect(Token::RParen, "')'");
            return f;
        }
        case Token::ABracket:
        case Token::EBracket: {
            CtlPtr a = parse_impl();
            expect(Token::Until, "'U'");
            CtlPtr b = parse_impl();
            expect(Token::RBracket, "']'");
            return CtlFormula::make_binary(t.kind == Token::ABracket ? CtlKind::AU : CtlKind::EU,
                                           a, b);
        }
        default:
            err(t, "'true', 'false', a proposition, '!', '(', 'A[', 'E[' or a temporal operator");
        }
    }

    void expect(Token::Kind k, const std::string& what) {
        Token t = lex_.take();
        if (t.kind != k) err(t, what);
    }

    [[noreturn]] void err(const Token& t, const std::string& expected) {
        std::ostringstream msg;
        msg << "syntax error at " << t.line << ":" << t.col << ": unexpected '" << t.text
            << "', expected " << expected;
        throw CtlParseError(msg.str(), t.line, t.col, {expected});
    }

    Lexer lex_;
};

CtlPtr pnf(const CtlPtr& f, bool negate) {
    using K = CtlKind;
    switch (f->kind) {
    case K::True: return negate ? CtlFormula::make_false() : f;
    case K::False: return negate ? CtlFormula::make_true() : f;
    case K::Lit: return negate ? CtlFormula::make_lit(f->lit.complement()) : f;
    case K::Not: return pnf(f->left, !negate);
    case K::And:
        return CtlFormula::make_binary(negate ? K::Or : K::And, pnf(f->left, negate),
                                       pnf(f->right, negate));
    case K::Or:
        return CtlFormula::make_binary(negate ? K::And : K::Or, pnf(f->left, negate),
                                       pnf(f->right, negate));
    case K::AX: return CtlFormula::make_unary(negate ? K::EX : K::AX, pnf(f->left, negate));
    case K::EX: return CtlFormula::make_unary(negate ? K::AX : K::EX, pnf(f->left, negate));
    case K::AG: return CtlFormula::make_unary(negate ? K::EF : K::AG, pnf(f->left, negate));
    case K::EG: return CtlFormula::make_unary(negate ? K::AF : K::EG, pnf(f->left, negate));
    case K::AF: return CtlFormula::make_unary(negate ? K::EG : K::AF, pnf(f->left, negate));
    case K::EF: return CtlFormula::make_unary(negate ? K::AG : K::EF, pnf(f->left, negate));
    case K::AU:
    case K::EU: {
        if (!negate)
            return CtlFormula::make_binary(f->kind, pnf(f->left, false), pnf(f->right, false));
        // !A[f U g] = E[!g U (!f & !g)] | EG !g, and dually for E.
        CtlPtr nf = pnf(f->left, true);
        CtlPtr ng = pnf(f->right, true);
        K until = f->kind == K::AU ? K::EU : K::AU;
        K glob = f->kind == K::AU ? K::EG : K::AG;
        CtlPtr u = CtlFormula::make_binary(until, ng, CtlFormula::make_binary(K::And, nf, ng));
        return CtlFormula::make_binary(K::Or, u, CtlFormula::make_unary(glob, ng));
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace

CtlPtr parse_ctl(const std::string& text) { return Parser(text).parse(); }

CtlPtr to_pnf(const CtlPtr& f) { return pnf(f, false); }

bool is_pnf(const CtlPtr& f) {
    if (!f) return true;
    if (f->kind == CtlKind::Not) return f->left->kind == CtlKind::Lit;
    return is_pnf(f->left) && is_pnf(f->right);
}

namespace {

bool is_bare_prop(const CtlPtr& f) { return f->kind == CtlKind::Lit && !f->lit.negated; }

} // namespace

bool is_mr_ctl(const CtlPtr& f) {
    using K = CtlKind;
    switch (f->kind) {
    case K::True:
    case K::False:
    case K::Lit: return true;
    case K::Not: return is_mr_ctl(f->left);
    case K::Or: return is_mr_ctl(f->left) && is_mr_ctl(f->right);
    case K::And: return false;
    case K::AX:
    case K::EX:
    case K::AF:
    case K::EF:
    case K::AG:
    case K::EG: return is_bare_prop(f->left);
    case K::AU:
    case K::EU: return is_bare_prop(f->left) && is_bare_prop(f->right);
    }
    return false;
}

} // namespace amr
