#pragma once

// Concrete syntax:
//
//   atom        IDENT | IDENT(arg, ...)        args: variables or constants
//   ~F          negation
//   F & G & ... parallel conjunction
//   F | G | ... parallel disjunction
//   F -> G      implication (right associative; eliminated by to_nnf)
//   A x . F     environment's choice quantifier
//   E x . F     machine's choice quantifier
//   !p F  ?p F  parallel recurrence / corecurrence
//   !u F  ?u F  uncountable branching recurrence / corecurrence
//   !c F  ?c F  countable branching recurrence / corecurrence
//   ! F   ? F   recurrence with the kind taken from ParseOptions::bang
//
// Precedence: ~ (and all prefix operators) > & > | > ->.

#include <cctype>
#include <set>
#include <string>

#include "formula.hpp"

namespace colarena {

// Which recurrence a bare `!`/`?` stands for.
enum class BangKind { PRec, BRecAleph0, BRecUncountable };

struct ParseOptions {
    std::optional<BangKind> bang;        // binding for bare ! and ?
    std::set<std::string> enumeration;   // letter names to mark as enumeration games
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

class Parser {
public:
    Parser(std::string_view text, ParseOptions opts) : s(text), o(std::move(opts)) {}

    Formula parse() {
        Formula f = implication();
        skip_ws();
        if (i < s.size()) fail("unexpected trailing input");
        if (auto e = well_formed_error(f)) fail(*e);
        return f;
    }

private:
    std::string_view s;
    ParseOptions o;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i); }

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat(std::string_view tok) {
        skip_ws();
        if (s.substr(i, tok.size()) == tok) {
            i += tok.size();
            return true;
        }
        return false;
    }
    static bool ident_char(char c) { return std::isalnum((unsigned char)c) || c == '_'; }

    Formula implication() {
        Formula lhs = disjunction();
        skip_ws();
        if (eat("->")) return Formula::implies(std::move(lhs), implication());
        return lhs;
    }

    Formula disjunction() {
        std::vector<Formula> kids{conjunction()};
        while (true) {
            skip_ws();
            // `|` but not `|...` of some longer operator (there is none; still
            // guard against `||` typos reading as two disjunctions)
            if (i < s.size() && s[i] == '|') {
                ++i;
                kids.push_back(conjunction());
            } else
                break;
        }
        return kids.size() == 1 ? std::move(kids[0]) : Formula::disj(std::move(kids));
    }

    Formula conjunction() {
        std::vector<Formula> kids{prefix()};
        while (eat('&')) kids.push_back(prefix());
        return kids.size() == 1 ? std::move(kids[0]) : Formula::conj(std::move(kids));
    }

    Formula prefix() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (c == '~') {
            ++i;
            return Formula::neg(prefix());
        }
        if (c == '!' || c == '?') {
            bool bang = c == '!';
            // `!p` / `!u` / `!c` only when the marker letter is not the start
            // of an identifier (so `!p(x,y)` with a letter named p still means
            // a bare `!` applied to the atom p(x,y)).
            if (i + 1 < s.size() && (s[i + 1] == 'p' || s[i + 1] == 'u' || s[i + 1] == 'c') &&
                !(i + 2 < s.size() && (ident_char(s[i + 2]) || s[i + 2] == '('))) {
                char m = s[i + 1];
                i += 2;
                Formula body = prefix();
                if (m == 'p') return bang ? Formula::prec(body) : Formula::pcorec(body);
                Cardinality card = m == 'u' ? Cardinality::Uncountable : Cardinality::Aleph0;
                return bang ? Formula::brec(card, body) : Formula::bcorec(card, body);
            }
            if (!o.bang) fail("bare ! / ? used without a recurrence binding");
            ++i;
            Formula body = prefix();
            switch (*o.bang) {
                case BangKind::PRec: return bang ? Formula::prec(body) : Formula::pcorec(body);
                case BangKind::BRecAleph0:
                    return bang ? Formula::brec(Cardinality::Aleph0, body)
                                : Formula::bcorec(Cardinality::Aleph0, body);
                case BangKind::BRecUncountable:
                    return bang ? Formula::brec(Cardinality::Uncountable, body)
                                : Formula::bcorec(Cardinality::Uncountable, body);
            }
        }
        if ((c == 'A' || c == 'E') && quantifier_ahead()) {
            ++i;
            std::string v = ident();
            if (!eat('.')) fail("expected '.' after quantified variable");
            Formula body = prefix();
            return c == 'A' ? Formula::choice_all(std::move(v), std::move(body))
                            : Formula::choice_exists(std::move(v), std::move(body));
        }
        if (c == '(') {
            ++i;
            Formula f = implication();
            if (!eat(')')) fail("expected ')'");
            return f;
        }
        if (std::isalpha((unsigned char)c) || c == '_') return atom();
        fail(std::string("unexpected character '") + c + "'");
    }

    // `A`/`E` start a quantifier only when followed by whitespace and an
    // identifier (otherwise they are atom names).
    bool quantifier_ahead() const {
        std::size_t j = i + 1;
        if (j >= s.size() || !std::isspace((unsigned char)s[j])) return false;
        while (j < s.size() && std::isspace((unsigned char)s[j])) ++j;
        if (j >= s.size() || !(std::isalpha((unsigned char)s[j]) || s[j] == '_')) return false;
        while (j < s.size() && ident_char(s[j])) ++j;
        while (j < s.size() && std::isspace((unsigned char)s[j])) ++j;
        return j < s.size() && s[j] == '.';
    }

    std::string ident() {
        skip_ws();
        std::size_t start = i;
        if (i >= s.size() || !(std::isalpha((unsigned char)s[i]) || s[i] == '_'))
            fail("expected identifier");
        while (i < s.size() && ident_char(s[i])) ++i;
        return std::string(s.substr(start, i - start));
    }

    Formula atom() {
        std::string name = ident();
        std::vector<Term> args;
        skip_ws();
        if (i < s.size() && s[i] == '(') {
            ++i;
            while (true) {
                skip_ws();
                if (i < s.size() && std::isdigit((unsigned char)s[i])) {
                    std::size_t start = i;
                    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
                    std::string num(s.substr(start, i - start));
                    if (num.size() > 1 && num[0] == '0') fail("constants have no leading zeros");
                    Constant c = std::stoull(num);
                    if (c < 1) fail("constants start at 1");
                    args.push_back(Term::constant(c));
                } else {
                    args.push_back(Term::variable(ident()));
                }
                if (eat(',')) continue;
                if (eat(')')) break;
                fail("expected ',' or ')' in argument list");
            }
        }
        LetterKind kind =
            o.enumeration.count(name) ? LetterKind::Enumeration : LetterKind::Elementary;
        if (kind == LetterKind::Enumeration && !args.empty())
            fail("enumeration letter " + name + " takes no arguments");
        int arity = (int)args.size();
        return Formula::atom(Letter{name, kind, arity}, std::move(args));
    }
};

}  // namespace detail

inline Formula parse_formula(std::string_view text, ParseOptions opts = {}) {
    return detail::Parser(text, std::move(opts)).parse();
}

}  // namespace colarena
