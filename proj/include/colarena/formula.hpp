#pragma once

// Formula language for computability-logic games: parallel connectives,
// choice quantifiers, and the three recurrence families (parallel,
// countable branching, uncountable branching) with their duals.
//
// Formulas are immutable values with structural sharing; all mutation-style
// operations build new trees.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace colarena {

using Constant = std::uint64_t;

enum class LetterKind { Elementary, Enumeration };

// A game letter. Elementary letters denote truth predicates over constant
// tuples (arity 0 or 2 in the schemes we play); enumeration letters denote
// enumeration games and carry no arguments.
struct Letter {
    std::string name;
    LetterKind kind = LetterKind::Elementary;
    int arity = 0;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.name == b.name && a.kind == b.kind && a.arity == b.arity;
    }
};

// Atom argument: either a bound variable or a constant (decimal numeral >= 1).
struct Term {
    bool is_var = false;
    std::string var;
    Constant value = 0;

    static Term variable(std::string v) { return Term{true, std::move(v), 0}; }
    static Term constant(Constant c) { return Term{false, {}, c}; }

    friend bool operator==(const Term& a, const Term& b) {
        return a.is_var == b.is_var && a.var == b.var && a.value == b.value;
    }
};

enum class Kind {
    Atom,
    Neg,
    And,
    Or,
    ChoiceAll,     // ⊓x — resolved by the environment
    ChoiceExists,  // ⊔x — resolved by the machine
    PRec,          // parallel recurrence (infinite conjunction of copies)
    PCorec,        // parallel corecurrence (infinite disjunction of copies)
    BRec,          // branching recurrence (environment splits threads)
    BCorec,        // branching corecurrence (machine splits threads)
    Implies,       // surface only; removed by to_nnf
};

enum class Cardinality { Uncountable, Aleph0 };

class Formula {
public:
    Formula() = default;

    static Formula atom(Letter l, std::vector<Term> args = {}) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Atom;
        n->letter = std::move(l);
        n->args = std::move(args);
        return Formula(std::move(n));
    }
    static Formula neg(Formula f) { return unary(Kind::Neg, std::move(f)); }
    static Formula conj(std::vector<Formula> kids) { return nary(Kind::And, std::move(kids)); }
    static Formula disj(std::vector<Formula> kids) { return nary(Kind::Or, std::move(kids)); }
    // Structure-preserving variants: no flattening, so operand addresses in
    // the children stay exactly as given.
    static Formula conj_exact(std::vector<Formula> kids) {
        return nary_exact(Kind::And, std::move(kids));
    }
    static Formula disj_exact(std::vector<Formula> kids) {
        return nary_exact(Kind::Or, std::move(kids));
    }
    static Formula choice_all(std::string var, Formula body) {
        return quantifier(Kind::ChoiceAll, std::move(var), std::move(body));
    }
    static Formula choice_exists(std::string var, Formula body) {
        return quantifier(Kind::ChoiceExists, std::move(var), std::move(body));
    }
    static Formula prec(Formula f) { return unary(Kind::PRec, std::move(f)); }
    static Formula pcorec(Formula f) { return unary(Kind::PCorec, std::move(f)); }
    static Formula brec(Cardinality c, Formula f) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::BRec;
        n->card = c;
        n->kids = {std::move(f)};
        return Formula(std::move(n));
    }
    static Formula bcorec(Cardinality c, Formula f) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::BCorec;
        n->card = c;
        n->kids = {std::move(f)};
        return Formula(std::move(n));
    }
    static Formula implies(Formula a, Formula b) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Implies;
        n->kids = {std::move(a), std::move(b)};
        return Formula(std::move(n));
    }

    bool empty() const { return !n; }
    Kind kind() const { return node().kind; }
    const Letter& letter() const { return node().letter; }
    const std::vector<Term>& args() const { return node().args; }
    const std::string& var() const { return node().var; }
    Cardinality card() const { return node().card; }
    const std::vector<Formula>& kids() const { return node().kids; }
    const Formula& kid(std::size_t i = 0) const { return node().kids.at(i); }
    std::size_t arity() const { return node().kids.size(); }

    // Occurrence tag: a stable annotation naming this subgame (component
    // names, the superscripts of scheme instances). Not part of structural
    // equality and not rendered.
    const std::string& tag() const { return node().tag; }
    Formula with_tag(std::string t) const {
        auto m = std::make_shared<Node>(node());
        m->tag = std::move(t);
        return Formula(std::move(m));
    }

    bool is_recurrence() const {
        Kind k = kind();
        return k == Kind::PRec || k == Kind::PCorec || k == Kind::BRec || k == Kind::BCorec;
    }
    bool is_branching() const { return kind() == Kind::BRec || kind() == Kind::BCorec; }
    bool is_choice() const { return kind() == Kind::ChoiceAll || kind() == Kind::ChoiceExists; }

    // Structural equality, ignoring occurrence tags.
    friend bool operator==(const Formula& a, const Formula& b) {
        if (a.n == b.n) return true;
        if (!a.n || !b.n) return false;
        const Node& x = *a.n;
        const Node& y = *b.n;
        if (x.kind != y.kind || x.var != y.var || x.kids.size() != y.kids.size()) return false;
        if (x.kind == Kind::Atom && (!(x.letter == y.letter) || !(x.args == y.args))) return false;
        if ((x.kind == Kind::BRec || x.kind == Kind::BCorec) && x.card != y.card) return false;
        for (std::size_t i = 0; i < x.kids.size(); ++i)
            if (!(x.kids[i] == y.kids[i])) return false;
        return true;
    }
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

    std::string to_string() const;

private:
    struct Node {
        Kind kind = Kind::Atom;
        Letter letter;
        std::vector<Term> args;
        std::string var;
        Cardinality card = Cardinality::Uncountable;
        std::vector<Formula> kids;
        std::string tag;
    };

    explicit Formula(std::shared_ptr<const Node> p) : n(std::move(p)) {}
    const Node& node() const {
        if (!n) throw std::logic_error("empty formula");
        return *n;
    }

    static Formula unary(Kind k, Formula f) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->kids = {std::move(f)};
        return Formula(std::move(n));
    }
    static Formula nary(Kind k, std::vector<Formula> kids) {
        if (kids.size() == 1) return std::move(kids[0]);
        if (kids.size() < 2) throw std::invalid_argument("And/Or needs at least 2 operands");
        // Same-operator children are flattened; the connectives are associative.
        std::vector<Formula> flat;
        for (auto& c : kids) {
            if (!c.empty() && c.kind() == k && c.tag().empty())
                for (const auto& g : c.kids()) flat.push_back(g);
            else
                flat.push_back(std::move(c));
        }
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->kids = std::move(flat);
        return Formula(std::move(n));
    }
    static Formula nary_exact(Kind k, std::vector<Formula> kids) {
        if (kids.size() == 1) return std::move(kids[0]);
        if (kids.size() < 2) throw std::invalid_argument("And/Or needs at least 2 operands");
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->kids = std::move(kids);
        return Formula(std::move(n));
    }
    static Formula quantifier(Kind k, std::string var, Formula body) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->var = std::move(var);
        n->kids = {std::move(body)};
        return Formula(std::move(n));
    }

    std::shared_ptr<const Node> n;
};

// ---- well-formedness ------------------------------------------------------

// Checks variable binding (every atom variable bound by exactly one
// enclosing quantifier, no shadowing), letter consistency (a name maps to a
// single kind/arity), atom arity, and that enumeration letters take no
// arguments. Returns an error message, or nullopt if the formula is fine.
inline std::optional<std::string> well_formed_error(const Formula& f) {
    std::map<std::string, Letter> registry;
    std::vector<std::string> scope;
    std::string err;

    auto walk = [&](auto&& self, const Formula& g) -> bool {
        switch (g.kind()) {
            case Kind::Atom: {
                const Letter& l = g.letter();
                if ((int)g.args().size() != l.arity) {
                    err = "atom " + l.name + " has " + std::to_string(g.args().size()) +
                          " arguments, letter arity is " + std::to_string(l.arity);
                    return false;
                }
                if (l.kind == LetterKind::Enumeration && l.arity != 0) {
                    err = "enumeration letter " + l.name + " must have arity 0";
                    return false;
                }
                auto [it, fresh] = registry.emplace(l.name, l);
                if (!fresh && !(it->second == l)) {
                    err = "letter " + l.name + " used with conflicting kind or arity";
                    return false;
                }
                for (const Term& t : g.args()) {
                    if (t.is_var) {
                        bool bound = false;
                        for (const auto& v : scope) bound |= (v == t.var);
                        if (!bound) {
                            err = "unbound variable " + t.var;
                            return false;
                        }
                    } else if (t.value < 1) {
                        err = "constants start at 1";
                        return false;
                    }
                }
                return true;
            }
            case Kind::ChoiceAll:
            case Kind::ChoiceExists: {
                for (const auto& v : scope)
                    if (v == g.var()) {
                        err = "variable " + g.var() + " bound twice";
                        return false;
                    }
                scope.push_back(g.var());
                bool ok = self(self, g.kid());
                scope.pop_back();
                return ok;
            }
            default:
                if ((g.kind() == Kind::And || g.kind() == Kind::Or) && g.arity() < 2) {
                    err = "And/Or needs at least 2 operands";
                    return false;
                }
                for (const auto& k : g.kids())
                    if (!self(self, k)) return false;
                return true;
        }
    };
    if (!walk(walk, f)) return err;
    return std::nullopt;
}

inline bool is_well_formed(const Formula& f) { return !well_formed_error(f); }

inline void require_well_formed(const Formula& f) {
    if (auto e = well_formed_error(f)) throw std::invalid_argument("malformed formula: " + *e);
}

// Collects the letters of a formula keyed by name. Assumes well-formedness.
inline std::map<std::string, Letter> letters_of(const Formula& f) {
    std::map<std::string, Letter> out;
    auto walk = [&](auto&& self, const Formula& g) -> void {
        if (g.kind() == Kind::Atom) out.emplace(g.letter().name, g.letter());
        for (const auto& k : g.kids()) self(self, k);
    };
    walk(walk, f);
    return out;
}

// True if f is in play normal form: no Implies anywhere and Neg only on atoms.
inline bool is_nnf(const Formula& f) {
    switch (f.kind()) {
        case Kind::Implies: return false;
        case Kind::Neg: return f.kid().kind() == Kind::Atom;
        default:
            for (const auto& k : f.kids())
                if (!is_nnf(k)) return false;
            return true;
    }
}

// ---- rendering -------------------------------------------------------------

namespace detail {

// Precedence levels: -> binds loosest, then |, then &, then the prefix
// operators (~, quantifiers, recurrences).
inline int level_of(Kind k) {
    switch (k) {
        case Kind::Implies: return 0;
        case Kind::Or: return 1;
        case Kind::And: return 2;
        case Kind::Atom: return 4;
        default: return 3;
    }
}

inline void render(const Formula& f, int parent, std::ostream& os) {
    int lv = level_of(f.kind());
    bool paren = lv < parent;
    if (paren) os << '(';
    switch (f.kind()) {
        case Kind::Atom: {
            os << f.letter().name;
            if (!f.args().empty()) {
                os << '(';
                for (std::size_t i = 0; i < f.args().size(); ++i) {
                    if (i) os << ',';
                    const Term& t = f.args()[i];
                    if (t.is_var) os << t.var;
                    else os << t.value;
                }
                os << ')';
            }
            break;
        }
        case Kind::Neg:
            os << '~';
            render(f.kid(), 3, os);
            break;
        case Kind::And:
        case Kind::Or: {
            const char* op = f.kind() == Kind::And ? " & " : " | ";
            for (std::size_t i = 0; i < f.arity(); ++i) {
                if (i) os << op;
                render(f.kid(i), lv + 1, os);
            }
            break;
        }
        case Kind::ChoiceAll:
        case Kind::ChoiceExists:
            os << (f.kind() == Kind::ChoiceAll ? 'A' : 'E') << ' ' << f.var() << " . ";
            render(f.kid(), 3, os);
            break;
        case Kind::PRec:
        case Kind::PCorec:
            os << (f.kind() == Kind::PRec ? "!p " : "?p ");
            render(f.kid(), 3, os);
            break;
        case Kind::BRec:
        case Kind::BCorec: {
            bool bang = f.kind() == Kind::BRec;
            bool u = f.card() == Cardinality::Uncountable;
            os << (bang ? '!' : '?') << (u ? "u " : "c ");
            render(f.kid(), 3, os);
            break;
        }
        case Kind::Implies:
            render(f.kid(0), 1, os);  // left operand needs parens if itself an ->
            os << " -> ";
            render(f.kid(1), 0, os);
            break;
    }
    if (paren) os << ')';
}

}  // namespace detail

inline std::string Formula::to_string() const {
    std::ostringstream os;
    detail::render(*this, 0, os);
    return os.str();
}

// Deterministic pretty-printer; parse(render(f)) == f.
inline std::string render(const Formula& f) { return f.to_string(); }

}  // namespace colarena
