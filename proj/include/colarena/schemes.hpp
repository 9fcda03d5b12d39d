#pragma once

// The production-principle scheme instances the lab plays, in the normal
// forms the strategies and counterstrategies expect. Occurrence tags name
// the components (and, for the enumeration instance, the eight letter
// occurrences) so analyses can address subgames stably.

#include "nnf.hpp"
#include "parser.hpp"

namespace colarena {

enum class Scheme { ShortProd, LongProd, S4Instance, S6Instance };

inline const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::ShortProd: return "shortprod";
        case Scheme::LongProd: return "longprod";
        case Scheme::S4Instance: return "s4";
        case Scheme::S6Instance: return "s6";
    }
    return "?";
}

inline const char* bang_name(BangKind b) {
    switch (b) {
        case BangKind::PRec: return "pst";
        case BangKind::BRecAleph0: return "aleph0";
        case BangKind::BRecUncountable: return "uncountable";
    }
    return "?";
}

// Component tag strings used across strategies, analyses and reports.
namespace comp {
inline constexpr const char* rec_free = "recurrence-free";
inline constexpr const char* quest = "?-component";
inline constexpr const char* left_quest = "left ?-component";
inline constexpr const char* right_quest = "right ?-component";
inline constexpr const char* bang = "!-component";
}  // namespace comp

// Short production in the general two-letter form, with ! as the parallel
// recurrence, played as the disjunction
//   ~P | ?p(P & (~P | ~Q)) | !p Q
// Letters may coincide (the production principle proper has Q = P).
inline Formula make_short_production(const Letter& P, const Letter& Q) {
    if (P.arity != 0 || Q.arity != 0)
        throw std::invalid_argument("short production letters must have arity 0");
    Formula p = Formula::atom(P), q = Formula::atom(Q);
    return Formula::disj({
        Formula::neg(p).with_tag(comp::rec_free),
        Formula::pcorec(Formula::conj(
                            {p.with_tag("P"), Formula::disj({Formula::neg(p).with_tag("Pbar"),
                                                             Formula::neg(q).with_tag("Qbar")})}))
            .with_tag(comp::quest),
        Formula::prec(q.with_tag("Q")).with_tag(comp::bang),
    });
}

// Long production in the general three-letter form,
//   ~P | ?(P & (~P | ~Q)) | ?((R | Q) & ~R) | !R
// with ! the parallel recurrence or the countable branching recurrence.
inline Formula make_long_production(BangKind bang, const Letter& P, const Letter& Q,
                                    const Letter& R) {
    if (P.arity != 0 || Q.arity != 0 || R.arity != 0)
        throw std::invalid_argument("long production letters must have arity 0");
    if (bang == BangKind::BRecUncountable)
        throw std::invalid_argument(
            "long production under the uncountable branching recurrence is played through the "
            "enumeration instance");
    Formula p = Formula::atom(P), q = Formula::atom(Q), r = Formula::atom(R);
    Formula left = Formula::conj(
        {p.with_tag("P"),
         Formula::disj({Formula::neg(p).with_tag("Pbar"), Formula::neg(q).with_tag("Qbar")})});
    Formula right = Formula::conj(
        {Formula::disj({r.with_tag("R"), q.with_tag("Q")}), Formula::neg(r).with_tag("Rbar")});
    bool parallel = bang == BangKind::PRec;
    return Formula::disj({
        Formula::neg(p).with_tag(comp::rec_free),
        (parallel ? Formula::pcorec(left) : Formula::bcorec(Cardinality::Aleph0, left))
            .with_tag(comp::left_quest),
        (parallel ? Formula::pcorec(right) : Formula::bcorec(Cardinality::Aleph0, right))
            .with_tag(comp::right_quest),
        (parallel ? Formula::prec(r.with_tag("Rbang"))
                  : Formula::brec(Cardinality::Aleph0, r.with_tag("Rbang")))
            .with_tag(comp::bang),
    });
}

// The quantified short-production instance over a binary elementary letter,
//   A x . E y . ~p(x,y) | ?(E x . A y . p(x,y) & (A x . E y . ~p(x,y) | A x . E y . ~p(x,y)))
//                       | ! E x . A y . p(x,y)
// with ! either branching recurrence.
inline Formula make_s4_instance(Cardinality card, const Letter& p) {
    if (p.kind != LetterKind::Elementary || p.arity != 2)
        throw std::invalid_argument("the quantified instance needs a binary elementary letter");
    auto xy = [&] { return std::vector<Term>{Term::variable("x"), Term::variable("y")}; };
    auto pos = [&] {  // E x . A y . p(x,y)
        return Formula::choice_exists(
            "x", Formula::choice_all("y", Formula::atom(p, xy())));
    };
    auto neg = [&] {  // A x . E y . ~p(x,y)
        return Formula::choice_all(
            "x", Formula::choice_exists("y", Formula::neg(Formula::atom(p, xy()))));
    };
    return Formula::disj({
        neg().with_tag(comp::rec_free),
        Formula::bcorec(card, Formula::conj({pos().with_tag("conj"),
                                             Formula::disj({neg().with_tag("disj1"),
                                                            neg().with_tag("disj2")})}))
            .with_tag(comp::quest),
        Formula::brec(card, pos().with_tag("bang-base")).with_tag(comp::bang),
    });
}

// The enumeration-game instance of long production under the uncountable
// branching recurrence, with its eight tagged occurrences:
//   ~P1 | ?(P2 & (~P3 | ~P4)) | ?((P5 | P6) & ~P7) | !P8
inline Formula make_s6_instance(const Letter& P) {
    if (P.kind != LetterKind::Enumeration)
        throw std::invalid_argument("the enumeration instance needs an enumeration letter");
    auto at = [&](const char* tag) { return Formula::atom(P).with_tag(tag); };
    return Formula::disj({
        Formula::neg(at("P1")).with_tag(comp::rec_free),
        Formula::bcorec(Cardinality::Uncountable,
                        Formula::conj({at("P2"), Formula::disj({Formula::neg(at("P3")),
                                                                Formula::neg(at("P4"))})}))
            .with_tag(comp::left_quest),
        Formula::bcorec(Cardinality::Uncountable,
                        Formula::conj({Formula::disj({at("P5"), at("P6")}),
                                       Formula::neg(at("P7"))}))
            .with_tag(comp::right_quest),
        Formula::brec(Cardinality::Uncountable, at("P8")).with_tag(comp::bang),
    });
}

// Letter bindings for a scheme instantiation. Unused slots are ignored.
struct SchemeLetters {
    Letter P{"P", LetterKind::Enumeration, 0};
    Letter Q{"Q", LetterKind::Enumeration, 0};
    Letter R{"R", LetterKind::Enumeration, 0};
    Letter p{"p", LetterKind::Elementary, 2};
};

inline Formula instantiate_scheme(Scheme s, BangKind bang, const SchemeLetters& L = {}) {
    switch (s) {
        case Scheme::ShortProd:
            if (bang != BangKind::PRec)
                throw std::invalid_argument(
                    "short production over a branching recurrence is played through the "
                    "quantified instance");
            return make_short_production(L.P, L.Q);
        case Scheme::LongProd: return make_long_production(bang, L.P, L.Q, L.R);
        case Scheme::S4Instance:
            if (bang == BangKind::PRec)
                throw std::invalid_argument("the quantified instance uses a branching recurrence");
            return make_s4_instance(bang == BangKind::BRecAleph0 ? Cardinality::Aleph0
                                                                 : Cardinality::Uncountable,
                                    L.p);
        case Scheme::S6Instance:
            if (bang != BangKind::BRecUncountable)
                throw std::invalid_argument(
                    "the enumeration instance is the uncountable-recurrence witness");
            return make_s6_instance(L.P);
    }
    throw std::logic_error("unreachable");
}

}  // namespace colarena
