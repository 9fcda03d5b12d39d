#pragma once

// Negation normal form: eliminates ->, pushes ~ down to atoms by the
// De Morgan dualities (swapping choice quantifiers, recurrence/corecurrence
// pairs, and preserving branching cardinality), and cancels double negation.
//
// Operand addresses are preserved: pushing a negation through a connective
// keeps the child list as is, so any run legal for an implication-free f is
// legal (with identical addresses) for to_nnf(f), and for negate_nnf(f) with
// labels flipped. Flattening by associativity happens only when eliminating
// ->, where no addresses exist to preserve.

#include "formula.hpp"

namespace colarena {

namespace detail {

inline Formula keep_tag(Formula out, const Formula& src) {
    return src.tag().empty() ? out : out.with_tag(src.tag());
}

inline Formula nnf_pos(const Formula& f);
inline Formula nnf_neg(const Formula& f);

inline Formula nnf_pos(const Formula& f) {
    switch (f.kind()) {
        case Kind::Atom: return f;
        case Kind::Neg: return keep_tag(nnf_neg(f.kid()), f);
        case Kind::And:
        case Kind::Or: {
            std::vector<Formula> kids;
            kids.reserve(f.arity());
            for (const auto& k : f.kids()) kids.push_back(nnf_pos(k));
            return keep_tag(f.kind() == Kind::And ? Formula::conj_exact(std::move(kids))
                                                  : Formula::disj_exact(std::move(kids)),
                            f);
        }
        case Kind::ChoiceAll: return keep_tag(Formula::choice_all(f.var(), nnf_pos(f.kid())), f);
        case Kind::ChoiceExists:
            return keep_tag(Formula::choice_exists(f.var(), nnf_pos(f.kid())), f);
        case Kind::PRec: return keep_tag(Formula::prec(nnf_pos(f.kid())), f);
        case Kind::PCorec: return keep_tag(Formula::pcorec(nnf_pos(f.kid())), f);
        case Kind::BRec: return keep_tag(Formula::brec(f.card(), nnf_pos(f.kid())), f);
        case Kind::BCorec: return keep_tag(Formula::bcorec(f.card(), nnf_pos(f.kid())), f);
        case Kind::Implies:
            return keep_tag(Formula::disj({nnf_neg(f.kid(0)), nnf_pos(f.kid(1))}), f);
    }
    throw std::logic_error("unreachable");
}

inline Formula nnf_neg(const Formula& f) {
    switch (f.kind()) {
        case Kind::Atom: return Formula::neg(f);
        case Kind::Neg: return nnf_pos(f.kid());
        case Kind::And:
        case Kind::Or: {
            std::vector<Formula> kids;
            kids.reserve(f.arity());
            for (const auto& k : f.kids()) kids.push_back(nnf_neg(k));
            return f.kind() == Kind::And ? Formula::disj_exact(std::move(kids))
                                         : Formula::conj_exact(std::move(kids));
        }
        case Kind::ChoiceAll: return Formula::choice_exists(f.var(), nnf_neg(f.kid()));
        case Kind::ChoiceExists: return Formula::choice_all(f.var(), nnf_neg(f.kid()));
        case Kind::PRec: return Formula::pcorec(nnf_neg(f.kid()));
        case Kind::PCorec: return Formula::prec(nnf_neg(f.kid()));
        case Kind::BRec: return Formula::bcorec(f.card(), nnf_neg(f.kid()));
        case Kind::BCorec: return Formula::brec(f.card(), nnf_neg(f.kid()));
        case Kind::Implies:
            // ~(A -> B) = A & ~B
            return Formula::conj({nnf_pos(f.kid(0)), nnf_neg(f.kid(1))});
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

inline Formula to_nnf(const Formula& f) {
    require_well_formed(f);
    return detail::nnf_pos(f);
}

// The game-level negation of f, in NNF.
inline Formula negate_nnf(const Formula& f) {
    require_well_formed(f);
    return detail::nnf_neg(f);
}

}  // namespace colarena
