#pragma once

// Seeded random formulas, interpretations and legal runs for property tests
// and fuzzing. Everything is deterministic per seed.

#include <random>

#include "adjudicator.hpp"
#include "legal_oracle.hpp"

namespace colarena {

using Rng = std::mt19937_64;

inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

struct FormulaGenOptions {
    int max_depth = 4;
    bool with_branching = true;
    bool with_parallel_rec = true;
    bool with_quantifiers = true;
};

// Letters used by generated formulas: two enumeration letters, an elementary
// constant letter, and a binary elementary letter.
inline const Letter kGenEnumA{"Ea", LetterKind::Enumeration, 0};
inline const Letter kGenEnumB{"Eb", LetterKind::Enumeration, 0};
inline const Letter kGenElem0{"t", LetterKind::Elementary, 0};
inline const Letter kGenElem2{"b", LetterKind::Elementary, 2};

// A random playable (implication-free) formula. Negations may sit over
// compounds; the engine handles them by role flipping.
inline Formula random_formula(Rng& rng, const FormulaGenOptions& o = {}) {
    int var_counter = 0;
    auto gen = [&](auto&& self, int depth, std::vector<std::string> scope) -> Formula {
        auto leaf = [&]() -> Formula {
            switch (rand_below(rng, 4)) {
                case 0: return Formula::atom(kGenEnumA);
                case 1: return Formula::atom(kGenEnumB);
                case 2: return Formula::atom(kGenElem0);
                default: {
                    auto arg = [&]() -> Term {
                        if (!scope.empty() && rand_below(rng, 2) == 0)
                            return Term::variable(scope[rand_below(rng, scope.size())]);
                        return Term::constant(1 + rand_below(rng, 3));
                    };
                    return Formula::atom(kGenElem2, {arg(), arg()});
                }
            }
        };
        if (depth <= 0) return leaf();
        switch (rand_below(rng, 10)) {
            case 0: return leaf();
            case 1: return Formula::neg(self(self, depth - 1, scope));
            case 2:
            case 3: {
                std::vector<Formula> kids;
                std::size_t n = 2 + rand_below(rng, 2);
                for (std::size_t i = 0; i < n; ++i) kids.push_back(self(self, depth - 1, scope));
                return rand_below(rng, 2) ? Formula::conj(std::move(kids))
                                          : Formula::disj(std::move(kids));
            }
            case 4:
            case 5: {
                if (!o.with_quantifiers) return leaf();
                std::string v = "v" + std::to_string(var_counter++);
                auto inner = scope;
                inner.push_back(v);
                Formula body = self(self, depth - 1, inner);
                return rand_below(rng, 2) ? Formula::choice_all(v, std::move(body))
                                          : Formula::choice_exists(v, std::move(body));
            }
            case 6: {
                if (!o.with_parallel_rec) return leaf();
                Formula body = self(self, depth - 1, scope);
                return rand_below(rng, 2) ? Formula::prec(std::move(body))
                                          : Formula::pcorec(std::move(body));
            }
            default: {
                if (!o.with_branching) return leaf();
                Cardinality c = rand_below(rng, 2) ? Cardinality::Aleph0 : Cardinality::Uncountable;
                Formula body = self(self, depth - 1, scope);
                return rand_below(rng, 2) ? Formula::brec(c, std::move(body))
                                          : Formula::bcorec(c, std::move(body));
            }
        }
    };
    Formula f = gen(gen, o.max_depth, {});
    require_well_formed(f);
    return f;
}

// A random interpretation covering every letter of f: random finite truth
// tables for elementary letters, a random closed predicate for enumeration
// letters.
inline Interpretation random_interpretation(Rng& rng, const Formula& f) {
    Interpretation I;
    for (const auto& [name, l] : letters_of(f)) {
        if (l.kind == LetterKind::Elementary) {
            ElemTable t;
            t.default_value = rand_below(rng, 2) == 0;
            std::size_t n = rand_below(rng, 4);
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Constant> tuple;
                for (int a = 0; a < l.arity; ++a) tuple.push_back(1 + rand_below(rng, 3));
                t.exceptions.insert(tuple);
            }
            I.set_elementary(name, std::move(t));
        } else {
            switch (rand_below(rng, 4)) {
                case 0: I.set_enumeration(name, EnumAlways{rand_below(rng, 2) == 0}); break;
                case 1: I.set_enumeration(name, EnumSuperset{}); break;
                case 2: I.set_enumeration(name, EnumSetsEqual{}); break;
                default:
                    I.set_enumeration(name, EnumContains{1 + rand_below(rng, 3)});
                    break;
            }
        }
    }
    return I;
}

// Extends the game with up to `moves` random legal moves drawn from the
// bounded oracle. Stops early when no legal move exists within the bounds.
inline void random_play(Rng& rng, GameState& g, int moves, const OracleBounds& b = {}) {
    for (int i = 0; i < moves; ++i) {
        auto legal = legal_moves_oracle(g, b);
        if (legal.empty()) return;
        const LabeledMove& m = legal[rand_below(rng, legal.size())];
        auto err = g.apply(m);
        if (err) throw std::logic_error("oracle offered an illegal move: " + err->rule);
    }
}

inline Run random_run(Rng& rng, const Formula& f, int moves, const OracleBounds& b = {}) {
    GameState g = GameState::new_game(f);
    random_play(rng, g, moves, b);
    return g.history();
}

}  // namespace colarena
