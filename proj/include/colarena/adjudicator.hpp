#pragma once

// Finite-run adjudication, recursively over the formula.
//
// Conventions for truncated plays: an unresolved environment choice is won by
// the machine and an unresolved machine choice by the environment. A parallel
// recurrence is machine-won iff every touched copy and the untouched-copy
// case are; a branching recurrence iff the projection to every leaf of the
// final thread tree is. On finite runs the projection to any infinite thread
// equals the projection to its unique leaf prefix, so the countable and
// uncountable branching verdicts coincide here; the genuinely infinitary
// divergence between them has no finite certificate and is not decided by
// this module.

#include "game_state.hpp"
#include "interpretation.hpp"

namespace colarena {

struct IllegalRunError : std::invalid_argument {
    MoveError why;
    std::size_t index;
    IllegalRunError(MoveError e, std::size_t i)
        : std::invalid_argument("illegal run: move #" + std::to_string(i) + ": " + e.rule + " (" +
                                e.detail + ")"),
          why(std::move(e)),
          index(i) {}
};

namespace detail {

using Env = std::vector<std::pair<std::string, Constant>>;

inline std::vector<Constant> resolve_args(const Formula& atom, const Env& env) {
    std::vector<Constant> vals;
    vals.reserve(atom.args().size());
    for (const Term& t : atom.args()) {
        if (!t.is_var) {
            vals.push_back(t.value);
            continue;
        }
        bool found = false;
        for (auto it = env.rbegin(); it != env.rend(); ++it)
            if (it->first == t.var) {
                vals.push_back(it->second);
                found = true;
                break;
            }
        if (!found) throw std::logic_error("unbound variable at evaluation: " + t.var);
    }
    return vals;
}

inline Player eval(const Formula& f, const NodeState* st, Env& env, bool flipped,
                   const Interpretation& I) {
    switch (f.kind()) {
        case Kind::Implies: throw std::invalid_argument("-> is not adjudicable; normalize first");
        case Kind::Neg:
            return eval(f.kid(), st && !st->kids.empty() ? &st->kids[0] : nullptr, env, !flipped,
                        I);
        case Kind::Atom: {
            const Letter& l = f.letter();
            if (l.kind == LetterKind::Elementary) {
                bool truth = I.elementary_truth(l, resolve_args(f, env));
                return truth != flipped ? Player::Machine : Player::Environment;
            }
            ConstantSet swire_t, swire_b;
            if (st)
                for (const auto& [p, c] : st->log)
                    (p == Player::Machine ? swire_t : swire_b).insert(c);
            // under an odd number of negations the machine role inside the
            // atom belongs to the wire environment
            const ConstantSet& role_t = flipped ? swire_b : swire_t;
            const ConstantSet& role_b = flipped ? swire_t : swire_b;
            bool role_machine_wins = I.machine_wins_enum(l, role_t, role_b);
            Player role_winner_wire = flipped
                                          ? (role_machine_wins ? Player::Environment : Player::Machine)
                                          : (role_machine_wins ? Player::Machine : Player::Environment);
            return role_winner_wire;
        }
        case Kind::And:
        case Kind::Or: {
            bool conjunctive = (f.kind() == Kind::And) != flipped;  // effective connective
            for (std::size_t i = 0; i < f.arity(); ++i) {
                const NodeState* kid = st && st->kids.size() > i ? &st->kids[i] : nullptr;
                Player w = eval(f.kid(i), kid, env, flipped, I);
                if (conjunctive && w == Player::Environment) return Player::Environment;
                if (!conjunctive && w == Player::Machine) return Player::Machine;
            }
            return conjunctive ? Player::Machine : Player::Environment;
        }
        case Kind::ChoiceAll:
        case Kind::ChoiceExists: {
            bool machine_owned = (f.kind() == Kind::ChoiceExists) != flipped;
            if (!st || !st->chosen)
                return machine_owned ? Player::Environment : Player::Machine;
            env.emplace_back(f.var(), *st->chosen);
            Player w = eval(f.kid(), st->kids.empty() ? nullptr : &st->kids[0], env, flipped, I);
            env.pop_back();
            return w;
        }
        case Kind::PRec:
        case Kind::PCorec: {
            bool conjunctive = (f.kind() == Kind::PRec) != flipped;
            Player fresh_w = eval(f.kid(), nullptr, env, flipped, I);
            if (conjunctive && fresh_w == Player::Environment) return Player::Environment;
            if (!conjunctive && fresh_w == Player::Machine) return Player::Machine;
            if (st)
                for (const auto& [i, cs] : st->copies) {
                    Player w = eval(f.kid(), &cs, env, flipped, I);
                    if (conjunctive && w == Player::Environment) return Player::Environment;
                    if (!conjunctive && w == Player::Machine) return Player::Machine;
                }
            return conjunctive ? Player::Machine : Player::Environment;
        }
        case Kind::BRec:
        case Kind::BCorec: {
            bool conjunctive = (f.kind() == Kind::BRec) != flipped;
            if (!st) return eval(f.kid(), nullptr, env, flipped, I);
            for (const auto& [leaf, ls] : st->threads) {
                Player w = eval(f.kid(), &ls, env, flipped, I);
                if (conjunctive && w == Player::Environment) return Player::Environment;
                if (!conjunctive && w == Player::Machine) return Player::Machine;
            }
            return conjunctive ? Player::Machine : Player::Environment;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

// Replays a run, checking legality, and returns the final state.
inline GameState replay(const Formula& f, const Run& run) {
    GameState g = GameState::new_game(f);
    for (std::size_t i = 0; i < run.size(); ++i)
        if (auto e = g.apply(run[i])) throw IllegalRunError(*e, i);
    return g;
}

inline Player winner_of_state(const GameState& g, const Interpretation& I) {
    detail::Env env;
    return detail::eval(g.formula(), &g.root(), env, false, I);
}

inline Player winner_finite(const Formula& f, const Interpretation& I, const Run& run) {
    return winner_of_state(replay(f, run), I);
}

// ---- structured verdicts ----------------------------------------------------

struct VerdictLine {
    std::string component;  // e.g. "!-component/thread 01"
    Player winner;
};

struct Verdict {
    Player winner;
    std::vector<VerdictLine> breakdown;
};

namespace detail {

inline std::string component_name(const Formula& f, Kind parent, std::size_t i) {
    if (!f.tag().empty()) return f.tag();
    return (parent == Kind::And ? "conjunct " : "disjunct ") + std::to_string(i + 1);
}

}  // namespace detail

// Per-component winners keyed by occurrence names; the top level is broken up
// by the outer connective, branching components additionally per leaf thread
// and parallel recurrences per touched copy.
inline Verdict decompose_verdict(const Formula& f, const Interpretation& I, const Run& run) {
    GameState g = replay(f, run);
    detail::Env env;
    Verdict v;
    v.winner = winner_of_state(g, I);

    auto eval_here = [&](const Formula& sub, const NodeState* st, bool flipped) {
        return detail::eval(sub, st, env, flipped, I);
    };

    auto describe_component = [&](const Formula& comp, const NodeState* cst, bool flipped,
                                  const std::string& name) {
        // unwrap negations for the per-thread/per-copy detail views
        const Formula* c = &comp;
        const NodeState* st = cst;
        bool flip = flipped;
        while (c->kind() == Kind::Neg) {
            flip = !flip;
            st = st && !st->kids.empty() ? &st->kids[0] : nullptr;
            c = &c->kid();
        }
        v.breakdown.push_back({name, eval_here(comp, cst, flipped)});
        if (c->is_branching() && st) {
            for (const auto& [leaf, ls] : st->threads)
                v.breakdown.push_back(
                    {name + "/thread " + (leaf.empty() ? "e" : leaf), eval_here(c->kid(), &ls, flip)});
        } else if ((c->kind() == Kind::PRec || c->kind() == Kind::PCorec) && st) {
            for (const auto& [i, cs] : st->copies)
                v.breakdown.push_back(
                    {name + "/copy " + std::to_string(i), eval_here(c->kid(), &cs, flip)});
            v.breakdown.push_back({name + "/fresh copy", eval_here(c->kid(), nullptr, flip)});
        }
    };

    if (f.kind() == Kind::Or || f.kind() == Kind::And) {
        for (std::size_t i = 0; i < f.arity(); ++i)
            describe_component(f.kid(i), &g.root().kids[i], false,
                               detail::component_name(f.kid(i), f.kind(), i));
    } else {
        describe_component(f, &g.root(), false, f.tag().empty() ? "game" : f.tag());
    }
    return v;
}

}  // namespace colarena
