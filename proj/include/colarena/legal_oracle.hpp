#pragma once

// Independent legal-move enumeration, by structural recursion over the
// formula and state rather than through the incremental checker. Used as the
// oracle in the legality equivalence property: within the bounded move space
// (payload constants from `universe`, copy indices up to `max_copy`), a move
// is accepted by GameState::check iff this enumeration contains it.

#include <algorithm>

#include "game_state.hpp"

namespace colarena {

struct OracleBounds {
    std::vector<Constant> universe = {1, 2, 3};
    std::uint64_t max_copy = 3;
};

namespace detail {

struct MoveSketch {
    Player by;
    std::vector<Segment> path;  // relative to the node under enumeration
    Payload payload;

    friend bool operator==(const MoveSketch&, const MoveSketch&) = default;
    friend auto operator<=>(const MoveSketch&, const MoveSketch&) = default;
};

inline std::vector<MoveSketch> prefixed(Segment seg, std::vector<MoveSketch> ms) {
    for (auto& m : ms) m.path.insert(m.path.begin(), seg);
    return ms;
}

inline std::vector<MoveSketch> enumerate_legal(const Formula& f, const NodeState* st,
                                               const OracleBounds& b, bool flipped) {
    std::vector<MoveSketch> out;
    switch (f.kind()) {
        case Kind::Implies: break;
        case Kind::Neg: {
            const NodeState* kid = st && !st->kids.empty() ? &st->kids[0] : nullptr;
            out = enumerate_legal(f.kid(), kid, b, !flipped);
            break;
        }
        case Kind::Atom:
            if (f.letter().kind == LetterKind::Enumeration)
                for (Constant c : b.universe)
                    for (Player p : {Player::Machine, Player::Environment})
                        out.push_back({p, {}, Payload::constant(c)});
            break;
        case Kind::And:
        case Kind::Or:
            for (std::size_t i = 0; i < f.arity(); ++i) {
                const NodeState* kid = st && st->kids.size() > i ? &st->kids[i] : nullptr;
                auto sub = enumerate_legal(f.kid(i), kid, b, flipped);
                auto pre = prefixed(Segment::index(i + 1), std::move(sub));
                out.insert(out.end(), pre.begin(), pre.end());
            }
            break;
        case Kind::ChoiceAll:
        case Kind::ChoiceExists: {
            bool resolved = st && st->chosen;
            if (resolved) {
                out = enumerate_legal(f.kid(), st ? &st->kids[0] : nullptr, b, flipped);
            } else {
                Player owner = (f.kind() == Kind::ChoiceExists) != flipped ? Player::Machine
                                                                           : Player::Environment;
                for (Constant c : b.universe) out.push_back({owner, {}, Payload::constant(c)});
            }
            break;
        }
        case Kind::PRec:
        case Kind::PCorec: {
            NodeState fresh = NodeState::initial(f.kid());
            for (std::uint64_t i = 1; i <= b.max_copy; ++i) {
                const NodeState* cs = st ? st->copy_state(i) : nullptr;
                auto sub = enumerate_legal(f.kid(), cs ? cs : &fresh, b, flipped);
                auto pre = prefixed(Segment::copy(i), std::move(sub));
                out.insert(out.end(), pre.begin(), pre.end());
            }
            break;
        }
        case Kind::BRec:
        case Kind::BCorec: {
            static const BitTree initial_tree;
            const BitTree& tree = st ? st->tree : initial_tree;
            NodeState fresh = NodeState::initial(f.kid());
            Player replicator =
                (f.kind() == Kind::BRec) != flipped ? Player::Environment : Player::Machine;
            for (const auto& w : tree.leaves())
                out.push_back({replicator, {}, Payload::replicate(w)});
            // A non-replicative move at actual node u is legal iff it is
            // legal in every leaf thread extending u.
            for (const auto& u : tree.actuals()) {
                std::vector<MoveSketch> common;
                bool first = true;
                for (const auto& leaf : tree.leaves()) {
                    if (!is_bit_prefix(u, leaf)) continue;
                    const NodeState* ls = st ? st->thread_state(leaf) : nullptr;
                    auto sub = enumerate_legal(f.kid(), ls ? ls : &fresh, b, flipped);
                    std::sort(sub.begin(), sub.end());
                    if (first) {
                        common = std::move(sub);
                        first = false;
                    } else {
                        std::vector<MoveSketch> inter;
                        std::set_intersection(common.begin(), common.end(), sub.begin(), sub.end(),
                                              std::back_inserter(inter));
                        common = std::move(inter);
                    }
                }
                auto pre = prefixed(Segment::thread(u), std::move(common));
                out.insert(out.end(), pre.begin(), pre.end());
            }
            break;
        }
    }
    return out;
}

}  // namespace detail

inline std::vector<LabeledMove> legal_moves_oracle(const GameState& g,
                                                   const OracleBounds& b = {}) {
    auto sketches = detail::enumerate_legal(g.formula(), &g.root(), b, false);
    std::vector<LabeledMove> out;
    out.reserve(sketches.size());
    for (auto& s : sketches) out.push_back({s.by, std::move(s.path), s.payload});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// The bounded syntactic move space the oracle equivalence is quantified over:
// all well-shaped addresses with payloads from the universe, copy indices up
// to the bound, thread names ranging over actual nodes and their one-bit
// extensions, by either player. A superset of every legal move within the
// bounds, plus the documented negative shapes.
inline std::vector<LabeledMove> candidate_moves(const GameState& g, const OracleBounds& b = {}) {
    using detail::MoveSketch;
    std::vector<MoveSketch> all;

    auto walk = [&](auto&& self, const Formula& f, const NodeState* st) -> std::vector<MoveSketch> {
        std::vector<MoveSketch> out;
        auto both_payloads = [&](std::vector<MoveSketch>& dst) {
            for (Constant c : b.universe)
                for (Player p : {Player::Machine, Player::Environment})
                    dst.push_back({p, {}, Payload::constant(c)});
        };
        switch (f.kind()) {
            case Kind::Implies: break;
            case Kind::Neg:
                out = self(self, f.kid(), st && !st->kids.empty() ? &st->kids[0] : nullptr);
                break;
            case Kind::Atom: both_payloads(out); break;
            case Kind::And:
            case Kind::Or: {
                for (std::size_t i = 0; i < f.arity(); ++i) {
                    const NodeState* kid = st && st->kids.size() > i ? &st->kids[i] : nullptr;
                    auto sub = detail::prefixed(Segment::index(i + 1), self(self, f.kid(i), kid));
                    out.insert(out.end(), sub.begin(), sub.end());
                }
                // out-of-range operand, as a negative case
                out.push_back({Player::Machine,
                               {Segment::index(f.arity() + 1)},
                               Payload::constant(b.universe.empty() ? 1 : b.universe[0])});
                break;
            }
            case Kind::ChoiceAll:
            case Kind::ChoiceExists: {
                both_payloads(out);  // either player tries to resolve
                auto sub = self(self, f.kid(), st && !st->kids.empty() ? &st->kids[0] : nullptr);
                out.insert(out.end(), sub.begin(), sub.end());
                break;
            }
            case Kind::PRec:
            case Kind::PCorec: {
                NodeState fresh = NodeState::initial(f.kid());
                for (std::uint64_t i = 1; i <= b.max_copy; ++i) {
                    const NodeState* cs = st ? st->copy_state(i) : nullptr;
                    auto sub = detail::prefixed(Segment::copy(i),
                                                self(self, f.kid(), cs ? cs : &fresh));
                    out.insert(out.end(), sub.begin(), sub.end());
                }
                break;
            }
            case Kind::BRec:
            case Kind::BCorec: {
                static const BitTree initial_tree;
                const BitTree& tree = st ? st->tree : initial_tree;
                NodeState fresh = NodeState::initial(f.kid());
                std::vector<std::string> names = tree.actuals();
                for (const auto& w : tree.actuals()) {
                    names.push_back(w + "0");
                    names.push_back(w + "1");
                }
                std::sort(names.begin(), names.end());
                names.erase(std::unique(names.begin(), names.end()), names.end());
                for (const auto& w : names)
                    for (Player p : {Player::Machine, Player::Environment})
                        out.push_back({p, {}, Payload::replicate(w)});
                for (const auto& w : names) {
                    const NodeState* ls = st ? st->thread_state(w) : nullptr;
                    auto sub = detail::prefixed(Segment::thread(w),
                                                self(self, f.kid(), ls ? ls : &fresh));
                    out.insert(out.end(), sub.begin(), sub.end());
                }
                break;
            }
        }
        return out;
    };

    all = walk(walk, g.formula(), &g.root());
    std::vector<LabeledMove> out;
    out.reserve(all.size() * 2);
    for (auto& s : all) {
        out.push_back({s.by, s.path, s.payload});
        out.push_back({opponent(s.by), std::move(s.path), s.payload});  // wrong-player variants
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace colarena
