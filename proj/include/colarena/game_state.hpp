#pragma once

// Runtime game state and move legality.
//
// The state is a tree mirroring the formula. Branching nodes hold a BitTree
// plus one child state per leaf thread; a move addressed to an actual node u
// applies to every leaf extending u (it is legal only if legal in all of
// them), and a split clones the leaf's state into both children, which is
// what makes descendants inherit the thread's past. Parallel recurrences
// materialize copy states lazily, so the infinite conjunction stays finite.
//
// Negation is handled structurally: descending through a Neg swaps the roles
// used for choice ownership and replication rights. Runs are recorded with
// their wire labels, untranslated.

#include <cassert>
#include <functional>
#include <span>

#include "bittree.hpp"
#include "formula.hpp"
#include "moves.hpp"

namespace colarena {

struct MoveError {
    std::string rule;    // short machine-readable id of the violated rule
    std::string detail;  // human text naming the offending segment
};

struct NodeState {
    std::optional<Constant> chosen;                     // choice nodes
    std::optional<Player> chosen_by;                    //   (wire label)
    std::vector<std::pair<Player, Constant>> log;       // enumeration atoms
    BitTree tree;                                       // branching nodes
    std::vector<std::pair<std::string, NodeState>> threads;   // leaf -> state
    std::vector<std::pair<std::uint64_t, NodeState>> copies;  // copy -> state
    std::vector<NodeState> kids;                        // other children

    static NodeState initial(const Formula& f) {
        NodeState st;
        switch (f.kind()) {
            case Kind::Atom: break;
            case Kind::BRec:
            case Kind::BCorec:
                st.threads.emplace_back("", initial(f.kid()));
                break;
            case Kind::PRec:
            case Kind::PCorec: break;  // copies are lazy
            default:
                for (const auto& k : f.kids()) st.kids.push_back(initial(k));
                break;
        }
        return st;
    }

    NodeState* thread_state(const std::string& leaf) {
        for (auto& [w, s] : threads)
            if (w == leaf) return &s;
        return nullptr;
    }
    const NodeState* thread_state(const std::string& leaf) const {
        return const_cast<NodeState*>(this)->thread_state(leaf);
    }
    NodeState* copy_state(std::uint64_t i) {
        for (auto& [j, s] : copies)
            if (j == i) return &s;
        return nullptr;
    }
    const NodeState* copy_state(std::uint64_t i) const {
        return const_cast<NodeState*>(this)->copy_state(i);
    }
};

class GameState {
public:
    GameState() = default;

    // f must be playable: well formed and free of ->. Neg over a compound is
    // tolerated (role-flipped), which is what lets ~f be played directly.
    static GameState new_game(Formula f) {
        require_well_formed(f);
        if (contains_implies(f))
            throw std::invalid_argument("formula is not in negation normal form: -> present");
        GameState g;
        g.f_ = std::move(f);
        g.root_ = NodeState::initial(g.f_);
        return g;
    }

    const Formula& formula() const { return f_; }
    const Run& history() const { return hist_; }
    const NodeState& root() const { return root_; }

    std::optional<MoveError> check(const LabeledMove& m) const {
        return walk(f_, const_cast<NodeState&>(root_), std::span<const Segment>(m.path), m, false,
                    false);
    }

    // Applies m if legal; the state is unchanged when an error is returned.
    std::optional<MoveError> apply(const LabeledMove& m) {
        std::span<const Segment> path(m.path);
        if (auto err = walk(f_, root_, path, m, false, false)) return err;
        auto err = walk(f_, root_, path, m, false, true);
        assert(!err);
        hist_.push_back(m);
        return std::nullopt;
    }

    // (actual nodes, leaves) of the branching node addressed by r.
    std::pair<std::vector<std::string>, std::vector<std::string>> tree_view(
        std::span<const Segment> r) const {
        auto [f, st] = node_at(r);
        if (!f || !f->is_branching())
            throw std::invalid_argument("address does not name a branching node");
        if (!st) return {{""}, {""}};
        return {st->tree.actuals(), st->tree.leaves()};
    }

    // Formula and state of the node addressed by r; the state pointer is null
    // when the node sits under a copy that was never touched. Also reports
    // whether an odd number of negations encloses the node.
    struct NodeRef {
        const Formula* formula = nullptr;
        const NodeState* state = nullptr;
        bool flipped = false;
    };
    NodeRef node_ref(std::span<const Segment> r) const {
        NodeRef out;
        const Formula* f = &f_;
        const NodeState* st = &root_;
        bool flipped = false;
        std::size_t i = 0;
        while (true) {
            // pass through transparent nodes
            if (f->kind() == Kind::Neg) {
                flipped = !flipped;
                st = st && !st->kids.empty() ? &st->kids[0] : nullptr;
                f = &f->kid();
                continue;
            }
            if (i == r.size()) break;
            const Segment& seg = r[i];
            switch (f->kind()) {
                case Kind::And:
                case Kind::Or:
                    if (seg.type != Segment::Index || seg.num < 1 || seg.num > f->arity())
                        throw std::invalid_argument("bad operand segment in address");
                    st = st && st->kids.size() >= seg.num ? &st->kids[seg.num - 1] : nullptr;
                    f = &f->kid(seg.num - 1);
                    break;
                case Kind::PRec:
                case Kind::PCorec:
                    if (seg.type != Segment::Copy)
                        throw std::invalid_argument("bad copy segment in address");
                    st = st ? st->copy_state(seg.num) : nullptr;
                    f = &f->kid();
                    break;
                case Kind::BRec:
                case Kind::BCorec:
                    if (seg.type != Segment::Thread)
                        throw std::invalid_argument("bad thread segment in address");
                    st = st ? st->thread_state(seg.bits) : nullptr;
                    f = &f->kid();
                    break;
                case Kind::ChoiceAll:
                case Kind::ChoiceExists:
                    st = st && !st->kids.empty() ? &st->kids[0] : nullptr;
                    f = &f->kid();
                    continue;  // no segment consumed
                default: throw std::invalid_argument("address descends into a leaf");
            }
            ++i;
        }
        out.formula = f;
        out.state = st;
        out.flipped = flipped;
        return out;
    }

    std::pair<const Formula*, const NodeState*> node_at(std::span<const Segment> r) const {
        auto ref = node_ref(r);
        return {ref.formula, ref.state};
    }

    // FNV-1a over a canonical dump; used for trace digests.
    std::uint64_t digest() const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&](const std::string& s) {
            for (unsigned char c : s) {
                h ^= c;
                h *= 1099511628211ull;
            }
            h ^= 0xff;
            h *= 1099511628211ull;
        };
        for (const auto& m : hist_) mix(to_wire(m));
        return h;
    }

private:
    Formula f_;
    NodeState root_;
    Run hist_;

    static bool contains_implies(const Formula& f) {
        if (f.kind() == Kind::Implies) return true;
        for (const auto& k : f.kids())
            if (contains_implies(k)) return true;
        return false;
    }

    static std::optional<MoveError> err(std::string rule, std::string detail) {
        return MoveError{std::move(rule), std::move(detail)};
    }

    // One recursive legality/application walker. `through_resolved` tracks
    // whether a resolved choice was passed, only to report a friendlier rule
    // when the move dead-ends afterwards.
    static std::optional<MoveError> walk(const Formula& f, NodeState& st,
                                         std::span<const Segment> rest, const LabeledMove& m,
                                         bool flipped, bool mutate,
                                         bool through_resolved = false) {
        switch (f.kind()) {
            case Kind::Implies: return err("unplayable-implies", "-> is not playable");

            case Kind::Neg:
                return walk(f.kid(), st.kids[0], rest, m, !flipped, mutate, through_resolved);

            case Kind::Atom: {
                if (!rest.empty()) return err("trailing-segments", "address goes below an atom");
                if (f.letter().kind != LetterKind::Enumeration)
                    return err(through_resolved ? "choice-already-resolved" : "elementary-no-moves",
                               "no moves exist at " + f.letter().name);
                if (m.payload.type != Payload::Constant)
                    return err("payload-kind", "enumeration move must be a constant");
                if (m.payload.value < 1) return err("payload-kind", "constants start at 1");
                if (mutate) st.log.emplace_back(m.by, m.payload.value);
                return std::nullopt;
            }

            case Kind::And:
            case Kind::Or: {
                if (rest.empty())
                    return err("parallel-needs-operand", "address stops at a parallel connective");
                const Segment& seg = rest.front();
                if (seg.type != Segment::Index)
                    return err("parallel-needs-operand", "expected an operand index");
                if (seg.num < 1 || seg.num > f.arity())
                    return err("parallel-needs-operand",
                               "operand index " + std::to_string(seg.num) + " out of range");
                return walk(f.kid(seg.num - 1), st.kids[seg.num - 1], rest.subspan(1), m, flipped,
                            mutate, through_resolved);
            }

            case Kind::ChoiceAll:
            case Kind::ChoiceExists: {
                if (st.chosen) {
                    return walk(f.kid(), st.kids[0], rest, m, flipped, mutate, true);
                }
                if (!rest.empty())
                    return err("below-unresolved-choice",
                               "move addressed below an unresolved choice");
                if (m.payload.type != Payload::Constant)
                    return err("payload-kind", "choice move must be a constant");
                Player owner = (f.kind() == Kind::ChoiceExists) != flipped ? Player::Machine
                                                                           : Player::Environment;
                if (m.by != owner)
                    return err("choice-wrong-owner",
                               std::string("choice belongs to ") + player_char(owner));
                if (m.payload.value < 1) return err("payload-kind", "constants start at 1");
                if (mutate) {
                    st.chosen = m.payload.value;
                    st.chosen_by = m.by;
                }
                return std::nullopt;
            }

            case Kind::PRec:
            case Kind::PCorec: {
                if (rest.empty())
                    return err("copy-index", "address stops at a parallel recurrence");
                const Segment& seg = rest.front();
                if (seg.type != Segment::Copy || seg.num < 1)
                    return err("copy-index", "expected a copy index >= 1");
                NodeState* cs = st.copy_state(seg.num);
                if (!cs) {
                    if (!mutate) {
                        NodeState fresh = NodeState::initial(f.kid());
                        return walk(f.kid(), fresh, rest.subspan(1), m, flipped, false,
                                    through_resolved);
                    }
                    st.copies.emplace_back(seg.num, NodeState::initial(f.kid()));
                    cs = &st.copies.back().second;
                }
                return walk(f.kid(), *cs, rest.subspan(1), m, flipped, mutate, through_resolved);
            }

            case Kind::BRec:
            case Kind::BCorec: {
                bool env_replicates = (f.kind() == Kind::BRec) != flipped;
                if (rest.empty()) {
                    if (m.payload.type != Payload::Replicate)
                        return err("payload-kind",
                                   "a branching node takes a thread segment or a replication");
                    Player replicator =
                        env_replicates ? Player::Environment : Player::Machine;
                    if (m.by != replicator)
                        return err("replicate-by-nonreplicator",
                                   std::string("replicative move by ") + player_char(m.by));
                    const std::string& w = m.payload.bits;
                    if (!st.tree.is_leaf(w))
                        return err("replicate-not-leaf", "'" + w + "' is not a leaf");
                    if (mutate) {
                        NodeState* ls = st.thread_state(w);
                        NodeState saved = std::move(*ls);
                        std::erase_if(st.threads, [&](const auto& p) { return p.first == w; });
                        st.tree.split(w);
                        st.threads.emplace_back(w + "0", saved);
                        st.threads.emplace_back(w + "1", std::move(saved));
                    }
                    return std::nullopt;
                }
                const Segment& seg = rest.front();
                if (seg.type != Segment::Thread)
                    return err("thread-not-actual", "expected a thread segment");
                if (!st.tree.is_actual(seg.bits))
                    return err("thread-not-actual", "'" + seg.bits + "' is not an actual node");
                // legal iff legal in every leaf extending the named node
                for (auto& [leaf, ls] : st.threads) {
                    if (!is_bit_prefix(seg.bits, leaf)) continue;
                    if (auto e =
                            walk(f.kid(), ls, rest.subspan(1), m, flipped, false, through_resolved))
                        return e;
                }
                if (mutate) {
                    for (auto& [leaf, ls] : st.threads) {
                        if (!is_bit_prefix(seg.bits, leaf)) continue;
                        auto e =
                            walk(f.kid(), ls, rest.subspan(1), m, flipped, true, through_resolved);
                        assert(!e);
                    }
                }
                return std::nullopt;
            }
        }
        throw std::logic_error("unreachable");
    }
};

// ---- run projections --------------------------------------------------------

// True when the (finite) thread segment u addresses thread x, i.e. u is an
// initial segment of x, optionally reading x as extended by infinitely many
// zeros.
inline bool thread_covers(const std::string& u, const std::string& x, bool zero_extended) {
    if (is_bit_prefix(u, x)) return true;
    if (!zero_extended) return false;
    if (!is_bit_prefix(x, u)) return false;
    for (std::size_t i = x.size(); i < u.size(); ++i)
        if (u[i] != '0') return false;
    return true;
}

// The run of the base game played in thread x of the branching node addressed
// by r: keeps the moves under r whose thread segment is an initial segment of
// x and strips the node prefix and the thread segment.
inline Run project_thread(const Run& run, std::span<const Segment> r, const std::string& x,
                          bool zero_extended = false) {
    Run out;
    for (const auto& m : run) {
        if (m.path.size() < r.size()) continue;
        bool at_node = std::equal(r.begin(), r.end(), m.path.begin());
        if (!at_node) continue;
        if (m.path.size() == r.size()) continue;  // replicative move at the node itself
        const Segment& seg = m.path[r.size()];
        if (seg.type != Segment::Thread || !thread_covers(seg.bits, x, zero_extended)) continue;
        LabeledMove rel;
        rel.by = m.by;
        rel.path.assign(m.path.begin() + (long)r.size() + 1, m.path.end());
        rel.payload = m.payload;
        out.push_back(rel);
    }
    return out;
}

// Validating wrapper matching the spec operation; r must address a branching
// node of the game.
inline Run project_thread(const GameState& g, std::span<const Segment> r, const std::string& x,
                          bool zero_extended = false) {
    auto [f, st] = g.node_at(r);
    if (!f || !f->is_branching())
        throw std::invalid_argument("address does not name a branching node");
    return project_thread(g.history(), r, x, zero_extended);
}

}  // namespace colarena
