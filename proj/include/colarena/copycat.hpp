#pragma once

// Copycat synchronization between a subgame and a structural dual.
//
// A pair names two subgame addresses. Mirroring is computed statelessly from
// the global history: the adversary moves seen at one side, minus the machine
// moves already played at the other, are the pending queue. Thread segments
// in a side's address match by ancestry (a move made at an actual node u
// belongs to every current thread extending u), which is what keeps a pair
// coherent when its target thread is split and the bookkeeping re-targets to
// a child: the inherited history still counts.

#include "game_state.hpp"

namespace colarena {

struct SideAddress {
    std::vector<Segment> prefix;

    // Matches moves addressed at this subgame (or an ancestor actual node of
    // the target thread for Thread segments).
    bool matches(const LabeledMove& m) const {
        if (m.path.size() < prefix.size()) return false;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const Segment& a = prefix[i];
            const Segment& b = m.path[i];
            if (a.type != b.type) return false;
            if (a.type == Segment::Thread) {
                if (!is_bit_prefix(b.bits, a.bits)) return false;
            } else if (a.num != b.num) {
                return false;
            }
        }
        return true;
    }

};

// A synchronized pair of subgames; `lag` is implicit in the history.
struct SyncPair {
    SideAddress left, right;
    std::string label;
};

struct PendingMirror {
    std::size_t history_index;  // index of the unmirrored adversary move
    LabeledMove emit;
};

// The oldest adversary move on either side that has not been mirrored into
// the opposite side yet, if any. Mirrors are recognized as the machine's own
// moves at the target side, matched up by count in arrival order.
inline std::optional<PendingMirror> oldest_pending(const SyncPair& pair, const Run& hist) {
    auto scan = [&](const SideAddress& from, const SideAddress& to)
        -> std::optional<PendingMirror> {
        std::size_t mirrored = 0;
        for (const auto& m : hist)
            if (m.by == Player::Machine && to.matches(m)) ++mirrored;
        std::size_t seen = 0;
        for (std::size_t i = 0; i < hist.size(); ++i) {
            const LabeledMove& m = hist[i];
            if (m.by != Player::Environment || !from.matches(m)) continue;
            if (m.payload.type == Payload::Replicate) continue;  // structural, not mirrorable
            if (seen == mirrored) {
                // same relative suffix and payload, re-rooted at the other side
                LabeledMove emit;
                emit.by = Player::Machine;
                emit.path = to.prefix;
                emit.path.insert(emit.path.end(), m.path.begin() + (long)from.prefix.size(),
                                 m.path.end());
                emit.payload = m.payload;
                return PendingMirror{i, std::move(emit)};
            }
            ++seen;
        }
        return std::nullopt;
    };
    auto a = scan(pair.left, pair.right);
    auto b = scan(pair.right, pair.left);
    if (a && b) return a->history_index <= b->history_index ? a : b;
    return a ? a : b;
}

// One scheduled copycat step over a set of pairs: emits the globally oldest
// pending mirror, or nothing when all pairs are in sync.
inline std::optional<LabeledMove> copycat_step(const std::vector<SyncPair>& pairs,
                                               const Run& hist) {
    std::optional<PendingMirror> best;
    for (const auto& p : pairs) {
        auto cand = oldest_pending(p, hist);
        if (cand && (!best || cand->history_index < best->history_index)) best = cand;
    }
    if (!best) return std::nullopt;
    return best->emit;
}

inline std::optional<LabeledMove> copycat_step(const SyncPair& pair, const Run& hist) {
    auto p = oldest_pending(pair, hist);
    if (!p) return std::nullopt;
    return p->emit;
}

}  // namespace colarena
