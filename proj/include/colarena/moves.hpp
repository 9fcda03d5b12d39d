#pragma once

// Labeled moves and their wire format.
//
// A move is a player label plus an address path and a terminal payload.
// Path segments, per node type along the way:
//   And/Or        operand index (1-based decimal)
//   PRec/PCorec   copy index (1-based decimal)
//   BRec/BCorec   thread bitstring (possibly empty = the initial thread), or
//                 a replicative payload `w:` terminating the move
//   choice nodes and enumeration atoms consume no segment; the terminal
//   payload is the chosen constant.
//
// Wire format, one move per line: `T`/`B`, space, `.`-joined segments, e.g.
//   B 2.:       environment replicates the root thread of disjunct 2
//   T 3.01.5    machine plays constant 5 in thread 01 of disjunct 3
//   B 1.7       environment chooses 7 at disjunct 1
// The empty bitstring renders as an empty string between delimiters.

#include <compare>
#include <cstdint>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "formula.hpp"

namespace colarena {

enum class Player : std::uint8_t { Machine, Environment };

inline Player opponent(Player p) {
    return p == Player::Machine ? Player::Environment : Player::Machine;
}
inline char player_char(Player p) { return p == Player::Machine ? 'T' : 'B'; }

struct Segment {
    enum Type : std::uint8_t { Index, Copy, Thread } type;
    std::uint64_t num = 0;  // Index / Copy
    std::string bits;       // Thread

    static Segment index(std::uint64_t i) { return {Index, i, {}}; }
    static Segment copy(std::uint64_t i) { return {Copy, i, {}}; }
    static Segment thread(std::string w) { return {Thread, 0, std::move(w)}; }

    friend bool operator==(const Segment&, const Segment&) = default;
    friend auto operator<=>(const Segment& a, const Segment& b) {
        return std::tie(a.type, a.num, a.bits) <=> std::tie(b.type, b.num, b.bits);
    }
};

struct Payload {
    enum Type : std::uint8_t { Constant, Replicate } type = Constant;
    std::uint64_t value = 0;  // Constant
    std::string bits;         // Replicate target leaf

    static Payload constant(std::uint64_t c) { return {Constant, c, {}}; }
    static Payload replicate(std::string w) { return {Replicate, 0, std::move(w)}; }

    friend bool operator==(const Payload&, const Payload&) = default;
    friend auto operator<=>(const Payload& a, const Payload& b) {
        return std::tie(a.type, a.value, a.bits) <=> std::tie(b.type, b.value, b.bits);
    }
};

struct LabeledMove {
    Player by = Player::Machine;
    std::vector<Segment> path;
    Payload payload;

    friend bool operator==(const LabeledMove&, const LabeledMove&) = default;
    friend auto operator<=>(const LabeledMove& a, const LabeledMove& b) {
        if (auto c = a.by <=> b.by; c != 0) return c;
        if (auto c = a.path <=> b.path; c != 0) return c;
        return a.payload <=> b.payload;
    }
};

using Run = std::vector<LabeledMove>;

// The label-flipped copy of a run (the "exact negation").
inline Run flip_run(const Run& run) {
    Run out = run;
    for (auto& m : out) m.by = opponent(m.by);
    return out;
}

inline std::string to_wire(const LabeledMove& m) {
    std::ostringstream os;
    os << player_char(m.by) << ' ';
    for (const auto& seg : m.path) {
        switch (seg.type) {
            case Segment::Index:
            case Segment::Copy: os << seg.num; break;
            case Segment::Thread: os << seg.bits; break;
        }
        os << '.';
    }
    if (m.payload.type == Payload::Constant) os << m.payload.value;
    else os << m.payload.bits << ':';
    return os.str();
}

struct WireError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses the wire form of a move. Segment typing is contextual: the formula
// tells whether a numeric segment is an operand index, a copy index, or a
// one-character-per-bit thread name.
inline LabeledMove from_wire(std::string_view line, const Formula& root) {
    if (line.size() < 2 || (line[0] != 'T' && line[0] != 'B') || line[1] != ' ')
        throw WireError("move must start with 'T ' or 'B '");
    LabeledMove m;
    m.by = line[0] == 'T' ? Player::Machine : Player::Environment;

    std::vector<std::string> parts;
    std::string cur;
    for (std::size_t i = 2; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == '.') {
            parts.push_back(cur);
            cur.clear();
        } else
            cur.push_back(line[i]);
    }
    if (parts.empty()) throw WireError("empty move address");

    auto as_number = [](const std::string& t) -> std::uint64_t {
        if (t.empty()) throw WireError("expected a number, got empty segment");
        for (char c : t)
            if (!std::isdigit((unsigned char)c)) throw WireError("expected a number: " + t);
        if (t.size() > 1 && t[0] == '0') throw WireError("no leading zeros: " + t);
        return std::stoull(t);
    };
    auto as_bits = [](const std::string& t) -> std::string {
        for (char c : t)
            if (c != '0' && c != '1') throw WireError("bad bitstring: " + t);
        return t;
    };

    const Formula* f = &root;
    std::size_t at = 0;
    while (true) {
        bool last = at + 1 == parts.size();
        const std::string& tok = parts[at];
        switch (f->kind()) {
            case Kind::ChoiceAll:
            case Kind::ChoiceExists:
                if (last) {  // terminal constant resolves a choice here or below
                    m.payload = Payload::constant(as_number(tok));
                    return m;
                }
                [[fallthrough]];
            case Kind::Neg:
                // transparent for addressing; legality is checked elsewhere
                f = &f->kid();
                continue;
            case Kind::Atom:
                if (!last) throw WireError("trailing segments after atom payload");
                m.payload = Payload::constant(as_number(tok));
                return m;
            case Kind::And:
            case Kind::Or: {
                if (last) {
                    // a constant payload can still resolve a choice further
                    // down only through explicit segments, so a terminal
                    // number here is ambiguous; require segments to the leaf
                    throw WireError("address stops at a parallel connective");
                }
                std::uint64_t idx = as_number(tok);
                if (idx < 1 || idx > f->arity()) throw WireError("operand index out of range: " + tok);
                m.path.push_back(Segment::index(idx));
                f = &f->kid(idx - 1);
                ++at;
                continue;
            }
            case Kind::PRec:
            case Kind::PCorec: {
                if (last) throw WireError("address stops at a parallel recurrence");
                std::uint64_t idx = as_number(tok);
                if (idx < 1) throw WireError("copy index must be >= 1");
                m.path.push_back(Segment::copy(idx));
                f = &f->kid();
                ++at;
                continue;
            }
            case Kind::BRec:
            case Kind::BCorec: {
                if (last && !tok.empty() && tok.back() == ':') {
                    m.payload = Payload::replicate(as_bits(tok.substr(0, tok.size() - 1)));
                    return m;
                }
                if (last) throw WireError("address stops at a branching recurrence");
                m.path.push_back(Segment::thread(as_bits(tok)));
                f = &f->kid();
                ++at;
                continue;
            }
            case Kind::Implies: throw WireError("implication is not playable; normalize first");
        }
    }
}

}  // namespace colarena
