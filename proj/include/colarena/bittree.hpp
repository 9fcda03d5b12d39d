#pragma once

// The bitstring tree of a branching-recurrence node. Members are the actual
// nodes of the position; the empty string is always a member (the initial
// thread). Invariants: prefix closed, and every non-leaf member has both
// children present, so leaves partition the infinite bitstrings by prefix.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace colarena {

inline bool is_bit_prefix(const std::string& u, const std::string& w) {
    return u.size() <= w.size() && std::equal(u.begin(), u.end(), w.begin());
}

class BitTree {
public:
    BitTree() : members{""} {}

    bool is_actual(const std::string& w) const { return members.count(w) != 0; }

    bool is_leaf(const std::string& w) const {
        if (!is_actual(w)) return false;
        return !members.count(w + "0");
    }

    // Splits leaf w into w0 and w1. Caller must ensure w is a leaf.
    void split(const std::string& w) {
        members.insert(w + "0");
        members.insert(w + "1");
    }

    std::vector<std::string> actuals() const { return {members.begin(), members.end()}; }

    std::vector<std::string> leaves() const {
        std::vector<std::string> out;
        for (const auto& w : members)
            if (!members.count(w + "0")) out.push_back(w);
        return out;
    }

    // The unique leaf that is a prefix of the given (finite stand-in for an)
    // infinite bitstring, reading missing tail bits as 0.
    std::string leaf_for(const std::string& bits) const {
        std::string w;
        while (true) {
            if (is_leaf(w)) return w;
            char next = w.size() < bits.size() ? bits[w.size()] : '0';
            w.push_back(next);
        }
    }

    std::size_t size() const { return members.size(); }

    bool invariants_hold() const {
        if (!members.count("")) return false;
        for (const auto& w : members) {
            if (!w.empty() && !members.count(w.substr(0, w.size() - 1))) return false;
            bool has0 = members.count(w + "0"), has1 = members.count(w + "1");
            if (has0 != has1) return false;
        }
        return true;
    }

    friend bool operator==(const BitTree&, const BitTree&) = default;

private:
    std::set<std::string> members;
};

}  // namespace colarena
