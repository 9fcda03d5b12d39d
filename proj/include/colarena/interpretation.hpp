#pragma once

// Interpretations assign meanings to letters: elementary letters get a total
// truth predicate over constant tuples (finite support plus a default), and
// enumeration letters get a win predicate over the pair of enumerated move
// sets. Predicates are closed, describable values so traces can record them
// and reruns stay deterministic.

#include <map>
#include <set>
#include <variant>

#include "formula.hpp"

namespace colarena {

struct ElemTable {
    bool default_value = true;
    std::set<std::vector<Constant>> exceptions;  // tuples mapped to !default_value

    bool truth(const std::vector<Constant>& args) const {
        return exceptions.count(args) ? !default_value : default_value;
    }
};

using ConstantSet = std::set<Constant>;
using ContentPair = std::pair<ConstantSet, ConstantSet>;  // (machine set, environment set)

struct EnumAlways {
    bool value = true;
};
// Machine wins iff its set contains the environment's.
struct EnumSuperset {};
// Machine wins iff both sets are equal.
struct EnumSetsEqual {};
// Machine wins iff it enumerated the given constant.
struct EnumContains {
    Constant c = 1;
};
// Machine wins iff (S_T, S_B) occurs among `pos` or (S_B, S_T) among `neg`.
// This is the reachable-content predicate shape used by the induced
// interpretations.
struct EnumContentList {
    std::set<ContentPair> pos;
    std::set<ContentPair> neg;
};

using EnumPredicate =
    std::variant<EnumAlways, EnumSuperset, EnumSetsEqual, EnumContains, EnumContentList>;

inline bool enum_machine_wins(const EnumPredicate& p, const ConstantSet& st,
                              const ConstantSet& sb) {
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, EnumAlways>) return v.value;
            else if constexpr (std::is_same_v<T, EnumSuperset>)
                return std::includes(st.begin(), st.end(), sb.begin(), sb.end());
            else if constexpr (std::is_same_v<T, EnumSetsEqual>) return st == sb;
            else if constexpr (std::is_same_v<T, EnumContains>) return st.count(v.c) != 0;
            else return v.pos.count({st, sb}) != 0 || v.neg.count({sb, st}) != 0;
        },
        p);
}

inline std::string describe(const EnumPredicate& p) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, EnumAlways>)
                return v.value ? "always-true" : "always-false";
            else if constexpr (std::is_same_v<T, EnumSuperset>) return "machine-set-superset";
            else if constexpr (std::is_same_v<T, EnumSetsEqual>) return "sets-equal";
            else if constexpr (std::is_same_v<T, EnumContains>)
                return "machine-contains-" + std::to_string(v.c);
            else
                return "content-list(" + std::to_string(v.pos.size()) + " positive, " +
                       std::to_string(v.neg.size()) + " negative)";
        },
        p);
}

class Interpretation {
public:
    Interpretation() = default;

    Interpretation& set_elementary(const std::string& letter, ElemTable t) {
        elem_[letter] = std::move(t);
        return *this;
    }
    Interpretation& set_enumeration(const std::string& letter, EnumPredicate p) {
        enum_[letter] = std::move(p);
        return *this;
    }

    bool elementary_truth(const Letter& l, const std::vector<Constant>& args) const {
        auto it = elem_.find(l.name);
        if (it == elem_.end())
            throw std::invalid_argument("interpretation missing elementary letter " + l.name);
        return it->second.truth(args);
    }

    bool machine_wins_enum(const Letter& l, const ConstantSet& st, const ConstantSet& sb) const {
        auto it = enum_.find(l.name);
        if (it == enum_.end())
            throw std::invalid_argument("interpretation missing enumeration letter " + l.name);
        return enum_machine_wins(it->second, st, sb);
    }

    const std::map<std::string, ElemTable>& elementary() const { return elem_; }
    const std::map<std::string, EnumPredicate>& enumerations() const { return enum_; }

    std::string describe_all() const {
        std::string out;
        for (const auto& [name, t] : elem_) {
            out += name + ": default " + (t.default_value ? "true" : "false") + ", " +
                   std::to_string(t.exceptions.size()) + " exceptions\n";
        }
        for (const auto& [name, p] : enum_) out += name + ": " + describe(p) + "\n";
        return out;
    }

    // All-true elementary interpretation over the letters of f (enumeration
    // letters get always-true predicates too).
    static Interpretation all_true_for(const Formula& f) {
        Interpretation i;
        for (const auto& [name, l] : letters_of(f)) {
            if (l.kind == LetterKind::Elementary) i.set_elementary(name, ElemTable{true, {}});
            else i.set_enumeration(name, EnumAlways{true});
        }
        return i;
    }

private:
    std::map<std::string, ElemTable> elem_;
    std::map<std::string, EnumPredicate> enum_;
};

}  // namespace colarena
