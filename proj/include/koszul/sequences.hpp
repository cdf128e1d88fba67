#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "koszul/pattern.hpp"

namespace koszul {

// A vertex extended by the two infinities: d can return -inf (no relation
// target at or below p), d-dagger can return +inf. Total order is
// -inf < any finite < +inf. These are first-class values, never sentinel
// integers; equality of two -inf values is genuine equality (the sequence
// recursion stops exactly there).
class ExtVertex {
public:
    static ExtVertex neg_inf() { return ExtVertex(Kind::NegInf, 0); }
    static ExtVertex pos_inf() { return ExtVertex(Kind::PosInf, 0); }
    static ExtVertex of(int v) { return ExtVertex(Kind::Finite, v); }

    bool finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }

    int value() const {
        if (!finite()) throw std::logic_error("ExtVertex: value() on infinity");
        return value_;
    }

    friend bool operator==(const ExtVertex&, const ExtVertex&) = default;
    friend std::strong_ordering operator<=>(const ExtVertex& a, const ExtVertex& b) {
        if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
        return a.value_ <=> b.value_;
    }
    // Comparisons against plain ints (always finite).
    friend bool operator<=(const ExtVertex& a, int b) {
        return a.kind_ == Kind::NegInf || (a.finite() && a.value_ <= b);
    }

    std::string str() const {
        switch (kind_) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "+inf";
            default: return std::to_string(value_);
        }
    }

private:
    enum class Kind { NegInf = 0, Finite = 1, PosInf = 2 };
    ExtVertex(Kind k, int v) : kind_(k), value_(v) {}
    Kind kind_;
    int value_;
};

// d(p)      = max{ s_j : t_j <= p }, -inf if none. Monotone non-decreasing.
// d_dagger(p) = min{ t_j : s_j >= p }, +inf if none. Monotone non-decreasing.
ExtVertex d_map(const RelationPattern& pat, int p);
ExtVertex d_dagger(const RelationPattern& pat, int p);

enum class SeqFlavor { Plain, Dagger };

// The index sequence a_0, a_1, ..., a_l based at p. Plain flavor is strictly
// decreasing with a_0 = p, a_1 = p - 1 (p >= 1), then a_i = d(a_{i-2}) while
// d(a_{i-2}) != d(a_{i-1}); dagger is the mirror with d_dagger and a_1 = p + 1.
struct ExtIndexSequence {
    int base = 0;
    SeqFlavor flavor = SeqFlavor::Plain;
    std::vector<int> values;  // values[0] == base

    int length() const { return static_cast<int>(values.size()) - 1; }  // l_p
    int at(int i) const { return values.at(i); }
    std::optional<int> index_of(int q) const;
    std::string str() const;
};

ExtIndexSequence ext_sequence(const RelationPattern& pat, int p);
ExtIndexSequence ext_sequence_dual(const RelationPattern& pat, int p);

// All 2(n+1) sequences of a pattern, computed eagerly once and shared by the
// downstream consumers (dual builder, diagrams, verifiers).
class SequenceTable {
public:
    explicit SequenceTable(const RelationPattern& pat);

    const RelationPattern& pattern() const { return pat_; }
    int n() const { return pat_.n(); }

    const ExtIndexSequence& plain(int p) const { return plain_.at(p); }
    const ExtIndexSequence& dagger(int p) const { return dagger_.at(p); }
    int l(int p) const { return plain_.at(p).length(); }
    int l_dagger(int p) const { return dagger_.at(p).length(); }

    // Index i with a_i^(p) == q, if q occurs in the plain sequence of p.
    std::optional<int> plain_index(int p, int q) const;
    std::optional<int> dagger_index(int p, int q) const;

private:
    RelationPattern pat_;
    std::vector<ExtIndexSequence> plain_, dagger_;
};

struct CheckReport {
    bool passed = true;
    int checked = 0;                     // number of (p, j) pairs examined
    std::vector<std::string> failures;   // canonical order, human-readable
};

// Inversion formula: q = a_j^(p) implies a_j^(q)-dagger = p, and
// q = a_j^(p)-dagger implies a_j^(q) = p (symmetric reading).
CheckReport check_inversion(const RelationPattern& pat);

// d(d_dagger(p) - 1) <= p - 1 for every p with finite d_dagger(p).
CheckReport check_dagger_bound(const RelationPattern& pat);

}  // namespace koszul
