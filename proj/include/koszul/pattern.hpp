#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace koszul {

// Thrown on malformed input (bad relation endpoints, lengths, duplicates).
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A monomial relation killing the path from s to t (t - s >= 2).
struct Relation {
    int s = 0;
    int t = 0;
    friend bool operator==(const Relation&, const Relation&) = default;
    friend auto operator<=>(const Relation&, const Relation&) = default;
};

struct NormalizeLog {
    std::vector<Relation> dropped;       // redundant (containing) relations
    std::vector<std::string> warnings;
};

// The linear quiver 0 -> 1 -> ... -> n with monomial interval relations.
// Invariants: relations sorted with strictly increasing s and t, every
// length >= 2, endpoints within [0, n], no interval contains another.
class RelationPattern {
public:
    // Validates, sorts, and drops relations whose interval strictly
    // contains another one (the quotient algebra is unchanged; the drop is
    // recorded in `log` when given). Throws ValidationError otherwise.
    static RelationPattern normalize(int n,
                                     const std::vector<std::pair<int, int>>& raw,
                                     NormalizeLog* log = nullptr);

    int n() const { return n_; }
    int size() const { return static_cast<int>(rels_.size()); }   // m
    const std::vector<Relation>& relations() const { return rels_; }
    const Relation& relation(int j) const { return rels_.at(j); }  // 0-based

    // True iff the path from i to j is nonzero in the quotient algebra:
    // always for i == j, never for i > j, and for i < j iff no relation
    // interval lies inside [i, j].
    bool path_survives(int i, int j) const;

    bool is_quadratic() const;

    // For all-quadratic patterns: the pattern with relation starts
    // {0,...,n-2} \ S. Throws ValidationError if any relation is longer.
    RelationPattern quadratic_complement() const;

    std::string str() const;

    friend bool operator==(const RelationPattern&, const RelationPattern&) = default;
    friend auto operator<=>(const RelationPattern&, const RelationPattern&) = default;

private:
    RelationPattern(int n, std::vector<Relation> rels)
        : n_(n), rels_(std::move(rels)) {}

    int n_ = 0;
    std::vector<Relation> rels_;
};

// All valid patterns for this exact n, in canonical (lexicographic) order.
std::vector<RelationPattern> enumerate_patterns(int n);

// All valid patterns with 0 <= n <= n_max, ordered by n then lexicographically.
std::vector<RelationPattern> enumerate_patterns_up_to(int n_max);

}  // namespace koszul
