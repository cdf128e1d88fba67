#include "koszul/pattern.hpp"

#include <algorithm>
#include <set>

namespace koszul {

namespace {

std::string rel_str(const Relation& r) {
    return "(" + std::to_string(r.s) + "," + std::to_string(r.t) + ")";
}

bool strictly_contains(const Relation& a, const Relation& b) {
    // [b.s, b.t] inside [a.s, a.t], proper
    return a.s <= b.s && b.t <= a.t && !(a == b);
}

}  // namespace

RelationPattern RelationPattern::normalize(int n,
                                           const std::vector<std::pair<int, int>>& raw,
                                           NormalizeLog* log) {
    if (n < 0) throw ValidationError("n must be >= 0, got " + std::to_string(n));

    std::vector<Relation> rels;
    std::set<Relation> seen;
    for (const auto& [s, t] : raw) {
        Relation r{s, t};
        if (s < 0 || t > n || s > t)
            throw ValidationError("relation " + rel_str(r) +
                                  " has endpoints outside [0," + std::to_string(n) + "]");
        if (t - s < 2)
            throw ValidationError("relation " + rel_str(r) + " has length " +
                                  std::to_string(t - s) + " < 2");
        if (!seen.insert(r).second)
            throw ValidationError("duplicate relation " + rel_str(r));
        rels.push_back(r);
    }

    std::vector<Relation> kept;
    for (const auto& r : rels) {
        bool redundant = std::any_of(rels.begin(), rels.end(), [&](const Relation& o) {
            return strictly_contains(r, o);
        });
        if (redundant) {
            if (log) {
                log->dropped.push_back(r);
                log->warnings.push_back("dropped redundant relation " + rel_str(r) +
                                        " (its interval contains another relation)");
            }
        } else {
            kept.push_back(r);
        }
    }
    std::sort(kept.begin(), kept.end());

    for (std::size_t j = 1; j < kept.size(); ++j) {
        if (!(kept[j - 1].s < kept[j].s && kept[j - 1].t < kept[j].t))
            throw ValidationError("relations " + rel_str(kept[j - 1]) + " and " +
                                  rel_str(kept[j]) + " are not an interval antichain");
    }
    return RelationPattern(n, std::move(kept));
}

bool RelationPattern::path_survives(int i, int j) const {
    if (i < 0 || i > n_ || j < 0 || j > n_)
        throw ValidationError("vertex out of range in path_survives");
    if (i > j) return false;
    if (i == j) return true;
    for (const auto& r : rels_)
        if (i <= r.s && r.t <= j) return false;
    return true;
}

bool RelationPattern::is_quadratic() const {
    return std::all_of(rels_.begin(), rels_.end(),
                       [](const Relation& r) { return r.t - r.s == 2; });
}

RelationPattern RelationPattern::quadratic_complement() const {
    if (!is_quadratic())
        throw ValidationError("quadratic_complement requires all relations of length 2");
    std::vector<std::pair<int, int>> comp;
    for (int s = 0; s + 2 <= n_; ++s) {
        bool in_s = std::any_of(rels_.begin(), rels_.end(),
                                [&](const Relation& r) { return r.s == s; });
        if (!in_s) comp.emplace_back(s, s + 2);
    }
    return normalize(n_, comp);
}

std::string RelationPattern::str() const {
    std::string out = "n=" + std::to_string(n_) + " relations=[";
    for (std::size_t j = 0; j < rels_.size(); ++j) {
        if (j) out += ",";
        out += rel_str(rels_[j]);
    }
    return out + "]";
}

namespace {

void extend(int n, std::vector<Relation>& acc,
            std::vector<RelationPattern>& out) {
    std::vector<std::pair<int, int>> raw;
    raw.reserve(acc.size());
    for (const auto& r : acc) raw.emplace_back(r.s, r.t);
    out.push_back(RelationPattern::normalize(n, raw));

    int s_min = acc.empty() ? 0 : acc.back().s + 1;
    int t_min = acc.empty() ? 2 : acc.back().t + 1;
    for (int s = s_min; s + 2 <= n; ++s)
        for (int t = std::max(t_min, s + 2); t <= n; ++t) {
            acc.push_back({s, t});
            extend(n, acc, out);
            acc.pop_back();
        }
}

}  // namespace

std::vector<RelationPattern> enumerate_patterns(int n) {
    std::vector<RelationPattern> out;
    std::vector<Relation> acc;
    extend(n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RelationPattern> enumerate_patterns_up_to(int n_max) {
    std::vector<RelationPattern> out;
    for (int n = 0; n <= n_max; ++n) {
        auto part = enumerate_patterns(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace koszul
