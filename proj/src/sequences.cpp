#include "koszul/sequences.hpp"

#include <stdexcept>

namespace koszul {

ExtVertex d_map(const RelationPattern& pat, int p) {
    if (p < 0 || p > pat.n()) throw std::out_of_range("d_map: vertex out of range");
    ExtVertex best = ExtVertex::neg_inf();
    for (const auto& r : pat.relations())
        if (r.t <= p) best = std::max(best, ExtVertex::of(r.s));
    return best;
}

ExtVertex d_dagger(const RelationPattern& pat, int p) {
    if (p < 0 || p > pat.n()) throw std::out_of_range("d_dagger: vertex out of range");
    ExtVertex best = ExtVertex::pos_inf();
    for (const auto& r : pat.relations())
        if (r.s >= p) best = std::min(best, ExtVertex::of(r.t));
    return best;
}

std::optional<int> ExtIndexSequence::index_of(int q) const {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == q) return static_cast<int>(i);
    return std::nullopt;
}

std::string ExtIndexSequence::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + ")";
}

namespace {

// Shared recursion: step(x) is d or d-dagger; first() is p-1 or p+1; the
// base vertex with the empty sequence is 0 (plain) or n (dagger).
template <typename Step>
ExtIndexSequence run(const RelationPattern& pat, int p, SeqFlavor flavor,
                     int base_vertex, int first, Step step) {
    if (p < 0 || p > pat.n()) throw std::out_of_range("ext_sequence: vertex out of range");
    ExtIndexSequence seq;
    seq.base = p;
    seq.flavor = flavor;
    seq.values.push_back(p);
    if (p == base_vertex) return seq;
    seq.values.push_back(first);
    for (;;) {
        int m = static_cast<int>(seq.values.size());
        ExtVertex next = step(seq.values[m - 2]);
        if (next == step(seq.values[m - 1])) break;  // includes both infinite
        seq.values.push_back(next.value());
    }
    return seq;
}

}  // namespace

ExtIndexSequence ext_sequence(const RelationPattern& pat, int p) {
    return run(pat, p, SeqFlavor::Plain, 0, p - 1,
               [&](int x) { return d_map(pat, x); });
}

ExtIndexSequence ext_sequence_dual(const RelationPattern& pat, int p) {
    return run(pat, p, SeqFlavor::Dagger, pat.n(), p + 1,
               [&](int x) { return d_dagger(pat, x); });
}

SequenceTable::SequenceTable(const RelationPattern& pat) : pat_(pat) {
    plain_.reserve(pat.n() + 1);
    dagger_.reserve(pat.n() + 1);
    for (int p = 0; p <= pat.n(); ++p) {
        plain_.push_back(ext_sequence(pat, p));
        dagger_.push_back(ext_sequence_dual(pat, p));
    }
}

std::optional<int> SequenceTable::plain_index(int p, int q) const {
    return plain_.at(p).index_of(q);
}

std::optional<int> SequenceTable::dagger_index(int p, int q) const {
    return dagger_.at(p).index_of(q);
}

CheckReport check_inversion(const RelationPattern& pat) {
    SequenceTable tab(pat);
    CheckReport rep;
    for (int p = 0; p <= pat.n(); ++p) {
        for (int j = 0; j <= tab.l(p); ++j) {
            ++rep.checked;
            int q = tab.plain(p).at(j);
            const auto& back = tab.dagger(q);
            if (back.length() < j || back.at(j) != p) {
                rep.passed = false;
                rep.failures.push_back("plain->dagger p=" + std::to_string(p) +
                                       " j=" + std::to_string(j) +
                                       " q=" + std::to_string(q) +
                                       " dagger(q)=" + back.str());
            }
        }
        for (int j = 0; j <= tab.l_dagger(p); ++j) {
            ++rep.checked;
            int q = tab.dagger(p).at(j);
            const auto& back = tab.plain(q);
            if (back.length() < j || back.at(j) != p) {
                rep.passed = false;
                rep.failures.push_back("dagger->plain p=" + std::to_string(p) +
                                       " j=" + std::to_string(j) +
                                       " q=" + std::to_string(q) +
                                       " plain(q)=" + back.str());
            }
        }
    }
    return rep;
}

CheckReport check_dagger_bound(const RelationPattern& pat) {
    CheckReport rep;
    for (int p = 0; p <= pat.n(); ++p) {
        ExtVertex dd = d_dagger(pat, p);
        if (!dd.finite()) continue;
        ++rep.checked;
        ExtVertex lhs = d_map(pat, dd.value() - 1);
        if (!(lhs <= p - 1)) {
            rep.passed = false;
            rep.failures.push_back("p=" + std::to_string(p) +
                                   " d_dagger(p)=" + std::to_string(dd.value()) +
                                   " d(d_dagger(p)-1)=" + lhs.str());
        }
    }
    return rep;
}

}  // namespace koszul
