#include "koszul/ainf.hpp"

#include <algorithm>
#include <stdexcept>

namespace koszul {

namespace {

std::string key_str(const GradedBasisCategory::Key& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + ")";
}

}  // namespace

int GradedBasisCategory::Builder::add_object(const std::string& label) {
    int idx = static_cast<int>(objects_.size());
    objects_.push_back(label);
    int mi = static_cast<int>(morphisms_.size());
    morphisms_.push_back({"1_" + label, idx, idx, 0, true});
    identity_of_.push_back(mi);
    return idx;
}

int GradedBasisCategory::Builder::add_morphism(const std::string& label, int src,
                                               int dst, int degree) {
    if (src < 0 || dst < 0 || src >= static_cast<int>(objects_.size()) ||
        dst >= static_cast<int>(objects_.size()))
        throw std::logic_error("add_morphism: unknown object");
    if (src >= dst)
        throw std::logic_error("add_morphism: directedness requires src < dst (" +
                               label + ")");
    morphisms_.push_back({label, src, dst, degree, false});
    return static_cast<int>(morphisms_.size()) - 1;
}

void GradedBasisCategory::Builder::set_mu(const Key& args, const Rat& coeff,
                                          int result) {
    int d = static_cast<int>(args.size());
    if (d < 1) throw std::logic_error("set_mu: empty key");
    if (coeff.is_zero()) throw std::logic_error("set_mu: zero entries are implicit");
    int deg_sum = 0;
    // args = (a_d, ..., a_1); walk sources from the right
    for (int i = d - 1; i >= 0; --i) {
        const auto& m = morphisms_.at(args[i]);
        if (m.is_identity && d != 2)
            throw std::logic_error("set_mu: identity in a mu^" + std::to_string(d) +
                                   " key " + key_str(args));
        if (i < d - 1 && morphisms_.at(args[i + 1]).dst != m.src)
            throw std::logic_error("set_mu: non-composable key " + key_str(args));
        deg_sum += m.degree;
    }
    const auto& out = morphisms_.at(result);
    if (out.src != morphisms_.at(args[d - 1]).src ||
        out.dst != morphisms_.at(args[0]).dst)
        throw std::logic_error("set_mu: result endpoints mismatch " + key_str(args));
    if (out.degree != deg_sum + 2 - d)
        throw std::logic_error("set_mu: degree law violated for " + key_str(args) +
                               " -> " + out.label);
    if (!mu_.emplace(args, SignedTerm{coeff, result}).second)
        throw std::logic_error("set_mu: duplicate key " + key_str(args));
}

void GradedBasisCategory::Builder::add_unital_mu2() {
    for (int m = 0; m < static_cast<int>(morphisms_.size()); ++m) {
        const auto& mor = morphisms_[m];
        int id_src = identity_of_.at(mor.src);
        int id_dst = identity_of_.at(mor.dst);
        if (mor.is_identity) {
            set_mu({m, m}, Rat(1), m);  // mu^2(1,1) = 1
            continue;
        }
        set_mu({m, id_src}, Rat(1), m);
        set_mu({id_dst, m}, Rat(mor.degree % 2 == 0 ? 1 : -1), m);
    }
}

GradedBasisCategory GradedBasisCategory::Builder::build() {
    GradedBasisCategory cat;
    cat.objects_ = objects_;
    cat.morphisms_ = morphisms_;
    cat.identity_of_ = identity_of_;
    cat.mu_ = mu_;
    cat.by_src_.assign(objects_.size(), {});
    for (int m = 0; m < static_cast<int>(morphisms_.size()); ++m)
        cat.by_src_[morphisms_[m].src].push_back(m);
    return cat;
}

std::optional<int> GradedBasisCategory::find_morphism(const std::string& label) const {
    for (int m = 0; m < static_cast<int>(morphisms_.size()); ++m)
        if (morphisms_[m].label == label) return m;
    return std::nullopt;
}

std::vector<int> GradedBasisCategory::hom_basis(int src, int dst, int deg) const {
    std::vector<int> out;
    for (int m = 0; m < static_cast<int>(morphisms_.size()); ++m) {
        const auto& mor = morphisms_[m];
        if (mor.src == src && mor.dst == dst && mor.degree == deg)
            out.push_back(m);
    }
    return out;
}

int GradedBasisCategory::hom_dim(int src, int dst, int deg) const {
    return static_cast<int>(hom_basis(src, dst, deg).size());
}

SignedTerm GradedBasisCategory::mu_eval(std::span<const int> args) const {
    if (args.empty()) throw std::logic_error("mu_eval: empty tuple");
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (morphisms_.at(args[i + 1]).dst != morphisms_.at(args[i]).src)
            throw std::logic_error("mu_eval: non-composable tuple");
    auto it = mu_.find(Key(args.begin(), args.end()));
    return it == mu_.end() ? SignedTerm::zero() : it->second;
}

std::map<int, Rat> GradedBasisCategory::stasheff_sum(std::span<const int> chain) const {
    int d = static_cast<int>(chain.size());
    // chain is (a_d, ..., a_1): chain[d - l] is a_l
    auto arg = [&](int l) { return chain[d - l]; };

    std::vector<int> star(d + 1, 0);  // star[i] = sum_{1<=l<=i} (deg(a_l) - 1)
    for (int i = 1; i <= d; ++i)
        star[i] = star[i - 1] + morphisms_.at(arg(i)).degree - 1;

    std::map<int, Rat> acc;
    for (int j = 1; j <= d; ++j) {
        for (int i = 0; i + j <= d; ++i) {
            // inner tuple (a_{i+j}, ..., a_{i+1})
            Key inner;
            inner.reserve(j);
            for (int l = i + j; l >= i + 1; --l) inner.push_back(arg(l));
            SignedTerm t = mu_eval(inner);
            if (t.is_zero()) continue;
            // outer tuple (a_d, ..., a_{i+j+1}, inner, a_i, ..., a_1)
            Key outer;
            outer.reserve(d - j + 1);
            for (int l = d; l >= i + j + 1; --l) outer.push_back(arg(l));
            outer.push_back(t.basis);
            for (int l = i; l >= 1; --l) outer.push_back(arg(l));
            SignedTerm o = mu_eval(outer);
            if (o.is_zero()) continue;
            Rat c = t.coeff * o.coeff;
            if (star[i] % 2 != 0) c = -c;
            auto [it, inserted] = acc.emplace(o.basis, c);
            if (!inserted) it->second += c;
        }
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc;
}

std::string FailedChain::describe(const GradedBasisCategory& cat) const {
    std::string s = "mu-chain(";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) s += ",";
        s += cat.morphism(chain[i]).label;
    }
    s += ") residue:";
    for (const auto& [basis, c] : survivors)
        s += " " + c.str() + "*" + cat.morphism(basis).label;
    return s;
}

AinfReport verify_ainfty(const GradedBasisCategory& cat, int max_chain) {
    if (max_chain < 1) throw std::logic_error("verify_ainfty: max_chain >= 1 required");
    AinfReport rep;
    // Chains are built source-first (a_1, then a_2, ...) and stored in table
    // order (a_d, ..., a_1); enumeration order is deterministic.
    std::vector<int> chain;  // source-first while building
    auto check = [&]() {
        std::vector<int> key(chain.rbegin(), chain.rend());
        auto residue = cat.stasheff_sum(key);
        ++rep.chains_checked;
        if (!residue.empty()) {
            rep.passed = false;
            FailedChain f;
            f.chain = key;
            for (const auto& [basis, c] : residue) f.survivors.emplace_back(basis, c);
            rep.failures.push_back(std::move(f));
        }
    };
    auto extend = [&](auto&& self, int at_object) -> void {
        if (!chain.empty()) check();
        if (static_cast<int>(chain.size()) == max_chain) return;
        for (int m : cat.morphisms_from(at_object)) {
            chain.push_back(m);
            self(self, cat.morphism(m).dst);
            chain.pop_back();
        }
    };
    for (int x = 0; x < cat.object_count(); ++x) extend(extend, x);
    return rep;
}

GradedBasisCategory restrict_directed(const GradedBasisCategory& cat,
                                      const std::vector<int>& objects) {
    std::vector<int> pos(cat.object_count(), -1);
    GradedBasisCategory::Builder b;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        int o = objects[i];
        if (o < 0 || o >= cat.object_count())
            throw std::logic_error("restrict_directed: unknown object");
        if (pos[o] != -1) throw std::logic_error("restrict_directed: duplicate object");
        pos[o] = b.add_object(cat.objects()[o]);
    }
    std::vector<int> mmap(cat.morphisms().size(), -1);
    for (int m = 0; m < static_cast<int>(cat.morphisms().size()); ++m) {
        const auto& mor = cat.morphism(m);
        if (mor.is_identity) {
            if (pos[mor.src] != -1) mmap[m] = b.identity_of(pos[mor.src]);
            continue;
        }
        if (pos[mor.src] == -1 || pos[mor.dst] == -1) continue;
        if (pos[mor.src] >= pos[mor.dst]) continue;
        mmap[m] = b.add_morphism(mor.label, pos[mor.src], pos[mor.dst], mor.degree);
    }
    for (const auto& [key, term] : cat.mu_table()) {
        bool alive = mmap[term.basis] != -1;
        for (int m : key) alive = alive && mmap[m] != -1;
        if (!alive) continue;
        GradedBasisCategory::Key nk;
        nk.reserve(key.size());
        for (int m : key) nk.push_back(mmap[m]);
        b.set_mu(nk, term.coeff, mmap[term.basis]);
    }
    return b.build();
}

namespace {

// Gauge solve: find eps : morphisms -> {+-1} with eps == +1 on identities
// such that eps(result) * coeff_a == (prod eps(args)) * coeff_b for every
// table entry. Linear over GF(2) in x with eps = (-1)^x.
bool sign_gauge_exists(const GradedBasisCategory& a, const GradedBasisCategory& b,
                       const std::vector<int>& mmap) {
    // mmap is a bijection, so equal support sizes plus "every entry of a
    // maps onto a nonzero entry of b" makes the supports equal.
    if (a.mu_table().size() != b.mu_table().size()) return false;
    std::map<int, std::pair<std::vector<int>, int>> pivots;  // leading var -> row
    auto xor_into = [](std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> out;
        std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(),
                                      std::back_inserter(out));
        x = std::move(out);
    };
    for (const auto& [key, term] : a.mu_table()) {
        GradedBasisCategory::Key bk;
        bk.reserve(key.size());
        for (int m : key) bk.push_back(mmap[m]);
        SignedTerm bt = b.mu_eval(bk);
        if (bt.is_zero() || bt.basis != mmap[term.basis]) return false;
        if (!(term.coeff == bt.coeff) && !(term.coeff == -bt.coeff)) return false;
        std::vector<int> vars;
        for (int m : key)
            if (!a.morphism(m).is_identity) vars.push_back(m);
        if (!a.morphism(term.basis).is_identity) vars.push_back(term.basis);
        std::sort(vars.begin(), vars.end());
        std::vector<int> reduced;  // xor duplicates away
        for (std::size_t i = 0; i < vars.size();) {
            std::size_t j = i;
            while (j < vars.size() && vars[j] == vars[i]) ++j;
            if ((j - i) % 2) reduced.push_back(vars[i]);
            i = j;
        }
        int rhs = term.coeff == bt.coeff ? 0 : 1;
        while (!reduced.empty()) {
            auto it = pivots.find(reduced[0]);
            if (it == pivots.end()) break;
            xor_into(reduced, it->second.first);
            rhs ^= it->second.second;
        }
        if (reduced.empty()) {
            if (rhs != 0) return false;
        } else {
            pivots.emplace(reduced[0], std::make_pair(reduced, rhs));
        }
    }
    return true;
}

bool try_match(const GradedBasisCategory& a, const GradedBasisCategory& b,
               std::vector<std::vector<int>>& groups_a,
               std::vector<std::vector<int>>& groups_b, std::size_t gi,
               std::vector<int>& mmap) {
    if (gi == groups_a.size()) return sign_gauge_exists(a, b, mmap);
    auto& ga = groups_a[gi];
    auto& gb = groups_b[gi];
    // try every assignment of ga onto permutations of gb
    std::sort(gb.begin(), gb.end());
    std::vector<int> perm = gb;
    do {
        for (std::size_t i = 0; i < ga.size(); ++i) mmap[ga[i]] = perm[i];
        if (try_match(a, b, groups_a, groups_b, gi + 1, mmap)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int m : ga) mmap[m] = -1;
    return false;
}

}  // namespace

bool categories_isomorphic(const GradedBasisCategory& a,
                           const GradedBasisCategory& b) {
    if (a.object_count() != b.object_count()) return false;
    if (a.morphisms().size() != b.morphisms().size()) return false;
    // order-preserving object bijection is forced: position i <-> position i
    std::map<std::tuple<int, int, int>, std::vector<int>> slots_a, slots_b;
    for (int m = 0; m < static_cast<int>(a.morphisms().size()); ++m) {
        const auto& mor = a.morphism(m);
        if (!mor.is_identity)
            slots_a[{mor.src, mor.dst, mor.degree}].push_back(m);
    }
    for (int m = 0; m < static_cast<int>(b.morphisms().size()); ++m) {
        const auto& mor = b.morphism(m);
        if (!mor.is_identity)
            slots_b[{mor.src, mor.dst, mor.degree}].push_back(m);
    }
    if (slots_a.size() != slots_b.size()) return false;
    std::vector<std::vector<int>> groups_a, groups_b;
    for (auto ia = slots_a.begin(), ib = slots_b.begin(); ia != slots_a.end();
         ++ia, ++ib) {
        if (ia->first != ib->first || ia->second.size() != ib->second.size())
            return false;
        groups_a.push_back(ia->second);
        groups_b.push_back(ib->second);
    }
    std::vector<int> mmap(a.morphisms().size(), -1);
    for (int x = 0; x < a.object_count(); ++x)
        mmap[a.identity_of(x)] = b.identity_of(x);
    return try_match(a, b, groups_a, groups_b, 0, mmap);
}

}  // namespace koszul
