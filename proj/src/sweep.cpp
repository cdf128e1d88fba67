#include "koszul/sweep.hpp"

#include <omp.h>

#include <algorithm>

#include "koszul/diagram.hpp"
#include "koszul/ext_oracle.hpp"

namespace koszul {

bool PatternVerdict::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckOutcome& c) { return c.passed; });
}

std::string PatternVerdict::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed)
            return c.name + ": " +
                   (c.failures.empty() ? std::string("failed") : c.failures.front());
    return "";
}

namespace {

CheckOutcome from_report(const std::string& name, const CheckReport& rep) {
    return {name, rep.passed, rep.checked, rep.failures};
}

CheckOutcome from_report(const std::string& name, const CompareReport& rep) {
    return {name, rep.passed, rep.checked, rep.failures};
}

CheckOutcome lemma_checks(const SequenceTable& seqs) {
    CheckOutcome out{"sequence-lemmas", true, 0, {}};
    const auto& pat = seqs.pattern();
    int n = pat.n();
    auto fail = [&](const std::string& msg) {
        out.passed = false;
        out.failures.push_back(msg);
    };
    long long sum_plain = 0, sum_dagger = 0;
    for (int p = 0; p <= n; ++p) {
        const auto& pl = seqs.plain(p);
        const auto& dg = seqs.dagger(p);
        sum_plain += pl.length();
        sum_dagger += dg.length();
        ++out.checked;
        for (int i = 1; i <= pl.length(); ++i)
            if (!(0 <= pl.at(i) && pl.at(i) < pl.at(i - 1)))
                fail("plain sequence at p=" + std::to_string(p) +
                     " is not strictly decreasing nonnegative: " + pl.str());
        for (int i = 1; i <= dg.length(); ++i)
            if (!(dg.at(i) <= n && dg.at(i) > dg.at(i - 1)))
                fail("dagger sequence at p=" + std::to_string(p) +
                     " is not strictly increasing within range: " + dg.str());
        // monotonicity of d and d-dagger
        if (p > 0) {
            if (d_map(pat, p - 1) > d_map(pat, p)) fail("d not monotone at p=" + std::to_string(p));
            if (d_dagger(pat, p - 1) > d_dagger(pat, p))
                fail("d-dagger not monotone at p=" + std::to_string(p));
        }
        // l_p >= 2 exactly at relation targets, with the matching interval
        bool is_target = false;
        int src = -1;
        for (const auto& r : pat.relations())
            if (r.t == p) { is_target = true; src = r.s; }
        if ((pl.length() >= 2) != is_target)
            fail("l_p >= 2 mismatch with target membership at p=" + std::to_string(p));
        if (is_target && pl.length() >= 2 && pl.at(2) != src)
            fail("a_2 at target p=" + std::to_string(p) + " is not the relation source");
    }
    // counting duality plus the same count as an intersection-pair set
    long long pairs = 0;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i < j; ++i)
            if (seqs.plain_index(j, i)) ++pairs;
    long long pairs_via_dagger = 0;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (seqs.dagger_index(i, j)) ++pairs_via_dagger;
    if (sum_plain != sum_dagger || sum_plain != pairs || pairs != pairs_via_dagger)
        fail("counting duality fails: sum l_p=" + std::to_string(sum_plain) +
             " sum l_p-dagger=" + std::to_string(sum_dagger) +
             " pairs=" + std::to_string(pairs) + "/" + std::to_string(pairs_via_dagger));
    return out;
}

CheckOutcome hom_table_check(const SequenceTable& seqs, const GradedBasisCategory& dual) {
    CheckOutcome out{"hom-table-vs-sequences", true, 0, {}};
    int n = seqs.n();
    int dmax = n + 2;
    for (const auto& m : dual.morphisms()) dmax = std::max(dmax, m.degree + 1);
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            for (int d = 0; d <= dmax; ++d) {
                ++out.checked;
                int expect = 0;
                if (auto idx = seqs.plain_index(p, q); idx && *idx == d &&
                                                       d <= seqs.l(p))
                    expect = 1;
                if (p == q && d == 0) expect = 1;
                int got = dual.hom_dim(n - p, n - q, d);
                if (got != expect) {
                    out.passed = false;
                    out.failures.push_back("hom^" + std::to_string(d) + "(B(" +
                                           std::to_string(p) + "),B(" +
                                           std::to_string(q) + ")) dim " +
                                           std::to_string(got) + " expected " +
                                           std::to_string(expect));
                }
            }
    return out;
}

CheckOutcome unitality_check(const SequenceTable& seqs) {
    CheckOutcome out{"unitality", true, 0, {}};
    for (SignConvention conv : {SignConvention::LastArg, SignConvention::FirstArg}) {
        GradedBasisCategory dual = build_dual(seqs, conv);
        for (int m = 0; m < static_cast<int>(dual.morphisms().size()); ++m) {
            const auto& mor = dual.morphism(m);
            int id_src = dual.identity_of(mor.src);
            int id_dst = dual.identity_of(mor.dst);
            ++out.checked;
            SignedTerm right = dual.mu_eval(std::vector<int>{m, id_src});
            SignedTerm left = dual.mu_eval(std::vector<int>{id_dst, m});
            bool ok_right = right.basis == m && right.coeff == Rat(1);
            Rat want_left = Rat(mor.degree % 2 == 0 ? 1 : -1);
            bool ok_left = left.basis == m && left.coeff == want_left;
            if (mor.is_identity) ok_left = left.basis == m && left.coeff == Rat(1);
            if (!ok_right || !ok_left) {
                out.passed = false;
                out.failures.push_back("unitality fails for " + mor.label + " under " +
                                       convention_name(conv));
            }
        }
    }
    return out;
}

CheckOutcome oracle_check(const RelationPattern& pat, const SequenceTable& seqs,
                          const GradedBasisCategory& dual) {
    CheckOutcome out{"ext-oracle-agreement", true, 0, {}};
    int n = pat.n();
    int dmax = n + 1;
    for (int p = 0; p <= n; ++p) {
        ExtTable tab = resolve_simple(pat, p);
        if (!tab.terminated) {
            out.passed = false;
            out.failures.push_back("resolution of S(" + std::to_string(p) +
                                   ") does not terminate by d=" + std::to_string(n + 2));
            continue;
        }
        if (tab.length != seqs.l(p)) {
            out.passed = false;
            out.failures.push_back("resolution length of S(" + std::to_string(p) +
                                   ") is " + std::to_string(tab.length) +
                                   " but l_p=" + std::to_string(seqs.l(p)));
        }
        for (int q = 0; q <= n; ++q)
            for (int d = 0; d <= dmax; ++d) {
                ++out.checked;
                int ext = tab.dim(d, q);
                int hom = dual.hom_dim(n - p, n - q, d);
                if (ext != hom) {
                    out.passed = false;
                    out.failures.push_back(
                        "Ext^" + std::to_string(d) + "(S(" + std::to_string(p) + "),S(" +
                        std::to_string(q) + ")) = " + std::to_string(ext) +
                        " but hom dim = " + std::to_string(hom));
                }
            }
    }
    return out;
}

CheckOutcome chain_bijection_check(const SequenceTable& seqs,
                                   const GradedBasisCategory& dual) {
    CheckOutcome out{"chains-vs-mu-entries", true, 0, {}};
    auto chains = admissible_chains(seqs, dual);
    std::vector<GradedBasisCategory::Key> from_chains;
    for (const auto& ch : chains) {
        ++out.checked;
        if (ch.value.is_zero()) {
            out.passed = false;
            out.failures.push_back("admissible chain has zero mu value");
            continue;
        }
        GradedBasisCategory::Key key;
        const auto& v = ch.vertices;
        for (std::size_t r = 1; r < v.size(); ++r)
            key.push_back(*dual.find_morphism(eta_label(v[r], v[r - 1])));
        from_chains.push_back(key);
    }
    std::vector<GradedBasisCategory::Key> from_table;
    for (const auto& [key, term] : dual.mu_table()) {
        bool unital = std::any_of(key.begin(), key.end(), [&](int m) {
            return dual.morphism(m).is_identity;
        });
        if (!unital) from_table.push_back(key);
    }
    std::sort(from_chains.begin(), from_chains.end());
    std::sort(from_table.begin(), from_table.end());
    if (from_chains != from_table) {
        out.passed = false;
        out.failures.push_back("admissible chains and non-unital mu entries differ: " +
                               std::to_string(from_chains.size()) + " chains vs " +
                               std::to_string(from_table.size()) + " entries");
    }
    return out;
}

}  // namespace

PatternVerdict verify_pattern(const RelationPattern& pat, const VerifyOptions& opt) {
    PatternVerdict v;
    v.pattern = pat;
    SequenceTable seqs(pat);
    int max_chain = opt.max_chain.value_or(pat.n() + 1);

    v.checks.push_back(lemma_checks(seqs));
    v.checks.push_back(from_report("inversion-formula", check_inversion(pat)));
    v.checks.push_back(from_report("dagger-bound", check_dagger_bound(pat)));

    GradedBasisCategory dual = build_dual(seqs, opt.convention);
    AinfReport ainf = verify_ainfty(dual, max_chain);
    CheckOutcome ac{"associativity", ainf.passed,
                    static_cast<int>(ainf.chains_checked), {}};
    for (const auto& f : ainf.failures) ac.failures.push_back(f.describe(dual));
    v.checks.push_back(std::move(ac));

    v.checks.push_back(hom_table_check(seqs, dual));
    v.checks.push_back(unitality_check(seqs));
    v.checks.push_back(chain_bijection_check(seqs, dual));

    if (pat.n() <= opt.oracle_n_limit)
        v.checks.push_back(oracle_check(pat, seqs, dual));

    if (pat.is_quadratic())
        v.checks.push_back(from_report("quadratic-duality",
                                       compare_quadratic(pat, opt.convention)));

    if (auto k = detect_bnk(pat))
        v.checks.push_back(from_report(
            "closed-form", compare_with_closed_form(pat.n(), *k, opt.convention)));

    return v;
}

bool SweepResult::all_passed() const {
    if (config.adjudicate && !adjudication.decisive()) return false;
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const PatternVerdict& v) { return v.all_passed(); });
}

std::optional<std::string> SweepResult::minimal_failure() const {
    for (const auto& v : verdicts)
        if (!v.all_passed()) return "{" + v.pattern.str() + "} " + v.first_failure();
    if (config.adjudicate && !adjudication.decisive())
        return std::string("sign adjudication: both conventions fail");
    return std::nullopt;
}

namespace {

SweepResult run_sweep_impl(const SweepConfig& cfg, bool parallel) {
    SweepResult res;
    res.config = cfg;
    auto patterns = enumerate_patterns_up_to(cfg.n_max);
    res.patterns = static_cast<long long>(patterns.size());
    res.verdicts.resize(patterns.size());
    int count = static_cast<int>(patterns.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, cfg.jobs))
        for (int i = 0; i < count; ++i)
            res.verdicts[i] = verify_pattern(patterns[i], cfg.verify);
    } else {
        for (int i = 0; i < count; ++i)
            res.verdicts[i] = verify_pattern(patterns[i], cfg.verify);
    }
    if (cfg.adjudicate)
        res.adjudication = adjudicate_sign(cfg.n_max, parallel ? cfg.jobs : 1);
    return res;
}

}  // namespace

SweepResult run_sweep_serial(const SweepConfig& cfg) { return run_sweep_impl(cfg, false); }

SweepResult run_sweep_parallel(const SweepConfig& cfg) { return run_sweep_impl(cfg, true); }

SweepResult run_sweep(const SweepConfig& cfg) {
    return cfg.jobs > 1 ? run_sweep_parallel(cfg) : run_sweep_serial(cfg);
}

}  // namespace koszul
