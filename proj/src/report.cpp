#include "koszul/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "koszul/diagram.hpp"

namespace koszul {

namespace {

class Stopwatch {
public:
    double ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json header(const std::string& command) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    return j;
}

SignConvention pick_convention(const CliOptions& opt, const RelationPattern& pat) {
    if (opt.convention) return *opt.convention;
    return adjudicate_for_pattern(pat);
}

GradedBasisCategory build_dual_maybe_corrupted(const SequenceTable& seqs,
                                               SignConvention conv,
                                               const CliOptions& opt) {
    GradedBasisCategory dual = build_dual(seqs, conv);
    if (!opt.corrupt_mu_key) return dual;
    // The key names the arguments (a_d, ..., a_1) as comma-joined labels.
    std::vector<int> key;
    std::stringstream ss(*opt.corrupt_mu_key);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto m = dual.find_morphism(part);
        if (!m) throw ValidationError("corrupt-mu: unknown morphism label " + part);
        key.push_back(*m);
    }
    auto it = dual.mu_table().find(key);
    if (it == dual.mu_table().end())
        throw ValidationError("corrupt-mu: no mu entry at the given key");
    GradedBasisCategory::Builder b;
    for (const auto& label : dual.objects()) b.add_object(label);
    for (const auto& m : dual.morphisms())
        if (!m.is_identity) b.add_morphism(m.label, m.src, m.dst, m.degree);
    // indices are preserved: identities first per object, then morphisms in order
    for (const auto& [k, term] : dual.mu_table())
        b.set_mu(k, k == key ? -term.coeff : term.coeff, term.basis);
    return b.build();
}

}  // namespace

Json pattern_json(const RelationPattern& pat, const NormalizeLog& log) {
    Json j;
    j["n"] = pat.n();
    Json rels = Json::array();
    for (const auto& r : pat.relations()) rels.push_back(Json::array({r.s, r.t}));
    j["relations"] = rels;
    Json dropped = Json::array();
    for (const auto& r : log.dropped) dropped.push_back(Json::array({r.s, r.t}));
    j["dropped_relations"] = dropped;
    j["warnings"] = log.warnings;
    return j;
}

Json sequences_json(const SequenceTable& seqs) {
    Json j;
    Json d = Json::array(), dd = Json::array();
    for (int p = 0; p <= seqs.n(); ++p) {
        ExtVertex v = d_map(seqs.pattern(), p);
        d.push_back(v.finite() ? Json(v.value()) : Json(v.str()));
        ExtVertex w = d_dagger(seqs.pattern(), p);
        dd.push_back(w.finite() ? Json(w.value()) : Json(w.str()));
    }
    j["d"] = d;
    j["d_dagger"] = dd;
    Json plain = Json::array(), dagger = Json::array();
    for (int p = 0; p <= seqs.n(); ++p) {
        Json e;
        e["base"] = p;
        e["values"] = seqs.plain(p).values;
        e["length"] = seqs.l(p);
        plain.push_back(e);
        Json f;
        f["base"] = p;
        f["values"] = seqs.dagger(p).values;
        f["length"] = seqs.l_dagger(p);
        dagger.push_back(f);
    }
    j["plain"] = plain;
    j["dagger"] = dagger;
    return j;
}

Json category_json(const GradedBasisCategory& cat) {
    Json j;
    j["objects"] = cat.objects();
    Json morphisms = Json::array();
    for (const auto& m : cat.morphisms()) {
        if (m.is_identity) continue;
        Json e;
        e["label"] = m.label;
        e["src"] = cat.objects()[m.src];
        e["dst"] = cat.objects()[m.dst];
        e["degree"] = m.degree;
        morphisms.push_back(e);
    }
    j["morphisms"] = morphisms;
    Json mu = Json::array();
    for (const auto& [key, term] : cat.mu_table()) {
        bool unital = false;
        for (int m : key) unital = unital || cat.morphism(m).is_identity;
        if (unital) continue;
        Json e;
        e["arity"] = key.size();
        Json args = Json::array();
        for (int m : key) args.push_back(cat.morphism(m).label);
        e["args"] = args;
        if (!term.coeff.is_integer())
            throw std::logic_error("category_json: non-integer coefficient");
        e["sign"] = term.coeff.num();
        e["result"] = cat.morphism(term.basis).label;
        mu.push_back(e);
    }
    j["mu"] = mu;
    return j;
}

Json verdict_json(const PatternVerdict& v) {
    Json j;
    j["pattern"] = pattern_json(v.pattern, {});
    Json checks = Json::array();
    for (const auto& c : v.checks) {
        Json e;
        e["name"] = c.name;
        e["status"] = c.passed ? "pass" : "fail";
        e["checked"] = c.checked;
        e["failures"] = c.failures;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["status"] = v.all_passed() ? "pass" : "fail";
    return j;
}

RelationPattern parse_pattern_doc(const std::string& text, NormalizeLog* log) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("cannot parse pattern document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("relations"))
        throw ValidationError("pattern document needs integer field \"n\" and list field \"relations\"");
    if (!doc["n"].is_number_integer())
        throw ValidationError("field \"n\" must be an integer");
    if (doc["n"].get<long long>() > 10000)
        throw ValidationError("n is capped at 10000 (the tool targets exhaustive "
                              "small-scale verification)");
    std::vector<std::pair<int, int>> raw;
    for (const auto& r : doc["relations"]) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
            !r[1].is_number_integer())
            throw ValidationError("relations must be [s, t] integer pairs");
        raw.emplace_back(r[0].get<int>(), r[1].get<int>());
    }
    return RelationPattern::normalize(doc["n"].get<int>(), raw, log);
}

RunReport cmd_analyze(const std::string& doc_text, const CliOptions& opt) {
    Stopwatch watch;
    NormalizeLog log;
    RelationPattern pat = parse_pattern_doc(doc_text, &log);
    SequenceTable seqs(pat);
    SignConvention conv = pick_convention(opt, pat);
    GradedBasisCategory dual = build_dual_maybe_corrupted(seqs, conv, opt);

    RunReport rep;
    rep.machine = header("analyze");
    rep.machine["convention"] = convention_name(conv);
    rep.machine["pattern"] = pattern_json(pat, log);
    rep.machine["sequences"] = sequences_json(seqs);
    rep.machine["dual"] = category_json(dual);
    rep.machine["status"] = "ok";
    if (opt.timings) rep.machine["timings"] = {{"total_ms", watch.ms()}};
    rep.exit_code = kExitOk;
    return rep;
}

RunReport cmd_verify(const std::string& doc_text, const CliOptions& opt) {
    Stopwatch watch;
    NormalizeLog log;
    RelationPattern pat = parse_pattern_doc(doc_text, &log);
    SignConvention conv = pick_convention(opt, pat);

    PatternVerdict verdict;
    if (opt.corrupt_mu_key) {
        // verify the corrupted table only: associativity must now fail
        SequenceTable seqs(pat);
        GradedBasisCategory dual = build_dual_maybe_corrupted(seqs, conv, opt);
        AinfReport ainf = verify_ainfty(dual, pat.n() + 1);
        verdict.pattern = pat;
        CheckOutcome c{"associativity", ainf.passed,
                       static_cast<int>(ainf.chains_checked), {}};
        for (const auto& f : ainf.failures) c.failures.push_back(f.describe(dual));
        verdict.checks.push_back(std::move(c));
    } else {
        VerifyOptions vo;
        vo.convention = conv;
        verdict = verify_pattern(pat, vo);
    }

    RunReport rep;
    rep.machine = header("verify");
    rep.machine["convention"] = convention_name(conv);
    rep.machine["pattern"] = pattern_json(pat, log);
    rep.machine["report"] = verdict_json(verdict);
    rep.machine["status"] = verdict.all_passed() ? "pass" : "fail";
    if (opt.timings) rep.machine["timings"] = {{"total_ms", watch.ms()}};
    rep.exit_code = verdict.all_passed() ? kExitOk : kExitVerification;
    return rep;
}

RunReport cmd_sweep(const CliOptions& opt) {
    Stopwatch watch;
    if (opt.n_max < 0 || opt.n_max > opt.sweep_ceiling)
        throw ValidationError("sweep n_max must lie in [0, " +
                              std::to_string(opt.sweep_ceiling) +
                              "] (raise --ceiling to go further)");
    SweepConfig cfg;
    cfg.n_max = opt.n_max;
    cfg.jobs = opt.jobs;
    cfg.verify.oracle_n_limit = 6;
    if (opt.convention) cfg.verify.convention = *opt.convention;
    SweepResult res = run_sweep(cfg);

    RunReport rep;
    rep.machine = header("sweep");
    rep.machine["n_max"] = cfg.n_max;
    rep.machine["convention"] = convention_name(cfg.verify.convention);
    rep.machine["patterns"] = res.patterns;
    Json verdicts = Json::array();
    for (const auto& v : res.verdicts) verdicts.push_back(verdict_json(v));
    rep.machine["verdicts"] = verdicts;
    Json adj;
    adj["patterns_checked"] = res.adjudication.patterns_checked;
    adj["last_arg"] = Json{{"status", res.adjudication.last_arg_ok() ? "pass" : "fail"},
                           {"failures", res.adjudication.last_arg_failures}};
    adj["first_arg"] = Json{{"status", res.adjudication.first_arg_ok() ? "pass" : "fail"},
                            {"failures", res.adjudication.first_arg_failures}};
    adj["chosen"] = res.adjudication.decisive()
                        ? Json(convention_name(res.adjudication.chosen()))
                        : Json("none");
    rep.machine["adjudication"] = adj;
    if (auto fail = res.minimal_failure()) rep.machine["minimal_failure"] = *fail;
    rep.machine["status"] = res.all_passed() ? "pass" : "fail";
    if (opt.timings) rep.machine["timings"] = {{"total_ms", watch.ms()}};
    rep.exit_code = res.all_passed() ? kExitOk : kExitVerification;
    return rep;
}

RunReport cmd_diagram(const std::string& doc_text, const std::string& out_path,
                      const CliOptions&) {
    NormalizeLog log;
    RelationPattern pat = parse_pattern_doc(doc_text, &log);
    std::string svg = render_svg(pat);
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("io error: cannot open " + out_path);
        out << svg;
        if (!out) throw std::runtime_error("io error: cannot write " + out_path);
    }
    RunReport rep;
    rep.machine = header("diagram");
    rep.machine["pattern"] = pattern_json(pat, log);
    rep.machine["output"] = out_path;
    rep.machine["bytes"] = svg.size();
    rep.machine["status"] = "ok";
    rep.exit_code = kExitOk;
    return rep;
}

namespace {

void render_checks(std::ostringstream& out, const Json& checks) {
    for (const auto& c : checks) {
        out << "  [" << (c["status"] == "pass" ? "PASS" : "FAIL") << "] "
            << c["name"].get<std::string>() << " (" << c["checked"].get<int>()
            << " checks)\n";
        for (const auto& f : c["failures"]) out << "      " << f.get<std::string>() << "\n";
    }
}

void render_pattern(std::ostringstream& out, const Json& p) {
    out << "pattern: n=" << p["n"].get<int>() << " relations=[";
    bool first = true;
    for (const auto& r : p["relations"]) {
        if (!first) out << ",";
        out << "(" << r[0].get<int>() << "," << r[1].get<int>() << ")";
        first = false;
    }
    out << "]\n";
    for (const auto& w : p["warnings"])
        out << "warning: " << w.get<std::string>() << "\n";
}

}  // namespace

std::string RunReport::render_human() const {
    std::ostringstream out;
    const Json& j = machine;
    out << j["tool"].get<std::string>() << " " << j["version"].get<std::string>()
        << " - " << j["command"].get<std::string>() << "\n";
    if (j.contains("pattern")) render_pattern(out, j["pattern"]);
    if (j.contains("convention"))
        out << "convention: " << j["convention"].get<std::string>() << "\n";
    if (j.contains("sequences")) {
        const Json& s = j["sequences"];
        out << "d:        " << s["d"].dump() << "\n";
        out << "d_dagger: " << s["d_dagger"].dump() << "\n";
        out << "sequences (plain):\n";
        for (const auto& e : s["plain"])
            out << "  a(" << e["base"].get<int>() << ") = " << e["values"].dump()
                << "  l=" << e["length"].get<int>() << "\n";
        out << "sequences (dagger):\n";
        for (const auto& e : s["dagger"])
            out << "  a+(" << e["base"].get<int>() << ") = " << e["values"].dump()
                << "  l=" << e["length"].get<int>() << "\n";
    }
    if (j.contains("dual")) {
        const Json& d = j["dual"];
        out << "dual objects: ";
        bool first = true;
        for (const auto& o : d["objects"]) {
            if (!first) out << " < ";
            out << o.get<std::string>();
            first = false;
        }
        out << "\nmorphisms:\n";
        for (const auto& m : d["morphisms"])
            out << "  " << m["label"].get<std::string>() << ": "
                << m["src"].get<std::string>() << " -> " << m["dst"].get<std::string>()
                << "  deg " << m["degree"].get<int>() << "\n";
        out << "mu entries (non-unital):\n";
        for (const auto& e : d["mu"]) {
            out << "  mu^" << e["arity"].get<std::size_t>() << "(";
            bool f2 = true;
            for (const auto& a : e["args"]) {
                if (!f2) out << ",";
                out << a.get<std::string>();
                f2 = false;
            }
            out << ") = " << (e["sign"].get<long long>() > 0 ? "+" : "-")
                << e["result"].get<std::string>() << "\n";
        }
    }
    if (j.contains("report")) render_checks(out, j["report"]["checks"]);
    if (j.contains("verdicts")) {
        out << "patterns: " << j["patterns"].get<long long>() << "\n";
        for (const auto& v : j["verdicts"]) {
            out << (v["status"] == "pass" ? "[PASS] " : "[FAIL] ");
            out << "n=" << v["pattern"]["n"].get<int>() << " relations="
                << v["pattern"]["relations"].dump() << "\n";
            if (v["status"] != "pass") render_checks(out, v["checks"]);
        }
    }
    if (j.contains("adjudication")) {
        const Json& a = j["adjudication"];
        out << "adjudication: last-arg "
            << a["last_arg"]["status"].get<std::string>() << ", first-arg "
            << a["first_arg"]["status"].get<std::string>() << ", chosen "
            << a["chosen"].get<std::string>() << "\n";
    }
    if (j.contains("minimal_failure"))
        out << "minimal failure: " << j["minimal_failure"].get<std::string>() << "\n";
    if (j.contains("output"))
        out << "wrote " << j["output"].get<std::string>() << " ("
            << j["bytes"].get<std::size_t>() << " bytes)\n";
    if (j.contains("timings"))
        out << "time: " << j["timings"]["total_ms"].get<double>() << " ms\n";
    out << "status: " << j["status"].get<std::string>() << "\n";
    return out.str();
}

std::string RunReport::render(ReportFormat f) const {
    if (f == ReportFormat::Machine) return machine.dump(2) + "\n";
    return render_human();
}

}  // namespace koszul
