// plcurve: invariants of plane curve singularities and the Pluecker formula in characteristic p.
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "plc/corpus.hpp"
#include "plc/oracle.hpp"
#include "plc/parse.hpp"

using namespace plc;

namespace {

enum Exit { kOk = 0, kUsage = 1, kRelationFailure = 2, kOracleOverflow = 3 };

struct Common {
    std::uint64_t p = 0;
    std::string field;
    std::string poly;
    std::uint64_t seed = 1;
    int prec = 10;
    bool json = false;
    bool timings = false;
    int gamma_degree = 6;
};

Field pick_field(const Common& c) { return c.field.empty() ? field_for_char(c.p) : FieldCtx::from_descriptor(c.field); }

void emit(const Json& j, const std::string& text, bool json) {
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

AnalysisOptions options(const Common& c) {
    AnalysisOptions opt;
    opt.seed = c.seed;
    opt.budget.degree = c.gamma_degree;
    return opt;
}

int local_analyze(const Common& c, bool branches, bool tree, bool verify) {
    Field K = pick_field(c);
    const LocalData d = local_data(parse_poly(c.poly, K));
    const InvariantReport rep = analyze(d, options(c));
    Json j = to_json(rep, c.timings);
    std::string text = to_text(rep);
    if (branches) {
        j["branches"] = branches_json(d.bs, c.prec);
        text += "branches:\n";
        for (const auto& b : j["branches"])
            text += "  x = " + b["x"].get<std::string>() + ", y = " + b["y"].get<std::string>() + " (weight " +
                    std::to_string(b["weight"].get<int>()) + ", " + b["field"].get<std::string>() + ")\n";
    }
    if (tree) {
        j["tree"] = tree_json(d.tree);
        text += "tree of infinitely near points:\n" + tree_text(d.tree);
    }
    const int failed = failed_relations(rep.relations);
    if (verify) {
        j = Json{{"char", rep.p}, {"poly", rep.poly}, {"failed", failed}, {"relations", relations_json(rep.relations)}};
        text = "";
        for (const auto& r : rep.relations) text += r.id + " " + r.status + "  " + r.detail + "\n";
        text += std::to_string(failed) + " failed\n";
    }
    emit(j, text, c.json);
    return failed ? kRelationFailure : kOk;
}

int projective_analyze(const Common& c, bool assume_irreducible) {
    Field K = pick_field(c);
    ProjectiveOptions opt;
    opt.local = options(c);
    opt.assume_irreducible = assume_irreducible;
    const TriPoly F = parse_projective(c.poly, K);
    PluckerReport rep;
    try {
        rep = plucker_analysis(F, opt);
    } catch (const PositiveDimensionalSingularLocus& e) {
        // a complete answer for a non-reduced curve, not a usage error
        Json j{{"char", K->characteristic()}, {"field", field_label(K)}, {"poly", F.str()}, {"d", F.degree()},
               {"singular_locus", "positive dimensional"}, {"verdict", "rejected"}, {"reason", e.what()}};
        emit(j, "C: " + F.str() + " = 0 over " + field_label(K) + ", d = " + std::to_string(F.degree()) +
                    "\n  rejected: " + e.what() + "\n",
             c.json);
        return kOk;
    }
    emit(to_json(rep, c.timings), to_text(rep), c.json);
    for (const auto& ch : rep.checks)
        if (ch.status == "fail") return kRelationFailure;
    return kOk;
}

std::vector<std::uint64_t> parse_chars(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto comma = s.find(',', pos);
        out.push_back(std::stoull(s.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int corpus_run(CorpusSpec spec, const std::string& chars, const std::vector<int>& mix, int jobs, bool items,
               bool json, const std::string& out) {
    spec.chars = parse_chars(chars);
    if (mix.size() == 3) {
        spec.mix_random = mix[0];
        spec.mix_branch = mix[1];
        spec.mix_examples = mix[2];
    }
    const CorpusSummary s = run_corpus(spec, jobs);
    const Json j = to_json(s, items);
    if (!out.empty()) std::ofstream(out) << j.dump(2) << "\n";
    std::string text = "corpus: " + std::to_string(s.items.size()) + " items, " + std::to_string(s.passed) +
                       " passed, " + std::to_string(s.failed) + " failed\n";
    text += "oracles: " + std::to_string(s.oracle_agree) + " agree, " + std::to_string(s.oracle_disagree) +
            " disagree, " + std::to_string(s.oracle_inconclusive) + " inconclusive (skip rate " +
            std::to_string(s.skip_rate) + ")\n";
    text += "p > kappa: " + std::to_string(s.big_p_items) + " items, " + std::to_string(s.big_p_exceptions) +
            " exceptions\n";
    for (const auto& f : j["failures"]) text += "FAIL " + f["reproduce"].get<std::string>() + "\n";
    emit(j, text, json);
    if (s.failed) return kRelationFailure;
    if (s.skip_rate >= 0.1) return kOracleOverflow;
    return kOk;
}

struct Tally {
    int agree = 0, disagree = 0, inconclusive = 0;
    int rejected = 0; // inputs outside the oracle's domain (reducible curves)
    Json diffs = Json::array();
    void add(const std::string& what, const oracle::Answer& a, ExtNat main) {
        if (!a.conclusive) {
            ++inconclusive;
            return;
        }
        if (a.value == main) {
            ++agree;
            return;
        }
        ++disagree;
        diffs.push_back({{"input", what}, {"oracle", ext_json(a.value)}, {"main", ext_json(main)}, {"note", a.note}});
    }
};

int oracle_compare(const std::string& suite, CorpusSpec spec, const std::string& chars, bool json) {
    spec.chars = parse_chars(chars);
    Tally t;
    if (suite == "intersection" || suite == "delta") {
        for (const auto& item : generate_corpus(spec)) {
            Field K = field_for_char(item.p);
            const BiPoly f = parse_poly(item.poly, K);
            const std::string what = item.poly + " over " + K->descriptor();
            if (suite == "delta") {
                t.add(what, oracle::delta_semigroup(f), delta(f));
                continue;
            }
            Rng rng(spec.seed + static_cast<std::uint64_t>(item.index));
            const BiPoly g = random_singular(K, rng, 3) + BiPoly::y(K) * K->random(rng);
            t.add(what + " with " + g.str(), oracle::i_resultant(f, g, spec.seed), intersection_multiplicity(f, g));
        }
    } else if (suite == "dual") {
        const char* fixed[] = {"z*y^2-x^3-x^2*z", "z*y^2-x^3", "x^2+y*z", "x^3+y^3+z^3", "x^4+y^4+z^4",
                               "y^2*z^2-x^4-x^3*z", "(x^2+y^2)^2+3*x^2*y*z-y^3*z"};
        std::vector<std::pair<TriPoly, std::string>> curves;
        for (std::uint64_t p : {0ULL, 13ULL, 17ULL}) {
            Field K = field_for_char(p);
            for (const char* s : fixed) curves.emplace_back(parse_projective(s, K), s);
        }
        Rng rng(spec.seed);
        for (int i = 0; i < spec.count; ++i) {
            Field K = field_for_char(i % 2 ? 13 : 0);
            // a quartic with a singular point at (0:0:1)
            const BiPoly f = random_singular(K, rng, 4) + BiPoly::monomial(K->one(), 4, 0) +
                             BiPoly::monomial(K->one(), 0, 4);
            curves.emplace_back(TriPoly::homogenize(f), f.str());
        }
        for (const auto& [F, s] : curves) {
            const std::string what = F.str() + " over " + F.field()->descriptor();
            try {
                const PluckerReport rep = plucker_analysis(F);
                const oracle::Answer a = oracle::dual_degree_elim(F, spec.seed);
                if (!rep.product) {
                    ++t.inconclusive;
                    continue;
                }
                t.add(what, a, *rep.product);
            } catch (const NotIrreducible&) {
                ++t.rejected;
            } catch (const NotReduced&) {
                ++t.rejected;
            } catch (const PositiveDimensionalSingularLocus&) {
                ++t.rejected;
            }
        }
    } else {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kUsage;
    }
    const int total = t.agree + t.disagree + t.inconclusive;
    const double skip = total ? static_cast<double>(t.inconclusive) / total : 0.0;
    Json j{{"suite", suite},     {"compared", total},  {"agree", t.agree}, {"disagree", t.disagree},
           {"inconclusive", t.inconclusive}, {"rejected", t.rejected}, {"skip_rate", skip}, {"diffs", t.diffs}};
    emit(j,
         suite + ": " + std::to_string(t.agree) + " agree, " + std::to_string(t.disagree) + " disagree, " +
             std::to_string(t.inconclusive) + " inconclusive\n",
         json);
    if (t.disagree) return kRelationFailure;
    if (skip >= 0.1) return kOracleOverflow;
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of plane curve singularities in any characteristic"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&](CLI::App* s, bool needs_poly) {
        s->add_option("--char", c.p, "characteristic (0 or a prime)");
        s->add_option("--field", c.field, "field descriptor (QQ, Fp:7, Fq:3^2), overrides --char");
        auto* o = s->add_option("--poly", c.poly, "polynomial");
        if (needs_poly) o->required();
        s->add_option("--seed", c.seed, "random seed");
        s->add_option("--prec", c.prec, "number of series coefficients shown");
        s->add_option("--gamma-degree", c.gamma_degree, "degree budget of the gamma search");
        s->add_flag("--json", c.json, "emit JSON");
        s->add_flag("--timings", c.timings, "include timings in the JSON output");
    };

    auto* local = app.add_subcommand("local", "local invariants at the origin");
    local->require_subcommand(1);
    auto* la = local->add_subcommand("analyze", "full report");
    add_common(la, true);
    bool emit_branches = false, emit_tree = false;
    la->add_flag("--emit-branches", emit_branches, "print branch parametrizations");
    la->add_flag("--emit-tree", emit_tree, "print the tree of infinitely near points");
    auto* lv = local->add_subcommand("verify", "relation checks only");
    add_common(lv, true);

    auto* proj = app.add_subcommand("projective", "projective plane curves");
    proj->require_subcommand(1);
    auto* pa = proj->add_subcommand("analyze", "singular points and the Pluecker formula");
    add_common(pa, true);
    bool assume_irreducible = false;
    pa->add_flag("--assume-irreducible", assume_irreducible, "skip the irreducibility screen");

    CorpusSpec spec;
    std::string chars = "2,3,5,7";
    std::vector<int> mix;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool items = false;
    std::string out;
    auto* corpus = app.add_subcommand("corpus", "seeded corpora");
    corpus->require_subcommand(1);
    auto* cr = corpus->add_subcommand("run", "verify relations and oracles on a generated corpus");
    add_common(cr, false);
    cr->add_option("--chars", chars, "comma separated characteristics");
    cr->add_option("--max-degree", spec.max_degree, "maximal degree");
    cr->add_option("--count", spec.count, "number of items");
    cr->add_option("--mix", mix, "percentages random,branch,example")->expected(3);
    cr->add_option("--jobs", jobs, "worker threads");
    cr->add_flag("--items", items, "include every item report in the JSON");
    cr->add_option("--out", out, "also write the JSON summary to this file");

    auto* orc = app.add_subcommand("oracle", "independent brute-force checks");
    orc->require_subcommand(1);
    auto* oc = orc->add_subcommand("compare", "compare an oracle with the main computation");
    add_common(oc, false);
    std::string suite = "intersection";
    oc->add_option("--suite", suite, "intersection, delta or dual")->check(CLI::IsMember({"intersection", "delta", "dual"}));
    oc->add_option("--chars", chars, "comma separated characteristics");
    oc->add_option("--count", spec.count, "number of inputs");
    oc->add_option("--max-degree", spec.max_degree, "maximal degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        if (la->parsed()) return local_analyze(c, emit_branches, emit_tree, false);
        if (lv->parsed()) return local_analyze(c, false, false, true);
        if (pa->parsed()) return projective_analyze(c, assume_irreducible);
        if (cr->parsed()) {
            if (cr->count("--seed") == 0) c.seed = spec.seed;
            spec.seed = c.seed;
            return corpus_run(spec, chars, mix, jobs, items, c.json, out);
        }
        if (oc->parsed()) {
            if (oc->count("--count") == 0) spec.count = 50;
            spec.seed = c.seed;
            return oracle_compare(suite, spec, chars, c.json);
        }
    } catch (const SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
