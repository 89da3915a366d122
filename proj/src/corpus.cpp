#include "plc/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "plc/oracle.hpp"
#include "plc/parse.hpp"

namespace plc {

Field field_for_char(std::uint64_t p) { return p == 0 ? FieldCtx::rationals() : FieldCtx::prime(p); }

BiPoly random_singular(Field K, Rng& rng, int max_degree) {
    std::uniform_int_distribution<int> coin(0, 2), top(2, std::max(2, max_degree));
    for (;;) {
        const int deg = top(rng);
        BiPoly f(K);
        for (int d = 2; d <= deg; ++d)
            for (int i = 0; i <= d; ++i)
                if (coin(rng) == 0) f.set(i, d - i, K->random(rng));
        if (f.is_zero() || f.order() < 2) continue;
        if (squarefree_part(f).is_reduced) return f;
    }
}

namespace {

using Matrix = std::vector<std::vector<BiPoly>>;

BiPoly det(const Matrix& M, Field K) {
    const std::size_t n = M.size();
    if (n == 1) return M[0][0];
    BiPoly s(K);
    for (std::size_t c = 0; c < n; ++c) {
        if (M[0][c].is_zero()) continue;
        Matrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<BiPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(M[r][k]);
            minor.push_back(row);
        }
        const BiPoly t = M[0][c] * det(minor, K);
        s = c % 2 == 0 ? s + t : s - t;
    }
    return s;
}

} // namespace

BiPoly branch_polynomial(Field K, int m, const std::vector<Elem>& q) {
    Matrix M(m, std::vector<BiPoly>(m, BiPoly(K)));
    for (int c = 0; c < m; ++c)
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (q[j].is_zero()) continue;
            const int e = static_cast<int>(j) + c;
            M[e % m][c] += BiPoly::monomial(q[j], e / m, 0);
        }
    const BiPoly y = BiPoly::y(K);
    for (int i = 0; i < m; ++i) M[i][i] = y - M[i][i];
    return squarefree_part(det(M, K)).part.normalized();
}

BiPoly random_branch(Field K, Rng& rng, int max_degree) {
    if (max_degree < 3) throw MathError("a singular branch needs degree at least 3");
    const int mmax = std::min(4, max_degree - 1);
    std::uniform_int_distribution<int> mdist(2, mmax), coin(0, 1);
    for (;;) {
        const int m = mdist(rng);
        // smallest exponent above m coprime to m keeps the parametrization primitive
        int j0 = m + 1;
        while (std::gcd(j0, m) != 1) ++j0;
        if (j0 > max_degree) continue;
        std::vector<Elem> q(max_degree + 1, K->zero());
        if (coin(rng)) q[m] = K->random(rng);
        for (int j = m + 1; j <= max_degree; ++j)
            if (coin(rng)) q[j] = K->random(rng);
        while (q[j0].is_zero()) q[j0] = K->random(rng);
        BiPoly f = branch_polynomial(K, m, q);
        if (f.order() < 2 || f.degree() > max_degree) continue;
        if (coin(rng)) f = f.swap();
        return f;
    }
}

namespace {

struct Example {
    const char* poly;
    std::uint64_t p;
};

const Example kExamples[] = {
    {"x^3+x^4+y^5", 3},
    {"(x+y)^3+(x+y)^4+y^5", 3},
    {"y^2+x^3", 2},
    {"y^2+x^3", 3},
    {"x*y", 2},
    {"(y^2-x^3)*(y^2+x^3)", 0},
    {"y^2-x^3", 0},
    {"x*(y^2-x^3)", 5},
    {"(y^2-x^3)*(y-x)", 0},
    {"x*y", 0},
    {"y^3+x^4", 5},
    {"x^2*y+y^4", 7},
    {"y^2+x^5", 7},
    {"(y^2-x^3)*(y-x)", 5},
};

} // namespace

std::vector<CorpusItem> generate_corpus(const CorpusSpec& spec) {
    std::vector<CorpusItem> out;
    if (spec.chars.empty()) throw MathError("corpus needs at least one characteristic");
    Rng kinds(spec.seed);
    int examples = 0;
    std::vector<const Example*> usable;
    for (const auto& e : kExamples)
        if (std::find(spec.chars.begin(), spec.chars.end(), e.p) != spec.chars.end() &&
            parse_poly(e.poly, field_for_char(e.p)).degree() <= spec.max_degree)
            usable.push_back(&e);
    const int total = std::max(1, spec.mix_random + spec.mix_branch + spec.mix_examples);
    for (int i = 0; i < spec.count; ++i) {
        CorpusItem it;
        it.index = i;
        Rng rng(spec.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i));
        const int roll = static_cast<int>(kinds() % static_cast<std::uint64_t>(total));
        if (roll < spec.mix_random) {
            it.kind = "random";
        } else if (roll < spec.mix_random + spec.mix_branch) {
            it.kind = "branch";
        } else {
            it.kind = usable.empty() ? "random" : "example";
        }
        if (it.kind == "example") {
            const Example& e = *usable[examples++ % usable.size()];
            it.p = e.p;
            it.poly = parse_poly(e.poly, field_for_char(e.p)).str();
        } else {
            it.p = spec.chars[rng() % spec.chars.size()];
            Field K = field_for_char(it.p);
            if (it.kind == "random") {
                it.poly = random_singular(K, rng, spec.max_degree).str();
            } else {
                BiPoly f = random_branch(K, rng, spec.max_degree);
                // sometimes add a second branch (singular or smooth) in general position
                const int room = spec.max_degree - f.degree();
                if (room >= 1 && rng() % 2 == 0) {
                    for (int tries = 0; tries < 8; ++tries) {
                        BiPoly g(K);
                        if (room >= 3 && rng() % 2 == 0) {
                            g = random_branch(K, rng, room);
                        } else {
                            g = BiPoly::y(K);
                            for (int e = 1; e <= room; ++e) g -= BiPoly::monomial(K->random(rng), e, 0);
                            if (rng() % 2 == 0) g = g.swap();
                        }
                        const BiPoly fg = f * g;
                        if (squarefree_part(fg).is_reduced) {
                            f = fg;
                            break;
                        }
                    }
                }
                it.poly = f.str();
            }
        }
        out.push_back(it);
    }
    return out;
}

namespace {

OracleCheck compare(const std::string& name, const oracle::Answer& a, ExtNat main) {
    if (!a.conclusive) return {name, "inconclusive", a.note};
    const bool ok = a.value == main;
    return {name, ok ? "agree" : "disagree", "oracle " + a.value.str() + ", main " + main.str() + " (" + a.note + ")"};
}

std::string quote_poly(const std::string& s) { return "\"" + s + "\""; }

} // namespace

CorpusItemResult run_item(const CorpusItem& item, std::uint64_t seed, bool oracles) {
    CorpusItemResult res;
    res.item = item;
    const std::uint64_t s = seed + static_cast<std::uint64_t>(item.index);
    res.reproduce = "plcurve local verify --char " + std::to_string(item.p) + " --poly " + quote_poly(item.poly) +
                    " --seed " + std::to_string(s);
    try {
        Field K = field_for_char(item.p);
        const BiPoly f = parse_poly(item.poly, K);
        const LocalData d = local_data(f);
        AnalysisOptions opt;
        opt.seed = s;
        res.report = analyze(d, opt);
        res.ok = failed_relations(res.report.relations) == 0;
        if (oracles) {
            Rng rng(s * 31 + 7);
            BiPoly g(K);
            while (g.is_zero()) {
                for (int deg = 1; deg <= 3; ++deg)
                    for (int i = 0; i <= deg; ++i)
                        if (rng() % 3 == 0) g.set(i, deg - i, K->random(rng));
            }
            res.oracles.push_back(
                compare("intersection", oracle::i_resultant(f, g, s), intersection_multiplicity(d, g)));
            const BiPoly polar = f.differentiate(Var::X) + f.differentiate(Var::Y) * K->random(rng);
            if (!polar.is_zero() && polar.coeff(0, 0).is_zero())
                res.oracles.push_back(
                    compare("intersection", oracle::i_resultant(f, polar, s), intersection_multiplicity(d, polar)));
            res.oracles.push_back(compare("delta", oracle::delta_semigroup(f), res.report.delta));
            for (const auto& o : res.oracles)
                if (o.status == "disagree") res.ok = false;
        }
    } catch (const MathError& e) {
        res.ok = false;
        res.error = e.what();
    }
    return res;
}

CorpusSummary run_corpus(const CorpusSpec& spec, int jobs, bool oracles) {
    CorpusSummary sum;
    sum.spec = spec;
    const auto items = generate_corpus(spec);
    sum.items.resize(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) sum.items[i] = run_item(items[i], spec.seed, oracles);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& r : sum.items) {
        (r.ok ? sum.passed : sum.failed)++;
        for (const auto& o : r.oracles) {
            if (o.status == "agree") ++sum.oracle_agree;
            if (o.status == "disagree") ++sum.oracle_disagree;
            if (o.status == "inconclusive") ++sum.oracle_inconclusive;
        }
        if (!r.error.empty()) continue;
        const auto& rep = r.report;
        if (rep.p == 0 || (rep.kappa.finite() && rep.p > static_cast<std::uint64_t>(rep.kappa.value()))) {
            ++sum.big_p_items;
            for (const auto& rel : rep.relations)
                if (rel.id == "R6" && rel.status != "pass") ++sum.big_p_exceptions;
        }
    }
    const int total = sum.oracle_agree + sum.oracle_disagree + sum.oracle_inconclusive;
    sum.skip_rate = total ? static_cast<double>(sum.oracle_inconclusive) / total : 0.0;
    return sum;
}

Json to_json(const CorpusSummary& s, bool with_items) {
    Json j;
    Json chars = Json::array();
    for (auto p : s.spec.chars) chars.push_back(p);
    j["settings"] = {{"chars", chars},
                 {"max_degree", s.spec.max_degree},
                 {"count", s.spec.count},
                 {"seed", s.spec.seed},
                 {"mix", {s.spec.mix_random, s.spec.mix_branch, s.spec.mix_examples}}};
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["oracle"] = {{"agree", s.oracle_agree},
                   {"disagree", s.oracle_disagree},
                   {"inconclusive", s.oracle_inconclusive},
                   {"skip_rate", s.skip_rate}};
    j["big_p"] = {{"items", s.big_p_items}, {"exceptions", s.big_p_exceptions}};
    std::map<std::string, std::map<std::string, int>> tally;
    std::map<std::string, int> kinds;
    for (const auto& r : s.items) {
        ++kinds[r.item.kind];
        for (const auto& rel : r.report.relations) ++tally[rel.id][rel.status];
    }
    Json rel = Json::object();
    for (const char* id : {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10"}) {
        Json t = Json::object();
        for (const char* st : {"pass", "fail", "n/a"}) t[st] = tally[id][st];
        rel[id] = t;
    }
    j["relations"] = rel;
    j["kinds"] = kinds;
    Json fails = Json::array();
    for (const auto& r : s.items) {
        if (r.ok) continue;
        Json f;
        f["index"] = r.item.index;
        f["char"] = r.item.p;
        f["poly"] = r.item.poly;
        if (!r.error.empty()) f["error"] = r.error;
        Json why = Json::array();
        for (const auto& rel : r.report.relations)
            if (rel.status == "fail") why.push_back(rel.id + ": " + rel.detail);
        for (const auto& o : r.oracles)
            if (o.status == "disagree") why.push_back(o.name + ": " + o.detail);
        f["why"] = why;
        f["reproduce"] = r.reproduce;
        fails.push_back(f);
    }
    j["failures"] = fails;
    if (with_items) {
        Json items = Json::array();
        for (const auto& r : s.items) {
            Json it;
            it["index"] = r.item.index;
            it["kind"] = r.item.kind;
            it["ok"] = r.ok;
            if (!r.error.empty()) {
                it["char"] = r.item.p;
                it["poly"] = r.item.poly;
                it["error"] = r.error;
            } else {
                it["report"] = to_json(r.report);
            }
            Json o = Json::array();
            for (const auto& c : r.oracles) o.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
            it["oracles"] = o;
            items.push_back(it);
        }
        j["items"] = items;
    }
    return j;
}

} // namespace plc
