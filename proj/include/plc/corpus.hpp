#ifndef PLC_CORPUS_HPP
#define PLC_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "plc/report.hpp"

namespace plc {

struct CorpusSpec {
    std::vector<std::uint64_t> chars = {2, 3, 5, 7};
    int max_degree = 5;
    int count = 200;
    std::uint64_t seed = 42;
    // percentages: random sparse, branch-built, fixed examples
    int mix_random = 50, mix_branch = 30, mix_examples = 20;
};

struct CorpusItem {
    int index = 0;
    std::string kind; // "random", "branch", "example"
    std::uint64_t p = 0;
    std::string poly;
};

/// Field for a characteristic: Q for 0, F_p otherwise.
Field field_for_char(std::uint64_t p);

/// Random reduced polynomial through the origin with mt >= 2, terms of degree 2..max_degree.
BiPoly random_singular(Field K, Rng& rng, int max_degree);
/// Defining polynomial of the branch (t^m, sum c_j t^j), i.e. the radical of det(y - q(T)) with
/// T the multiplication by t on K[x][t]/(t^m - x).
BiPoly branch_polynomial(Field K, int m, const std::vector<Elem>& q);
/// Random irreducible branch through the origin of degree <= max_degree and multiplicity >= 2.
BiPoly random_branch(Field K, Rng& rng, int max_degree);

/// Deterministic: item i depends only on the seed and i.
std::vector<CorpusItem> generate_corpus(const CorpusSpec& spec);

struct OracleCheck {
    std::string name;   // "intersection" or "delta"
    std::string status; // "agree", "disagree", "inconclusive"
    std::string detail;
};

struct CorpusItemResult {
    CorpusItem item;
    bool ok = false;
    std::string error;
    InvariantReport report;
    std::vector<OracleCheck> oracles;
    std::string reproduce;
};

struct CorpusSummary {
    CorpusSpec spec;
    std::vector<CorpusItemResult> items;
    int passed = 0, failed = 0;
    int oracle_agree = 0, oracle_disagree = 0, oracle_inconclusive = 0;
    double skip_rate = 0;
    int big_p_items = 0, big_p_exceptions = 0; // items with p = 0 or p > kappa, and R6 failures among them
};

CorpusItemResult run_item(const CorpusItem& item, std::uint64_t seed, bool oracles = true);
/// Runs the items on `jobs` worker threads; results are merged by index.
CorpusSummary run_corpus(const CorpusSpec& spec, int jobs = 1, bool oracles = true);

Json to_json(const CorpusSummary& s, bool with_items = false);

} // namespace plc

#endif
