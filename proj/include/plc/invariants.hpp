#ifndef PLC_INVARIANTS_HPP
#define PLC_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plc/hne.hpp"

namespace plc {

class UndefinedAtOrigin : public MathError {
public:
    UndefinedAtOrigin() : MathError("first argument does not vanish at the origin") {}
};

/// Everything derived once from a reduced f vanishing at the origin.
struct LocalData {
    BiPoly f;
    Field field = nullptr;
    std::uint64_t p = 0;
    int deg = 0;
    int mt = 0;
    TreeNode tree;
    BranchSet bs;
};

/// Validates f (nonzero, vanishing at the origin, reduced) and builds its tree and branches.
LocalData local_data(const BiPoly& f, ChartPolicy policy = ChartPolicy::PreferX);

/// ord h(x(t), y(t)), or infinity when it exceeds `bound`.
ExtNat branch_order(const BranchData& b, const BiPoly& h, int bound);

/// i(f, g) for any f vanishing at the origin; non-reduced f is split into its radical chain.
ExtNat intersection_multiplicity(const BiPoly& f, const BiPoly& g);
/// i(f, g) along the already computed branches of f.
ExtNat intersection_multiplicity(const LocalData& d, const BiPoly& g);

int multiplicity(const BiPoly& f);
ExtNat milnor(const BiPoly& f);
ExtNat milnor(const LocalData& d);
long delta(const BiPoly& f);
long delta(const LocalData& d);
ExtNat kappa(const BiPoly& f);
ExtNat kappa(const LocalData& d);

/// gamma invariant with respect to the coordinates x, y.
ExtNat gamma_tilde(const BiPoly& f);
ExtNat gamma_tilde(const LocalData& d);
/// gamma invariant with respect to the coordinates X(x,y), Y(x,y) (no constant terms, independent
/// linear parts). The coefficients of X and Y must lie in d.field.
ExtNat gamma_coords(const LocalData& d, const BiPoly& X, const BiPoly& Y);

bool is_m_good(const LocalData& d);
bool is_im_good(const LocalData& d);
bool is_im_good_in(const LocalData& d, const BiPoly& X, const BiPoly& Y);

/// mu - (2 delta - r + 1); nullopt (undefined) when mu is infinite.
std::optional<long> swan(const LocalData& d);

struct GammaBudget {
    int degree = 6;        // maximal degree of contact curves
    int linear_trials = 6; // random linear coordinate changes
    std::uint64_t seed = 1;
};

struct GammaResult {
    bool exact = false;
    long value = 0;      // exact value
    long lower = 0;      // 2 delta - r + 2 when no certificate was found
    long safe_lower = 0; // 2 delta - r + 1
    ExtNat upper;        // smallest gamma_{X,Y} evaluated
    std::string witness_x, witness_y, witness_field;
    bool right_im_good = false; // certified
    bool consistent = true;     // certificate value agrees with gamma_{X,Y} of the witness
    int evaluated = 0;
};

GammaResult gamma(const LocalData& d, const GammaBudget& budget = {});

struct RelationResult {
    std::string id;
    std::string status; // "pass", "fail", "n/a"
    std::string detail;
};

struct InvariantReport {
    std::uint64_t p = 0;
    std::string field;
    std::string poly;
    int mt = 0;
    int r = 0;
    long delta = 0;
    ExtNat mu, kappa, gamma_tilde;
    GammaResult gamma;
    std::optional<long> swan;
    bool m_good = true, im_good = true;
    std::vector<RelationResult> relations;
    double seconds = 0;
};

struct AnalysisOptions {
    GammaBudget budget;
    bool relations = true;
    std::uint64_t seed = 1;
};

/// Core invariants only (no relation checks).
InvariantReport analyze(const LocalData& d, const AnalysisOptions& opt = {});
InvariantReport analyze(const BiPoly& f, const AnalysisOptions& opt = {});

/// R1-R10; every relation that applies is evaluated.
std::vector<RelationResult> verify_relations(const LocalData& d, const InvariantReport& rep,
                                             const AnalysisOptions& opt = {});
int failed_relations(const std::vector<RelationResult>& rel);

} // namespace plc

#endif
