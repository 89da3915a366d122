#ifndef PLC_PROJECTIVE_HPP
#define PLC_PROJECTIVE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "plc/invariants.hpp"
#include "plc/tripoly.hpp"

namespace plc {

class PositiveDimensionalSingularLocus : public MathError {
public:
    PositiveDimensionalSingularLocus() : MathError("singular locus is positive dimensional (curve not reduced)") {}
};

class NotIrreducible : public MathError {
public:
    explicit NotIrreducible(const std::string& why) : MathError("curve is not irreducible: " + why) {}
};

/// One Galois orbit of singular points, represented by a point over `field`.
struct SingularPoint {
    Field field = nullptr;
    std::array<Elem, 3> coords; // normalized: the chart coordinate equals 1
    int chart = 2;              // index of the coordinate set to 1 (2 = z, 1 = y, 0 = x)
    int weight = 1;             // number of conjugate points
    BiPoly local_eq;
    InvariantReport report;
    std::string str() const;
};

/// Singular points over the algebraic closure, one entry per Galois orbit, without local reports.
std::vector<SingularPoint> singular_points(const TriPoly& F);

/// Local equation at a point: dehomogenize in `chart` and move the point to the origin.
BiPoly local_equation(const TriPoly& F, const std::array<Elem, 3>& point, int chart);

enum class Irreducibility { Irreducible, Reducible, Unknown };

struct IrreducibilityScreen {
    Irreducibility verdict = Irreducibility::Unknown;
    std::string reason;
};

/// Splitting test on random lines (over the field and small extensions) plus the genus bound
/// delta(C) <= (d-1)(d-2)/2. `points` must be the analyzed singular points.
IrreducibilityScreen screen_irreducible(const TriPoly& F, const std::vector<SingularPoint>& points,
                                        std::uint64_t seed);

struct ProjectiveOptions {
    AnalysisOptions local;
    bool assume_irreducible = false;
};

struct PluckerReport {
    std::uint64_t p = 0;
    std::string field;
    std::string poly;
    int d = 0;
    int s = 0; // number of singular points over the closure
    long delta = 0, mt = 0, r = 0;
    ExtNat mu;
    std::optional<long> swan; // undefined when some mu is infinite
    ExtNat sum_kappa;
    std::optional<long> product; // deg(rho) * dual degree = d(d-1) - sum kappa
    long bound = 0;              // d(d-1) - 2 delta + r - mt
    bool m_good_global = true;
    bool big_p = true; // p = 0 or p > max kappa
    IrreducibilityScreen irreducibility;
    std::vector<SingularPoint> points;
    std::vector<RelationResult> checks;
    double seconds = 0;
};

PluckerReport plucker_analysis(const TriPoly& F, const ProjectiveOptions& opt = {});

} // namespace plc

#endif
