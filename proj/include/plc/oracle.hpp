#ifndef PLC_ORACLE_HPP
#define PLC_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "plc/invariants.hpp"
#include "plc/tripoly.hpp"

namespace plc::oracle {

/// Brute-force cross-checks. An inconclusive answer is never a wrong one.
struct Answer {
    bool conclusive = false;
    ExtNat value;
    std::string note;
};

/// ord_{x=0} Res_y(f, g) after a random shear x -> x + a y.
Answer i_resultant(const BiPoly& f, const BiPoly& g, std::uint64_t seed = 1);

struct SemigroupData {
    std::vector<int> values;     // semigroup elements below the probe ceiling
    std::vector<int> generators; // minimal generators among them
    int conductor = 0;
    int gaps = 0;
};

/// Values of polynomials along one branch (defined over its own field), probed below `ceiling`.
SemigroupData branch_semigroup(const BranchData& b, int ceiling);

/// delta as the codimension of the local ring inside the normalization, truncated at the
/// probe ceiling 2 delta + 2 (delta from the blow-up recursion). For one branch this is the
/// number of semigroup gaps, which is checked as well.
Answer delta_semigroup(const BiPoly& f);

/// deg(rho) * dual degree, counted as the number of smooth points of C on a generic polar.
/// Requires deg F <= 4 and characteristic 0 or p > d(d-1).
Answer dual_degree_elim(const TriPoly& F, std::uint64_t seed = 1);

} // namespace plc::oracle

#endif
