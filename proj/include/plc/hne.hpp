#ifndef PLC_HNE_HPP
#define PLC_HNE_HPP

#include <vector>

#include "plc/blowup.hpp"
#include "plc/extnat.hpp"
#include "plc/series.hpp"

namespace plc {

class DegenerateDirection : public MathError {
public:
    DegenerateDirection() : MathError("degenerate direction for shear") {}
};

/// Projective pair (beta : alpha), normalized so that the first nonzero entry is 1.
struct Direction {
    Elem beta;
    Elem alpha;
};

/// One analytic branch, given by a primitive parametrization over `field`.
/// `weight` is the number of Galois-conjugate branches this record stands for.
struct BranchData {
    Field field = nullptr;
    int weight = 1;
    LazySeries x, y;
    int mt = 0;
    ExtNat ix, iy;
    Direction tangent;
};

struct BranchSet {
    std::vector<BranchData> branches;
    /// Number of branches counted with conjugates.
    int r = 0;
};

/// Analytic branches of a reduced f at the origin, via iterated quadratic transforms
/// (the Hamburger-Noether process); the smooth tail of each branch is produced lazily.
BranchSet branch_decompose(const BiPoly& f, ChartPolicy policy = ChartPolicy::PreferX);

/// Branches read off an already built tree of infinitely near points of f.
BranchSet branches_from_tree(const TreeNode& tree, int deg_f);

/// Tangent (beta:alpha) of a branch, i.e. the line alpha x - beta y.
Direction tangent_direction(const BranchData& b);

/// g with f(x, y) = g(x, alpha x - beta y); requires beta != 0.
BiPoly shear(const BiPoly& f, const Direction& tangent);

} // namespace plc

#endif
