#ifndef PLC_BLOWUP_HPP
#define PLC_BLOWUP_HPP

#include <string>
#include <vector>

#include "plc/bipoly.hpp"

namespace plc {

class NotSingularAtOrigin : public MathError {
public:
    NotSingularAtOrigin() : MathError("polynomial does not vanish at the origin") {}
};

/// x-chart: (x, y) = (u, u(v + c)); y-chart: (x, y) = (v(u + c), v).
enum class Chart { X, Y };

/// Which chart covers the exceptional line. PreferX sends only the vertical direction to the y-chart,
/// PreferY sends only the horizontal direction to the x-chart.
enum class ChartPolicy { PreferX, PreferY };

struct StrictTransformChart {
    Chart chart = Chart::X;
    Elem center;      // c, in `field`
    Field field = nullptr;
    BiPoly local_eq;  // strict transform translated to the center
    int m = 0;        // multiplicity of f at the blown-up point
    int orbit = 1;    // number of conjugate centers represented (degree of the center over f's field)
};

/// One entry per Galois orbit of points of the strict transform on the exceptional line.
/// The identity f(u, u(v+c)) = u^m local_eq(u, v) (resp. the y-chart version) is checked exactly.
std::vector<StrictTransformChart> strict_transform(const BiPoly& f, ChartPolicy policy = ChartPolicy::PreferX);

/// Node of the tree of infinitely near points. `weight` counts the conjugate points it stands for.
struct TreeNode {
    int m = 0;
    int weight = 1;
    Field field = nullptr;
    BiPoly local_eq;
    Chart chart = Chart::X; // how this node was reached from its parent (unused at the root)
    Elem center;
    std::vector<TreeNode> children;
};

/// Blows up until every point has multiplicity 1. Requires f reduced with f(0,0) = 0.
TreeNode build_tree(const BiPoly& f, ChartPolicy policy = ChartPolicy::PreferX);

/// sum over nodes of weight * m(m-1)/2.
long tree_delta(const TreeNode& t);
std::size_t tree_size(const TreeNode& t);
std::string tree_text(const TreeNode& t);

} // namespace plc

#endif
