#include "plc/hne.hpp"

namespace plc {

namespace {

struct Step {
    Chart chart;
    Elem center;
};

Direction normalize(Elem beta, Elem alpha) {
    if (!beta.is_zero()) {
        alpha = alpha / beta;
        beta = beta.field()->one();
    } else {
        alpha = alpha.field()->one();
    }
    return {beta, alpha};
}

BranchData leaf_branch(const TreeNode& leaf, const std::vector<Step>& path, int deg_f) {
    Field F = leaf.field;
    const BiPoly& g = leaf.local_eq;
    LazySeries a, b;
    const LazySeries t = LazySeries::monomial(F->one(), 1);
    if (!g.coeff(0, 1).is_zero()) {
        a = t;
        b = implicit_series(g);
    } else {
        a = implicit_series(g.swap());
        b = t;
    }
    // push the parametrization down through the blow-ups, deepest first
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const Elem c = embed(it->center, F);
        const LazySeries cs = LazySeries::polynomial(F, {c});
        if (it->chart == Chart::X) {
            LazySeries nx = a, ny = a * (b + cs);
            a = nx;
            b = ny;
        } else {
            LazySeries nx = b * (a + cs), ny = b;
            a = nx;
            b = ny;
        }
    }
    BranchData br;
    br.field = F;
    br.weight = leaf.weight;
    br.x = a;
    br.y = b;
    // i(f_i, x) <= i(f, x) <= deg f unless x divides f
    br.ix = ExtNat::from_opt(series_order(a, deg_f));
    br.iy = ExtNat::from_opt(series_order(b, deg_f));
    br.mt = static_cast<int>(min(br.ix, br.iy).value());
    br.tangent = tangent_direction(br);
    return br;
}

void collect(const TreeNode& node, std::vector<Step>& path, int deg_f, std::vector<BranchData>& out) {
    if (node.m <= 1) {
        out.push_back(leaf_branch(node, path, deg_f));
        return;
    }
    for (const auto& c : node.children) {
        path.push_back({c.chart, c.center});
        collect(c, path, deg_f, out);
        path.pop_back();
    }
}

} // namespace

BranchSet branches_from_tree(const TreeNode& tree, int deg_f) {
    BranchSet bs;
    std::vector<Step> path;
    collect(tree, path, deg_f, bs.branches);
    for (const auto& b : bs.branches) bs.r += b.weight;
    return bs;
}

BranchSet branch_decompose(const BiPoly& f, ChartPolicy policy) {
    if (f.is_zero()) throw NotReduced();
    if (!f.vanishes_at_origin()) throw NotSingularAtOrigin();
    return branches_from_tree(build_tree(local_radical(f), policy), f.degree());
}

Direction tangent_direction(const BranchData& b) {
    Field F = b.field;
    if (b.ix < b.iy) return {F->one(), F->zero()};
    if (b.iy < b.ix) return {F->zero(), F->one()};
    const int m = b.mt;
    // x ~ a t^m, y ~ c t^m: the line c x - a y
    return normalize(b.x.coeff(m), b.y.coeff(m));
}

BiPoly shear(const BiPoly& f, const Direction& d) {
    if (d.beta.is_zero()) throw DegenerateDirection();
    // y = (alpha x - Y) / beta
    Field F = common_field(common_field(f.field(), d.beta.field()), d.alpha.field());
    const Elem ib = d.beta.inv();
    const BiPoly X = BiPoly::x(F), Y = BiPoly::y(F);
    return f.embed(F).compose(X, X * (d.alpha * ib) - Y * ib);
}

} // namespace plc
