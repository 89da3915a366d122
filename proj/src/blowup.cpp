#include "plc/blowup.hpp"

#include "plc/factor.hpp"

namespace plc {

namespace {

constexpr int kMaxDepth = 400;

BiPoly chart_transform(const BiPoly& g, Chart chart, const Elem& c, int m) {
    Field F = c.field();
    const BiPoly ge = g.embed(F);
    const BiPoly u = BiPoly::x(F), v = BiPoly::y(F), cc = BiPoly::constant(c);
    if (chart == Chart::X) return ge.compose(u, u * (v + cc)).shift_down(m, 0);
    return ge.compose(v * (u + cc), v).shift_down(0, m);
}

} // namespace

std::vector<StrictTransformChart> strict_transform(const BiPoly& f, ChartPolicy policy) {
    if (f.is_zero()) throw NotReduced();
    if (!f.vanishes_at_origin()) throw NotSingularAtOrigin();
    Field K = f.field();
    const int m = f.order();
    const BiPoly cone = f.homogeneous_part(m);
    // directions (1:c) for PreferX, (c:1) for PreferY
    const Chart main = policy == ChartPolicy::PreferX ? Chart::X : Chart::Y;
    std::vector<Elem> h(m + 1, K->zero());
    for (const auto& [mono, c] : cone.terms()) h[main == Chart::X ? mono.j : mono.i] = c;
    const UPoly hp(K, h);
    std::vector<StrictTransformChart> out;
    for (const auto& fac : irreducible_factors(hp)) {
        const RootExtension ext = adjoin_root(fac);
        StrictTransformChart st;
        st.chart = main;
        st.center = ext.root;
        st.field = ext.field;
        st.m = m;
        st.orbit = fac.degree();
        st.local_eq = chart_transform(f, main, ext.root, m);
        out.push_back(std::move(st));
    }
    if (hp.degree() < m) {
        StrictTransformChart st;
        st.chart = main == Chart::X ? Chart::Y : Chart::X;
        st.center = K->zero();
        st.field = K;
        st.m = m;
        st.local_eq = chart_transform(f, st.chart, K->zero(), m);
        out.push_back(std::move(st));
    }
    return out;
}

namespace {

void grow(TreeNode& node, ChartPolicy policy, int depth) {
    if (depth > kMaxDepth) throw NotReduced();
    node.m = node.local_eq.order();
    if (node.m <= 1) return;
    for (auto& st : strict_transform(node.local_eq, policy)) {
        TreeNode child;
        child.weight = node.weight * st.orbit;
        child.field = st.field;
        child.local_eq = std::move(st.local_eq);
        child.chart = st.chart;
        child.center = st.center;
        grow(child, policy, depth + 1);
        node.children.push_back(std::move(child));
    }
}

void text(const TreeNode& t, int indent, std::string& out) {
    out += std::string(2 * indent, ' ') + "m=" + std::to_string(t.m);
    if (indent > 0)
        out += " chart=" + std::string(t.chart == Chart::X ? "x" : "y") + " center=" + t.center.str();
    if (t.weight > 1) out += " orbit=" + std::to_string(t.weight);
    out += "\n";
    for (const auto& c : t.children) text(c, indent + 1, out);
}

} // namespace

TreeNode build_tree(const BiPoly& f, ChartPolicy policy) {
    if (f.is_zero()) throw NotReduced();
    if (!f.vanishes_at_origin()) throw NotSingularAtOrigin();
    TreeNode root;
    root.field = f.field();
    root.local_eq = f;
    root.center = f.field()->zero();
    grow(root, policy, 0);
    return root;
}

long tree_delta(const TreeNode& t) {
    long s = static_cast<long>(t.weight) * t.m * (t.m - 1) / 2;
    for (const auto& c : t.children) s += tree_delta(c);
    return s;
}

std::size_t tree_size(const TreeNode& t) {
    std::size_t s = 1;
    for (const auto& c : t.children) s += tree_size(c);
    return s;
}

std::string tree_text(const TreeNode& t) {
    std::string out;
    text(t, 0, out);
    return out;
}

} // namespace plc
