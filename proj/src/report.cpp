#include "plc/report.hpp"

#include <cstdio>
#include <sstream>

namespace plc {

Json ext_json(ExtNat v) {
    if (v.is_inf()) return "inf";
    return v.value();
}

std::string field_label(Field f) {
    if (f->degree() == 1) return f->descriptor();
    return f->descriptor() + " mod " + f->modulus_str();
}

std::string series_str(const LazySeries& s, int prec) {
    std::string out;
    for (int k = 0; k < prec; ++k) {
        const Elem c = s.coeff(k);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
        std::string term = k == 0 ? cs : (c.is_one() ? "" : cs + "*") + "t" + (k > 1 ? "^" + std::to_string(k) : "");
        if (!out.empty()) out += " + ";
        out += term;
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(prec) + ")";
}

Json relations_json(const std::vector<RelationResult>& rel) {
    Json j = Json::object();
    for (const auto& r : rel) j[r.id] = {{"status", r.status}, {"detail", r.detail}};
    return j;
}

Json to_json(const InvariantReport& rep, bool timings) {
    Json j;
    j["char"] = rep.p;
    j["field"] = rep.field;
    j["poly"] = rep.poly;
    j["mt"] = rep.mt;
    j["r"] = rep.r;
    j["delta"] = rep.delta;
    j["mu"] = ext_json(rep.mu);
    j["kappa"] = ext_json(rep.kappa);
    j["gamma_tilde"] = ext_json(rep.gamma_tilde);
    const auto& g = rep.gamma;
    Json gj;
    if (g.exact) {
        gj["kind"] = "exact";
        gj["value"] = g.value;
        gj["witness"] = {{"X", g.witness_x}, {"Y", g.witness_y}, {"field", g.witness_field}};
        gj["witness_gamma"] = ext_json(g.upper);
        gj["consistent"] = g.consistent;
    } else {
        gj["kind"] = "interval";
        gj["lower"] = g.lower;
        gj["safe_lower"] = g.safe_lower;
        gj["upper"] = ext_json(g.upper);
    }
    gj["evaluated"] = g.evaluated;
    j["gamma"] = gj;
    if (rep.swan)
        j["swan"] = *rep.swan;
    else
        j["swan"] = "undefined";
    j["m_good"] = rep.m_good;
    j["im_good"] = rep.im_good;
    j["right_im_good"] = g.right_im_good ? "yes" : "unknown";
    j["relations"] = relations_json(rep.relations);
    if (timings) j["seconds"] = rep.seconds;
    return j;
}

Json branches_json(const BranchSet& bs, int prec) {
    Json arr = Json::array();
    for (const auto& b : bs.branches) {
        Json j;
        j["weight"] = b.weight;
        j["field"] = field_label(b.field);
        j["mt"] = b.mt;
        j["i_x"] = ext_json(b.ix);
        j["i_y"] = ext_json(b.iy);
        j["tangent"] = "(" + b.tangent.beta.str() + ":" + b.tangent.alpha.str() + ")";
        j["x"] = series_str(b.x, prec);
        j["y"] = series_str(b.y, prec);
        arr.push_back(j);
    }
    return arr;
}

Json tree_json(const TreeNode& t) {
    Json j;
    j["m"] = t.m;
    j["weight"] = t.weight;
    j["field"] = field_label(t.field);
    if (t.center.valid()) {
        j["chart"] = t.chart == Chart::X ? "x" : "y";
        j["center"] = t.center.str();
    }
    j["local_eq"] = t.local_eq.str();
    Json ch = Json::array();
    for (const auto& c : t.children) ch.push_back(tree_json(c));
    j["children"] = ch;
    return j;
}

Json to_json(const PluckerReport& rep, bool timings) {
    Json j;
    j["char"] = rep.p;
    j["field"] = rep.field;
    j["poly"] = rep.poly;
    j["d"] = rep.d;
    j["s"] = rep.s;
    j["delta"] = rep.delta;
    j["mu"] = ext_json(rep.mu);
    j["mt"] = rep.mt;
    j["r"] = rep.r;
    if (rep.swan)
        j["swan"] = *rep.swan;
    else
        j["swan"] = "undefined";
    j["sum_kappa"] = ext_json(rep.sum_kappa);
    if (rep.product)
        j["deg_rho_times_dual_degree"] = *rep.product;
    else
        j["deg_rho_times_dual_degree"] = "undefined";
    j["bound"] = rep.bound;
    j["m_good_global"] = rep.m_good_global;
    j["big_p"] = rep.big_p;
    const char* verdict = rep.irreducibility.verdict == Irreducibility::Irreducible ? "irreducible"
                          : rep.irreducibility.verdict == Irreducibility::Reducible ? "reducible"
                                                                                   : "unknown";
    j["irreducibility"] = {{"verdict", verdict}, {"reason", rep.irreducibility.reason}};
    Json pts = Json::array();
    for (const auto& P : rep.points) {
        Json pj;
        pj["point"] = P.str();
        pj["field"] = field_label(P.field);
        pj["weight"] = P.weight;
        pj["chart"] = std::string(1, "xyz"[P.chart]);
        pj["local_eq"] = P.local_eq.str();
        pj["report"] = to_json(P.report, timings);
        pts.push_back(pj);
    }
    j["points"] = pts;
    j["checks"] = relations_json(rep.checks);
    if (timings) j["seconds"] = rep.seconds;
    return j;
}

namespace {

std::string yes(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string to_text(const InvariantReport& rep) {
    std::ostringstream o;
    o << "f = " << rep.poly << " over " << rep.field << "\n";
    o << "  mt = " << rep.mt << ", r = " << rep.r << ", delta = " << rep.delta << "\n";
    o << "  mu = " << rep.mu.str() << ", kappa = " << rep.kappa.str() << ", gamma~ = " << rep.gamma_tilde.str() << "\n";
    if (rep.gamma.exact)
        o << "  gamma = " << rep.gamma.value << " (certified in X = " << rep.gamma.witness_x
          << ", Y = " << rep.gamma.witness_y << ")\n";
    else
        o << "  gamma in [" << rep.gamma.lower << ", " << rep.gamma.upper.str() << "] (safe lower bound "
          << rep.gamma.safe_lower << ")\n";
    o << "  Sw = " << (rep.swan ? std::to_string(*rep.swan) : std::string("undefined")) << "\n";
    o << "  m-good: " << yes(rep.m_good) << ", im-good: " << yes(rep.im_good)
      << ", right im-good: " << (rep.gamma.right_im_good ? "yes" : "unknown") << "\n";
    for (const auto& r : rep.relations) o << "  " << r.id << " " << r.status << "  " << r.detail << "\n";
    return o.str();
}

std::string to_text(const PluckerReport& rep) {
    std::ostringstream o;
    o << "C: " << rep.poly << " = 0 over " << rep.field << ", d = " << rep.d << "\n";
    o << "  singular points: " << rep.s << "\n";
    for (const auto& P : rep.points)
        o << "    " << P.str() << " over " << field_label(P.field) << " (x" << P.weight << "): f_P = " << P.local_eq.str()
          << "; mt " << P.report.mt << ", r " << P.report.r << ", delta " << P.report.delta << ", mu "
          << P.report.mu.str() << ", kappa " << P.report.kappa.str() << "\n";
    o << "  delta(C) = " << rep.delta << ", mu(C) = " << rep.mu.str() << ", mt(C) = " << rep.mt << ", r(C) = " << rep.r
      << ", Sw(C) = " << (rep.swan ? std::to_string(*rep.swan) : std::string("undefined")) << "\n";
    o << "  deg(rho)*dual degree = "
      << (rep.product ? std::to_string(*rep.product) : std::string("undefined")) << ", bound " << rep.bound
      << ", m-good: " << yes(rep.m_good_global) << "\n";
    for (const auto& c : rep.checks) o << "  " << c.id << " " << c.status << "  " << c.detail << "\n";
    return o.str();
}

} // namespace plc
