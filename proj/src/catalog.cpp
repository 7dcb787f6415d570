#include "codo/catalog.hpp"

#include <functional>
#include <regex>
#include <numeric>
#include <sstream>

#include "codo/weyl.hpp"

namespace codo {

// ------------------------------------------------------------------ report

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

void Report::add_zero(std::string name, const RingElement& residual) {
    add(std::move(name), residual.is_zero(), residual.str());
}

void Report::add_zero(std::string name, const DiffOp& residual) {
    add(std::move(name), residual.is_zero(), residual.str());
}

void Report::put(std::string key, nlohmann::json value) {
    for (auto& [k, v] : data)
        if (k == key) {
            v = std::move(value);
            return;
        }
    data.emplace_back(std::move(key), std::move(value));
}

nlohmann::json Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "codo-report/1";
    j["fixture"] = fixture;
    j["description"] = description;
    j["pass"] = pass();
    auto& cs = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.detail}});
    auto& d = j["data"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : data) d[k] = v;
    return nlohmann::json::parse(j.dump());
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << fixture << ": " << (pass() ? "PASS" : "FAIL") << "\n";
    if (!description.empty()) os << "  " << description << "\n";
    for (const auto& [k, v] : data) os << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << "  " << c.detail;
        os << "\n";
    }
    return os.str();
}

// ------------------------------------------------------------------- pairs

Report run_pair(const std::string& name, const PairFixture& f) {
    Report rep;
    rep.fixture = name;
    rep.description = f.description;
    rep.put("A", f.a.str());
    rep.put("B", f.b.str());
    rep.put("orders", nlohmann::json::array({f.a.order(), f.b.order()}));
    rep.put("rank", rank_of_pair(f.a.order(), f.b.order()));

    DiffOp comm = commutator(f.a, f.b);
    if (!comm.is_zero()) {
        std::string lead = DiffOp::scalar(comm.leading()).str();
        rep.add("commutator", false,
                "order " + std::to_string(comm.order()) + ", leading term (" + lead + ")*D^" + std::to_string(comm.order()));
        rep.put("commutator", comm.str());
        return rep;
    }
    rep.add("commutator", true, "0");

    std::optional<CurvePoly> expected;
    if (!f.expected_curve.empty()) {
        expected = CurvePoly::parse(f.tower, f.expected_curve).normalized();
        rep.put("expected_curve", expected->str());
        rep.add_zero("expected_curve_annihilates", eval_poly(*expected, f.a, f.b));
    }
    if (f.resultant) {
        try {
            ResultantDetail det = bc_resultant_detail(f.a, f.b);
            rep.put("curve", det.curve.str());
            rep.add_zero("curve_annihilates", eval_poly(det.curve, f.a, f.b));
            if (expected) rep.add("curve_matches_expected", det.curve == *expected, det.curve.str());
        } catch (const Error& e) {
            rep.add("curve", false, e.what());
        }
    }
    for (const auto& e : f.eigen) {
        const DiffOp& op = e.op == 0 ? f.a : f.b;
        rep.add_zero(e.name, gauge_apply(op, e.shift, e.r) - e.lambda * e.r);
    }
    for (const auto& [n, e] : f.identities) rep.add_zero(n, e);
    if (f.schur_depth >= 0) {
        const bool a_low = f.a.order() <= f.b.order();
        const DiffOp& low = a_low ? f.a : f.b;
        const DiffOp& high = a_low ? f.b : f.a;
        try {
            SchurResult s = schur_expand(low, high, f.schur_depth);
            nlohmann::ordered_json cs = nlohmann::ordered_json::object();
            std::string detail;
            for (auto it = s.coefficients.rbegin(); it != s.coefficients.rend(); ++it) {
                cs[std::to_string(it->first)] = it->second.str();
                if (!derive(it->second).is_zero()) detail += "K^" + std::to_string(it->first) + " ";
            }
            rep.put("schur_coefficients", nlohmann::json::parse(cs.dump()));
            rep.add("schur_constant_depth_" + std::to_string(f.schur_depth), s.constant,
                    detail.empty() ? "" : "non-constant at " + detail);
        } catch (const Error& e) {
            rep.add("schur_constant_depth_" + std::to_string(f.schur_depth), false, e.what());
        }
    }
    return rep;
}

// ---------------------------------------------------------------- fixtures

namespace {

PairFixture wallenberg() {
    TowerSpec s;
    s.parameters = {"s0", "s1", "s2"};
    s.extensions = {EllipticType{"u", "du", "-(2*u^3 + s2*u^2 + s1*u + s0)"}};
    PairFixture f;
    f.description = "D^2 + u and its order-3 partner, u'^2 + 2u^3 + s2 u^2 + s1 u + s0 = 0";
    f.tower = tower_build(s);
    f.a = DiffOp::parse(f.tower, "D^2 + u");
    f.b = DiffOp::parse(f.tower, "D^3 + (s2/4 + 3/2*u)*D + 3/4*du");
    f.expected_curve = "w^2 - (z^3 + s2/2*z^2 + (s2^2 + 2*s1)/16*z + (s1*s2 - 2*s0)/32)";
    return f;
}

PairFixture elliptic_rank1() {
    TowerSpec s;
    s.parameters = {"g2", "g3"};
    s.extensions = {EllipticType{"P", "dP", "4*P^3 - g2*P - g3"}};
    PairFixture f;
    f.description = "Lame pair D^2 - 2P, D^3 - 3P D - 3/2 P' with P'^2 = 4P^3 - g2 P - g3";
    f.tower = tower_build(s);
    f.a = DiffOp::parse(f.tower, "D^2 - 2*P");
    f.b = DiffOp::parse(f.tower, "D^3 - 3*P*D - 3/2*dP");
    f.expected_curve = "w^2 - z^3 + g2/4*z + g3/4";
    return f;
}

PairFixture cuspidal() {
    PairFixture f;
    f.description = "rational degeneration with cuspidal curve; psi = exp(-x/z) (z+x+gamma)/((x+gamma)(z+gamma))";
    f.tower = tower_build(TowerSpec{{"gamma"}, {}});
    f.a = DiffOp::parse(f.tower, "D^2 - 2/(x+gamma)^2");
    f.b = DiffOp::parse(f.tower, "D^3 - 3/(x+gamma)^2*D + 3/(x+gamma)^3");
    f.expected_curve = "w^2 - z^3";
    TowerPtr t = spectral_tower(f.tower);
    RingElement z = t->var("z");
    RingElement r = t->parse("(z + x + gamma)/((x + gamma)*(z + gamma))");
    RingElement shift = -z.inverse();
    f.eigen.push_back({"eigen_L2", 0, shift, r, pow(z, 2).inverse()});
    f.eigen.push_back({"eigen_L3", 1, shift, r, -pow(z, 3).inverse()});
    return f;
}

// Nodal curve pair with potential u and Baker-Akhiezer factor 1 + xi/(z - gamma).
PairFixture nodal_pair(const std::string& description, const TowerPtr& tower, const RingElement& u,
                       const RingElement& xi, const RingElement& twist) {
    PairFixture f;
    f.description = description;
    f.tower = tower;
    const RingElement a = tower->var("a");
    f.a = DiffOp({u, RingElement(), RingElement(1)});
    f.b = DiffOp({derive(u).scaled(Rational(3, 4)), u.scaled(Rational(3, 2)) - a * a, RingElement(), RingElement(1)});
    f.expected_curve = "w^2 - z*(z - a^2)^2";
    TowerPtr tz = spectral_tower(tower);
    const RingElement z = tz->var("z"), gamma = tz->var("gamma"), t = tz->var("t");
    RingElement r = RingElement(1) + xi.in(tz) / (z - gamma);
    f.eigen.push_back({"eigen_L(f)", 0, z, r, z * z});
    f.eigen.push_back({"eigen_L(g)", 1, z, r, z * z * z - a * a * z});
    // psi(x, a) = twist * psi(x, -a); the exponential factor is t^{+-1}.
    RingElement ra = substitute(r, "z", a), rm = substitute(r, "z", -a);
    f.identities.push_back({"gluing", ra * t - twist * rm / t});
    return f;
}

TowerPtr nodal_tower(bool with_b) {
    TowerSpec s;
    s.parameters = {"a", "gamma"};
    if (with_b) s.parameters.push_back("b");
    s.extensions = {Exponential{"t", "a"}};
    return tower_build(s);
}

PairFixture nodal() {
    TowerPtr t = nodal_tower(false);
    RingElement ch = t->parse("(t + 1/t)/2"), sh = t->parse("(t - 1/t)/2");
    RingElement a = t->var("a"), g = t->var("gamma");
    RingElement u = (a * a * (a * a - g * g)).scaled(2) / pow(a * ch + g * sh, 2);
    RingElement xi = (g * g - a * a) * sh / (a * ch + g * sh);
    return nodal_pair("nodal curve; cosh, sinh through t = exp(a x)", t, u, xi, RingElement(1));
}

PairFixture sheaf_twist(std::optional<Rational> b_value) {
    TowerPtr t = nodal_tower(!b_value);
    RingElement ch = t->parse("(t + 1/t)/2"), sh = t->parse("(t - 1/t)/2");
    RingElement a = t->var("a"), g = t->var("gamma");
    RingElement b = b_value ? RingElement(*b_value) : t->var("b");
    RingElement den = (a + a * b + g - b * g) * ch + (a - a * b + g + b * g) * sh;
    RingElement u = (a * a * b * (a * a - g * g)).scaled(8) / (den * den);
    RingElement tt = t->var("t") * t->var("t");
    RingElement xi = (b - tt) * (a * a - g * g) / (tt * (a + g) + b * (a - g));
    std::string d = "nodal curve, eigenfunction glued with factor b";
    if (b_value) d += " = " + RingElement(*b_value).str();
    return nodal_pair(d, t, u, xi, b);
}

PairFixture dixmier_fixture() {
    PairFixture f;
    f.description = "Dixmier pair X = (x^3 + D^2 + h)^2 + 2x, Y = S^3 + 3/2 (x S + S x)";
    f.tower = tower_build(TowerSpec{{"h"}, {}});
    DixmierPair p = dixmier_pair(f.tower->var("h"));
    f.a = p.x.to_diffop(f.tower);
    f.b = p.y.to_diffop(f.tower);
    f.expected_curve = "w^2 - z^3 + h";
    return f;
}

Report dixmier() {
    PairFixture f = dixmier_fixture();
    Report rep = run_pair("dixmier", f);
    DixmierPair p = dixmier_pair(f.tower->var("h"));
    rep.add("weyl_commute", weyl_commutator(p.x, p.y).is_zero());
    WeylElement rel = p.y * p.y - weyl_pow(p.x, 3) + WeylElement::constant(f.tower->var("h"));
    rep.add("weyl_Y2_minus_X3_plus_h", rel.is_zero(), rel.str());
    // The genus-one rank-two family at h = (h, 0, 0, 1).
    std::vector<RingElement> h{f.tower->var("h"), RingElement(), RingElement(), RingElement(1)};
    MironovSolution s = mironov_solve(1, f.tower, h, 6);
    rep.add("family_L4_is_X", build_l4(s.triple) == f.a);
    DiffOp partner = build_partner(s.triple, s.curve);
    rep.put("family_curve", s.curve.str());
    rep.add("family_partner_is_pm_Y", partner == f.b || partner == -f.b, partner.str());
    return rep;
}

WeylAut fourier() { return WeylAut::linear(RingElement(0), RingElement(1), RingElement(-1), RingElement(0)); }

PairFixture aut_orbit_fixture() {
    PairFixture f = dixmier_fixture();
    DixmierPair p = dixmier_pair(f.tower->var("h"));
    WeylElement x = apply_aut(fourier(), p.x), y = apply_aut(fourier(), p.y);
    f.description = "image of the Dixmier pair under x -> D, D -> -x";
    f.a = x.to_diffop(f.tower);
    f.b = y.to_diffop(f.tower);
    f.schur_depth = -1;
    return f;
}

Report aut_orbit() {
    PairFixture f = aut_orbit_fixture();
    Report rep = run_pair("aut_orbit_rank3", f);
    rep.put("automorphism", fourier().str());
    rep.put("leading_coefficients", nlohmann::json::array({f.a.leading().str(), f.b.leading().str()}));
    rep.add("orders_6_9", f.a.order() == 6 && f.b.order() == 9);
    rep.add("rank_3", rank_of_pair(f.a.order(), f.b.order()) == 3);
    return rep;
}

// Printed curve polynomial F(z) over h0..h3 with `bound` substituted.
std::vector<RingElement> printed_coefficients(const std::string& text, const TowerPtr& base, const Bindings& bound) {
    TowerPtr sym = tower_build(TowerSpec{{"h0", "h1", "h2", "h3", "z"}, {}});
    RingElement e = sym->parse(text);
    for (const auto& [k, v] : bound) e = substitute(e, k, RingElement(v));
    std::vector<RingElement> out;
    for (const auto& c : e.num().coefficients(sym->index("z")))
        out.push_back(import_into(sym->normalize(c, e.den()), base));
    return out;
}

const char* kPrintedF1 = "z^3 + 2*h2*z^2 + z*(h2^2 + h1*h3) + h3*(h1*h2 - h0*h3)";
const char* kPrintedF2 =
    "z^5 + 10*h2*z^4 + (33*h2^2 + 21*h1*h3)*z^3 + (40*h2^3 + 117*h1*h2*h3 + 27*h0*h3^3)*z^2"
    " + 4*(4*h2^4 + 36*h1*h2^2*h3 + 27*h3^2*(h1^2 + h0*h2))*z"
    " + 3*h3*(36*h1^2*h2*h3 + 27*h3^3 + 4*h1*(4*h2^3 + 27*h0*h3^2))";
const char* kPrintedRadicand = "9*(h2^2 - 2*h3*(2*h1 - h2*x) - 3*h3^2*x^2)";

std::string describe_bindings(const Bindings& b) {
    std::string out;
    for (const auto& [k, v] : b) out += (out.empty() ? "" : ", ") + k + " = " + RingElement(v).str();
    return out;
}

// Checks shared by every rank-two triple with curve F.
void triple_checks(Report& rep, const RankTwoTriple& t, const HyperellipticCurve& F, bool symbolic, bool partner) {
    const int g = t.g;
    TowerPtr base = t.tower();
    if (!base) base = tower_build(TowerSpec{});
    TowerPtr tz = spectral_tower(base);
    rep.add_zero("corollary1", corollary1_residual(t, tz));
    DiffOp l4 = build_l4(t);
    rep.put("L4", l4.str());
    rep.add_zero("L4_self_adjoint", formal_adjoint(l4) - l4);

    // W = -2 (sum of roots) - c_{2g}, the sum of roots being -q_{g-1}.
    if (g >= 1) rep.add_zero("W_from_roots", t.W - t.q[g - 1].scaled(2) + F.coeff(2 * g));

    try {
        ChiPair chi = chi_from_q(t, F);
        rep.put("chi1", chi.chi1.str());
        rep.add("chi1_sigma_invariant", sigma_invariant(chi.chi1, chi.w));
        SeriesCoefficients sc = f_coeffs_from_expansion(chi);
        rep.add_zero("series_a0_is_minus_V", sc.a0 + t.V);
        rep.add_zero("series_W_is_minus_2a1", t.W + sc.a1.scaled(2));
        rep.add_zero("series_b1", sc.b1);
        rep.add_zero("series_f_match", DiffOp({sc.f0, sc.f1, sc.f2, RingElement(), RingElement(1)}) - l4);
    } catch (const Error& e) {
        rep.add("chi", false, e.what());
    }

    // Nonsingularity is a generic property; at a numeric point it is reported only.
    if (symbolic)
        rep.add("curve_nonsingular", is_nonsingular(F), discriminant(F).str());
    else
        rep.put("discriminant", discriminant(F).str());

    if (partner) {
        DiffOp L;
        try {
            L = build_partner(t, F);
        } catch (const Error& e) {
            rep.add("partner", false, e.what());
            return;
        }
        rep.put("partner_order", L.order());
        rep.put("partner", L.str());
        rep.add("partner_order_4g_plus_2", L.order() == 4 * g + 2);
        rep.add_zero("partner_commutes", commutator(L, l4));
        rep.add_zero("partner_curve", eval_poly(F.as_curve(), l4, L));
        // Same identity inside the Weyl algebra: Y^2 = F(X).
        bool polynomial = true;
        for (const auto& op : {l4, L})
            for (const auto& c : op.coeffs()) polynomial = polynomial && c.is_polynomial();
        if (polynomial) {
            WeylElement X = WeylElement::from_diffop(l4), Y = WeylElement::from_diffop(L);
            WeylElement fx;
            for (int i = 2 * g + 1; i >= 0; --i) fx = fx * X + WeylElement::constant(F.coeff(i));
            WeylElement rel = Y * Y - fx;
            rep.add("weyl_Y2_is_F(X)", rel.is_zero(), rel.str());
        }
    }
}

}  // namespace

Report run_mironov(int g, const Bindings& bound, int degree_bound, bool partner) {
    Report rep;
    rep.fixture = "mironov_g" + std::to_string(g);
    std::vector<std::string> free;
    for (const auto& n : {"h0", "h1", "h2", "h3"})
        if (!bound.count(n)) free.push_back(n);
    for (const auto& [k, v] : bound)
        if (k != "h0" && k != "h1" && k != "h2" && k != "h3") throw ParseError("unknown parameter '" + k + "'");
    TowerPtr base = tower_build(TowerSpec{free, {}});
    std::vector<RingElement> h;
    for (const auto& n : {"h0", "h1", "h2", "h3"})
        h.push_back(bound.count(n) ? RingElement(bound.at(n)) : base->var(n));
    rep.description = "(D^2 + h3 x^3 + h2 x^2 + h1 x + h0)^2 + g(g+1) h3 x";
    rep.description += bound.empty() ? ", symbolic h" : " at " + describe_bindings(bound);
    rep.put("genus", g);
    if (degree_bound < 0) degree_bound = 2 * g + 4;
    const bool symbolic = !free.empty();

    MironovSolution s;
    try {
        s = mironov_solve(g, base, h, degree_bound);
    } catch (const Error& e) {
        rep.add("solve", false, e.what());
        return rep;
    }
    const RankTwoTriple& t = s.triple;
    const HyperellipticCurve& F = s.curve;
    rep.put("Q", t.q_str());
    rep.put("V", t.V.str());
    rep.put("W", t.W.str());
    rep.put("family_dimension", s.family_dimension);
    rep.put("F", F.str());
    rep.add("q_equation_x_free", true);

    std::string printed = g == 1 ? kPrintedF1 : g == 2 ? kPrintedF2 : "";
    if (!printed.empty()) {
        std::vector<RingElement> pc = printed_coefficients(printed, base, bound);
        std::string diff;
        for (int i = 0; i <= 2 * g + 1; ++i) {
            RingElement a = i < int(pc.size()) ? pc[i] : RingElement(), b = F.coeff(i);
            if (a != b) diff += "z^" + std::to_string(i) + ": printed " + a.str() + ", derived " + b.str() + "; ";
        }
        rep.add("printed_curve", diff.empty(), diff);
    }

    if (g == 1) {
        RingElement gamma = -t.q[0];
        rep.add_zero("v_from_root", v_from_q(t, F, gamma) - t.V);
        GenusOneData d = genus_one_data(gamma, F);
        rep.put("H1", d.H1.str());
        rep.add_zero("kappa_is_minus_V", d.kappa + t.V);
        std::string bad;
        for (const auto& r : tyurin_residuals(d.tyurin))
            if (!r.is_zero()) bad += r.str() + "; ";
        rep.add("tyurin_residuals", bad.empty(), bad);
    }
    if (g == 2) {
        // Roots (-q1 +- p)/2 with p^2 = q1^2 - 4 q0.
        RingElement rad = t.q[1] * t.q[1] - t.q[0].scaled(4);
        rep.put("p_squared", rad.str());
        if (!derive(rad).is_zero()) {
            TowerPtr pt = extend_sqrt(base, "p", rad);
            RingElement p = pt->var("p");
            RingElement g1 = (p - t.q[1]).scaled(Rational(1, 2)), g2 = (-p - t.q[1]).scaled(Rational(1, 2));
            rep.add_zero("ur", ur_residual(g1, g2, F));
            rep.add_zero("corollary2", corollary2_residuals(t, F, {g1, g2}).at(0));
            rep.add_zero("v_from_root", v_from_q(t, F, g1) - t.V);
            GenusTwoData d = genus_two_data(g1, g2, F);
            rep.put("H1", d.H1.str());
            rep.put("H2", d.H2.str());
            rep.add_zero("kappa_formulas_agree", d.kappa1 - d.kappa2);
            rep.add_zero("kappa_is_minus_V", d.kappa1 + t.V);
            std::string bad;
            for (const auto& r : tyurin_residuals(d.tyurin))
                if (!r.is_zero()) bad += r.str() + "; ";
            rep.add("tyurin_residuals", bad.empty(), bad);
            if (bound.empty()) {
                RingElement printed_rad = base->parse(kPrintedRadicand);
                rep.add_zero("printed_radicand", printed_rad - rad);
                TowerPtr pp = extend_sqrt(base, "p", printed_rad);
                RingElement q = pp->var("p"), m = (h[2].scaled(-5) - (h[3] * base->x()).scaled(3)).in(pp);
                RingElement r = ur_residual((m + q).scaled(Rational(1, 2)), (m - q).scaled(Rational(1, 2)), F);
                rep.add("printed_roots_ur", r.is_zero(), r.is_zero() ? "0" : "nonzero");
            }
        }
    }

    triple_checks(rep, t, F, symbolic, partner);
    return rep;
}

Report run_mironov(int g, const std::vector<Rational>& hv, int degree_bound, bool partner) {
    Bindings b;
    if (!hv.empty()) {
        if (hv.size() != 4) throw DegreeMismatch("expected four parameter values h0..h3");
        for (int i = 0; i < 4; ++i) b["h" + std::to_string(i)] = hv[i];
    }
    return run_mironov(g, b, degree_bound, partner);
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep, int max_parts = -1) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (max_parts < 0 || int(out.size()) + 1 < max_parts) {
        auto pos = s.find(sep, start);
        if (pos == std::string::npos) break;
        out.push_back(trim(s.substr(start, pos - start)));
        start = pos + 1;
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

std::string bind_values(std::string text, const Bindings& bound) {
    for (const auto& [k, v] : bound)
        text = std::regex_replace(text, std::regex("\\b" + k + "\\b"), "(" + RingElement(v).str() + ")");
    return text;
}

void check_bindings(const Bindings& bound, const std::vector<std::string>& declared) {
    for (const auto& [k, v] : bound)
        if (std::find(declared.begin(), declared.end(), k) == declared.end())
            throw ParseError("unknown parameter '" + k + "'");
}

}  // namespace

PairFixture load_pair(const std::string& text, const Bindings& bound) {
    std::vector<std::string> params;
    std::vector<Extension> exts;
    std::string x = "x", a, b, curve, description;
    int depth = 6;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
        auto fields = [&](int n) {
            auto f = split(value, ',', n);
            if (int(f.size()) != n)
                throw ParseError("line " + std::to_string(lineno) + ": '" + key + "' takes " + std::to_string(n) +
                                 " comma-separated fields");
            return f;
        };
        if (key == "parameters") {
            for (auto& p : split(value, ','))
                if (!p.empty()) params.push_back(p);
        } else if (key == "exponential") {
            auto f = fields(2);
            exts.push_back(Exponential{f[0], f[1]});
        } else if (key == "elliptic") {
            auto f = fields(3);
            exts.push_back(EllipticType{f[0], f[1], f[2]});
        } else if (key == "sqrt") {
            auto f = fields(2);
            exts.push_back(SqrtAlgebraic{f[0], f[1]});
        } else if (key == "x") {
            x = value;
        } else if (key == "A") {
            a = value;
        } else if (key == "B") {
            b = value;
        } else if (key == "curve") {
            curve = value;
        } else if (key == "description") {
            description = value;
        } else if (key == "depth") {
            depth = std::stoi(value);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (a.empty() || b.empty()) throw ParseError("pair file needs both 'A:' and 'B:'");
    check_bindings(bound, params);

    TowerSpec spec;
    spec.x_name = x;
    for (const auto& p : params)
        if (!bound.count(p)) spec.parameters.push_back(p);
    for (auto& e : exts)
        std::visit(
            [&](auto& ext) {
                using T = std::decay_t<decltype(ext)>;
                if constexpr (std::is_same_v<T, Exponential>) ext.rate = bind_values(ext.rate, bound);
                if constexpr (std::is_same_v<T, EllipticType>) ext.cubic = bind_values(ext.cubic, bound);
                if constexpr (std::is_same_v<T, SqrtAlgebraic>) ext.radicand = bind_values(ext.radicand, bound);
            },
            e);
    spec.extensions = exts;

    PairFixture f;
    f.description = description;
    f.tower = tower_build(spec);
    f.a = DiffOp::parse(f.tower, bind_values(a, bound));
    f.b = DiffOp::parse(f.tower, bind_values(b, bound));
    f.expected_curve = bind_values(curve, bound);
    f.schur_depth = depth;
    return f;
}

Report run_triple(const nlohmann::json& spec, const Bindings& cli, bool partner) {
    Report rep;
    rep.fixture = "triple";
    try {
        const int g = spec.at("genus").get<int>();
        Bindings bound;
        std::vector<std::string> declared, free;
        if (spec.contains("parameters"))
            for (const auto& [k, v] : spec.at("parameters").items()) {
                declared.push_back(k);
                if (!v.is_null()) bound[k] = RingElement(tower_build(TowerSpec{})->parse(v.get<std::string>())).rational_value();
            }
        check_bindings(cli, declared);
        for (const auto& [k, v] : cli) bound[k] = v;
        for (const auto& k : declared)
            if (!bound.count(k)) free.push_back(k);
        TowerPtr base = tower_build(TowerSpec{free, {}});
        auto read = [&](const std::string& text) { return base->parse(bind_values(text, bound)); };

        RankTwoTriple t;
        t.g = g;
        const auto& q = spec.at("Q");
        if (int(q.size()) != g) throw ParseError("Q needs " + std::to_string(g) + " coefficients q0..q_{g-1}");
        for (const auto& c : q) t.q.push_back(read(c.get<std::string>()));
        t.V = read(spec.at("V").get<std::string>());
        t.W = read(spec.at("W").get<std::string>());
        rep.description = "Q = " + t.q_str() + (bound.empty() ? "" : " at " + describe_bindings(bound));
        rep.put("genus", g);
        rep.put("Q", t.q_str());
        rep.put("V", t.V.str());
        rep.put("W", t.W.str());

        HyperellipticCurve F;
        try {
            F = q_equation_extract(t);
        } catch (const Error& e) {
            rep.add("q_equation_x_free", false, e.what());
            return rep;
        }
        rep.add("q_equation_x_free", true);
        rep.put("F", F.str());
        if (spec.contains("expected_curve")) {
            CurvePoly expected = CurvePoly::parse(base, bind_values(spec.at("expected_curve").get<std::string>(), bound)).normalized();
            CurvePoly got = F.as_curve().normalized();
            rep.put("expected_curve", expected.str());
            rep.add("curve_matches_expected", got == expected, got.str());
        }
        triple_checks(rep, t, F, !free.empty(), partner);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("triple file: ") + e.what());
    }
    return rep;
}

namespace {

struct Entry {
    std::string name;
    std::function<Report()> run;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> list = {
        {"wallenberg", [] { return run_pair("wallenberg", wallenberg()); }},
        {"elliptic_rank1", [] { return run_pair("elliptic_rank1", elliptic_rank1()); }},
        {"cuspidal", [] { return run_pair("cuspidal", cuspidal()); }},
        {"nodal", [] { return run_pair("nodal", nodal()); }},
        {"sheaf_twist", [] { return run_pair("sheaf_twist", sheaf_twist(std::nullopt)); }},
        {"sheaf_twist_num", [] { return run_pair("sheaf_twist_num", sheaf_twist(Rational(1))); }},
        {"dixmier", dixmier},
        {"mironov_g1", [] { return run_mironov(1, Bindings{}); }},
        {"mironov_g1_num",
         [] {
             Report r = run_mironov(1, std::vector<Rational>{0, 0, 0, 1});
             r.fixture += "_num";
             return r;
         }},
        {"mironov_g2", [] { return run_mironov(2, Bindings{}); }},
        {"mironov_g2_num",
         [] {
             Report r = run_mironov(2, std::vector<Rational>{0, 0, 0, 1});
             r.fixture += "_num";
             return r;
         }},
        {"mironov_g3", [] { return run_mironov(3, std::vector<Rational>{0, 0, 0, 1}); }},
        {"mironov_g3_generic",
         [] {
             Report r = run_mironov(3, std::vector<Rational>{1, 2, 3, 1});
             r.fixture += "_generic";
             return r;
         }},
        {"aut_orbit_rank3", aut_orbit},
    };
    return list;
}

}  // namespace

PairFixture pair_fixture(const std::string& name) {
    if (name == "wallenberg") return wallenberg();
    if (name == "elliptic_rank1") return elliptic_rank1();
    if (name == "cuspidal") return cuspidal();
    if (name == "nodal") return nodal();
    if (name == "sheaf_twist") return sheaf_twist(std::nullopt);
    if (name == "sheaf_twist_num") return sheaf_twist(Rational(1));
    if (name == "dixmier") return dixmier_fixture();
    if (name == "aut_orbit_rank3") return aut_orbit_fixture();
    throw UnknownFixture("no pair fixture named '" + name + "'");
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.name);
    return out;
}

Report run_fixture(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return e.run();
    throw UnknownFixture("no fixture named '" + name + "'");
}

}  // namespace codo
