// Acceptance run: one line per criterion with its verdict and wall time.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "codo/catalog.hpp"
#include "codo/errors.hpp"
#include "codo/weyl.hpp"
#include "support.hpp"

using namespace codo;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        notes.push_back((ok ? "" : "NOT ") + what);
    }
};

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
    return out;
}

bool run(int n, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("completed without error (") + e.what() + ")");
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > limit_s) o.require(false, "within the time limit");
    std::ostringstream os;
    os << "criterion " << std::setw(2) << n << ": " << (o.pass ? "PASS" : "FAIL") << "  [" << std::fixed
       << std::setprecision(2) << s << " s / " << limit_s << " s]  " << title << ": " << join(o.notes);
    std::cout << os.str() << std::endl;
    return o.pass;
}

CurvePoly curve(const PairFixture& f) { return CurvePoly::parse(f.tower, f.expected_curve).normalized(); }

bool eigen_ok(const PairFixture& f) {
    bool ok = !f.eigen.empty();
    for (const auto& e : f.eigen) {
        const DiffOp& op = e.op == 0 ? f.a : f.b;
        ok = ok && (gauge_apply(op, e.shift, e.r) - e.lambda * e.r).is_zero();
    }
    for (const auto& [name, r] : f.identities) ok = ok && r.is_zero();
    return ok;
}

const char* kF1 = "z^3 + 2*h2*z^2 + z*(h2^2 + h1*h3) + h3*(h1*h2 - h0*h3)";
const char* kF2 =
    "z^5 + 10*h2*z^4 + (33*h2^2 + 21*h1*h3)*z^3 + (40*h2^3 + 117*h1*h2*h3 + 27*h0*h3^3)*z^2"
    " + 4*(4*h2^4 + 36*h1*h2^2*h3 + 27*h3^2*(h1^2 + h0*h2))*z"
    " + 3*h3*(36*h1^2*h2*h3 + 27*h3^3 + 4*h1*(4*h2^3 + 27*h0*h3^2))";
const char* kP2 = "9*(h2^2 - 2*h3*(2*h1 - h2*x) - 3*h3^2*x^2)";

TowerPtr h_tower() { return tower_build(TowerSpec{{"h0", "h1", "h2", "h3"}, {}}); }

std::vector<RingElement> h_vars(const TowerPtr& t) {
    return {t->var("h0"), t->var("h1"), t->var("h2"), t->var("h3")};
}

// Monic curve polynomial of genus g read from text in z over `base`.
HyperellipticCurve read_curve(const TowerPtr& base, int g, const std::string& text) {
    TowerPtr tz = extend_parameter(base, "z");
    RingElement e = tz->parse(text);
    std::vector<Poly> cs = e.num().coefficients(tz->index("z"));
    std::vector<RingElement> out;
    for (int i = 0; i < 2 * g + 1; ++i)
        out.push_back(i < int(cs.size()) ? import_into(tz->normalize(cs[i], e.den()), base) : RingElement());
    return HyperellipticCurve(g, out);
}

bool all_zero(const std::vector<RingElement>& v) {
    for (const auto& r : v)
        if (!r.is_zero()) return false;
    return true;
}

}  // namespace

int main() {
    bool ok = true;

    ok &= run(1, "Wallenberg pair", 5, [](Outcome& o) {
        PairFixture f = pair_fixture("wallenberg");
        o.require(commutator(f.a, f.b).is_zero(), "[L1,L2] = 0");
        o.require(bc_resultant(f.a, f.b) == curve(f), "resultant equals " + curve(f).str());
    });

    ok &= run(2, "Lame pair", 5, [](Outcome& o) {
        PairFixture f = pair_fixture("elliptic_rank1");
        o.require(commutator(f.a, f.b).is_zero(), "[L2,L3] = 0");
        o.require(eval_poly(curve(f), f.a, f.b).is_zero(), "L3^2 - L2^3 + g2/4 L2 + g3/4 = 0");
    });

    ok &= run(3, "cuspidal pair", 5, [](Outcome& o) {
        PairFixture f = pair_fixture("cuspidal");
        o.require((compose(compose(f.a, f.a), f.a) - compose(f.b, f.b)).is_zero(), "L2^3 = L3^2");
        o.require(eigen_ok(f), "eigen identities via gauge_apply");
    });

    ok &= run(4, "nodal pairs, b = 1 and symbolic b", 10, [](Outcome& o) {
        for (const auto* name : {"nodal", "sheaf_twist_num", "sheaf_twist"}) {
            PairFixture f = pair_fixture(name);
            o.require(eigen_ok(f), std::string(name) + " eigen identities and gluing");
            o.require(bc_resultant(f.a, f.b) == curve(f), std::string(name) + " curve " + curve(f).str());
        }
    });

    ok &= run(5, "Dixmier pair", 10, [](Outcome& o) {
        TowerPtr t = tower_build(TowerSpec{{"h"}, {}});
        RingElement h = t->var("h");
        DixmierPair p = dixmier_pair(h);
        o.require(weyl_commutator(p.x, p.y).is_zero(), "[X,Y] = 0");
        o.require((p.y * p.y - weyl_pow(p.x, 3) + WeylElement::constant(h)).is_zero(), "Y^2 - X^3 + h = 0");
    });

    ok &= run(6, "rank-two family, genus 1", 30, [](Outcome& o) {
        TowerPtr b = h_tower();
        auto h = h_vars(b);
        RankTwoTriple t = mironov_q(1, b, h, 6);
        o.require(t.q.size() == 1 && t.q[0] == b->parse("h3*x + h2"), "Q = z + h3 x + h2");
        HyperellipticCurve f = q_equation_extract(t);
        HyperellipticCurve printed = read_curve(b, 1, kF1);
        bool same = true;
        for (int i = 0; i < 3; ++i) same = same && f.coeff(i) == printed.coeff(i);
        o.require(same, "F1 matches the closed form");
        GenusOneData d = genus_one_data(b->parse("-h3*x - h2"), printed);
        o.require((d.kappa + t.V).is_zero(), "V = -kappa");
        DiffOp l4 = build_l4(t), l6 = build_partner(t, f);
        o.require(l6.order() == 6 && commutator(l4, l6).is_zero(), "[L4,L6] = 0");
        o.require(eval_poly(f.as_curve(), l4, l6).is_zero(), "L6^2 = F1(L4)");
    });

    ok &= run(7, "rank-two family, genus 2", 600, [](Outcome& o) {
        TowerPtr b = h_tower();
        auto h = h_vars(b);
        MironovSolution m = mironov_solve(2, b, h, 8);
        const RankTwoTriple& t = m.triple;
        HyperellipticCurve printed = read_curve(b, 2, kF2);
        std::string diff;
        for (int i = 0; i < 5; ++i)
            if (m.curve.coeff(i) != printed.coeff(i))
                diff += " z^" + std::to_string(i) + " (printed " + printed.coeff(i).str() + ", derived " +
                        m.curve.coeff(i).str() + ")";
        o.require(diff.empty(), "F2 equals the printed quintic" + (diff.empty() ? "" : ", differs at" + diff));
        o.require(t.W == b->parse("6*h3*x"), "W = 6 h3 x");

        // The displayed roots: (-5 h2 - 3 h3 x +- p)/2 with the displayed p^2.
        TowerPtr pt = extend_sqrt(b, "p", b->parse(kP2));
        RingElement p = pt->var("p"), mid = pt->parse("-5*h2 - 3*h3*x");
        RingElement g1 = (mid + p).scaled(Rational(1, 2)), g2 = (mid - p).scaled(Rational(1, 2));
        o.require(ur_residual(g1, g2, printed).is_zero(), "(ur) = 0 for the displayed roots and curve");
        o.require(ur_residual(g1, g2, m.curve).is_zero(), "(ur) = 0 for the displayed roots and derived curve");
        GenusTwoData d = genus_two_data(g1, g2, printed);
        o.require((d.kappa1 - d.kappa2).is_zero(), "both kappa expressions agree on the displayed data");

        // The same formulas with the roots of the derived Q.
        RingElement rad = t.q[1] * t.q[1] - t.q[0].scaled(4);
        TowerPtr qt = extend_sqrt(b, "p", rad);
        RingElement q = qt->var("p");
        RingElement r1 = (q - t.q[1]).scaled(Rational(1, 2)), r2 = (-q - t.q[1]).scaled(Rational(1, 2));
        GenusTwoData e = genus_two_data(r1, r2, m.curve);
        o.require(ur_residual(r1, r2, m.curve).is_zero() && (e.kappa1 - e.kappa2).is_zero() &&
                      (e.kappa1 + t.V).is_zero(),
                  "with p^2 = " + rad.str() + " (ur) = 0, kappa1 = kappa2 = -V");

        TowerPtr n = tower_build(TowerSpec{});
        MironovSolution s = mironov_solve(2, n, {RingElement(0), RingElement(0), RingElement(0), RingElement(1)}, 8);
        DiffOp l4 = build_l4(s.triple), l10 = build_partner(s.triple, s.curve);
        o.require(l10.order() == 10 && commutator(l4, l10).is_zero(), "[L4,L10] = 0 at h = (0,0,0,1)");
        o.require(eval_poly(s.curve.as_curve(), l4, l10).is_zero(), "L10^2 = F2(L4) at h = (0,0,0,1)");
    });

    ok &= run(8, "rank-two family, genus 3 at h = (0,0,0,1)", 1800, [](Outcome& o) {
        TowerPtr n = tower_build(TowerSpec{});
        MironovSolution s = mironov_solve(3, n, {RingElement(0), RingElement(0), RingElement(0), RingElement(1)}, 10);
        o.require(s.triple.q.size() == 3, "Q = " + s.triple.q_str());
        o.require(s.curve.genus() == 3, "F3 = " + s.curve.str() + " monic of degree 7");
        RingElement disc = discriminant(s.curve);
        o.require(!disc.is_zero(), "discriminant nonzero (it is " + disc.str() + ")");
        DiffOp l4 = build_l4(s.triple), l14 = build_partner(s.triple, s.curve);
        o.require(l14.order() == 14 && commutator(l4, l14).is_zero(), "[L4,L14] = 0");
        o.require(eval_poly(s.curve.as_curve(), l4, l14).is_zero(), "L14^2 = F3(L4)");
    });

    ok &= run(9, "automorphism orbit", 60, [](Outcome& o) {
        PairFixture f = pair_fixture("aut_orbit_rank3");
        o.require(f.a.order() == 6 && f.b.order() == 9, "orders (6, 9)");
        o.require(rank_of_pair(f.a.order(), f.b.order()) == 3, "gcd 3");
        o.require(commutator(f.a, f.b).is_zero(), "commute");
        o.require(eval_poly(curve(f), f.a, f.b).is_zero(), "annihilated by " + curve(f).str());
    });

    ok &= run(10, "Schur expansions to depth 6", 60 * 7, [](Outcome& o) {
        for (const auto* name :
             {"wallenberg", "elliptic_rank1", "cuspidal", "nodal", "sheaf_twist_num", "sheaf_twist", "dixmier"}) {
            auto t0 = std::chrono::steady_clock::now();
            PairFixture f = pair_fixture(name);
            bool low_first = f.a.order() <= f.b.order();
            SchurResult s = schur_expand(low_first ? f.a : f.b, low_first ? f.b : f.a, 6);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            o.require(s.constant && secs < 60, std::string(name) + " constant");
        }
    });

    ok &= run(11, "property suites", 600, [](Outcome& o) {
        testing::Random rnd(2024);
        bool leibniz = true;
        for (const auto& t : testing::sample_towers())
            for (int i = 0; i < 500; ++i) {
                RingElement f = rnd.element(t), g = rnd.element(t);
                leibniz = leibniz && derive(f * g) == derive(f) * g + f * derive(g);
            }
        o.require(leibniz, "Leibniz on 500 random elements per tower");

        bool adjoint = true;
        auto towers = testing::sample_towers();
        for (int i = 0; i < 100; ++i) {
            const TowerPtr& t = towers[i % towers.size()];
            DiffOp a = rnd.op(t), b = rnd.op(t);
            adjoint = adjoint && formal_adjoint(formal_adjoint(a)) == a &&
                      formal_adjoint(compose(a, b)) == compose(formal_adjoint(b), formal_adjoint(a));
        }
        o.require(adjoint, "adjoint involution and anti-homomorphism on 100 pairs");

        TowerPtr b = h_tower();
        GenusOneData d1 = genus_one_data(b->parse("-h3*x - h2"), read_curve(b, 1, kF1));
        o.require(all_zero(tyurin_residuals(d1.tyurin)), "(w1)-(w3) zero on the genus-1 data");

        TowerPtr pt = extend_sqrt(b, "p", b->parse(kP2));
        RingElement p = pt->var("p"), mid = pt->parse("-5*h2 - 3*h3*x");
        GenusTwoData d2 =
            genus_two_data((mid + p).scaled(Rational(1, 2)), (mid - p).scaled(Rational(1, 2)), read_curve(b, 2, kF2));
        o.require(all_zero(tyurin_residuals(d2.tyurin)), "(w1)-(w3) zero on the displayed genus-2 data");

        MironovSolution m = mironov_solve(2, b, h_vars(b), 8);
        RingElement rad = m.triple.q[1] * m.triple.q[1] - m.triple.q[0].scaled(4);
        TowerPtr qt = extend_sqrt(b, "p", rad);
        RingElement q = qt->var("p");
        GenusTwoData d3 = genus_two_data((q - m.triple.q[1]).scaled(Rational(1, 2)),
                                         (-q - m.triple.q[1]).scaled(Rational(1, 2)), m.curve);
        o.require(all_zero(tyurin_residuals(d3.tyurin)), "(w1)-(w3) zero on the genus-2 data from the derived Q");

        TowerPtr n = tower_build(TowerSpec{});
        int nonzero = 0;
        for (int i = 0; i < 20; ++i) {
            RankTwoTriple bad;
            bad.g = 2;
            bad.q = {n->parse("9*x^2"), n->parse("3*x")};
            bad.V = n->parse("x^3");
            bad.W = n->parse("6*x");
            bad.q[rnd.integer(0, 1)] += n->x().scaled(rnd.rational()) + RingElement(rnd.integer(1, 5));
            if (!corollary1_residual(bad, spectral_tower(n)).is_zero()) ++nonzero;
        }
        o.require(nonzero == 20, "corollary residual nonzero on 20 random non-solutions");
    });

    return ok ? 0 : 1;
}
