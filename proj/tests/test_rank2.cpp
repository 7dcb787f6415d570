#include <doctest.h>

#include "codo/errors.hpp"
#include "codo/rank2.hpp"
#include "codo/spectral.hpp"
#include "codo/weyl.hpp"
#include "support.hpp"

using namespace codo;

namespace {

struct Symbolic {
    TowerPtr base = tower_build(TowerSpec{{"h0", "h1", "h2", "h3"}, {}});
    std::vector<RingElement> h{base->var("h0"), base->var("h1"), base->var("h2"), base->var("h3")};
};

RankTwoTriple triple(const TowerPtr& t, std::vector<std::string> q, const std::string& v, const std::string& w) {
    RankTwoTriple r;
    r.g = int(q.size());
    for (const auto& c : q) r.q.push_back(t->parse(c));
    r.V = t->parse(v);
    r.W = t->parse(w);
    return r;
}

}  // namespace

TEST_CASE("genus one family") {
    Symbolic s;
    MironovSolution m = mironov_solve(1, s.base, s.h, 6);
    CHECK(m.family_dimension == 0);
    CHECK(m.triple.q[0] == s.base->parse("h3*x + h2"));
    CHECK(m.triple.W == s.base->parse("2*h3*x"));
    HyperellipticCurve printed(1, {s.base->parse("h3*(h1*h2 - h0*h3)"), s.base->parse("h2^2 + h1*h3"),
                                   s.base->parse("2*h2")});
    for (int i = 0; i <= 3; ++i) CHECK(m.curve.coeff(i) == printed.coeff(i));

    GenusOneData d = genus_one_data(-m.triple.q[0], m.curve);
    CHECK((d.kappa + m.triple.V).is_zero());
    for (const auto& r : tyurin_residuals(d.tyurin)) CHECK(r.is_zero());
    CHECK(v_from_q(m.triple, m.curve, -m.triple.q[0]) == m.triple.V);
}

TEST_CASE("genus two family") {
    Symbolic s;
    MironovSolution m = mironov_solve(2, s.base, s.h, 8);
    const RankTwoTriple& t = m.triple;
    CHECK(m.family_dimension == 0);
    CHECK(t.W == s.base->parse("6*h3*x"));
    // The roots sum to -5 h2 - 3 h3 x.
    CHECK(t.q[1] == s.base->parse("5*h2 + 3*h3*x"));
    RingElement rad = t.q[1] * t.q[1] - t.q[0].scaled(4);
    CHECK(rad == s.base->parse("9*(h2^2 - 2*h3*(2*h1 + h2*x) - 3*h3^2*x^2)"));

    // Every coefficient of the curve but the one of z^2 appears in closed form.
    std::vector<std::string> printed = {
        "3*h3*(36*h1^2*h2*h3 + 27*h3^3 + 4*h1*(4*h2^3 + 27*h0*h3^2))",
        "4*(4*h2^4 + 36*h1*h2^2*h3 + 27*h3^2*(h1^2 + h0*h2))",
        "",
        "33*h2^2 + 21*h1*h3",
        "10*h2",
    };
    for (int i = 0; i < 5; ++i)
        if (!printed[i].empty()) CHECK(m.curve.coeff(i) == s.base->parse(printed[i]));
    CHECK(m.curve.coeff(2) == s.base->parse("40*h2^3 + 117*h1*h2*h3 + 27*h0*h3^2"));

    TowerPtr pt = extend_sqrt(s.base, "p", rad);
    RingElement p = pt->var("p");
    RingElement g1 = (p - t.q[1]).scaled(Rational(1, 2)), g2 = (-p - t.q[1]).scaled(Rational(1, 2));
    CHECK(ur_residual(g1, g2, m.curve).is_zero());
    for (const auto& r : corollary2_residuals(t, m.curve, {g1, g2})) CHECK(r.is_zero());
    GenusTwoData d = genus_two_data(g1, g2, m.curve);
    CHECK(d.kappa1 == d.kappa2);
    CHECK((d.kappa1 + t.V).is_zero());
    for (const auto& r : tyurin_residuals(d.tyurin)) CHECK(r.is_zero());
}

TEST_CASE("the two-pole equation rejects roots of the wrong quadratic") {
    Symbolic s;
    MironovSolution m = mironov_solve(2, s.base, s.h, 8);
    TowerPtr pt = extend_sqrt(s.base, "p", s.base->parse("9*(h2^2 - 2*h3*(2*h1 - h2*x) - 3*h3^2*x^2)"));
    RingElement p = pt->var("p"), mid = pt->parse("-5*h2 - 3*h3*x");
    RingElement r = ur_residual((mid + p).scaled(Rational(1, 2)), (mid - p).scaled(Rational(1, 2)), m.curve);
    CHECK(!r.is_zero());
}

TEST_CASE("corollary residual vanishes exactly on solutions") {
    Symbolic s;
    TowerPtr tz = spectral_tower(s.base);
    for (int g = 1; g <= 2; ++g) {
        MironovSolution m = mironov_solve(g, s.base, s.h, 2 * g + 4);
        CHECK(corollary1_residual(m.triple, tz).is_zero());
    }
    // Random perturbations of Q are not solutions.
    testing::Random rnd(51);
    TowerPtr t = tower_build(TowerSpec{});
    int nonzero = 0;
    for (int i = 0; i < 20; ++i) {
        RankTwoTriple bad = triple(t, {"9*x^2", "3*x"}, "x^3", "6*x");
        bad.q[rnd.integer(0, 1)] += t->x().scaled(rnd.rational()) + RingElement(rnd.integer(1, 5));
        TowerPtr bz = spectral_tower(t);
        RingElement c = corollary1_residual(bad, bz);
        if (!c.is_zero()) ++nonzero;
        // G depends on x exactly when the corollary residual is nonzero.
        bool x_dependent = false;
        try {
            q_equation_extract(bad);
        } catch (const XDependentResidual&) {
            x_dependent = true;
        }
        CHECK(x_dependent == !c.is_zero());
    }
    CHECK(nonzero == 20);
}

TEST_CASE("q-equation on a numeric genus-two triple") {
    TowerPtr t = tower_build(TowerSpec{});
    RankTwoTriple r = triple(t, {"9*x^2", "3*x"}, "x^3", "6*x");
    HyperellipticCurve f = q_equation_extract(r);
    CHECK(f.coeff(0) == RingElement(81));
    for (int i = 1; i < 5; ++i) CHECK(f.coeff(i).is_zero());
    // G = 4F exactly.
    TowerPtr tz = spectral_tower(t);
    RingElement z = tz->var("z");
    CHECK(q_equation_rhs(r, tz) == (pow(z, 5) + RingElement(81)).scaled(4));
}

TEST_CASE("chi solves the second-order eigen equation") {
    // psi'''' expressed through (psi, psi') must reproduce L4 psi = z psi.
    Symbolic s;
    for (int g = 1; g <= 2; ++g) {
        MironovSolution m = mironov_solve(g, s.base, s.h, 2 * g + 4);
        ChiPair chi = chi_from_q(m.triple, m.curve);
        CHECK(sigma_invariant(chi.chi1, chi.w));
        auto ab = reduce_derivatives(chi, 4);
        // Independent step: psi^(j+1) = (a_j' + b_j chi0) psi + (a_j + b_j' + b_j chi1) psi'.
        for (int j = 0; j < 4; ++j) {
            CHECK(ab[j + 1].first == derive(ab[j].first) + ab[j].second * chi.chi0);
            CHECK(ab[j + 1].second == ab[j].first + derive(ab[j].second) + ab[j].second * chi.chi1);
        }
        DiffOp l4 = build_l4(m.triple);
        RingElement a, b;
        for (int j = 0; j <= 4; ++j) {
            a += l4.coeff(j) * ab[j].first;
            b += l4.coeff(j) * ab[j].second;
        }
        CHECK(a == chi.tower->var(chi.z));
        CHECK(b.is_zero());
    }
}

TEST_CASE("series at infinity recovers the operator") {
    Symbolic s;
    MironovSolution m = mironov_solve(1, s.base, s.h, 6);
    SeriesCoefficients sc = f_coeffs_from_expansion(chi_from_q(m.triple, m.curve));
    DiffOp l4 = build_l4(m.triple);
    CHECK(sc.f2 == l4.coeff(2));
    CHECK(sc.f1 == l4.coeff(1));
    CHECK(sc.f0 == l4.coeff(0));
    CHECK((sc.a0 + m.triple.V).is_zero());
    CHECK((m.triple.W + sc.a1.scaled(2)).is_zero());
}

TEST_CASE("genus-one partner at h = (h, 0, 0, 1) is the Dixmier operator") {
    TowerPtr t = tower_build(TowerSpec{{"h"}, {}});
    RingElement h = t->var("h");
    MironovSolution m = mironov_solve(1, t, {h, RingElement(0), RingElement(0), RingElement(1)}, 6);
    DixmierPair p = dixmier_pair(h);
    CHECK(build_l4(m.triple) == p.x.to_diffop(t));
    DiffOp l6 = build_partner(m.triple, m.curve);
    DiffOp y = p.y.to_diffop(t);
    CHECK((l6 == y || l6 == -y));
}

TEST_CASE("partner operators commute and satisfy the curve") {
    TowerPtr t = tower_build(TowerSpec{});
    std::vector<RingElement> h{RingElement(1), RingElement(2), RingElement(3), RingElement(1)};
    for (int g = 1; g <= 2; ++g) {
        MironovSolution m = mironov_solve(g, t, h, 2 * g + 4);
        DiffOp l4 = build_l4(m.triple), l = build_partner(m.triple, m.curve);
        CHECK(l.order() == 4 * g + 2);
        CHECK(commutator(l4, l).is_zero());
        CHECK(eval_poly(m.curve.as_curve(), l4, l).is_zero());
        // The resultant of the pair recovers the same curve.
        CHECK(bc_resultant(l4, l) == m.curve.as_curve().normalized());
    }
}

TEST_CASE("rank-two errors") {
    TowerPtr t = tower_build(TowerSpec{});
    TyurinData one;
    one.l = 1;
    CHECK_THROWS_AS(tyurin_residuals(one), RankTooSmall);

    RankTwoTriple r = triple(t, {"9*x^2", "3*x"}, "x^3", "6*x");
    HyperellipticCurve f = q_equation_extract(r);
    HyperellipticCurve wrong(2, {RingElement(80), RingElement(0), RingElement(0), RingElement(0), RingElement(0)});
    CHECK_THROWS_AS(chi_from_q(r, wrong), CurveMismatch);
    // The x-derivative Q' = 3z + 18x vanishes at z = -6x.
    CHECK_THROWS_AS(v_from_q(r, f, t->parse("-6*x")), DegenerateRoot);
    CHECK_THROWS_AS(q_equation_extract(triple(t, {"2*x"}, "x^3", "2*x")), XDependentResidual);
    CHECK_THROWS_AS(mironov_solve(1, t, {RingElement(0), RingElement(0), RingElement(0), RingElement(0)}, 6),
                    NoSolutionAtBound);
}

TEST_CASE("polynomial-root search over W = m h3 x") {
    Symbolic s;
    auto trials = polynomial_root_search(s.base, s.h, 6, 4);
    REQUIRE(trials.size() == 7);
    CHECK(trials[6].solvable);
    CHECK(trials[6].family_dimension == 0);
    CHECK(!trials[6].polynomial_roots);
}
