#include <doctest.h>

#include "codo/curve.hpp"
#include "codo/diffop.hpp"
#include "codo/errors.hpp"
#include "support.hpp"

using namespace codo;

namespace {

DiffOp op(const TowerPtr& t, const std::string& s) { return DiffOp::parse(t, s); }

}  // namespace

TEST_CASE("composition follows the Leibniz rule") {
    TowerPtr t = tower_build(TowerSpec{{"a"}, {}});
    CHECK(commutator(op(t, "D^2"), op(t, "x")) == op(t, "2*D"));
    CHECK(compose(op(t, "D"), op(t, "x^3")) == op(t, "x^3*D + 3*x^2"));
    CHECK(op(t, "D*x - x*D") == op(t, "1"));
    CHECK(op(t, "(x*D)^2") == op(t, "x^2*D^2 + x*D"));
}

TEST_CASE("composition matches application to functions") {
    testing::Random rnd(21);
    for (const auto& t : testing::sample_towers()) {
        for (int i = 0; i < 20; ++i) {
            DiffOp a = rnd.op(t), b = rnd.op(t);
            RingElement f = rnd.element(t);
            CHECK(compose(a, b).apply(f) == a.apply(b.apply(f)));
        }
    }
}

TEST_CASE("composition is associative and the commutator satisfies Jacobi") {
    testing::Random rnd(22);
    for (const auto& t : testing::sample_towers()) {
        for (int i = 0; i < 10; ++i) {
            DiffOp a = rnd.op(t, 2), b = rnd.op(t, 2), c = rnd.op(t, 2);
            CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
            DiffOp j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                       commutator(c, commutator(a, b));
            CHECK(j.is_zero());
        }
    }
}

TEST_CASE("formal adjoint is an involutive anti-homomorphism") {
    testing::Random rnd(23);
    auto towers = testing::sample_towers();
    for (int i = 0; i < 100; ++i) {
        const TowerPtr& t = towers[i % towers.size()];
        DiffOp a = rnd.op(t), b = rnd.op(t);
        REQUIRE(formal_adjoint(formal_adjoint(a)) == a);
        REQUIRE(formal_adjoint(compose(a, b)) == compose(formal_adjoint(b), formal_adjoint(a)));
    }
    TowerPtr t = tower_build(TowerSpec{{"h"}, {}});
    CHECK(formal_adjoint(op(t, "D")) == op(t, "-D"));
    DiffOp l4 = op(t, "(D^2 + x^3 + h)^2 + 2*x");
    CHECK(formal_adjoint(l4) == l4);
    // adjoint(D^3 + f D) = -D^3 - f D - f'
    CHECK(formal_adjoint(op(t, "D^3 + x^2*D")) == op(t, "-D^3 - x^2*D - 2*x"));
}

TEST_CASE("eval_poly on a constant-coefficient pair") {
    TowerPtr t = tower_build(TowerSpec{});
    DiffOp a = op(t, "D^2"), b = op(t, "D^3");
    CHECK(eval_poly(CurvePoly::parse(t, "w^2 - z^3"), a, b).is_zero());
    CHECK(eval_poly(CurvePoly::parse(t, "w - z"), a, b) == op(t, "D^3 - D^2"));
    CHECK_THROWS_AS(eval_poly(CurvePoly::parse(t, "w"), op(t, "D"), op(t, "x")), NonCommutingPair);
}

TEST_CASE("gauge_apply agrees with application to an exponential") {
    // With t' = a t, A(t r) = t * gauge_apply(A, a, r).
    testing::Random rnd(24);
    TowerPtr t = tower_build(TowerSpec{{"a", "b"}, {Exponential{"t", "a"}}});
    RingElement e = t->var("t");
    for (int i = 0; i < 30; ++i) {
        DiffOp a = rnd.op(t);
        RingElement r = rnd.element(t);
        CHECK(a.apply(e * r) == e * gauge_apply(a, t->var("a"), r));
    }
}

TEST_CASE("operator roots and inverses") {
    TowerPtr t = tower_build(TowerSpec{{"g2", "g3"}, {EllipticType{"P", "dP", "4*P^3 - g2*P - g3"}}});
    DiffOp l = op(t, "D^2 - 2*P");
    PseudoDiffOp k = psdo_root(l, 2, 8);
    PseudoDiffOp sq = compose(k, k, -6);
    PseudoDiffOp diff = sq - PseudoDiffOp::from(l);
    for (int d = 2; d >= -6; --d) CHECK(diff.coeff(d).is_zero());
    PseudoDiffOp inv = psdo_inverse(k, -8);
    PseudoDiffOp one = compose(k, inv, -6);
    CHECK(one.coeff(0) == RingElement(1));
    for (int d = -1; d >= -6; --d) CHECK(one.coeff(d).is_zero());

    TowerPtr th = tower_build(TowerSpec{{"h"}, {}});
    DiffOp x4 = op(th, "(D^2 + x^3 + h)^2 + 2*x");
    PseudoDiffOp k4 = psdo_root(x4, 4, 8);
    PseudoDiffOp p4 = compose(compose(k4, k4, -8), compose(k4, k4, -8), -5);
    PseudoDiffOp d4 = p4 - PseudoDiffOp::from(x4);
    for (int d = 4; d >= -4; --d) CHECK(d4.coeff(d).is_zero());

    CHECK_THROWS_AS(psdo_root(op(t, "D^3"), 2, 4), OrderNotDivisible);
    CHECK_THROWS_AS(psdo_root(op(t, "2*D^2"), 2, 4), NonMonic);
}

TEST_CASE("Schur expansion of commuting operators has constant coefficients") {
    TowerPtr t = tower_build(TowerSpec{{"g2", "g3"}, {EllipticType{"P", "dP", "4*P^3 - g2*P - g3"}}});
    SchurResult s = schur_expand(op(t, "D^2 - 2*P"), op(t, "D^3 - 3*P*D - 3/2*dP"), 6);
    CHECK(s.constant);
    CHECK(s.coefficients.at(3) == RingElement(1));
    // A non-commuting operator fails somewhere.
    SchurResult bad = schur_expand(op(t, "D^2 - 2*P"), op(t, "D^3 + x"), 4);
    CHECK(!bad.constant);
}

TEST_CASE("operator text round trip") {
    testing::Random rnd(25);
    for (const auto& t : testing::sample_towers()) {
        for (int i = 0; i < 30; ++i) {
            DiffOp a = rnd.op(t);
            CHECK(DiffOp::parse(t, a.str()) == a);
        }
    }
    TowerPtr t = tower_build(TowerSpec{});
    CHECK_THROWS_AS(DiffOp::parse(t, "1/D"), ParseError);
    CHECK_THROWS_AS(DiffOp::parse(t, "D^-1"), ParseError);
}
