#pragma once

// Shared helpers for the unit tests: seeded random elements and operators.

#include <random>
#include <string>
#include <vector>

#include "codo/diffop.hpp"
#include "codo/ring.hpp"

namespace codo::testing {

class Random {
public:
    explicit Random(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational() {
        Rational r(integer(-6, 6), integer(1, 4));
        r.canonicalize();
        return r;
    }

    /// Polynomial in the tower's generators with `terms` random monomials.
    RingElement polynomial(const TowerPtr& t, int terms = 3, int max_exp = 2) {
        RingElement out(rational());
        for (int k = 0; k < terms; ++k) {
            RingElement m(rational());
            for (int g = 0; g < t->size(); ++g) {
                int e = integer(0, max_exp);
                if (e && integer(0, 2) == 0) m *= pow(t->var(t->generator(g).name), e);
            }
            out += m;
        }
        return out;
    }

    /// Quotient of random polynomials; the denominator avoids algebraic generators.
    RingElement element(const TowerPtr& t) {
        RingElement n = polynomial(t);
        if (integer(0, 1)) return n;
        RingElement d;
        while (d.is_zero()) {
            d = RingElement(rational());
            for (int g = 0; g < t->size(); ++g) {
                auto kind = t->generator(g).kind;
                if (kind == GeneratorKind::Algebraic) continue;
                if (integer(0, 1)) d += t->var(t->generator(g).name).scaled(rational());
            }
        }
        return n / d;
    }

    DiffOp op(const TowerPtr& t, int max_order = 3) {
        int n = integer(0, max_order);
        std::vector<RingElement> c;
        for (int i = 0; i <= n; ++i) c.push_back(polynomial(t, 2, 2));
        return DiffOp(c);
    }

private:
    std::mt19937 rng_;
};

/// Towers covering every extension kind, nested ones included.
inline std::vector<TowerPtr> sample_towers() {
    std::vector<TowerPtr> out;
    out.push_back(tower_build(TowerSpec{{"a", "b"}, {}}));
    out.push_back(tower_build(TowerSpec{{"a"}, {Exponential{"t", "a"}}}));
    out.push_back(tower_build(TowerSpec{{"g2", "g3"}, {EllipticType{"P", "dP", "4*P^3 - g2*P - g3"}}}));
    out.push_back(tower_build(TowerSpec{{"h"}, {SqrtAlgebraic{"p", "x^2 + h"}}}));
    out.push_back(tower_build(
        TowerSpec{{"a"}, {Exponential{"t", "2*a"}, SqrtAlgebraic{"p", "t + x"}, SqrtAlgebraic{"q", "p + 1"}}}));
    return out;
}

}  // namespace codo::testing
