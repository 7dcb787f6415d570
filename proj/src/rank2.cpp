#include "codo/rank2.hpp"

#include <algorithm>
#include <map>

#include "codo/linalg.hpp"

namespace codo {
namespace {

// Polynomials in the spectral parameter with coefficients in a tower;
// index = power of z.
using ZPoly = std::vector<RingElement>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ZPoly operator+(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

ZPoly operator*(const RingElement& c, ZPoly a) {
    for (auto& e : a) e = c * e;
    trim(a);
    return a;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + RingElement(-1) * b; }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

ZPoly times_z(ZPoly a) {
    if (!a.empty()) a.insert(a.begin(), RingElement());
    return a;
}

ZPoly d(const ZPoly& a, unsigned k = 1) {
    ZPoly r;
    for (const auto& c : a) r.push_back(derive(c, k));
    trim(r);
    return r;
}

ZPoly constant(const RingElement& c) {
    ZPoly r{c};
    trim(r);
    return r;
}

RingElement horner(const ZPoly& p, const RingElement& v) {
    RingElement r;
    for (std::size_t k = p.size(); k-- > 0;) r = r * v + p[k];
    return r;
}

ZPoly q_poly(const RankTwoTriple& t) {
    ZPoly q = t.q;
    q.push_back(RingElement(1));
    return q;
}

ZPoly curve_poly(const HyperellipticCurve& f) {
    ZPoly r;
    for (int i = 0; i <= 2 * f.genus() + 1; ++i) r.push_back(f.coeff(i));
    return r;
}

std::string fresh_name(const TowerPtr& t, std::string name) {
    while (t && t->find(name)) name += "_";
    return name;
}

ZPoly g_poly(const RankTwoTriple& t) {
    const ZPoly q = q_poly(t);
    const ZPoly q1 = d(q), q2 = d(q, 2), q3 = d(q, 3), q4 = d(q, 4);
    const RingElement& v = t.V;
    ZPoly zw = times_z(ZPoly{RingElement(1)}) - constant(t.W);
    ZPoly g = RingElement(4) * (zw * q * q) - RingElement(4) * v * (q1 * q1) + q2 * q2 - RingElement(2) * (q1 * q3);
    ZPoly inner = RingElement(2) * derive(v) * q1 + RingElement(4) * v * q2 + q4;
    return g + RingElement(2) * (q * inner);
}

ZPoly cor1_poly(const RankTwoTriple& t, const ZPoly& q) {
    const RingElement& v = t.V;
    ZPoly lin = times_z(ZPoly{RingElement(2)}) - constant(RingElement(2) * t.W - derive(v, 2));
    return d(q, 5) + RingElement(4) * v * d(q, 3) + RingElement(2) * (d(q) * lin) + RingElement(6) * derive(v) * d(q, 2) -
           RingElement(2) * derive(t.W) * q;
}

RingElement as_element(const ZPoly& p, const TowerPtr& tz, const std::string& z) { return horner(p, tz->var(z)); }

// Split an element of the chi tower as A + w B.
struct WParts {
    Poly a, b, den;
};

WParts split_w(const RingElement& e, int iw) {
    std::vector<Poly::Term> a, b;
    for (const auto& t : e.num().terms()) {
        if (t.m.e[iw] == 0) {
            a.push_back(t);
        } else {
            Monomial m = t.m;
            m.e[iw] = 0;
            m.deg -= 1;
            b.push_back({m, t.c});
        }
    }
    return {Poly::from_terms(std::move(a)), Poly::from_terms(std::move(b)), e.den()};
}

ZPoly z_coefficients(const Poly& p, int iz, const TowerPtr& base) {
    ZPoly r;
    for (const auto& c : p.coefficients(iz)) r.push_back(base->normalize(c, Poly(1)));
    trim(r);
    return r;
}

// Laurent expansion of n/d at z = infinity: exponent -> coefficient, for
// exponents from deg n - deg d down to `floor`.
std::map<int, RingElement> laurent(const ZPoly& n, const ZPoly& d, int floor) {
    std::map<int, RingElement> out;
    if (n.empty()) return out;
    const int a = int(n.size()) - 1, b = int(d.size()) - 1;
    std::vector<RingElement> s;
    for (int k = 0; a - b - k >= floor; ++k) {
        RingElement v = a - k >= 0 ? n[a - k] : RingElement();
        for (int j = 1; j <= k && j <= b; ++j) v -= d[b - j] * s[k - j];
        s.push_back(v / d[b]);
        out[a - b - k] = s.back();
    }
    return out;
}

RingElement at(const std::map<int, RingElement>& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? RingElement() : it->second;
}

// Coefficients of w B at infinity, indexed by n for the power z^{n + 1/2}.
std::map<int, RingElement> odd_expansion(const ZPoly& bn, const ZPoly& bd, const HyperellipticCurve& f, int floor) {
    const int g = f.genus();
    // sqrt(F / z^{2g+1}) = sum s_k z^{-k}
    std::vector<RingElement> u(g * 2 + 2), s;
    for (int i = 1; i <= 2 * g + 1; ++i) u[i] = f.coeff(2 * g + 1 - i);
    std::map<int, RingElement> o = laurent(bn, bd, floor - g - 1);
    if (o.empty()) return {};
    const int high = o.rbegin()->first;
    std::map<int, RingElement> out;
    const int depth = high + g - floor;
    s.push_back(RingElement(1));
    for (int k = 1; k <= depth; ++k) {
        RingElement v = k < int(u.size()) ? u[k] : RingElement();
        for (int i = 1; i < k; ++i) v -= s[i] * s[k - i];
        s.push_back(v.scaled(Rational(1, 2)));
    }
    for (int n = high + g; n >= floor; --n) {
        RingElement c;
        for (int k = 0; k <= depth; ++k) c += s[k] * at(o, n - g + k);
        if (!c.is_zero()) out[n] = c;
    }
    return out;
}

}  // namespace

// ------------------------------------------------------------------ triple

TowerPtr RankTwoTriple::tower() const {
    TowerPtr t = common_tower(V.tower(), W.tower());
    for (const auto& c : q) t = common_tower(t, c.tower());
    return t;
}

RingElement RankTwoTriple::Q(const TowerPtr& tz, const std::string& z) const { return as_element(q_poly(*this), tz, z); }

std::string RankTwoTriple::q_str(const std::string& z) const {
    TowerPtr base = tower();
    if (!base) base = tower_build(TowerSpec{});
    return Q(spectral_tower(base, z), z).str();
}

TowerPtr spectral_tower(const TowerPtr& base, const std::string& z) {
    if (base->find(z)) throw DuplicateName("'" + z + "' already names a generator");
    return extend_parameter(base, z);
}

// ------------------------------------------------------------------ Tyurin

std::vector<RingElement> tyurin_residuals(const TyurinData& t) {
    const int l = t.l;
    if (l < 2) throw RankTooSmall("Tyurin residuals need rank >= 2, got " + std::to_string(l));
    std::vector<RingElement> out;
    for (const auto& p : t.poles) {
        if (int(p.c.size()) != l || int(p.d.size()) != l)
            throw DegreeMismatch("pole data must hold " + std::to_string(l) + " coefficients");
        out.push_back(p.c[l - 1] + derive(p.gamma));
        // The remaining relations are stated through alpha = c / c_{l-1}.
        if (p.c[l - 1].is_zero()) continue;
        std::vector<RingElement> a;
        for (int j = 0; j < l; ++j) a.push_back(p.c[j] / p.c[l - 1]);
        out.push_back(p.d[0] - (a[0] * a[l - 2] + a[0] * p.d[l - 1] - derive(a[0])));
        for (int j = 1; j < l; ++j)
            out.push_back(p.d[j] - (a[j] * a[l - 2] - a[j - 1] + a[j] * p.d[l - 1] - derive(a[j])));
    }
    return out;
}

// -------------------------------------------------------------- Q-equation

RingElement q_equation_rhs(const RankTwoTriple& t, const TowerPtr& tz, const std::string& z) {
    return as_element(g_poly(t), tz, z);
}

HyperellipticCurve q_equation_extract(const RankTwoTriple& t) {
    ZPoly g = g_poly(t);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!derive(g[i]).is_zero())
            throw XDependentResidual("coefficient of z^" + std::to_string(i) + " depends on x: " + g[i].str());
    const int deg = 2 * t.g + 1;
    if (int(g.size()) != deg + 1 || g.back() != RingElement(4))
        throw DegreeMismatch("right side is not 4 z^" + std::to_string(deg) + " + ...");
    std::vector<RingElement> c;
    for (int i = 0; i < deg; ++i) c.push_back(g[i].scaled(Rational(1, 4)));
    return HyperellipticCurve(t.g, std::move(c));
}

RingElement corollary1_residual(const RankTwoTriple& t, const TowerPtr& tz, const std::string& z) {
    return as_element(cor1_poly(t, q_poly(t)), tz, z);
}

RingElement v_from_q(const RankTwoTriple& t, const HyperellipticCurve& f, const RingElement& gamma) {
    const ZPoly q = q_poly(t);
    const ZPoly q1 = d(q), q2 = d(q, 2), q3 = d(q, 3);
    ZPoly num = q2 * q2 - RingElement(2) * (q1 * q3) - RingElement(4) * curve_poly(f);
    RingElement slope = horner(q1, gamma);
    if (slope.is_zero()) throw DegenerateRoot("Q' vanishes at " + gamma.str());
    return horner(num, gamma) / (slope * slope).scaled(4);
}

std::vector<RingElement> corollary2_residuals(const RankTwoTriple& t, const HyperellipticCurve& f,
                                              const std::vector<RingElement>& roots) {
    std::vector<RingElement> v, out;
    for (const auto& r : roots) v.push_back(v_from_q(t, f, r));
    for (std::size_t j = 0; j < v.size(); ++j)
        for (std::size_t k = j + 1; k < v.size(); ++k) out.push_back(v[j] - v[k]);
    return out;
}

RingElement ur_residual(const RingElement& g1, const RingElement& g2, const HyperellipticCurve& f) {
    const RingElement a1 = derive(g1), a2 = derive(g1, 2), a3 = derive(g1, 3);
    const RingElement b1 = derive(g2), b2 = derive(g2, 2), b3 = derive(g2, 3);
    const RingElement dg = g1 - g2;
    RingElement r = (a1 * a1 * f.evaluate(g2) - b1 * b1 * f.evaluate(g1)).scaled(4);
    r -= (pow(a1, 4) * b1 * b1).scaled(4);
    r += dg * dg * b1 * b1 * a2 * a2;
    r += (dg * pow(a1, 3) * b1 * b2).scaled(2);
    r += (dg * a1 * b1 * b1 * (b1 * a2 - dg * a3)).scaled(2);
    r += a1 * a1 * (pow(b1, 4).scaled(4) + (dg * b1 * b1 * (a2 + b2)).scaled(6) + dg * dg * ((b1 * b3).scaled(2) - b2 * b2));
    return r;
}

// -------------------------------------------------------------------- chi

ChiPair chi_from_q(const RankTwoTriple& t, const HyperellipticCurve& f) {
    HyperellipticCurve own = q_equation_extract(t);
    if (own.genus() != f.genus() || own.coeffs() != f.coeffs())
        throw CurveMismatch("curve " + f.str() + " differs from the Q-equation curve " + own.str());
    TowerPtr base = t.tower();
    for (const auto& c : f.coeffs()) base = common_tower(base, c.tower());
    if (!base) base = tower_build(TowerSpec{});
    ChiPair out;
    out.z = fresh_name(base, "z");
    TowerPtr tz = spectral_tower(base, out.z);
    out.w = fresh_name(tz, "w");
    out.tower = extend_sqrt(tz, out.w, as_element(curve_poly(f), tz, out.z));
    out.curve = f;
    const ZPoly q = q_poly(t);
    RingElement Q = as_element(q, out.tower, out.z);
    RingElement w = out.tower->var(out.w);
    out.chi0 = (as_element(d(q, 2), out.tower, out.z).scaled(Rational(-1, 2)) + w) / Q - t.V;
    out.chi1 = as_element(d(q), out.tower, out.z) / Q;
    return out;
}

std::vector<std::pair<RingElement, RingElement>> reduce_derivatives(const ChiPair& c, int upto) {
    std::vector<std::pair<RingElement, RingElement>> out{{RingElement(1), RingElement()}};
    for (int j = 0; j < upto; ++j) {
        auto [a, b] = out.back();
        out.push_back({derive(a) + b * c.chi0, a + derive(b) + b * c.chi1});
    }
    return out;
}

DiffOp build_l4(const RankTwoTriple& t) {
    DiffOp s = DiffOp::D(2) + DiffOp::scalar(t.V);
    return compose(s, s) + DiffOp::scalar(t.W);
}

SeriesCoefficients f_coeffs_from_expansion(const ChiPair& c) {
    const TowerPtr& tw = c.tower;
    TowerPtr tz = tw->parent(), base = tz ? tz->parent() : nullptr;
    if (!base) throw SeriesExtractionFailure("chi tower must be base(z)[w]");
    const int iz = tw->index(c.z), iw = tw->index(c.w);
    auto expand = [&](const RingElement& e, int floor) {
        WParts p = split_w(e, iw);
        ZPoly den = z_coefficients(p.den, iz, base);
        auto even = laurent(z_coefficients(p.a, iz, base), den, floor);
        auto odd = odd_expansion(z_coefficients(p.b, iz, base), den, c.curve, floor);
        return std::pair{even, odd};
    };

    auto [e0, o0] = expand(c.chi0, -1);
    auto [e1, o1] = expand(c.chi1, -1);
    // chi0 = 1/k + a0 + a1 k + ..., chi1 = b1 k + ...
    for (const auto& [k, v] : e0)
        if (k > 0) throw SeriesExtractionFailure("chi0 has a z^" + std::to_string(k) + " term");
    for (const auto& [k, v] : o0)
        if (k > 0 || (k == 0 && !v.is_one()))
            throw SeriesExtractionFailure("chi0 does not start with 1/k: " + v.str());
    if (!at(o0, 0).is_one()) throw SeriesExtractionFailure("chi0 lacks the 1/k term");
    for (const auto& [k, v] : e1)
        if (k >= 0) throw SeriesExtractionFailure("chi1 has a z^" + std::to_string(k) + " term");
    for (const auto& [k, v] : o1)
        if (k >= 0) throw SeriesExtractionFailure("chi1 has a w z^" + std::to_string(k) + " term");

    SeriesCoefficients s;
    s.a0 = at(e0, 0);
    s.a1 = at(o0, -1);
    s.b1 = at(o1, -1);
    s.f0 = s.a0 * s.a0 - s.a1.scaled(2) - derive(s.b1).scaled(2) - derive(s.a0, 2);
    s.f1 = (s.b1 + derive(s.a0)).scaled(-2);
    s.f2 = s.a0.scaled(-2);
    return s;
}

// ---------------------------------------------------------------- partner

DiffOp build_partner(const RankTwoTriple& t, const HyperellipticCurve& f) {
    ChiPair chi = chi_from_q(t, f);
    const TowerPtr& tw = chi.tower;
    TowerPtr base = tw->parent()->parent();
    const int iz = tw->index(chi.z), iw = tw->index(chi.w);
    const int n = 4 * t.g + 2;
    const ZPoly qp = q_poly(t);
    const RingElement Q = as_element(qp, tw, chi.z), Q1 = as_element(d(qp), tw, chi.z);
    const RingElement w = tw->var(chi.w);
    // a_j = A_j / Q^{j-1}, b_j = B_j / Q^{j-1}; every A_j, B_j is polynomial.
    const RingElement chi_num = w - t.V * Q - as_element(d(qp, 2), tw, chi.z).scaled(Rational(1, 2));
    std::vector<RingElement> A(n + 1), B(n + 1);
    A[1] = RingElement();
    B[1] = RingElement(1);
    for (int j = 1; j < n; ++j) {
        const RingElement jm = RingElement(j - 1);
        A[j + 1] = derive(A[j]) * Q - jm * Q1 * A[j] + B[j] * chi_num;
        B[j + 1] = A[j] * Q + derive(B[j]) * Q - jm * Q1 * B[j] + B[j] * Q1;
    }
    std::vector<RingElement> qpow{RingElement(1)};
    for (int k = 1; k < n; ++k) qpow.push_back(qpow.back() * Q);
    // sum_j f_j a_j = w and sum_j f_j b_j = 0, times Q^{n-1}.
    std::vector<RingElement> ea(n + 1), eb(n + 1);
    ea[0] = qpow[n - 1];
    for (int j = 1; j <= n; ++j) {
        ea[j] = A[j] * qpow[n - j];
        eb[j] = B[j] * qpow[n - j];
    }
    RingElement rhs = w * qpow[n - 1];

    using Key = std::pair<int, Monomial>;
    auto key_less = [](const Key& a, const Key& b) {
        if (a.first != b.first) return a.first < b.first;
        return compare(a.second, b.second) > 0;
    };
    // Split an element into (equation, z^i w^e) rows; the remaining
    // monomial is in the base variables.
    auto collect = [&](const RingElement& e, int eq, auto&& sink) {
        if (!e.den().is_one()) throw SingularLinearSystem("partner system has a non-polynomial entry");
        for (const auto& term : e.num().terms()) {
            Monomial zw{};
            zw.e[iz] = term.m.e[iz];
            zw.e[iw] = term.m.e[iw];
            zw.deg = zw.e[iz] + zw.e[iw];
            Monomial rest = term.m;
            rest.e[iz] = rest.e[iw] = 0;
            rest.deg -= zw.deg;
            sink(Key{eq, zw}, Poly::Term{rest, term.c});
        }
    };
    std::map<Key, std::vector<std::vector<Poly::Term>>, decltype(key_less)> entries(key_less);
    std::map<Key, std::vector<Poly::Term>, decltype(key_less)> rhs_terms(key_less);
    for (int j = 0; j <= n; ++j) {
        for (int eq = 0; eq < 2; ++eq) {
            const RingElement& e = eq == 0 ? ea[j] : eb[j];
            if (e.is_zero()) continue;
            collect(e, eq, [&](const Key& k, Poly::Term term) {
                auto& row = entries[k];
                if (row.empty()) row.resize(n + 1);
                row[j].push_back(term);
            });
        }
    }
    collect(rhs, 0, [&](const Key& k, Poly::Term term) {
        rhs_terms[k].push_back(term);
        if (entries[k].empty()) entries[k].resize(n + 1);
    });

    Matrix<RingElement> m(entries.size(), n + 1);
    std::vector<RingElement> b(entries.size());
    std::size_t r = 0;
    for (auto& [k, row] : entries) {
        for (int j = 0; j <= n; ++j) m(r, j) = base->normalize(Poly::from_terms(std::move(row[j])), Poly(1));
        auto it = rhs_terms.find(k);
        if (it != rhs_terms.end()) b[r] = base->normalize(Poly::from_terms(std::move(it->second)), Poly(1));
        ++r;
    }
    LinearSolution<RingElement> sol = solve(std::move(m), std::move(b));
    if (!sol.particular) throw SingularLinearSystem("no partner of order " + std::to_string(n));
    if (!sol.nullspace.empty())
        throw SingularLinearSystem("partner of order " + std::to_string(n) + " is not unique");
    std::vector<RingElement> fcoef = *sol.particular;
    RingElement lead = fcoef[n];
    if (!lead.is_rational() || lead.is_zero()) throw SingularLinearSystem("partner has leading coefficient " + lead.str());
    for (auto& c : fcoef) c = c / lead;
    return DiffOp(std::move(fcoef));
}

// ---------------------------------------------------------------- Mironov

namespace {

struct QSystem {
    std::optional<std::vector<RingElement>> q;
    int family_dimension = 0;
};

QSystem solve_q(int g, const TowerPtr& base, const RankTwoTriple& shape, const std::vector<int>& degrees) {
    const RingElement x = base->x();
    const int ix = base->x_index();
    std::vector<std::pair<int, int>> unknowns;  // (power of z, power of x)
    for (int i = 0; i < g; ++i)
        for (int k = 0; k <= degrees[i]; ++k) unknowns.push_back({i, k});

    std::vector<ZPoly> columns;
    for (auto [i, k] : unknowns) {
        ZPoly basis(i + 1);
        basis[i] = pow(x, k);
        columns.push_back(cor1_poly(shape, basis));
    }
    ZPoly zg(g + 1);
    zg[g] = RingElement(1);
    ZPoly inhom = cor1_poly(shape, zg);

    // Rows: (power of z, power of x).
    std::map<std::pair<int, int>, std::vector<RingElement>> rows;
    std::map<std::pair<int, int>, RingElement> rhs;
    auto split = [&](const ZPoly& p, auto&& sink) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            const RingElement& c = p[i];
            if (c.is_zero()) continue;
            if (c.den().contains(ix)) throw SingularLinearSystem("Q system has x in a denominator");
            auto parts = c.num().coefficients(ix);
            for (std::size_t k = 0; k < parts.size(); ++k)
                if (!parts[k].is_zero()) sink(std::pair<int, int>(int(i), int(k)), base->normalize(parts[k], c.den()));
        }
    };
    for (std::size_t u = 0; u < columns.size(); ++u)
        split(columns[u], [&](std::pair<int, int> key, RingElement v) {
            auto& row = rows[key];
            if (row.empty()) row.resize(unknowns.size());
            row[u] = std::move(v);
        });
    split(inhom, [&](std::pair<int, int> key, RingElement v) {
        rhs[key] = -v;
        if (rows[key].empty()) rows[key].resize(unknowns.size());
    });

    Matrix<RingElement> m(rows.size(), unknowns.size());
    std::vector<RingElement> b(rows.size());
    std::size_t r = 0;
    for (auto& [key, row] : rows) {
        for (std::size_t u = 0; u < unknowns.size(); ++u) m(r, u) = row[u];
        auto it = rhs.find(key);
        if (it != rhs.end()) b[r] = it->second;
        ++r;
    }
    LinearSolution<RingElement> sol = solve(std::move(m), std::move(b));
    QSystem out;
    out.family_dimension = int(sol.nullspace.size());
    if (!sol.particular) return out;
    std::vector<RingElement> q(g);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        auto [i, k] = unknowns[u];
        q[i] += (*sol.particular)[u] * pow(x, k);
    }
    out.q = std::move(q);
    return out;
}

RankTwoTriple mironov_shape(int g, const TowerPtr& base, const std::vector<RingElement>& h, const RingElement& w) {
    if (h.size() != 4) throw DegreeMismatch("expected parameters h0..h3");
    const RingElement x = base->x();
    RankTwoTriple t;
    t.g = g;
    t.V = ((h[3] * x + h[2]) * x + h[1]) * x + h[0];
    t.W = w;
    t.q.assign(g, RingElement());
    return t;
}

}  // namespace

MironovSolution mironov_solve(int g, const TowerPtr& base, const std::vector<RingElement>& h, int degree_bound) {
    if (g < 0) throw DegreeMismatch("negative genus");
    if (degree_bound < 2 * g) throw NoSolutionAtBound("degree bound must be at least 2g");
    if (h.size() == 4 && h[3].is_zero()) throw NoSolutionAtBound("h3 must be nonzero");
    RankTwoTriple t = mironov_shape(g, base, h, h.at(3) * base->x().scaled(g * (g + 1)));
    std::vector<int> degrees(g);
    for (int i = 0; i < g; ++i) degrees[i] = std::min(2 * (g - i), degree_bound);
    for (;;) {
        QSystem s = solve_q(g, base, t, degrees);
        if (s.q) {
            t.q = *s.q;
            MironovSolution out;
            out.curve = q_equation_extract(t);
            out.triple = t;
            out.family_dimension = s.family_dimension;
            out.degrees = degrees;
            return out;
        }
        bool grown = false;
        for (auto& dg : degrees)
            if (dg < degree_bound) {
                dg = std::min(dg + 2, degree_bound);
                grown = true;
            }
        if (!grown) throw NoSolutionAtBound("no Q of x-degree <= " + std::to_string(degree_bound));
    }
}

RankTwoTriple mironov_q(int g, const TowerPtr& base, const std::vector<RingElement>& h, int degree_bound) {
    return mironov_solve(g, base, h, degree_bound).triple;
}

// ------------------------------------------------------ closed-form data

GenusOneData genus_one_data(const RingElement& gamma1, const HyperellipticCurve& f) {
    TowerPtr base = gamma1.tower();
    for (const auto& c : f.coeffs()) base = common_tower(base, c.tower());
    GenusOneData out;
    out.tower = extend_sqrt(base, fresh_name(base, "w1"), f.evaluate(gamma1));
    const RingElement w = out.tower->var(out.tower->generator(out.tower->size() - 1).name);
    const RingElement g = gamma1.in(out.tower);
    const RingElement g1 = derive(g), g2 = derive(g, 2), g3 = derive(g, 3);
    out.gamma1 = g;
    out.H1 = -g2 / g1.scaled(2);
    out.kappa = (f.evaluate(g).scaled(4) - g2 * g2 + (g1 * g3).scaled(2)) / (g1 * g1).scaled(4);
    ZPoly fpoly = curve_poly(f), fprime;
    for (std::size_t i = 1; i < fpoly.size(); ++i) fprime.push_back(fpoly[i].scaled(int(i)));
    const RingElement slope = horner(fprime, g);
    out.tyurin.l = 2;
    for (int sign : {1, -1}) {
        TyurinPole p;
        p.gamma = g;
        RingElement alpha = out.H1 - (w / g1).scaled(sign);
        p.c = {-alpha * g1, -g1};
        p.d = {out.kappa + (slope / w).scaled(Rational(sign, 2)), RingElement()};
        out.tyurin.poles.push_back(std::move(p));
    }
    return out;
}

GenusTwoData genus_two_data(const RingElement& gamma1, const RingElement& gamma2, const HyperellipticCurve& f) {
    TowerPtr base = common_tower(gamma1.tower(), gamma2.tower());
    for (const auto& c : f.coeffs()) base = common_tower(base, c.tower());
    GenusTwoData out;
    const std::string n1 = fresh_name(base, "w1");
    TowerPtr t1 = extend_sqrt(base, n1, f.evaluate(gamma1));
    const std::string n2 = fresh_name(t1, "w2");
    out.tower = extend_sqrt(t1, n2, f.evaluate(gamma2));
    const RingElement w1 = out.tower->var(n1), w2 = out.tower->var(n2);
    const RingElement a = gamma1.in(out.tower), b = gamma2.in(out.tower);
    const RingElement a1 = derive(a), a2 = derive(a, 2), b1 = derive(b), b2 = derive(b, 2);
    const RingElement dg = a - b;
    out.gamma1 = a;
    out.gamma2 = b;
    out.H1 = b1 / dg - a2 / a1.scaled(2);
    out.H2 = -a1 / dg - b2 / b1.scaled(2);
    const RingElement &H1 = out.H1, &H2 = out.H2;
    const RingElement dH1 = derive(H1), dH2 = derive(H2);
    out.kappa1 = (f.evaluate(a) + dg * a1 * a1 * ((H2 - H1) * b1 + a * (H1 * H1 - dH1) - b * (H1 * H1 - dH1))) /
                 (dg * dg * a1 * a1);
    out.kappa2 = (f.evaluate(b) - dg * b1 * b1 * ((H1 - H2) * a1 + b * (H2 * H2 - dH2) - a * (H2 * H2 - dH2))) /
                 (dg * dg * b1 * b1);
    ZPoly fpoly = curve_poly(f), fprime;
    for (std::size_t i = 1; i < fpoly.size(); ++i) fprime.push_back(fpoly[i].scaled(int(i)));
    const RingElement s1 = horner(fprime, a), s2 = horner(fprime, b);
    const RingElement& kappa = out.kappa1;
    out.tyurin.l = 2;
    for (int sign : {1, -1}) {
        TyurinPole p;
        p.gamma = a;
        RingElement alpha = H1 - (w1 / (dg * a1)).scaled(sign);
        p.c = {-alpha * a1, -a1};
        p.d = {-(w1 / (dg * dg)).scaled(sign) + kappa + (s1 / (w1 * dg)).scaled(Rational(sign, 2)) - H2 * b1 / dg,
               -b1 / dg};
        out.tyurin.poles.push_back(std::move(p));
    }
    for (int sign : {1, -1}) {
        TyurinPole p;
        p.gamma = b;
        RingElement alpha = H2 + (w2 / (dg * b1)).scaled(sign);
        p.c = {-alpha * b1, -b1};
        p.d = {-(w2 / (dg * dg)).scaled(sign) + kappa - (s2 / (w2 * dg)).scaled(Rational(sign, 2)) + H1 * a1 / dg,
               a1 / dg};
        out.tyurin.poles.push_back(std::move(p));
    }
    return out;
}

// ------------------------------------------------------ polynomial roots

std::vector<PolynomialRootTrial> polynomial_root_search(const TowerPtr& base, const std::vector<RingElement>& h,
                                                        int max_m, int degree_bound) {
    std::vector<PolynomialRootTrial> out;
    const int ix = base->x_index();
    for (int m = 0; m <= max_m; ++m) {
        PolynomialRootTrial trial;
        trial.m = m;
        RankTwoTriple t = mironov_shape(2, base, h, h.at(3) * base->x().scaled(m));
        QSystem s = solve_q(2, base, t, {std::min(4, degree_bound), std::min(2, degree_bound)});
        trial.family_dimension = s.family_dimension;
        if (s.q) {
            t.q = *s.q;
            try {
                q_equation_extract(t);
                trial.solvable = true;
            } catch (const Error&) {
            }
        }
        if (trial.solvable) {
            trial.q = t.q_str();
            RingElement disc = t.q[1] * t.q[1] - t.q[0].scaled(4);
            Poly p = disc.num();
            if (!p.contains(ix)) {
                trial.polynomial_roots = true;
                trial.root_degree = std::max(0, t.q[1].num().degree(ix));
            } else {
                Poly root = gcd(p, p.derivative(ix));
                auto rest = p.divide_exact(root * root);
                if (rest && !rest->contains(ix)) {
                    trial.polynomial_roots = true;
                    trial.root_degree = std::max(t.q[1].num().degree(ix), root.degree(ix));
                }
            }
        }
        out.push_back(std::move(trial));
    }
    return out;
}

}  // namespace codo
