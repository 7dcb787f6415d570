#include "codo/spectral.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "codo/linalg.hpp"

namespace codo {
namespace {

std::string fresh_name(const TowerPtr& t, const std::string& base) {
    std::string name = base;
    while (t->find(name)) name += "_";
    return name;
}

// Coefficients of p grouped by the exponents of (iz, iw).
std::map<CurvePoly::Key, Poly> split_zw(const Poly& p, int iz, int iw) {
    std::map<CurvePoly::Key, std::vector<Poly::Term>> parts;
    for (const auto& t : p.terms()) {
        Monomial m = t.m;
        CurvePoly::Key k{m.e[iz], m.e[iw]};
        m.deg -= m.e[iz] + m.e[iw];
        m.e[iz] = m.e[iw] = 0;
        parts[k].push_back({m, t.c});
    }
    std::map<CurvePoly::Key, Poly> out;
    for (auto& [k, ts] : parts) out[k] = Poly::from_terms(std::move(ts));
    return out;
}

CurvePoly to_curve(const TowerPtr& base, const Poly& p, const Poly& den, int iz, int iw) {
    std::map<CurvePoly::Key, RingElement> out;
    for (auto& [k, c] : split_zw(p, iz, iw)) out[k] = base->normalize(c, den);
    return CurvePoly(std::move(out));
}

std::vector<std::pair<Poly, int>> yun(const Poly& f, int v) {
    std::vector<std::pair<Poly, int>> out;
    Poly df = f.derivative(v);
    Poly a = gcd(f, df);
    Poly b = *f.divide_exact(a);
    Poly c = *df.divide_exact(a);
    Poly d = c - b.derivative(v);
    for (int i = 1; !b.is_constant(); ++i) {
        a = gcd(b, d);
        if (!a.is_constant()) out.push_back({a, i});
        b = *b.divide_exact(a);
        c = *d.divide_exact(a);
        d = c - b.derivative(v);
    }
    return out;
}

std::vector<std::pair<Poly, int>> squarefree(Poly f, int iz, int iw) {
    std::vector<std::pair<Poly, int>> out;
    for (int v : {iw, iz}) {
        if (!f.contains(v)) continue;
        Poly cont = content_in(f, v);
        Poly pp = *f.divide_exact(cont);
        for (auto& fa : yun(pp, v)) out.push_back(std::move(fa));
        f = cont;
    }
    return out;
}

}  // namespace

ResultantDetail bc_resultant_detail(const DiffOp& a, const DiffOp& b) {
    if (a.order() < 1 || b.order() < 1) throw NonCommutingPair("bc_resultant needs operators of positive order");
    if (!commutator(a, b).is_zero()) throw NonCommutingPair("the operators do not commute");
    TowerPtr base = common_tower(a.tower(), b.tower());
    if (!base) base = tower_build(TowerSpec{});
    std::string zn = fresh_name(base, "z"), wn = fresh_name(base, "w");
    TowerPtr t = extend_parameter(extend_parameter(base, zn), wn);
    int iz = t->index(zn), iw = t->index(wn);
    RingElement z = t->var(zn), w = t->var(wn);

    const int n = a.order(), m = b.order(), size = n + m;
    Matrix<RingElement> mat(size, size);
    DiffOp az = a - DiffOp::scalar(z), bw = b - DiffOp::scalar(w);
    int row = 0;
    for (int i = 0; i < m; ++i, ++row) {
        DiffOp r = compose(DiffOp::D(i), az);
        for (int k = 0; k <= r.order(); ++k) mat(row, size - 1 - k) = r.coeffs()[k];
    }
    for (int j = 0; j < n; ++j, ++row) {
        DiffOp r = compose(DiffOp::D(j), bw);
        for (int k = 0; k <= r.order(); ++k) mat(row, size - 1 - k) = r.coeffs()[k];
    }
    RingElement det = bareiss_det(std::move(mat));
    if (det.is_zero()) throw XDependentResultant("differential resultant vanishes identically");
    if (det.tower()) {
        for (int g = 0; g < det.tower()->size(); ++g)
            if (det.depends_on(g) && det.tower()->generator(g).kind != GeneratorKind::Parameter)
                throw XDependentResultant("resultant depends on " + det.tower()->generator(g).name + ": " + det.str());
    }

    // Remove the content in the parameters.
    Poly num = det.num();
    Poly content;
    for (const auto& [k, c] : split_zw(num, iz, iw)) {
        content = gcd(content, c);
        if (content.is_one()) break;
    }
    Poly raw = *num.divide_exact(content);

    ResultantDetail out;
    out.raw = to_curve(base, raw, Poly(1), iz, iw).normalized();
    std::vector<std::pair<Poly, int>> factors = squarefree(raw, iz, iw);
    std::sort(factors.begin(), factors.end(),
              [](const auto& x, const auto& y) { return x.first.total_degree() < y.first.total_degree(); });
    for (const auto& [f, mult] : factors) out.factors.push_back({to_curve(base, f, Poly(1), iz, iw).normalized(), mult});

    std::vector<Poly> candidates;
    for (const auto& [f, mult] : factors) candidates.push_back(f);
    if (factors.size() > 1) {
        Poly prod(1);
        for (const auto& [f, mult] : factors) prod = prod * f;
        candidates.push_back(prod);
    }
    candidates.push_back(raw);
    for (const auto& c : candidates) {
        CurvePoly cp = to_curve(base, c, Poly(1), iz, iw).normalized();
        if (eval_poly(cp, a, b).is_zero()) {
            out.curve = cp;
            return out;
        }
    }
    throw XDependentResultant("no factor of the resultant annihilates the pair");
}

CurvePoly bc_resultant(const DiffOp& a, const DiffOp& b) { return bc_resultant_detail(a, b).curve; }

int rank_of_pair(int n, int m) { return std::gcd(n, m); }

bool sigma_invariant(const RingElement& e, const std::string& w) {
    if (!e.tower()) return true;
    auto iw = e.tower()->find(w);
    return !iw || !e.num().contains(*iw);
}

RingElement discriminant(const HyperellipticCurve& c) {
    const int d = 2 * c.genus() + 1;
    const int size = 2 * d - 1;
    Matrix<RingElement> m(size, size);
    // Rows for F (d-1 shifts) and F' (d shifts), columns by descending power.
    for (int r = 0; r < d - 1; ++r)
        for (int i = 0; i <= d; ++i) m(r, r + d - i) = c.coeff(i);
    for (int r = 0; r < d; ++r)
        for (int i = 1; i <= d; ++i) m(d - 1 + r, r + d - i) = c.coeff(i).scaled(i);
    return bareiss_det(std::move(m));
}

bool is_nonsingular(const HyperellipticCurve& c) {
    TowerPtr t;
    for (const auto& k : c.coeffs()) t = common_tower(t, k.tower());
    std::vector<std::string> params;
    if (t) {
        for (int g = 0; g < t->size(); ++g) {
            bool used = false;
            for (const auto& k : c.coeffs()) used = used || k.depends_on(g);
            if (used) params.push_back(t->generator(g).name);
        }
    }
    static const int samples[3][6] = {{2, 3, 5, 7, 11, 13}, {-1, 4, -3, 9, 2, -5}, {17, -6, 1, -8, 10, 3}};
    for (const auto& s : samples) {
        try {
            std::vector<RingElement> coeffs;
            for (const auto& k : c.coeffs()) {
                RingElement v = k;
                for (std::size_t i = 0; i < params.size(); ++i)
                    v = substitute(v, params[i], RingElement(s[i % 6] + int(i / 6)));
                coeffs.push_back(v);
            }
            if (!discriminant(HyperellipticCurve(c.genus(), coeffs)).is_zero()) return true;
        } catch (const DivisionByZero&) {
        }
    }
    return !discriminant(c).is_zero();
}

}  // namespace codo
