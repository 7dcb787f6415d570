// Multivariate gcd over Q.
//
// Strategy: strip monomial content, eliminate variables that occur in only
// one argument (by taking contents), then run the heuristic gcd (evaluation
// at a large integer, recursive gcd, xi-adic reconstruction, trial division).
// A recursive primitive PRS is the fallback when the heuristic gives up.

#include <algorithm>
#include <optional>

#include "codo/poly.hpp"

namespace codo {
namespace {

constexpr int kHeuristicAttempts = 6;

Integer max_norm(const Poly& p) {
    Integer m = 0;
    for (const auto& t : p.terms()) {
        Integer a = abs(t.c.get_num());
        if (a > m) m = a;
    }
    return m;
}

Integer integer_content(const Poly& p) {
    Integer g = 0;
    for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
    return g;
}

int highest_var(std::uint32_t support) {
    for (int v = kMaxVars - 1; v >= 0; --v)
        if (support >> v & 1) return v;
    return -1;
}

Monomial min_monomial(const Poly& p) {
    Monomial m;
    m.deg = 0;
    bool first = true;
    for (const auto& t : p.terms()) {
        if (first) {
            m = t.m;
            first = false;
            continue;
        }
        for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::min(m.e[i], t.m.e[i]);
    }
    m.deg = 0;
    for (auto e : m.e) m.deg += e;
    return m;
}

Monomial monomial_min(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.deg = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        m.e[i] = std::min(a.e[i], b.e[i]);
        m.deg += m.e[i];
    }
    return m;
}

Poly divide_monomial(const Poly& p, const Monomial& m) {
    if (m.deg == 0) return p;
    return *p.divide_exact(Poly::term(m, Rational(1)));
}

// Coefficients of p viewed as a polynomial in the variables of `mask`.
std::vector<Poly> coefficients_in_mask(const Poly& p, std::uint32_t mask) {
    std::vector<std::pair<Monomial, std::vector<Poly::Term>>> groups;
    for (const auto& t : p.terms()) {
        Monomial key, rest = t.m;
        for (int i = 0; i < kMaxVars; ++i) {
            if (mask >> i & 1) {
                key.e[i] = t.m.e[i];
                key.deg += t.m.e[i];
                rest.e[i] = 0;
            }
        }
        rest.deg = t.m.deg - key.deg;
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == key; });
        if (it == groups.end()) {
            groups.push_back({key, {}});
            it = groups.end() - 1;
        }
        it->second.push_back({rest, t.c});
    }
    std::vector<Poly> out;
    out.reserve(groups.size());
    for (auto& g : groups) out.push_back(Poly::from_terms(std::move(g.second)));
    // Smallest first: cheaper gcd chains.
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.size() < b.size(); });
    return out;
}

// Symmetric xi-adic reconstruction of an evaluated gcd.
Poly interpolate(Poly h, const Integer& xi, int var) {
    std::vector<Poly::Term> out;
    Integer half = xi / 2;
    unsigned power = 0;
    while (!h.is_zero()) {
        std::vector<Poly::Term> digit;
        std::vector<Poly::Term> next;
        for (const auto& t : h.terms()) {
            Integer c = t.c.get_num();
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
            if (r > half) r -= xi;
            if (r != 0) digit.push_back({t.m, Rational(r)});
            Integer q = c - r;
            mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), xi.get_mpz_t());
            if (q != 0) next.push_back({t.m, Rational(q)});
        }
        for (auto& d : digit) out.push_back({d.m * Monomial::var(var, power), d.c});
        h = Poly::from_terms(std::move(next));
        ++power;
    }
    Poly r = Poly::from_terms(std::move(out));
    if (!r.is_zero() && r.lead().c < 0) r = -r;
    return r;
}

struct HeuResult {
    Poly h, cff, cfg;
};

std::optional<HeuResult> heu_gcd(Poly f, Poly g) {
    if (f.is_constant() && g.is_constant()) {
        Integer a = f.is_zero() ? Integer(0) : Integer(f.lead().c.get_num());
        Integer b = g.is_zero() ? Integer(0) : Integer(g.lead().c.get_num());
        Integer c;
        mpz_gcd(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (c == 0) return std::nullopt;
        return HeuResult{Poly(Rational(c)), Poly(Rational(Integer(a / c))), Poly(Rational(Integer(b / c)))};
    }
    Integer common;
    {
        Integer cf = integer_content(f), cg = integer_content(g);
        mpz_gcd(common.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
        if (common != 1) {
            Rational inv(1, common);
            f = f.scaled(inv);
            g = g.scaled(inv);
        }
    }
    int v = highest_var(f.support() | g.support());

    Integer fn = max_norm(f), gn = max_norm(g);
    Integer bound = 2 * std::min(fn, gn) + 29;
    Integer root = sqrt(bound);
    Integer lf = abs(f.lead().c.get_num()), lg = abs(g.lead().c.get_num());
    Integer xi = std::max(Integer(std::min(bound, Integer(99 * root))), Integer(2 * std::min(Integer(fn / lf), Integer(gn / lg)) + 2));

    for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
        Poly ff = f.evaluate(v, Rational(xi));
        Poly gg = g.evaluate(v, Rational(xi));
        if (!ff.is_zero() && !gg.is_zero()) {
            auto inner = heu_gcd(ff, gg);
            if (!inner) return std::nullopt;
            Poly h = interpolate(inner->h, xi, v).primitive();
            if (!h.is_zero()) {
                if (auto cff = f.divide_exact(h)) {
                    if (auto cfg = g.divide_exact(h))
                        return HeuResult{h.scaled(Rational(common)), *cff, *cfg};
                }
            }
            Poly cff = interpolate(inner->cff, xi, v);
            if (!cff.is_zero()) {
                if (auto h2 = f.divide_exact(cff)) {
                    if (auto cfg = g.divide_exact(*h2))
                        return HeuResult{h2->scaled(Rational(common)), cff, *cfg};
                }
            }
            Poly cfg = interpolate(inner->cfg, xi, v);
            if (!cfg.is_zero()) {
                if (auto h3 = g.divide_exact(cfg)) {
                    if (auto cff2 = f.divide_exact(*h3))
                        return HeuResult{h3->scaled(Rational(common)), *cff2, cfg};
                }
            }
        }
        Integer r4 = sqrt(sqrt(xi));
        xi = 73794 * xi * r4 / 27011;
    }
    return std::nullopt;
}

// Pseudo-remainder of a by b w.r.t. var (both given as coefficient vectors).
std::vector<Poly> pseudo_remainder(std::vector<Poly> a, const std::vector<Poly>& b) {
    const std::size_t db = b.size() - 1;
    const Poly& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        Poly t = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c = c * lb;
        for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= t * b[k];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

Poly prs_gcd(const Poly& f, const Poly& g);

Poly primitive_in(const Poly& p, int var) {
    Poly c = content_in(p, var);
    return p.divide_exact(c)->primitive();
}

Poly prs_gcd(const Poly& f, const Poly& g) {
    int v = highest_var(f.support() & g.support());
    if (v < 0) return gcd(f, g);
    Poly cf = content_in(f, v), cg = content_in(g, v);
    Poly c = gcd(cf, cg);
    std::vector<Poly> a = f.divide_exact(cf)->coefficients(v);
    std::vector<Poly> b = g.divide_exact(cg)->coefficients(v);
    if (a.size() < b.size()) std::swap(a, b);
    while (b.size() > 1) {
        auto r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.empty()) {
            b.clear();
            break;
        }
        b = primitive_in(Poly::from_coefficients(v, r), v).coefficients(v);
    }
    Poly h = b.empty() ? primitive_in(Poly::from_coefficients(v, a), v) : Poly(1);
    return (c * h).monic();
}

}  // namespace

Poly content_in(const Poly& p, int var) {
    if (!p.contains(var)) return p.monic();
    Poly c;
    for (const auto& k : coefficients_in_mask(p, 1u << var)) {
        c = gcd(c, k);
        if (c.is_one()) break;
    }
    return c;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(1);

    Monomial ma = min_monomial(a), mb = min_monomial(b);
    Monomial m = monomial_min(ma, mb);
    Poly mono = Poly::term(m, Rational(1));
    Poly f = divide_monomial(a, ma);
    Poly g = divide_monomial(b, mb);
    if (f.is_constant() || g.is_constant()) return mono;
    if (f.size() == g.size() && f.monic() == g.monic()) return mono * f.monic();

    std::uint32_t sf = f.support(), sg = g.support();
    if (sf != sg) {
        // Variables private to one side can only live in the gcd through
        // that side's content w.r.t. them.
        Poly acc;
        std::uint32_t only_f = sf & ~sg, only_g = sg & ~sf;
        if (only_f) {
            acc = g;
            for (const auto& c : coefficients_in_mask(f, only_f)) {
                acc = gcd(acc, c);
                if (acc.is_one()) break;
            }
        } else {
            acc = f;
            for (const auto& c : coefficients_in_mask(g, only_g)) {
                acc = gcd(acc, c);
                if (acc.is_one()) break;
            }
        }
        return mono * acc.monic();
    }

    Poly fi = f.primitive(), gi = g.primitive();
    if (auto r = heu_gcd(fi, gi)) return mono * r->h.monic();
    return mono * prs_gcd(fi, gi);
}

}  // namespace codo
