#include "codo/poly.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace codo {

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::variable(int i, unsigned k) { return term(Monomial::var(i, k), Rational(1)); }

Poly Poly::term(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return compare(a.m, b.m) > 0; });
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c += t.c;
            if (p.terms_.back().c == 0) p.terms_.pop_back();
        } else if (t.c != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().m.deg == 0) return terms_.back().c;
    return 0;
}

int Poly::degree(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, int(t.m.e[var]));
    return terms_.empty() ? -1 : d;
}

int Poly::min_degree(int var) const {
    if (terms_.empty()) return -1;
    int d = 1 << 20;
    for (const auto& t : terms_) d = std::min(d, int(t.m.e[var]));
    return d;
}

bool Poly::contains(int var) const {
    for (const auto& t : terms_)
        if (t.m.e[var]) return true;
    return false;
}

std::uint32_t Poly::support() const {
    std::uint32_t s = 0;
    for (const auto& t : terms_)
        for (int i = 0; i < kMaxVars; ++i)
            if (t.m.e[i]) s |= 1u << i;
    return s;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Poly add_sub(const Poly& a, const Poly& b, bool subtract) {
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = compare(a.terms_[i].m, b.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
            if (subtract) r.terms_.back().c = -r.terms_.back().c;
        } else {
            Rational s = subtract ? Rational(a.terms_[i].c - b.terms_[j].c)
                                  : Rational(a.terms_[i].c + b.terms_[j].c);
            if (s != 0) r.terms_.push_back({a.terms_[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
        r.terms_.push_back(b.terms_[j]);
        if (subtract) r.terms_.back().c = -r.terms_.back().c;
    }
    return r;
}

Poly Poly::operator+(const Poly& o) const { return add_sub(*this, o, false); }
Poly Poly::operator-(const Poly& o) const { return add_sub(*this, o, true); }

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
    if (c == 0) return {};
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
}

// Johnson's heap multiplication: a heap over the rows a_i * b, each row
// already sorted because the order is multiplicative.
Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (terms_.size() == 1) return o.mul_term(terms_[0].m, terms_[0].c);
    if (o.terms_.size() == 1) return mul_term(o.terms_[0].m, o.terms_[0].c);
    const Poly& a = terms_.size() <= o.terms_.size() ? *this : o;
    const Poly& b = terms_.size() <= o.terms_.size() ? o : *this;

    struct Entry {
        Monomial m;
        std::uint32_t i, j;
    };
    auto less = [](const Entry& x, const Entry& y) { return compare(x.m, y.m) < 0; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(less)> heap(less);
    for (std::uint32_t i = 0; i < a.terms_.size(); ++i) heap.push({a.terms_[i].m * b.terms_[0].m, i, 0});

    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    Rational prod;
    while (!heap.empty()) {
        Entry top = heap.top();
        heap.pop();
        mpq_mul(prod.get_mpq_t(), a.terms_[top.i].c.get_mpq_t(), b.terms_[top.j].c.get_mpq_t());
        if (!r.terms_.empty() && r.terms_.back().m == top.m) {
            r.terms_.back().c += prod;
        } else {
            if (!r.terms_.empty() && r.terms_.back().c == 0) r.terms_.pop_back();
            r.terms_.push_back({top.m, prod});
        }
        if (top.j + 1 < b.terms_.size())
            heap.push({a.terms_[top.i].m * b.terms_[top.j + 1].m, top.i, top.j + 1});
    }
    if (!r.terms_.empty() && r.terms_.back().c == 0) r.terms_.pop_back();
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly result(1);
    Poly base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Poly Poly::derivative(int var) const {
    Poly r;
    for (const auto& t : terms_) {
        if (t.m.e[var] == 0) continue;
        Monomial m = t.m;
        m.e[var] -= 1;
        m.deg -= 1;
        r.terms_.push_back({m, t.c * t.m.e[var]});
    }
    // Dividing by a common variable preserves a monomial order.
    return r;
}

std::vector<Poly> Poly::coefficients(int var) const {
    int d = degree(var);
    std::vector<Poly> out(d < 0 ? 0 : d + 1);
    for (const auto& t : terms_) {
        Monomial m = t.m;
        int k = m.e[var];
        m.e[var] = 0;
        m.deg -= k;
        out[k].terms_.push_back({m, t.c});
    }
    // Removing the same power from every term of a slice preserves order.
    return out;
}

Poly Poly::from_coefficients(int var, const std::vector<Poly>& coeffs) {
    std::vector<Term> all;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (const auto& t : coeffs[k].terms_) all.push_back({t.m * Monomial::var(var, k), t.c});
    return from_terms(std::move(all));
}

Poly Poly::evaluate(int var, const Rational& value) const {
    if (!contains(var)) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size());
    std::vector<Rational> powers{Rational(1)};
    for (const auto& t : terms_) {
        int k = t.m.e[var];
        while (int(powers.size()) <= k) powers.push_back(powers.back() * value);
        Monomial m = t.m;
        m.e[var] = 0;
        m.deg -= k;
        out.push_back({m, t.c * powers[k]});
    }
    return from_terms(std::move(out));
}

Poly Poly::substitute(int var, const Poly& value) const {
    auto cs = coefficients(var);
    Poly r;
    for (std::size_t k = cs.size(); k-- > 0;) r = r * value + cs[k];
    return r;
}

Poly Poly::remap(const std::array<int, kMaxVars>& perm) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        m.deg = t.m.deg;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!t.m.e[i]) continue;
            if (perm[i] < 0) throw std::logic_error("remap: variable has no image");
            m.e[perm[i]] = t.m.e[i];
        }
        out.push_back({m, t.c});
    }
    return from_terms(std::move(out));
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return Poly{};
    if (d.terms_.size() == 1) {
        const auto& dt = d.terms_[0];
        Poly q;
        q.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (!dt.m.divides(t.m)) return std::nullopt;
            q.terms_.push_back({t.m.quotient(dt.m), t.c / dt.c});
        }
        return q;
    }
    if (!d.lead().m.divides(lead().m) || !d.terms_.back().m.divides(terms_.back().m)) return std::nullopt;
    std::uint32_t sd = d.support();
    for (int v = 0; v < kMaxVars; ++v) {
        if (!(sd >> v & 1)) continue;
        if (d.degree(v) > degree(v) || d.min_degree(v) > min_degree(v)) return std::nullopt;
    }

    // Heap division: products d_i * q_j are merged lazily, one heap entry
    // per quotient term.
    struct Entry {
        Monomial m;
        std::uint32_t i, j;
    };
    auto less = [](const Entry& x, const Entry& y) { return compare(x.m, y.m) < 0; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(less)> heap(less);
    const auto& lt = d.lead();
    std::vector<Term> quotient;
    std::size_t k = 0;
    Rational acc, prod;
    while (k < terms_.size() || !heap.empty()) {
        Monomial m;
        if (heap.empty() || (k < terms_.size() && compare(terms_[k].m, heap.top().m) >= 0))
            m = terms_[k].m;
        else
            m = heap.top().m;
        acc = 0;
        if (k < terms_.size() && terms_[k].m == m) acc = terms_[k++].c;
        while (!heap.empty() && heap.top().m == m) {
            Entry e = heap.top();
            heap.pop();
            mpq_mul(prod.get_mpq_t(), d.terms_[e.i].c.get_mpq_t(), quotient[e.j].c.get_mpq_t());
            acc -= prod;
            if (e.i + 1 < d.terms_.size()) heap.push({d.terms_[e.i + 1].m * quotient[e.j].m, e.i + 1, e.j});
        }
        if (acc == 0) continue;
        if (!lt.m.divides(m)) return std::nullopt;
        quotient.push_back({m.quotient(lt.m), acc / lt.c});
        std::uint32_t j = std::uint32_t(quotient.size() - 1);
        heap.push({d.terms_[1].m * quotient[j].m, 1, j});
    }
    Poly q;
    q.terms_ = std::move(quotient);
    return q;
}

Rational Poly::content() const {
    if (terms_.empty()) return 0;
    Integer g = 0, l = 1;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
    }
    Rational c(g, l);
    c.canonicalize();
    return c;
}

Poly Poly::monic() const {
    if (terms_.empty()) return {};
    return scaled(Rational(1) / terms_[0].c);
}

Poly Poly::primitive() const {
    if (terms_.empty()) return {};
    Rational c = content();
    if (terms_[0].c < 0) c = -c;
    return scaled(Rational(1) / c);
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

std::size_t Poly::hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
        for (auto x : t.m.e) h = h * 1000003u ^ x;
        h = h * 31 + mpz_get_ui(t.c.get_num_mpz_t()) + 7 * mpz_get_ui(t.c.get_den_mpz_t());
    }
    return h;
}

}  // namespace codo
