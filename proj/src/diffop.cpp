#include "codo/diffop.hpp"

#include <climits>

#include "text.hpp"

namespace codo {
namespace {

// Generalized binomial coefficient C(n, k) for integer n, k >= 0.
Rational binomial(int n, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::string d_power(int k) {
    if (k == 0) return "";
    if (k == 1) return "D";
    return "D^" + std::to_string(k);
}

// Derivatives f, f', f'', ... computed on demand.
class DerivativeCache {
public:
    explicit DerivativeCache(RingElement f) { d_.push_back(std::move(f)); }
    const RingElement& operator[](int k) {
        while (int(d_.size()) <= k) d_.push_back(derive(d_.back()));
        return d_[k];
    }

private:
    std::vector<RingElement> d_;
};

}  // namespace

// ------------------------------------------------------------ DiffOp

DiffOp::DiffOp(std::vector<RingElement> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DiffOp DiffOp::D(unsigned k) {
    std::vector<RingElement> c(k + 1);
    c[k] = RingElement(1);
    return DiffOp(std::move(c));
}

DiffOp DiffOp::scalar(const RingElement& c) { return DiffOp({c}); }

RingElement DiffOp::coeff(int i) const {
    if (i < 0 || i >= int(coeffs_.size())) return RingElement();
    return coeffs_[i];
}

TowerPtr DiffOp::tower() const {
    TowerPtr t;
    for (const auto& c : coeffs_) t = common_tower(t, c.tower());
    return t;
}

DiffOp DiffOp::operator-() const {
    std::vector<RingElement> c;
    for (const auto& x : coeffs_) c.push_back(-x);
    return DiffOp(std::move(c));
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    std::vector<RingElement> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(int(i)) + o.coeff(int(i));
    return DiffOp(std::move(c));
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
    std::vector<RingElement> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(int(i)) - o.coeff(int(i));
    return DiffOp(std::move(c));
}

DiffOp DiffOp::operator*(const DiffOp& o) const { return compose(*this, o); }

DiffOp DiffOp::scaled(const RingElement& c) const {
    std::vector<RingElement> r;
    for (const auto& x : coeffs_) r.push_back(c * x);
    return DiffOp(std::move(r));
}

RingElement DiffOp::apply(const RingElement& f) const {
    DerivativeCache df(f);
    RingElement r;
    for (int i = 0; i <= order(); ++i)
        if (!coeffs_[i].is_zero()) r += coeffs_[i] * df[i];
    return r;
}

std::string DiffOp::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (int k = order(); k >= 0; --k)
        if (!coeffs_[k].is_zero()) s += detail::signed_term(coeffs_[k], d_power(k), s.empty());
    return s;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
    if (a.is_zero() || b.is_zero()) return {};
    int n = a.order(), m = b.order();
    std::vector<RingElement> out(n + m + 1);
    for (int j = 0; j <= m; ++j) {
        if (b.coeffs()[j].is_zero()) continue;
        DerivativeCache db(b.coeffs()[j]);
        for (int i = 0; i <= n; ++i) {
            const RingElement& ai = a.coeffs()[i];
            if (ai.is_zero()) continue;
            // a_i D^i o b_j D^j = sum_k C(i,k) a_i b_j^(k) D^{i-k+j}
            for (int k = 0; k <= i; ++k) {
                const RingElement& d = db[k];
                if (d.is_zero()) break;
                out[i - k + j] += (ai * d).scaled(binomial(i, k));
            }
        }
    }
    return DiffOp(std::move(out));
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

DiffOp formal_adjoint(const DiffOp& a) {
    if (a.is_zero()) return {};
    std::vector<RingElement> out(a.order() + 1);
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        DerivativeCache dc(a.coeffs()[i]);
        Rational sign = i % 2 ? -1 : 1;
        for (int k = 0; k <= i; ++k) {
            const RingElement& d = dc[k];
            if (d.is_zero()) break;
            out[i - k] += d.scaled(sign * binomial(i, k));
        }
    }
    return DiffOp(std::move(out));
}

DiffOp eval_poly(const CurvePoly& r, const DiffOp& a, const DiffOp& b) {
    if (!commutator(a, b).is_zero()) throw NonCommutingPair("eval_poly requires a commuting pair");
    std::vector<DiffOp> pa{DiffOp::scalar(RingElement(1))}, pb{DiffOp::scalar(RingElement(1))};
    auto power = [](std::vector<DiffOp>& cache, const DiffOp& base, int k) -> const DiffOp& {
        while (int(cache.size()) <= k) cache.push_back(compose(cache.back(), base));
        return cache[k];
    };
    DiffOp out;
    for (const auto& [key, c] : r.terms()) {
        const DiffOp& ai = power(pa, a, key.first);
        const DiffOp& bj = power(pb, b, key.second);
        out = out + compose(ai, bj).scaled(c);
    }
    return out;
}

RingElement gauge_apply(const DiffOp& a, const RingElement& shift, const RingElement& r) {
    // D_s f = f' + s f is D conjugated by e^{s}.
    RingElement cur = r, out;
    for (int i = 0; i <= a.order(); ++i) {
        if (i) cur = derive(cur) + shift * cur;
        if (!a.coeffs()[i].is_zero()) out += a.coeffs()[i] * cur;
    }
    return out;
}

// ------------------------------------------------------- PseudoDiffOp

PseudoDiffOp::PseudoDiffOp(std::map<int, RingElement> coeffs, int valid_from) : valid_from_(valid_from) {
    for (auto& [d, c] : coeffs)
        if (!c.is_zero() && d >= valid_from) coeffs_.emplace(d, std::move(c));
}

PseudoDiffOp PseudoDiffOp::from(const DiffOp& op) {
    PseudoDiffOp p;
    for (int i = 0; i <= op.order(); ++i)
        if (!op.coeffs()[i].is_zero()) p.coeffs_.emplace(i, op.coeffs()[i]);
    return p;
}

PseudoDiffOp PseudoDiffOp::exact(std::map<int, RingElement> coeffs) {
    PseudoDiffOp p;
    for (auto& [d, c] : coeffs)
        if (!c.is_zero()) p.coeffs_.emplace(d, std::move(c));
    return p;
}

int PseudoDiffOp::top() const { return coeffs_.empty() ? INT_MIN : coeffs_.rbegin()->first; }

RingElement PseudoDiffOp::coeff(int d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? RingElement() : it->second;
}

namespace {

std::optional<int> max_valid(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
}

}  // namespace

PseudoDiffOp PseudoDiffOp::operator+(const PseudoDiffOp& o) const {
    PseudoDiffOp r;
    r.valid_from_ = max_valid(valid_from_, o.valid_from_);
    std::map<int, RingElement> c = coeffs_;
    for (const auto& [d, v] : o.coeffs_) c[d] = c[d] + v;
    for (auto& [d, v] : c)
        if (!v.is_zero() && (!r.valid_from_ || d >= *r.valid_from_)) r.coeffs_.emplace(d, std::move(v));
    return r;
}

PseudoDiffOp PseudoDiffOp::operator-(const PseudoDiffOp& o) const { return *this + o.scaled(RingElement(-1)); }

PseudoDiffOp PseudoDiffOp::scaled(const RingElement& c) const {
    PseudoDiffOp r;
    r.valid_from_ = valid_from_;
    for (const auto& [d, v] : coeffs_) {
        RingElement x = c * v;
        if (!x.is_zero()) r.coeffs_.emplace(d, std::move(x));
    }
    return r;
}

PseudoDiffOp PseudoDiffOp::truncated(int floor) const {
    PseudoDiffOp r;
    r.valid_from_ = max_valid(valid_from_, floor);
    for (const auto& [d, v] : coeffs_)
        if (d >= *r.valid_from_) r.coeffs_.emplace(d, v);
    return r;
}

std::string PseudoDiffOp::str() const {
    std::string s;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        s += detail::signed_term(it->second, it->first >= 0 ? d_power(it->first) : "D^(" + std::to_string(it->first) + ")",
                                 s.empty());
    if (s.empty()) s = "0";
    if (valid_from_) s += " + O(D^(" + std::to_string(*valid_from_ - 1) + "))";
    return s;
}

PseudoDiffOp compose(const PseudoDiffOp& a, const PseudoDiffOp& b, int floor) {
    if (a.coeffs().empty() || b.coeffs().empty()) return PseudoDiffOp().truncated(floor);
    std::optional<int> lo;
    if (a.valid_from()) lo = max_valid(lo, *a.valid_from() + b.top());
    if (b.valid_from()) lo = max_valid(lo, a.top() + *b.valid_from());
    bool finite = !lo && a.coeffs().begin()->first >= 0 &&
                  a.coeffs().begin()->first + b.coeffs().begin()->first >= floor;
    int bottom = finite ? INT_MIN : std::max(floor, lo.value_or(floor));

    std::map<int, RingElement> out;
    for (const auto& [db, bc] : b.coeffs()) {
        DerivativeCache dcache(bc);
        for (const auto& [da, ac] : a.coeffs()) {
            // a D^da o b D^db = sum_k C(da,k) a b^(k) D^{da+db-k}
            for (int k = 0;; ++k) {
                if (da >= 0 && k > da) break;
                int deg = da + db - k;
                if (deg < bottom) break;
                const RingElement& d = dcache[k];
                if (d.is_zero()) break;
                out[deg] += (ac * d).scaled(binomial(da, k));
            }
        }
    }
    if (finite) return PseudoDiffOp::exact(std::move(out));
    return PseudoDiffOp(std::move(out), bottom);
}

PseudoDiffOp psdo_root(const DiffOp& l, int k, int depth) {
    if (k <= 0 || l.order() < 0 || l.order() % k) throw OrderNotDivisible("order " + std::to_string(l.order()) + " is not divisible by " + std::to_string(k));
    if (!l.leading().is_one()) throw NonMonic("root needs a monic operator");
    int n = l.order(), m = n / k;
    std::map<int, RingElement> kc{{m, RingElement(1)}};
    for (int j = 1; m - j >= -depth; ++j) {
        PseudoDiffOp partial = PseudoDiffOp::exact(kc);
        PseudoDiffOp power = partial;
        for (int i = 1; i < k; ++i) power = compose(power, partial, n - j - (k - 1 - i) * m);
        RingElement kappa = (l.coeff(n - j) - power.coeff(n - j)).scaled(Rational(1, k));
        if (!kappa.is_zero()) kc[m - j] = kappa;
    }
    return PseudoDiffOp(std::move(kc), -depth);
}

PseudoDiffOp psdo_inverse(const PseudoDiffOp& k, int floor) {
    int t = k.top();
    if (t == INT_MIN || !k.coeff(t).is_one()) throw NonMonic("inverse needs a monic pseudo-differential operator");
    std::map<int, RingElement> inv{{-t, RingElement(1)}};
    for (int j = 1; -t - j >= floor; ++j) {
        PseudoDiffOp partial = PseudoDiffOp::exact(inv);
        PseudoDiffOp prod = compose(k, partial, -j);
        RingElement c = -prod.coeff(-j);
        if (!c.is_zero()) inv[-t - j] = c;
    }
    int valid = floor;
    if (k.valid_from()) valid = std::max(valid, *k.valid_from() - 2 * t);
    return PseudoDiffOp(std::move(inv), valid);
}

SchurResult schur_expand(const DiffOp& low, const DiffOp& high, int depth) {
    int n = low.order(), m = high.order();
    PseudoDiffOp root = psdo_root(low, n, depth + m);
    std::vector<PseudoDiffOp> pos{PseudoDiffOp::from(DiffOp::scalar(RingElement(1))), root};
    for (int d = 2; d <= m; ++d) pos.push_back(compose(pos.back(), root, -depth - m));
    std::vector<PseudoDiffOp> neg{pos[0]};
    if (depth > 0) {
        PseudoDiffOp inv = psdo_inverse(root, -depth);
        neg.push_back(inv);
        for (int d = 2; d <= depth; ++d) neg.push_back(compose(neg.back(), inv, -depth));
    }

    SchurResult res;
    res.depth = depth;
    res.constant = true;
    PseudoDiffOp rest = PseudoDiffOp::from(high);
    for (int d = m; d >= -depth; --d) {
        const PseudoDiffOp& kd = d >= 0 ? pos[d] : neg[-d];
        if (kd.valid_from() && *kd.valid_from() > -depth)
            throw SeriesExtractionFailure("root power K^" + std::to_string(d) + " is only valid from degree " +
                                          std::to_string(*kd.valid_from()));
        RingElement c = rest.coeff(d);
        res.coefficients[d] = c;
        if (c.is_zero()) continue;
        if (!derive(c).is_zero()) res.constant = false;
        rest = (rest - kd.scaled(c)).truncated(-depth);
    }
    return res;
}

}  // namespace codo
