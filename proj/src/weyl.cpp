#include "codo/weyl.hpp"

#include <algorithm>

#include "text.hpp"

namespace codo {
namespace {

// k! / (k - r)!
Rational falling(int k, int r) {
    Rational f(1);
    for (int i = 0; i < r; ++i) f *= k - i;
    return f;
}

Rational binomial(int n, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::string monomial_text(int i, int j) {
    std::string s;
    if (i) s += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j) {
        if (!s.empty()) s += '*';
        s += j == 1 ? "D" : "D^" + std::to_string(j);
    }
    return s;
}

WeylElement polynomial_in(const WeylElement& var, const std::vector<RingElement>& coeffs) {
    WeylElement r;
    for (std::size_t k = coeffs.size(); k-- > 0;) r = r * var + WeylElement::constant(coeffs[k]);
    return r;
}

}  // namespace

WeylElement::WeylElement(std::map<Key, RingElement> terms) {
    for (auto& [k, c] : terms)
        if (!c.is_zero()) terms_.emplace(k, std::move(c));
}

WeylElement WeylElement::x() { return WeylElement({{{1, 0}, RingElement(1)}}); }
WeylElement WeylElement::d() { return WeylElement({{{0, 1}, RingElement(1)}}); }
WeylElement WeylElement::constant(const RingElement& c) { return WeylElement({{{0, 0}, c}}); }

WeylElement WeylElement::from_diffop(const DiffOp& op) {
    std::map<Key, RingElement> out;
    TowerPtr t = op.tower();
    for (int j = 0; j <= op.order(); ++j) {
        const RingElement& c = op.coeffs()[j];
        if (c.is_zero()) continue;
        if (!c.tower()) {
            out[{0, j}] = c;
            continue;
        }
        int ix = c.tower()->x_index();
        if (c.den().contains(ix)) throw TowerMismatch("coefficient is not polynomial in x: " + c.str());
        auto parts = c.num().coefficients(ix);
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (!parts[i].is_zero()) out[{int(i), j}] = c.tower()->normalize(parts[i], c.den());
    }
    return WeylElement(std::move(out));
}

RingElement WeylElement::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? RingElement() : it->second;
}

int WeylElement::order() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
    std::map<Key, RingElement> r = terms_;
    for (const auto& [k, c] : o.terms_) r[k] = r[k] + c;
    return WeylElement(std::move(r));
}

WeylElement WeylElement::operator-(const WeylElement& o) const { return *this + o.scaled(RingElement(-1)); }

WeylElement WeylElement::operator*(const WeylElement& o) const { return weyl_mul(*this, o); }

WeylElement WeylElement::scaled(const RingElement& c) const {
    std::map<Key, RingElement> r;
    for (const auto& [k, v] : terms_) r[k] = c * v;
    return WeylElement(std::move(r));
}

bool WeylElement::operator==(const WeylElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [k, c] : terms_) {
        auto it = o.terms_.find(k);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

DiffOp WeylElement::to_diffop(const TowerPtr& tower) const {
    std::vector<RingElement> c(order() + 1);
    RingElement x = tower->x();
    for (const auto& [k, v] : terms_) c[k.second] += v * pow(x, k.first);
    return DiffOp(std::move(c));
}

std::string WeylElement::str() const {
    if (terms_.empty()) return "0";
    std::vector<Key> keys;
    for (const auto& [k, c] : terms_) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        if (a.first + a.second != b.first + b.second) return a.first + a.second > b.first + b.second;
        return a.second > b.second;
    });
    std::string s;
    for (const auto& k : keys) s += detail::signed_term(terms_.at(k), monomial_text(k.first, k.second), s.empty());
    return s;
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
    std::map<WeylElement::Key, RingElement> out;
    for (const auto& [ka, ca] : a.terms()) {
        auto [i, j] = ka;
        for (const auto& [kb, cb] : b.terms()) {
            auto [k, l] = kb;
            RingElement c = ca * cb;
            // x^i D^j x^k D^l = sum_r C(j,r) k!/(k-r)! x^{i+k-r} D^{j-r+l}
            for (int r = 0; r <= std::min(j, k); ++r)
                out[{i + k - r, j - r + l}] += c.scaled(binomial(j, r) * falling(k, r));
        }
    }
    return WeylElement(std::move(out));
}

WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

WeylElement weyl_pow(const WeylElement& a, int k) {
    WeylElement r = WeylElement::constant(RingElement(1));
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

DixmierPair dixmier_pair(const RingElement& h) {
    WeylElement p = WeylElement::x();
    WeylElement q = WeylElement::d().scaled(RingElement(-1));
    WeylElement s = weyl_pow(p, 3) + q * q + WeylElement::constant(h);
    DixmierPair out;
    out.x = s * s + p.scaled(RingElement(2));
    out.y = s * s * s + (p * s + s * p).scaled(RingElement(Rational(3, 2)));
    return out;
}

// ------------------------------------------------------------ automorphisms

WeylAut::WeylAut(Kind kind, WeylElement ix, WeylElement id, std::string label)
    : kind_(kind), image_x_(std::move(ix)), image_d_(std::move(id)), label_(std::move(label)) {
    if (weyl_commutator(image_d_, image_x_) != WeylElement::constant(RingElement(1)))
        throw InvalidAutomorphism(label_ + ": images do not satisfy [D, x] = 1");
}

WeylAut WeylAut::linear(const RingElement& alpha, const RingElement& beta, const RingElement& gamma,
                        const RingElement& delta) {
    std::string label = "linear(" + alpha.str() + ", " + beta.str() + ", " + gamma.str() + ", " + delta.str() + ")";
    if (!(alpha * delta - beta * gamma).is_one()) throw InvalidAutomorphism(label + ": determinant is not 1");
    WeylElement ix = WeylElement::x().scaled(alpha) + WeylElement::d().scaled(beta);
    WeylElement id = WeylElement::x().scaled(gamma) + WeylElement::d().scaled(delta);
    return WeylAut(Kind::Linear, std::move(ix), std::move(id), label);
}

WeylAut WeylAut::shift_x(std::vector<RingElement> p) {
    WeylElement poly = polynomial_in(WeylElement::d(), p);
    return WeylAut(Kind::ShiftX, WeylElement::x() + poly, WeylElement::d(), "shift_x(" + poly.str() + ")");
}

WeylAut WeylAut::shift_d(std::vector<RingElement> p) {
    WeylElement poly = polynomial_in(WeylElement::x(), p);
    return WeylAut(Kind::ShiftD, WeylElement::x(), WeylElement::d() + poly, "shift_d(" + poly.str() + ")");
}

WeylAut WeylAut::composite(std::vector<WeylAut> parts) {
    WeylElement ix = WeylElement::x(), id = WeylElement::d();
    std::string label;
    for (const auto& p : parts) {
        ix = apply_aut(p, ix);
        id = apply_aut(p, id);
        label += (label.empty() ? "" : " ; ") + p.str();
    }
    WeylAut a(Kind::Composite, std::move(ix), std::move(id), "[" + label + "]");
    a.parts_ = std::move(parts);
    return a;
}

std::string WeylAut::str() const { return label_; }

WeylElement apply_aut(const WeylAut& phi, const WeylElement& a) {
    if (weyl_commutator(phi.image_d(), phi.image_x()) != WeylElement::constant(RingElement(1)))
        throw InvalidAutomorphism(phi.str());
    std::vector<WeylElement> px{WeylElement::constant(RingElement(1))}, pd = px;
    auto power = [](std::vector<WeylElement>& cache, const WeylElement& base, int k) -> const WeylElement& {
        while (int(cache.size()) <= k) cache.push_back(cache.back() * base);
        return cache[k];
    };
    WeylElement out;
    for (const auto& [k, c] : a.terms())
        out = out + (power(px, phi.image_x(), k.first) * power(pd, phi.image_d(), k.second)).scaled(c);
    return out;
}

}  // namespace codo
