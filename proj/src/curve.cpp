#include "codo/curve.hpp"

#include <algorithm>

#include "text.hpp"

namespace codo {
namespace {

std::string monomial_text(int i, int j) {
    std::string s;
    auto put = [&](const char* v, int k) {
        if (!k) return;
        if (!s.empty()) s += '*';
        s += v;
        if (k > 1) s += '^' + std::to_string(k);
    };
    put("w", j);
    put("z", i);
    return s;
}

}  // namespace

CurvePoly::CurvePoly(std::map<Key, RingElement> terms) {
    for (auto& [k, c] : terms)
        if (!c.is_zero()) terms_.emplace(k, std::move(c));
}

CurvePoly CurvePoly::parse(const TowerPtr& tower, const std::string& text, const std::string& z, const std::string& w) {
    TowerPtr t = extend_parameter(extend_parameter(tower, z), w);
    RingElement e = t->parse(text);
    int iz = t->index(z), iw = t->index(w);
    if (!e.is_polynomial() || e.depends_on(t->x_index())) throw ParseError("curve must be polynomial in z, w and free of x");
    std::map<Key, std::vector<Poly::Term>> parts;
    for (const auto& term : e.num().terms()) {
        Monomial m = term.m;
        Key k{m.e[iz], m.e[iw]};
        m.deg -= m.e[iz] + m.e[iw];
        m.e[iz] = m.e[iw] = 0;
        parts[k].push_back({m, term.c});
    }
    std::map<Key, RingElement> out;
    for (auto& [k, ts] : parts) out[k] = tower->normalize(Poly::from_terms(std::move(ts)), Poly(1));
    return CurvePoly(std::move(out));
}

RingElement CurvePoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? RingElement() : it->second;
}

int CurvePoly::degree_z() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int CurvePoly::degree_w() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

CurvePoly CurvePoly::operator+(const CurvePoly& o) const {
    std::map<Key, RingElement> r = terms_;
    for (const auto& [k, c] : o.terms_) r[k] = r[k] + c;
    return CurvePoly(std::move(r));
}

CurvePoly CurvePoly::operator-(const CurvePoly& o) const { return *this + o.scaled(RingElement(-1)); }

CurvePoly CurvePoly::scaled(const RingElement& c) const {
    std::map<Key, RingElement> r;
    for (const auto& [k, v] : terms_) r[k] = v * c;
    return CurvePoly(std::move(r));
}

bool CurvePoly::operator==(const CurvePoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [k, c] : terms_) {
        auto it = o.terms_.find(k);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

CurvePoly CurvePoly::normalized() const {
    if (terms_.empty()) return *this;
    int dw = degree_w(), dz = degree_z();
    std::vector<Key> top_w, top_z;
    for (const auto& [k, c] : terms_) {
        if (k.second == dw) top_w.push_back(k);
        if (k.first == dz) top_z.push_back(k);
    }
    Key pivot;
    if (top_w.size() == 1 && top_w[0].first == 0)
        pivot = top_w[0];
    else if (top_z.size() == 1 && top_z[0].second == 0)
        pivot = top_z[0];
    else
        pivot = *std::max_element(top_w.begin(), top_w.end());
    return scaled(terms_.at(pivot).inverse());
}

std::string CurvePoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<Key> keys;
    for (const auto& [k, c] : terms_) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first > b.first;
    });
    std::string s;
    for (const auto& k : keys) s += detail::signed_term(terms_.at(k), monomial_text(k.first, k.second), s.empty());
    return s;
}

HyperellipticCurve::HyperellipticCurve(int genus, std::vector<RingElement> coeffs)
    : genus_(genus), coeffs_(std::move(coeffs)) {
    if (genus < 0 || int(coeffs_.size()) != 2 * genus + 1)
        throw DegreeMismatch("hyperelliptic curve of genus " + std::to_string(genus) + " needs " +
                             std::to_string(2 * genus + 1) + " coefficients");
}

RingElement HyperellipticCurve::coeff(int i) const {
    if (i == 2 * genus_ + 1) return RingElement(1);
    if (i < 0 || i > 2 * genus_) return RingElement();
    return coeffs_[i];
}

RingElement HyperellipticCurve::evaluate(const RingElement& value) const {
    RingElement r(1);
    for (int i = 2 * genus_; i >= 0; --i) r = r * value + coeffs_[i];
    return r;
}

CurvePoly HyperellipticCurve::as_curve() const {
    std::map<CurvePoly::Key, RingElement> t;
    t[{0, 2}] = RingElement(1);
    t[{2 * genus_ + 1, 0}] = RingElement(-1);
    for (int i = 0; i <= 2 * genus_; ++i) t[{i, 0}] = -coeffs_[i];
    return CurvePoly(std::move(t));
}

std::string HyperellipticCurve::str() const {
    std::string s = monomial_text(2 * genus_ + 1, 0);
    if (s.empty()) s = "1";
    for (int i = 2 * genus_; i >= 0; --i)
        if (!coeffs_[i].is_zero()) s += detail::signed_term(coeffs_[i], monomial_text(i, 0), false);
    return s;
}

}  // namespace codo
