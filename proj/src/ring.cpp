#include "codo/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace codo {

// ---------------------------------------------------------------- towers

std::optional<int> Tower::find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

int Tower::index(const std::string& name) const {
    if (auto i = find(name)) return *i;
    throw ParseError("unknown name '" + name + "'");
}

std::vector<std::string> Tower::parameters() const {
    std::vector<std::string> out;
    for (const auto& g : gens_)
        if (g.kind == GeneratorKind::Parameter) out.push_back(g.name);
    return out;
}

bool Tower::is_ancestor_of(const Tower& other) const {
    for (const Tower* t = &other; t; t = t->parent_.get())
        if (t == this) return true;
    return false;
}

RingElement Tower::var(const std::string& name) const {
    return RingElement::raw(shared_from_this(), Poly::variable(index(name)), Poly(1));
}

RingElement Tower::x() const { return RingElement::raw(shared_from_this(), Poly::variable(x_index_), Poly(1)); }

RingElement Tower::constant(const Rational& c) const { return RingElement::raw(shared_from_this(), Poly(c), Poly(1)); }

Poly Tower::reduce(const Poly& p) const {
    Poly r = p;
    for (auto it = algebraic_.rbegin(); it != algebraic_.rend(); ++it) {
        int g = *it;
        if (r.degree(g) < 2) continue;
        const Poly& f = gens_[g].radicand;
        auto cs = r.coefficients(g);
        Poly out;
        Poly fpow(1);
        Poly gen = Poly::variable(g);
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (k >= 2 && k % 2 == 0) fpow = fpow * f;
            if (cs[k].is_zero()) continue;
            Poly term = cs[k] * fpow;
            if (k % 2) term = term * gen;
            out += term;
        }
        r = std::move(out);
    }
    return r;
}

namespace {

// Group numerator terms by their exponents on the algebraic generators.
std::vector<Poly> algebraic_components(const Tower& tower, const Poly& num) {
    const auto& alg = tower.algebraic();
    if (alg.empty()) return {num};
    std::map<std::vector<int>, std::vector<Poly::Term>> groups;
    for (const auto& t : num.terms()) {
        std::vector<int> key;
        Monomial rest = t.m;
        for (int g : alg) {
            key.push_back(t.m.e[g]);
            rest.deg -= rest.e[g];
            rest.e[g] = 0;
        }
        groups[key].push_back({rest, t.c});
    }
    std::vector<Poly> out;
    for (auto& [k, terms] : groups) out.push_back(Poly::from_terms(std::move(terms)));
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.size() < b.size(); });
    return out;
}

Poly common_factor(const Tower& tower, const Poly& num, const Poly& den) {
    Poly g = den;
    for (const auto& c : algebraic_components(tower, num)) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Poly conjugate(const Poly& p, int gen) {
    std::vector<Poly::Term> terms = p.terms();
    for (auto& t : terms)
        if (t.m.e[gen] % 2) t.c = -t.c;
    return Poly::from_terms(std::move(terms));
}

}  // namespace

Poly numerator_content(const Tower& tower, const Poly& num) {
    Poly g;
    for (const auto& c : algebraic_components(tower, num)) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

RingElement Tower::normalize(Poly num, Poly den) const {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    num = reduce(num);
    den = reduce(den);
    if (den.is_zero()) throw DivisionByZero("denominator vanishes modulo the tower relations");
    if (num.is_zero()) return RingElement::raw(shared_from_this(), Poly(), Poly(1));
    if (!den.is_constant()) {
        for (auto it = algebraic_.rbegin(); it != algebraic_.rend(); ++it) {
            int g = *it;
            if (!den.contains(g)) continue;
            Poly conj = conjugate(den, g);
            num = reduce(num * conj);
            den = reduce(den * conj);
            if (den.is_zero()) throw DivisionByZero("denominator is a zero divisor in the tower");
        }
        if (num.is_zero()) return RingElement::raw(shared_from_this(), Poly(), Poly(1));
        if (!den.is_constant()) {
            Poly g = common_factor(*this, num, den);
            if (!g.is_one()) {
                num = *num.divide_exact(g);
                den = *den.divide_exact(g);
            }
        }
    }
    Rational lc = den.lead().c;
    if (lc != 1) {
        Rational inv = 1 / lc;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return RingElement::raw(shared_from_this(), std::move(num), std::move(den));
}

std::string Tower::format(const Poly& p) const {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.c;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool unit = t.m.deg > 0 && c == 1;
        if (!unit) os << c.get_str();
        bool need_star = !unit;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!t.m.e[i]) continue;
            if (need_star) os << '*';
            os << gens_.at(i).name;
            if (t.m.e[i] > 1) os << '^' << t.m.e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::shared_ptr<Tower> clone_for_extension(const TowerPtr& base, const std::string& name) {
    if (base->find(name)) throw DuplicateName("generator '" + name + "' already declared");
    if (base->size() >= kMaxVars) throw IllFoundedExtension("too many generators (limit " + std::to_string(kMaxVars) + ")");
    auto t = std::make_shared<Tower>();
    t->gens_ = base->gens_;
    t->algebraic_ = base->algebraic_;
    t->x_index_ = base->x_index_;
    t->parent_ = base;
    return t;
}

TowerPtr extend_parameter(const TowerPtr& base, const std::string& name) {
    auto t = clone_for_extension(base, name);
    t->gens_.push_back({name, GeneratorKind::Parameter, Poly(), Poly(), Poly(1)});
    return t;
}

TowerPtr extend_exponential(const TowerPtr& base, const std::string& name, const RingElement& rate) {
    if (rate.tower() && !rate.tower()->is_ancestor_of(*base))
        throw IllFoundedExtension("rate of '" + name + "' lives outside the tower");
    auto t = clone_for_extension(base, name);
    int idx = t->size();
    t->gens_.push_back({name, GeneratorKind::Exponential, Poly(), rate.num() * Poly::variable(idx), rate.den()});
    return t;
}

TowerPtr extend_sqrt(const TowerPtr& base, const std::string& name, const RingElement& radicand) {
    if (radicand.tower() && !radicand.tower()->is_ancestor_of(*base))
        throw IllFoundedExtension("radicand of '" + name + "' lives outside the tower");
    if (!radicand.is_polynomial()) throw IllFoundedExtension("radicand of '" + name + "' must be polynomial");
    if (radicand.is_zero()) throw IllFoundedExtension("radicand of '" + name + "' is zero");
    RingElement df = derive(radicand.tower() ? radicand.in(base) : radicand);
    auto t = clone_for_extension(base, name);
    int idx = t->size();
    t->gens_.push_back({name, GeneratorKind::Algebraic, radicand.num(), Poly(), Poly(1)});
    t->algebraic_.push_back(idx);
    // p' = f' p / (2 f)
    RingElement d = t->normalize(df.num() * Poly::variable(idx), df.den() * radicand.num().scaled(2));
    t->gens_.back().dnum = d.num();
    t->gens_.back().dden = d.den();
    return t;
}

TowerPtr extend_elliptic(const TowerPtr& base, const std::string& name, const std::string& dname,
                         const std::string& cubic) {
    if (name == dname) throw DuplicateName("generator '" + name + "' declared twice");
    auto with_u = clone_for_extension(base, name);
    int iu = with_u->size();
    with_u->gens_.push_back({name, GeneratorKind::EllipticBase, Poly(), Poly(), Poly(1)});
    RingElement e;
    try {
        e = with_u->parse(cubic);
    } catch (const ParseError& err) {
        throw IllFoundedExtension(std::string("cubic of '") + name + "': " + err.what());
    }
    if (!e.is_polynomial()) throw IllFoundedExtension("cubic of '" + name + "' must be polynomial");
    auto t = clone_for_extension(with_u, dname);
    t->parent_ = base;
    int idu = t->size();
    t->gens_.push_back({dname, GeneratorKind::Algebraic, e.num(), e.num().derivative(iu).scaled(Rational(1, 2)), Poly(1)});
    t->algebraic_.push_back(idu);
    t->gens_[iu].dnum = Poly::variable(idu);
    return t;
}

TowerPtr tower_build(const TowerSpec& spec) {
    auto t = std::make_shared<Tower>();
    auto add = [&](const std::string& name, GeneratorKind kind, Poly dnum) {
        if (t->find(name)) throw DuplicateName("generator '" + name + "' already declared");
        if (t->size() >= kMaxVars) throw IllFoundedExtension("too many generators");
        t->gens_.push_back({name, kind, Poly(), std::move(dnum), Poly(1)});
    };
    for (const auto& p : spec.parameters) add(p, GeneratorKind::Parameter, Poly());
    t->x_index_ = t->size();
    add(spec.x_name, GeneratorKind::X, Poly(1));

    TowerPtr cur = t;
    auto parse_below = [&](const std::string& what, const std::string& text) {
        try {
            return cur->parse(text);
        } catch (const ParseError& err) {
            throw IllFoundedExtension(what + ": " + err.what());
        }
    };
    for (const auto& ext : spec.extensions) {
        if (const auto* e = std::get_if<Exponential>(&ext)) {
            cur = extend_exponential(cur, e->name, parse_below("rate of '" + e->name + "'", e->rate));
        } else if (const auto* e = std::get_if<EllipticType>(&ext)) {
            cur = extend_elliptic(cur, e->name, e->derivative_name, e->cubic);
        } else if (const auto* e = std::get_if<SqrtAlgebraic>(&ext)) {
            cur = extend_sqrt(cur, e->name, parse_below("radicand of '" + e->name + "'", e->radicand));
        }
    }
    return cur;
}

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    if (a->is_ancestor_of(*b)) return b;
    if (b->is_ancestor_of(*a)) return a;
    throw TowerMismatch("operands belong to unrelated towers");
}

// --------------------------------------------------------------- elements

RingElement::RingElement(TowerPtr tower, Poly num, Poly den) {
    if (!tower) {
        if (!num.is_constant() || !den.is_constant()) throw TowerMismatch("non-constant element without a tower");
        if (den.is_zero()) throw DivisionByZero("zero denominator");
        num_ = Poly(num.constant_term() / den.constant_term());
        return;
    }
    *this = tower->normalize(std::move(num), std::move(den));
}

RingElement RingElement::raw(TowerPtr tower, Poly num, Poly den) {
    RingElement e;
    e.tower_ = std::move(tower);
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    return e;
}

RingElement RingElement::in(const TowerPtr& descendant) const {
    if (tower_ && tower_ != descendant && !tower_->is_ancestor_of(*descendant))
        throw TowerMismatch("target tower does not extend the element's tower");
    return raw(descendant, num_, den_);
}

RingElement RingElement::operator-() const { return raw(tower_, -num_, den_); }

RingElement RingElement::scaled(const Rational& c) const {
    if (c == 0) return raw(tower_, Poly(), Poly(1));
    return raw(tower_, num_.scaled(c), den_);
}

RingElement RingElement::operator+(const RingElement& o) const {
    TowerPtr t = common_tower(tower_, o.tower_);
    if (is_zero()) return o.tower_ == t ? o : o.in(t);
    if (o.is_zero()) return tower_ == t ? *this : in(t);
    if (!t) return RingElement(Rational(num_.constant_term() + o.num_.constant_term()));
    if (den_ == o.den_) {
        Poly n = num_ + o.num_;
        if (den_.is_one() || n.is_zero()) return raw(t, n.is_zero() ? Poly() : n, n.is_zero() ? Poly(1) : den_);
        Poly g = common_factor(*t, n, den_);
        if (g.is_one()) return raw(t, n, den_);
        return raw(t, *n.divide_exact(g), *den_.divide_exact(g));
    }
    Poly g = gcd(den_, o.den_);
    if (g.is_one()) return raw(t, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Poly da = *den_.divide_exact(g), db = *o.den_.divide_exact(g);
    Poly n = num_ * db + o.num_ * da;
    if (n.is_zero()) return raw(t, Poly(), Poly(1));
    Poly g2 = common_factor(*t, n, g);
    if (!g2.is_one()) {
        n = *n.divide_exact(g2);
        g = *g.divide_exact(g2);
    }
    Poly den = da * db * g;
    Rational lc = den.lead().c;
    if (lc != 1) {
        n = n.scaled(1 / lc);
        den = den.scaled(1 / lc);
    }
    return raw(t, n, den);
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator*(const RingElement& o) const {
    TowerPtr t = common_tower(tower_, o.tower_);
    if (is_zero() || o.is_zero()) return raw(t, Poly(), Poly(1));
    if (!t) return RingElement(Rational(num_.constant_term() * o.num_.constant_term()));
    if (is_rational()) return o.scaled(rational_value()).in(t);
    if (o.is_rational()) return scaled(o.rational_value()).in(t);
    Poly an = num_, bn = o.num_, ad = den_, bd = o.den_;
    if (!bd.is_one()) {
        Poly g1 = common_factor(*t, an, bd);
        if (!g1.is_one()) {
            an = *an.divide_exact(g1);
            bd = *bd.divide_exact(g1);
        }
    }
    if (!ad.is_one()) {
        Poly g2 = common_factor(*t, bn, ad);
        if (!g2.is_one()) {
            bn = *bn.divide_exact(g2);
            ad = *ad.divide_exact(g2);
        }
    }
    Poly prod = an * bn;
    Poly den = ad * bd;
    bool needs_reduction = false;
    for (int g : t->algebraic())
        if (prod.degree(g) >= 2) needs_reduction = true;
    if (needs_reduction) return t->normalize(std::move(prod), std::move(den));
    return raw(t, std::move(prod), std::move(den));
}

RingElement RingElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (!tower_) return RingElement(Rational(1 / num_.constant_term()));
    return tower_->normalize(den_, num_);
}

RingElement RingElement::operator/(const RingElement& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    TowerPtr t = common_tower(tower_, o.tower_);
    if (o.is_rational()) {
        RingElement r = scaled(Rational(1 / o.rational_value()));
        return t ? r.in(t) : r;
    }
    // Exact polynomial quotient is the common case in fraction-free elimination.
    if (den_.is_one() && o.den_.is_one()) {
        bool alg_free = true;
        for (int g : t->algebraic())
            if (o.num_.contains(g)) alg_free = false;
        if (alg_free) {
            if (auto q = num_.divide_exact(o.num_)) return raw(t, std::move(*q), Poly(1));
        }
    }
    return *this * o.inverse();
}

std::string RingElement::str() const {
    if (!tower_) return num_.constant_term().get_str();
    if (den_.is_one()) return tower_->format(num_);
    return "(" + tower_->format(num_) + ")/(" + tower_->format(den_) + ")";
}

RingElement pow(const RingElement& e, int k) {
    if (k < 0) return pow(e.inverse(), -k);
    RingElement result(1);
    if (e.tower()) result = e.tower()->constant(1);
    RingElement base = e;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

namespace {

std::pair<Poly, Poly> derive_poly(const Tower& t, const Poly& p) {
    Poly plain;
    std::vector<std::pair<Poly, Poly>> parts;  // (den, accumulated numerator)
    std::uint32_t sup = p.support();
    for (int v = 0; v < t.size(); ++v) {
        if (!(sup >> v & 1)) continue;
        const auto& g = t.generator(v);
        if (g.dnum.is_zero()) continue;
        Poly dv = p.derivative(v) * g.dnum;
        if (g.dden.is_one()) {
            plain += dv;
            continue;
        }
        auto it = std::find_if(parts.begin(), parts.end(), [&](const auto& x) { return x.first == g.dden; });
        if (it == parts.end())
            parts.push_back({g.dden, dv});
        else
            it->second += dv;
    }
    if (parts.empty()) return {t.reduce(plain), Poly(1)};
    Poly den(1);
    for (const auto& [d, _] : parts) den = den * d;
    Poly total = plain * den;
    for (const auto& [d, acc] : parts) total += acc * *den.divide_exact(d);
    return {t.reduce(total), den};
}

}  // namespace

RingElement derive(const RingElement& e, unsigned k) {
    if (!e.tower()) return RingElement(0);
    RingElement cur = e;
    for (unsigned i = 0; i < k; ++i) {
        const Tower& t = *cur.tower();
        if (cur.is_zero()) return cur;
        auto [pn, qn] = derive_poly(t, cur.num());
        if (cur.den().is_one()) {
            cur = qn.is_one() ? RingElement::raw(cur.tower(), std::move(pn), Poly(1)) : t.normalize(pn, qn);
            continue;
        }
        auto [pd, qd] = derive_poly(t, cur.den());
        Poly num = pn * qd * cur.den() - cur.num() * pd * qn;
        Poly den = qn * qd * cur.den() * cur.den();
        cur = t.normalize(std::move(num), std::move(den));
    }
    return cur;
}

RingElement substitute(const RingElement& e, const std::string& var, const RingElement& value) {
    if (!e.tower()) return e;
    auto idx = e.tower()->find(var);
    if (!idx || !e.depends_on(*idx)) return value.tower() ? e.in(common_tower(e.tower(), value.tower())) : e;
    auto kind = e.tower()->generator(*idx).kind;
    if (kind != GeneratorKind::Parameter && kind != GeneratorKind::X)
        throw TowerMismatch("cannot substitute for extension generator '" + var + "'");
    TowerPtr t = common_tower(e.tower(), value.tower());
    if (value.is_rational())
        return t->normalize(e.num().evaluate(*idx, value.rational_value()), e.den().evaluate(*idx, value.rational_value()));
    auto horner = [&](const Poly& p) {
        auto cs = p.coefficients(*idx);
        RingElement r = t->constant(0);
        for (std::size_t k = cs.size(); k-- > 0;) r = r * value + t->normalize(cs[k], Poly(1));
        return r;
    };
    RingElement den = horner(e.den());
    if (den.is_zero()) throw DivisionByZero("substitution annihilates the denominator");
    return horner(e.num()) / den;
}

RingElement import_into(const RingElement& e, const TowerPtr& target) {
    if (!e.tower() || e.tower() == target) return e.tower() ? e : RingElement(e.rational_value()).in(target);
    if (e.tower()->is_ancestor_of(*target)) return e.in(target);
    std::array<int, kMaxVars> perm;
    perm.fill(-1);
    std::uint32_t used = e.num().support() | e.den().support();
    for (int i = 0; i < e.tower()->size(); ++i) {
        if (!(used >> i & 1)) continue;
        const auto& name = e.tower()->generator(i).name;
        auto j = target->find(name);
        if (!j) throw TowerMismatch("generator '" + name + "' missing from target tower");
        if (target->generator(*j).kind != e.tower()->generator(i).kind)
            throw TowerMismatch("generator '" + name + "' has a different kind in the target tower");
        perm[i] = *j;
    }
    return target->normalize(e.num().remap(perm), e.den().remap(perm));
}

}  // namespace codo
