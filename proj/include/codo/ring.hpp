#pragma once

// Differential coefficient towers and their elements.
//
// A tower is Q(parameters, x) extended by generators with prescribed
// x-derivatives:
//   Exponential(t, r)        t' = r t, t invertible
//   EllipticType(u, u', E)   (u')^2 = E(u), u'' = E'(u)/2
//   SqrtAlgebraic(p, f)      p^2 = f, p' = f'/(2p)
// Elements are canonical fractions N/D: N reduced to degree <= 1 in every
// algebraic generator, D free of algebraic generators with leading
// coefficient 1, and no common factor between D and the components of N.
// Equal elements therefore have identical representations.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "codo/errors.hpp"
#include "codo/poly.hpp"

namespace codo {

class Tower;
class RingElement;
using TowerPtr = std::shared_ptr<const Tower>;

struct Exponential {
    std::string name;
    std::string rate;  // expression in the layers below
};

struct EllipticType {
    std::string name;
    std::string derivative_name;
    std::string cubic;  // expression in `name` and the layers below
};

struct SqrtAlgebraic {
    std::string name;
    std::string radicand;  // polynomial expression in the layers below
};

using Extension = std::variant<Exponential, EllipticType, SqrtAlgebraic>;

struct TowerSpec {
    std::vector<std::string> parameters;
    std::vector<Extension> extensions;
    std::string x_name = "x";
};

enum class GeneratorKind { Parameter, X, Exponential, EllipticBase, Algebraic };

class Tower : public std::enable_shared_from_this<Tower> {
public:
    struct Generator {
        std::string name;
        GeneratorKind kind;
        Poly radicand;  // Algebraic only
        Poly dnum;      // x-derivative = dnum / dden
        Poly dden;
    };

    int size() const { return int(gens_.size()); }
    const Generator& generator(int i) const { return gens_.at(i); }
    std::optional<int> find(const std::string& name) const;
    /// Index of `name`; throws ParseError if unknown.
    int index(const std::string& name) const;
    int x_index() const { return x_index_; }
    const std::vector<int>& algebraic() const { return algebraic_; }
    std::vector<std::string> parameters() const;
    const TowerPtr& parent() const { return parent_; }
    bool is_ancestor_of(const Tower& other) const;

    RingElement var(const std::string& name) const;
    RingElement x() const;
    RingElement constant(const Rational& c) const;
    RingElement parse(const std::string& text) const;

    /// Reduce modulo the algebraic relations.
    Poly reduce(const Poly& p) const;
    /// Canonical form of num/den (throws DivisionByZero).
    RingElement normalize(Poly num, Poly den) const;

    std::string format(const Poly& p) const;

private:
    friend TowerPtr tower_build(const TowerSpec& spec);
    friend TowerPtr extend_parameter(const TowerPtr& base, const std::string& name);
    friend TowerPtr extend_exponential(const TowerPtr& base, const std::string& name, const RingElement& rate);
    friend TowerPtr extend_sqrt(const TowerPtr& base, const std::string& name, const RingElement& radicand);
    friend TowerPtr extend_elliptic(const TowerPtr& base, const std::string& name, const std::string& dname,
                                    const std::string& cubic);
    friend std::shared_ptr<Tower> clone_for_extension(const TowerPtr& base, const std::string& name);

    std::vector<Generator> gens_;
    std::vector<int> algebraic_;
    int x_index_ = -1;
    TowerPtr parent_;
};

/// Build a tower from a declarative spec. Throws DuplicateName,
/// IllFoundedExtension.
TowerPtr tower_build(const TowerSpec& spec);
/// Child tower with one more generator; elements of `base` remain valid.
TowerPtr extend_parameter(const TowerPtr& base, const std::string& name);
TowerPtr extend_exponential(const TowerPtr& base, const std::string& name, const RingElement& rate);
TowerPtr extend_sqrt(const TowerPtr& base, const std::string& name, const RingElement& radicand);
TowerPtr extend_elliptic(const TowerPtr& base, const std::string& name, const std::string& dname,
                         const std::string& cubic);
/// Smallest of the two towers containing both (ancestor chains only).
TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);

class RingElement {
public:
    /// The rational 0, compatible with every tower.
    RingElement() = default;
    RingElement(const Rational& c) : num_(c), den_(1) {}
    RingElement(long c) : RingElement(Rational(c)) {}
    RingElement(int c) : RingElement(Rational(c)) {}

    /// Canonicalizing constructor.
    RingElement(TowerPtr tower, Poly num, Poly den = Poly(1));

    const TowerPtr& tower() const { return tower_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    Rational rational_value() const { return num_.constant_term(); }
    bool depends_on(int var) const { return num_.contains(var) || den_.contains(var); }

    RingElement operator-() const;
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator/(const RingElement& o) const;
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
    RingElement& operator/=(const RingElement& o) { return *this = *this / o; }
    RingElement inverse() const;
    RingElement scaled(const Rational& c) const;

    bool operator==(const RingElement& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    /// Re-home into a descendant tower (same representation).
    RingElement in(const TowerPtr& descendant) const;

    std::string str() const;

    static RingElement raw(TowerPtr tower, Poly num, Poly den);

private:
    TowerPtr tower_;
    Poly num_;
    Poly den_ = Poly(1);
};

RingElement pow(const RingElement& e, int k);
/// x-derivative (k-fold).
RingElement derive(const RingElement& e, unsigned k = 1);
/// Replace generator `var` by `value` (parameters or x; not extension generators).
RingElement substitute(const RingElement& e, const std::string& var, const RingElement& value);
/// Move an element into another tower by generator name (TowerMismatch if a
/// name is missing there).
RingElement import_into(const RingElement& e, const TowerPtr& target);
/// Components of the numerator split by algebraic-generator signature,
/// gcd'ed together.
Poly numerator_content(const Tower& tower, const Poly& num);

}  // namespace codo
