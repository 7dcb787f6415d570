#pragma once

// First Weyl algebra in normal order (x to the left of D), the Dixmier pair,
// and the generating automorphisms.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "codo/diffop.hpp"

namespace codo {

class WeylElement {
public:
    using Key = std::pair<int, int>;  // x^i D^j

    WeylElement() = default;
    explicit WeylElement(std::map<Key, RingElement> terms);

    static WeylElement x();
    static WeylElement d();
    static WeylElement constant(const RingElement& c);
    /// Polynomial-coefficient operator (x-free denominators) to normal order.
    static WeylElement from_diffop(const DiffOp& op);

    const std::map<Key, RingElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RingElement coeff(int i, int j) const;
    /// Highest power of D (-1 for zero).
    int order() const;

    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-(const WeylElement& o) const;
    WeylElement operator*(const WeylElement& o) const;
    WeylElement scaled(const RingElement& c) const;
    bool operator==(const WeylElement& o) const;
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    /// The same operator acting on functions of x in `tower`.
    DiffOp to_diffop(const TowerPtr& tower) const;
    std::string str() const;

private:
    std::map<Key, RingElement> terms_;
};

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b);
WeylElement weyl_pow(const WeylElement& a, int k);

struct DixmierPair {
    WeylElement x, y;
};

/// X = (p^3+q^2+h)^2 + 2p, Y = (p^3+q^2+h)^3 + 3/2 (p S + S p) with p = x, q = -D.
DixmierPair dixmier_pair(const RingElement& h);

class WeylAut {
public:
    enum class Kind { Linear, ShiftX, ShiftD, Composite };

    /// x -> alpha x + beta D, D -> gamma x + delta D; needs alpha delta - beta gamma = 1.
    static WeylAut linear(const RingElement& alpha, const RingElement& beta, const RingElement& gamma,
                          const RingElement& delta);
    /// x -> x + P(D), D -> D. `p` lists coefficients of P from degree 0.
    static WeylAut shift_x(std::vector<RingElement> p);
    /// D -> D + P(x), x -> x.
    static WeylAut shift_d(std::vector<RingElement> p);
    /// Apply `parts` in order: first parts[0], then parts[1], ...
    static WeylAut composite(std::vector<WeylAut> parts);

    Kind kind() const { return kind_; }
    const WeylElement& image_x() const { return image_x_; }
    const WeylElement& image_d() const { return image_d_; }
    const std::vector<WeylAut>& parts() const { return parts_; }
    std::string str() const;

private:
    WeylAut(Kind kind, WeylElement ix, WeylElement id, std::string label);
    Kind kind_ = Kind::Linear;
    WeylElement image_x_, image_d_;
    std::vector<WeylAut> parts_;
    std::string label_;
};

/// Homomorphic image of `a`. Throws InvalidAutomorphism if the certificate fails.
WeylElement apply_aut(const WeylAut& phi, const WeylElement& a);

}  // namespace codo
