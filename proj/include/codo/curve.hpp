#pragma once

// Plane curves R(z, w) with coefficients in the parameters, and
// hyperelliptic curves w^2 = F(z) with F monic of odd degree.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "codo/ring.hpp"

namespace codo {

class CurvePoly {
public:
    using Key = std::pair<int, int>;  // (deg_z, deg_w)

    CurvePoly() = default;
    explicit CurvePoly(std::map<Key, RingElement> terms);

    /// Read `text` over `tower` extended by fresh parameters z and w.
    static CurvePoly parse(const TowerPtr& tower, const std::string& text, const std::string& z = "z",
                           const std::string& w = "w");

    const std::map<Key, RingElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RingElement coeff(int i, int j) const;
    int degree_z() const;
    int degree_w() const;

    CurvePoly operator+(const CurvePoly& o) const;
    CurvePoly operator-(const CurvePoly& o) const;
    CurvePoly scaled(const RingElement& c) const;
    bool operator==(const CurvePoly& o) const;
    bool operator!=(const CurvePoly& o) const { return !(*this == o); }

    /// Monic in w when the w-leading coefficient is a pure power of w,
    /// otherwise monic in z; sign of the leading term fixed positive.
    CurvePoly normalized() const;

    /// Canonical text, e.g. "w^2 - z^3 - 1/2*s2*z^2 - ...".
    std::string str() const;

private:
    std::map<Key, RingElement> terms_;
};

class HyperellipticCurve {
public:
    HyperellipticCurve() = default;
    /// coeffs = c_0 .. c_{2g}; F = z^{2g+1} + c_{2g} z^{2g} + ... + c_0.
    HyperellipticCurve(int genus, std::vector<RingElement> coeffs);

    int genus() const { return genus_; }
    const std::vector<RingElement>& coeffs() const { return coeffs_; }
    /// Coefficient of z^i in F (including the leading 1).
    RingElement coeff(int i) const;
    /// F(value).
    RingElement evaluate(const RingElement& value) const;
    /// w^2 - F(z).
    CurvePoly as_curve() const;
    /// Text of F, e.g. "z^3 + 2*h2*z^2 + ...".
    std::string str() const;

private:
    int genus_ = 0;
    std::vector<RingElement> coeffs_;
};

}  // namespace codo
