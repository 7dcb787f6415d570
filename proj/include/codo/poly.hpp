#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace codo {

using Rational = mpq_class;
using Integer = mpz_class;

/// Upper bound on the number of generators a single tower may declare.
inline constexpr int kMaxVars = 16;

/// Exponent vector with cached total degree.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;

    static Monomial var(int i, unsigned k = 1) {
        Monomial m;
        m.e[i] = static_cast<std::uint16_t>(k);
        m.deg = k;
        return m;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
        r.deg = deg + o.deg;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // Requires divides(o) for `o / *this`.
    Monomial quotient(const Monomial& d) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - d.e[i]);
        r.deg = deg - d.deg;
        return r;
    }

    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

/// Graded lexicographic order, variable 0 largest. Returns <0, 0, >0.
inline int compare(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

/// Sparse multivariate polynomial over Q. Terms are kept sorted in strictly
/// decreasing graded-lex order with nonzero coefficients.
class Poly {
public:
    struct Term {
        Monomial m;
        Rational c;
    };

    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly variable(int i, unsigned k = 1);
    static Poly term(const Monomial& m, const Rational& c);
    /// Takes terms in any order, merges duplicates and drops zeros.
    static Poly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.deg == 0); }
    bool is_one() const { return is_constant() && !is_zero() && terms_[0].c == 1; }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    const std::vector<Term>& terms() const { return terms_; }
    const Term& lead() const { return terms_.front(); }
    /// Constant term (0 when absent).
    Rational constant_term() const;

    int degree(int var) const;
    int min_degree(int var) const;
    unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().m.deg; }
    bool contains(int var) const;
    /// Bit i set iff variable i occurs.
    std::uint32_t support() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& c) const;
    Poly mul_term(const Monomial& m, const Rational& c) const;
    Poly pow(unsigned k) const;

    Poly derivative(int var) const;
    /// Coefficients w.r.t. `var`: result[k] is the coefficient of var^k.
    std::vector<Poly> coefficients(int var) const;
    static Poly from_coefficients(int var, const std::vector<Poly>& coeffs);
    Poly evaluate(int var, const Rational& value) const;
    /// Replace var by an arbitrary polynomial.
    Poly substitute(int var, const Poly& value) const;
    /// Maps variable i to perm[i] (perm[i] < 0 means "must not occur").
    Poly remap(const std::array<int, kMaxVars>& perm) const;

    /// Quotient if `d` divides this exactly over Q, otherwise nullopt.
    std::optional<Poly> divide_exact(const Poly& d) const;

    /// Positive rational c such that this / c has coprime integer coefficients.
    Rational content() const;
    /// Divided by the leading coefficient.
    Poly monic() const;
    /// Integer primitive form with positive leading coefficient.
    Poly primitive() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    std::size_t hash() const;

private:
    std::vector<Term> terms_;
    friend Poly add_sub(const Poly&, const Poly&, bool);
};

/// Greatest common divisor over Q, normalized monic (gcd(0,0) = 0).
Poly gcd(const Poly& a, const Poly& b);

/// Squarefree-style helper: content of p w.r.t. `var` (gcd of its coefficients).
Poly content_in(const Poly& p, int var);

}  // namespace codo
