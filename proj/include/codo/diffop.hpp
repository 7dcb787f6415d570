#pragma once

// Ordinary differential operators sum c_i D^i over a tower, and truncated
// pseudo-differential operators.

#include <map>
#include <string>
#include <vector>

#include "codo/curve.hpp"
#include "codo/ring.hpp"

namespace codo {

class DiffOp {
public:
    /// The zero operator.
    DiffOp() = default;
    /// Coefficients c_0..c_n; trailing zeros are dropped.
    explicit DiffOp(std::vector<RingElement> coeffs);

    static DiffOp D(unsigned k = 1);
    static DiffOp scalar(const RingElement& c);

    /// Read the operator grammar: ring expressions times powers of D.
    static DiffOp parse(const TowerPtr& tower, const std::string& text);

    int order() const { return int(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<RingElement>& coeffs() const { return coeffs_; }
    RingElement coeff(int i) const;
    RingElement leading() const { return coeffs_.empty() ? RingElement() : coeffs_.back(); }
    /// Common tower of all coefficients (null when every coefficient is rational).
    TowerPtr tower() const;

    DiffOp operator-() const;
    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp operator*(const DiffOp& o) const;
    /// Left multiplication by a function.
    DiffOp scaled(const RingElement& c) const;
    bool operator==(const DiffOp& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    /// Action on a function: sum c_i f^(i).
    RingElement apply(const RingElement& f) const;

    std::string str() const;

private:
    std::vector<RingElement> coeffs_;
};

DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);
/// sum (-D)^i o c_i.
DiffOp formal_adjoint(const DiffOp& a);
/// R(A, B) with z -> A, w -> B. Throws NonCommutingPair.
DiffOp eval_poly(const CurvePoly& r, const DiffOp& a, const DiffOp& b);
/// e^{-s} A(e^{s} r) where s' = shift.
RingElement gauge_apply(const DiffOp& a, const RingElement& shift, const RingElement& r);

/// Sum of c_d D^d over d <= top, known exactly for d >= valid_from.
class PseudoDiffOp {
public:
    PseudoDiffOp() = default;
    PseudoDiffOp(std::map<int, RingElement> coeffs, int valid_from);
    /// Exact image of a differential operator (valid to any depth).
    static PseudoDiffOp from(const DiffOp& op);
    /// Finite operator with every coefficient known.
    static PseudoDiffOp exact(std::map<int, RingElement> coeffs);

    /// Degree of the highest nonzero term (INT_MIN for zero).
    int top() const;
    /// Lowest degree whose coefficient is guaranteed; nullopt means exact.
    std::optional<int> valid_from() const { return valid_from_; }
    RingElement coeff(int d) const;
    const std::map<int, RingElement>& coeffs() const { return coeffs_; }

    PseudoDiffOp operator+(const PseudoDiffOp& o) const;
    PseudoDiffOp operator-(const PseudoDiffOp& o) const;
    PseudoDiffOp scaled(const RingElement& c) const;
    /// Drop terms below `floor` (the result is valid from max(floor, valid_from)).
    PseudoDiffOp truncated(int floor) const;

    std::string str() const;

private:
    std::map<int, RingElement> coeffs_;
    std::optional<int> valid_from_;
};

/// Product, computed down to degree `floor` (or the validity bound if higher).
PseudoDiffOp compose(const PseudoDiffOp& a, const PseudoDiffOp& b, int floor);
/// K with K^k = L, valid from degree -depth. Throws OrderNotDivisible, NonMonic.
PseudoDiffOp psdo_root(const DiffOp& l, int k, int depth);
/// Inverse of a monic pseudo-differential operator, computed down to `floor`.
PseudoDiffOp psdo_inverse(const PseudoDiffOp& k, int floor);

struct SchurResult {
    /// Coefficients c_d of high = sum c_d K^d, for d = order(high) down to -depth.
    std::map<int, RingElement> coefficients;
    /// True iff every c_d is constant.
    bool constant = false;
    int depth = 0;
};

/// Expand `high` in powers of the order(low)-th root of `low`.
SchurResult schur_expand(const DiffOp& low, const DiffOp& high, int depth);

}  // namespace codo
