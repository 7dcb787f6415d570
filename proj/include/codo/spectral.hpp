#pragma once

// Spectral curves of commuting pairs.

#include <vector>

#include "codo/curve.hpp"
#include "codo/diffop.hpp"

namespace codo {

struct ResultantDetail {
    CurvePoly raw;    // determinant, content removed
    CurvePoly curve;  // minimal annihilating factor, normalized
    /// Squarefree factors of `raw` with multiplicities.
    std::vector<std::pair<CurvePoly, int>> factors;
};

/// Burchnall-Chaundy polynomial of a commuting pair via the differential
/// resultant. Throws NonCommutingPair, XDependentResultant.
CurvePoly bc_resultant(const DiffOp& a, const DiffOp& b);
ResultantDetail bc_resultant_detail(const DiffOp& a, const DiffOp& b);

int rank_of_pair(int n, int m);

/// True iff `e` has no component along the algebraic generator `w`.
bool sigma_invariant(const RingElement& e, const std::string& w = "w");

/// Discriminant-style resultant Res_z(F, F') of the curve polynomial.
RingElement discriminant(const HyperellipticCurve& c);
/// Discriminant not identically zero in the parameters.
bool is_nonsingular(const HyperellipticCurve& c);

}  // namespace codo
