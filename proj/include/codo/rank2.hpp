#pragma once

// Self-adjoint rank-two operators L4 = (D^2 + V)^2 + W with hyperelliptic
// spectral curve w^2 = F(z): Tyurin residuals, the Q-equation and its
// consequences, eigenfunction data chi, and the commuting partner.

#include <string>
#include <vector>

#include "codo/curve.hpp"
#include "codo/diffop.hpp"

namespace codo {

/// Q = z^g + q[g-1] z^{g-1} + ... + q[0] with V, W over one tower.
struct RankTwoTriple {
    int g = 0;
    std::vector<RingElement> q;
    RingElement V, W;

    TowerPtr tower() const;
    /// Q as an element of `tz`, a tower holding the spectral parameter `z`.
    RingElement Q(const TowerPtr& tz, const std::string& z = "z") const;
    std::string q_str(const std::string& z = "z") const;
};

/// Tower with a fresh spectral parameter z above `base`.
TowerPtr spectral_tower(const TowerPtr& base, const std::string& z = "z");

/// psi'' = chi0 psi + chi1 psi', both in `tower` = base(z)[w]/(w^2 - F(z)).
struct ChiPair {
    RingElement chi0, chi1;
    TowerPtr tower;
    std::string z = "z", w = "w";
    HyperellipticCurve curve;
};

/// One pole of the rank-l eigenfunction data: chi_j = c[j]/(k - gamma) + d[j] + ...
struct TyurinPole {
    RingElement gamma;
    std::vector<RingElement> c, d;
};

struct TyurinData {
    int l = 2;
    std::vector<TyurinPole> poles;
};

/// Per pole, in order: c_{l-1} + gamma'; the d_0 relation; the d_j
/// relations for j = 1..l-1 (only the first when c_{l-1} = 0). Throws
/// RankTooSmall.
std::vector<RingElement> tyurin_residuals(const TyurinData& t);

/// G/4 with G = 4(z-W)Q^2 - 4V(Q')^2 + (Q'')^2 - 2Q'Q''' + 2Q(2V'Q' + 4VQ'' + Q'''').
/// Throws XDependentResidual, DegreeMismatch.
HyperellipticCurve q_equation_extract(const RankTwoTriple& t);
/// The same G (not divided by 4) in `tz`.
RingElement q_equation_rhs(const RankTwoTriple& t, const TowerPtr& tz, const std::string& z = "z");

/// Q^(5) + 4VQ''' + 2Q'(2z - 2W + V'') + 6V'Q'' - 2QW', an element of `tz`.
/// Its product with 2Q is the x-derivative of G.
RingElement corollary1_residual(const RankTwoTriple& t, const TowerPtr& tz, const std::string& z = "z");

/// ((Q'')^2 - 2Q'Q''' - 4F(z)) / (4(Q')^2) at z = gamma. Throws DegenerateRoot.
RingElement v_from_q(const RankTwoTriple& t, const HyperellipticCurve& f, const RingElement& gamma);
/// v_from_q(gamma_j) - v_from_q(gamma_k) for j < k.
std::vector<RingElement> corollary2_residuals(const RankTwoTriple& t, const HyperellipticCurve& f,
                                              const std::vector<RingElement>& roots);

/// Left side of the two-pole equation on (gamma1, gamma2).
RingElement ur_residual(const RingElement& g1, const RingElement& g2, const HyperellipticCurve& f);

/// chi0 = -Q''/(2Q) + w/Q - V, chi1 = Q'/Q. Throws CurveMismatch.
ChiPair chi_from_q(const RankTwoTriple& t, const HyperellipticCurve& f);

/// (a_j, b_j) with psi^(j) = a_j psi + b_j psi', for j = 0..upto.
std::vector<std::pair<RingElement, RingElement>> reduce_derivatives(const ChiPair& c, int upto);

DiffOp build_l4(const RankTwoTriple& t);

struct SeriesCoefficients {
    RingElement a0, a1, b1;
    RingElement f0, f1, f2;
};

/// Expansion of chi at infinity in k = 1/sqrt(z) and the resulting
/// D^4 + f2 D^2 + f1 D + f0. Throws SeriesExtractionFailure.
SeriesCoefficients f_coeffs_from_expansion(const ChiPair& c);

/// Monic operator of order 4g+2 with L psi = +-w psi. Throws SingularLinearSystem.
DiffOp build_partner(const RankTwoTriple& t, const HyperellipticCurve& f);

struct MironovSolution {
    RankTwoTriple triple;
    HyperellipticCurve curve;
    /// Dimension of the affine solution family at the final degree bound.
    int family_dimension = 0;
    /// Per-coefficient degree bounds used (index i bounds q_i).
    std::vector<int> degrees;
};

/// V = h3 x^3 + h2 x^2 + h1 x + h0, W = g(g+1) h3 x, Q by undetermined
/// coefficients. `h` = (h0, h1, h2, h3) over `base`. Throws NoSolutionAtBound.
MironovSolution mironov_solve(int g, const TowerPtr& base, const std::vector<RingElement>& h, int degree_bound);
RankTwoTriple mironov_q(int g, const TowerPtr& base, const std::vector<RingElement>& h, int degree_bound);

/// Genus-one pole data: gamma1, w(gamma1) = sqrt(F(gamma1)) and the
/// closed forms for H1 and kappa.
struct GenusOneData {
    TowerPtr tower;
    RingElement gamma1, H1, kappa;
    TyurinData tyurin;
};
GenusOneData genus_one_data(const RingElement& gamma1, const HyperellipticCurve& f);

/// Genus-two pole data for gamma_{1,2} given in a common tower; w(gamma_i)
/// are adjoined as w1, w2.
struct GenusTwoData {
    TowerPtr tower;
    RingElement gamma1, gamma2, H1, H2, kappa1, kappa2;
    TyurinData tyurin;
};
GenusTwoData genus_two_data(const RingElement& gamma1, const RingElement& gamma2, const HyperellipticCurve& f);

/// One trial of the polynomial-root search: W = m h3 x.
struct PolynomialRootTrial {
    int m = 0;
    bool solvable = false;
    int family_dimension = 0;
    /// Q found and whether its discriminant in z is a constant times a square in x.
    std::string q;
    bool polynomial_roots = false;
    int root_degree = -1;
};

/// Exploratory search for genus-two triples whose roots gamma_i are
/// polynomials of degree two in x, over W = m h3 x for m in [0, max_m].
std::vector<PolynomialRootTrial> polynomial_root_search(const TowerPtr& base, const std::vector<RingElement>& h,
                                                        int max_m, int degree_bound);

}  // namespace codo
