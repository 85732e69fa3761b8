#pragma once

#include <string>
#include <vector>

#include "dynsamp/hankel.hpp"
#include "dynsamp/linalg.hpp"

namespace dynsamp {

enum class Algorithm { prony, pencil, esprit };

std::string to_string(Algorithm alg);
Algorithm algorithm_from_string(const std::string& name);

/// Monic annihilating polynomial z^m + sum_k coeffs[k] z^k of the node set.
struct PronyPolynomial {
    int degree = 0;
    linalg::Vector coeffs;  // q_0 .. q_{m-1}
};

struct NodeDiagnostics {
    double linear_residual = 0.0;  // inf-norm residual of the solved system
    double sv_ratio = 0.0;         // rank indicator of the data matrix
};

/// Recovered nodes at one xi, ordered so that nodes[i] estimates the folded
/// spectrum value ahat((xi+i)/m). raw_roots keeps the unordered solver
/// output (for the degenerate solver these are the distinct values only).
struct NodeEstimate {
    double xi = 0.0;
    int m = 0;
    std::vector<cplx> nodes;
    std::vector<cplx> raw_roots;
    Algorithm algorithm = Algorithm::prony;
    NodeDiagnostics diagnostics;
};

/// Least-squares solution of h0 q = -h_m for the annihilating coefficients.
/// The pair must be built with window m (h0 has m columns).
PronyPolynomial prony_solve(const HankelPair& hp, const linalg::Vector& h_m);

/// Roots via the companion-matrix eigenvalue problem.
std::vector<cplx> prony_roots(const PronyPolynomial& p);

enum class MonotoneProfile { decreasing, increasing };

/// Assigns raw roots to fold indices: the j-th largest root (by real part)
/// goes to the index with the j-th smallest fold distance
/// min(frac((xi+i)/m), 1 - frac((xi+i)/m)). Requires xi outside {0, 1/2}.
std::vector<cplx> order_roots(std::vector<cplx> raw, double xi, int m,
                              MonotoneProfile profile = MonotoneProfile::decreasing);

/// Full node recovery at a generic xi: solve, root, order.
NodeEstimate prony_estimate(const SpectralStack& stack);

/// Node recovery at xi in {0, 1/2}, where fold points alias pairwise and the
/// annihilating polynomial has degree (m+1)/2. The distinct values are
/// expanded back to the full m-vector through the fold pairing.
NodeEstimate degenerate_prony(const SpectralStack& stack);

/// Nodes as eigenvalues of pinv(W(1:m,1:L)) W(1:m,2:L+1) built from the SVD
/// of the full Hankel matrix; the L-m smallest eigenvalues in modulus are
/// discarded.
NodeEstimate matrix_pencil(const SpectralStack& stack, int window);
NodeEstimate matrix_pencil(const SpectralStack& stack);

/// Nodes as eigenvalues of the shift-invariance solve on the leading m left
/// singular vectors. Requires n - L >= m + 1 rows for the shifted blocks.
NodeEstimate esprit(const SpectralStack& stack, int window);
NodeEstimate esprit(const SpectralStack& stack);

/// Spec'd pick of L for the pencil/ESPRIT family: round(n/3) clamped to
/// [m, n - m].
int default_window(int m, int n);

}  // namespace dynsamp
