#pragma once

#include <vector>

#include "dynsamp/linalg.hpp"
#include "dynsamp/signal.hpp"

namespace dynsamp {

/// Fourier data of one measurement set evaluated at a single xi:
/// values[l] = yhat_l(xi). window is the Hankel column count L used when
/// matrices are built from this stack, m <= window <= n - m.
struct SpectralStack {
    double xi = 0.0;
    int m = 0;
    int n = 0;
    int window = 0;
    std::vector<cplx> values;

    SpectralStack with_window(int window) const;
};

SpectralStack build_stack(const MeasurementSet& ms, double xi, int window);

/// Exact-spectrum path used when the sequence-level detour is unnecessary
/// (growth diagnostics, tests). Accepts any m >= 1, including even factors.
SpectralStack build_stack_direct(const Filter& a, const State& x, int m, int n,
                                 double xi, int window);

/// hfull(i, j) = yhat_{i+j}(xi), shape (n - L) x (L + 1); h0 and h1 are its
/// left and right L-column windows.
struct HankelPair {
    linalg::Matrix h0;
    linalg::Matrix h1;
    linalg::Matrix hfull;
};

HankelPair build_hankel(const SpectralStack& stack);
HankelPair build_hankel(const SpectralStack& stack, int window);

/// Node data at one xi: w holds the folded filter spectrum values
/// ahat((xi+i)/m) and xhat the folded state spectrum values.
struct NodeVectors {
    linalg::Vector w;
    linalg::Vector xhat;
};

/// Deviation || m H(s) - V^T diag(xhat) diag(w)^s V ||_inf of the Hankel
/// factorization, with rectangular Vandermonde factors sized from the pair.
double factorization_residual(const HankelPair& hp, const NodeVectors& nv, int s);

/// Count of singular values of h0 above tol * sigma_max (0 for a zero matrix).
int numerical_rank(const HankelPair& hp, double tol);

/// One projection step of the denoiser: keep the m largest singular values.
linalg::Matrix rank_truncate(const linalg::Matrix& h, int m);

/// The other projection step: force exact Hankel structure by replacing each
/// anti-diagonal with its mean.
linalg::Matrix antidiagonal_average(const linalg::Matrix& h);

struct CadzowResult {
    SpectralStack stack;
    int iterations = 0;
    bool converged = true;
    double final_ratio = 0.0;  // lambda_{m+1} / lambda_m at exit
};

/// Alternating projection between rank-m matrices and Hankel-structured
/// matrices. Exits once lambda_{m+1}/lambda_m < threshold; if max_iter is
/// exhausted, returns the best iterate seen with converged = false.
CadzowResult cadzow_denoise(const SpectralStack& stack, int m,
                            double threshold = 1e-10, int max_iter = 100);

}  // namespace dynsamp
