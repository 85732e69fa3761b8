#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace dynsamp::linalg {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Relative cutoff below which singular values are treated as zero.
inline constexpr double kDefaultRankTol = 1e-10;

/// Thin SVD written as a = u * diag(singular_values) * w, i.e. the right
/// factor w already carries the conjugated right singular vectors as rows.
struct SvdFactors {
    Matrix u;
    RealVector singular_values;  // nonincreasing, nonnegative
    Matrix w;
};

SvdFactors svd(const Matrix& a);

/// Eigenvalues (with multiplicity) of a square matrix.
std::vector<std::complex<double>> eig(const Matrix& a);

/// Moore-Penrose pseudoinverse; singular values <= rank_tol * sigma_max are
/// treated as zero.
Matrix pinv(const Matrix& a, double rank_tol = kDefaultRankTol);

struct LeastSquares {
    Vector solution;              // minimum-norm least-squares solution
    bool rank_deficient = false;  // some singular value fell below the cutoff
    double smin = 0.0;
    double smax = 0.0;
};

/// Minimizes ||a x - b||_2 for rows >= cols; rank-deficient systems yield
/// the minimum-norm solution with the flag set.
LeastSquares solve_least_squares(const Matrix& a, const Vector& b,
                                 double rank_tol = kDefaultRankTol);

struct LeastSquaresMulti {
    Matrix solution;
    bool rank_deficient = false;
    double smin = 0.0;
    double smax = 0.0;
};

LeastSquaresMulti solve_least_squares(const Matrix& a, const Matrix& b,
                                      double rank_tol = kDefaultRankTol);

/// Max absolute row sum.
double inf_norm(const Matrix& a);
/// Max entry modulus.
double inf_norm(const Vector& z);

/// n x cols matrix of node powers, entry (i, j) = w_i^j.
Matrix vandermonde(const Vector& w, Eigen::Index cols);

/// Companion matrix of the monic polynomial z^M + sum_k coeffs[k] z^k:
/// ones on the subdiagonal, -coeffs in the last column.
Matrix companion_matrix(const Vector& coeffs);

}  // namespace dynsamp::linalg
