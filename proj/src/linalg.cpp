#include "dynsamp/linalg.hpp"

#include <Eigen/Eigenvalues>

#include "dynsamp/errors.hpp"

namespace dynsamp::linalg {

namespace {

void require_finite(const Matrix& a, const char* who) {
    if (!a.allFinite())
        throw input_error(std::string(who) + ": matrix has non-finite entries");
}

}  // namespace

SvdFactors svd(const Matrix& a) {
    require_finite(a, "svd");
    Eigen::JacobiSVD<Matrix> dec(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (dec.info() != Eigen::Success)
        throw numerical_error("svd: iteration cap reached without convergence");
    return {dec.matrixU(), dec.singularValues(), dec.matrixV().adjoint()};
}

std::vector<std::complex<double>> eig(const Matrix& a) {
    require_finite(a, "eig");
    if (a.rows() != a.cols()) throw input_error("eig: matrix must be square");
    if (a.rows() == 0) return {};
    Eigen::ComplexEigenSolver<Matrix> dec(a, /*computeEigenvectors=*/false);
    if (dec.info() != Eigen::Success)
        throw numerical_error("eig: iteration cap reached without convergence");
    const auto& ev = dec.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

Matrix pinv(const Matrix& a, double rank_tol) {
    if (!(rank_tol > 0.0)) throw input_error("pinv: rank_tol must be positive");
    const SvdFactors f = svd(a);
    const Eigen::Index k = f.singular_values.size();
    const double cutoff = k > 0 ? rank_tol * f.singular_values(0) : 0.0;
    RealVector inv = RealVector::Zero(k);
    for (Eigen::Index i = 0; i < k; ++i)
        if (f.singular_values(i) > cutoff) inv(i) = 1.0 / f.singular_values(i);
    return f.w.adjoint() * inv.asDiagonal() * f.u.adjoint();
}

LeastSquaresMulti solve_least_squares(const Matrix& a, const Matrix& b, double rank_tol) {
    if (a.rows() < a.cols())
        throw input_error("solve_least_squares: system must have rows >= cols");
    if (a.rows() != b.rows())
        throw input_error("solve_least_squares: dimension mismatch");
    const SvdFactors f = svd(a);
    const Eigen::Index k = f.singular_values.size();
    const double smax = k > 0 ? f.singular_values(0) : 0.0;
    const double cutoff = rank_tol * smax;
    Matrix c = f.u.adjoint() * b;
    bool deficient = false;
    for (Eigen::Index i = 0; i < k; ++i) {
        if (f.singular_values(i) > cutoff)
            c.row(i) /= f.singular_values(i);
        else {
            c.row(i).setZero();
            deficient = true;
        }
    }
    return {f.w.adjoint() * c, deficient, k > 0 ? f.singular_values(k - 1) : 0.0, smax};
}

LeastSquares solve_least_squares(const Matrix& a, const Vector& b, double rank_tol) {
    LeastSquaresMulti r = solve_least_squares(a, Matrix(b), rank_tol);
    return {Vector(r.solution.col(0)), r.rank_deficient, r.smin, r.smax};
}

double inf_norm(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    return a.cwiseAbs().rowwise().sum().maxCoeff();
}

double inf_norm(const Vector& z) {
    return z.size() > 0 ? z.cwiseAbs().maxCoeff() : 0.0;
}

Matrix vandermonde(const Vector& w, Eigen::Index cols) {
    Matrix v(w.size(), cols);
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        std::complex<double> p = 1.0;
        for (Eigen::Index j = 0; j < cols; ++j) {
            v(i, j) = p;
            p *= w(i);
        }
    }
    return v;
}

Matrix companion_matrix(const Vector& coeffs) {
    const Eigen::Index m = coeffs.size();
    Matrix c = Matrix::Zero(m, m);
    for (Eigen::Index i = 1; i < m; ++i) c(i, i - 1) = 1.0;
    c.col(m - 1) = -coeffs;
    return c;
}

}  // namespace dynsamp::linalg
