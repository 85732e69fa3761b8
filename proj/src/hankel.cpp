#include "dynsamp/hankel.hpp"

#include <limits>

#include "dynsamp/errors.hpp"

namespace dynsamp {

namespace {

void check_window(int m, int n, int window, const char* who) {
    if (window < m || window > n - m)
        throw input_error(std::string(who) + ": window L must satisfy m <= L <= n - m");
}

}  // namespace

SpectralStack SpectralStack::with_window(int new_window) const {
    check_window(m, n, new_window, "with_window");
    SpectralStack out = *this;
    out.window = new_window;
    return out;
}

SpectralStack build_stack(const MeasurementSet& ms, double xi, int window) {
    check_window(ms.m, ms.n, window, "build_stack");
    SpectralStack stack;
    stack.xi = canonical_xi(xi);
    stack.m = ms.m;
    stack.n = ms.n;
    stack.window = window;
    stack.values.reserve(ms.sequences.size());
    for (const Sequence& y : ms.sequences) stack.values.push_back(spectrum_at(y, stack.xi));
    return stack;
}

SpectralStack build_stack_direct(const Filter& a, const State& x, int m, int n,
                                 double xi, int window) {
    if (m < 1) throw input_error("build_stack_direct: m must be >= 1");
    check_window(m, n, window, "build_stack_direct");
    SpectralStack stack;
    stack.xi = canonical_xi(xi);
    stack.m = m;
    stack.n = n;
    stack.window = window;
    stack.values.reserve(static_cast<std::size_t>(n));
    const Sequence kernel = a.to_sequence();
    Sequence evolved = x.to_sequence();
    for (int l = 0; l < n; ++l) {
        stack.values.push_back(spectrum_at(downsample(evolved, m), stack.xi));
        if (l + 1 < n) evolved = convolve(kernel, evolved);
    }
    return stack;
}

HankelPair build_hankel(const SpectralStack& stack) { return build_hankel(stack, stack.window); }

HankelPair build_hankel(const SpectralStack& stack, int window) {
    check_window(stack.m, stack.n, window, "build_hankel");
    const int rows = stack.n - window;
    HankelPair hp;
    hp.hfull.resize(rows, window + 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j <= window; ++j)
            hp.hfull(i, j) = stack.values[static_cast<std::size_t>(i + j)];
    hp.h0 = hp.hfull.leftCols(window);
    hp.h1 = hp.hfull.rightCols(window);
    return hp;
}

double factorization_residual(const HankelPair& hp, const NodeVectors& nv, int s) {
    if (s != 0 && s != 1) throw input_error("factorization_residual: s must be 0 or 1");
    if (nv.w.size() != nv.xhat.size())
        throw input_error("factorization_residual: node vectors must have equal length");
    const auto m = nv.w.size();
    const auto rows = hp.h0.rows();
    const auto cols = hp.h0.cols();
    linalg::Matrix lhs = static_cast<double>(m) * (s == 0 ? hp.h0 : hp.h1);
    linalg::Matrix v_left = linalg::vandermonde(nv.w, rows);   // m x (n - L)
    linalg::Matrix v_right = linalg::vandermonde(nv.w, cols);  // m x L
    linalg::Vector scale = nv.xhat;
    if (s == 1) scale = scale.cwiseProduct(nv.w);
    linalg::Matrix rhs = v_left.transpose() * scale.asDiagonal() * v_right;
    return linalg::inf_norm(lhs - rhs);
}

int numerical_rank(const HankelPair& hp, double tol) {
    if (!(tol > 0.0)) throw input_error("numerical_rank: tol must be positive");
    const auto sv = linalg::svd(hp.h0).singular_values;
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0)) ++rank;
    return rank;
}

linalg::Matrix rank_truncate(const linalg::Matrix& h, int m) {
    if (m < 0) throw input_error("rank_truncate: rank must be nonnegative");
    const linalg::SvdFactors f = linalg::svd(h);
    const Eigen::Index keep = std::min<Eigen::Index>(m, f.singular_values.size());
    return f.u.leftCols(keep) * f.singular_values.head(keep).asDiagonal() * f.w.topRows(keep);
}

linalg::Matrix antidiagonal_average(const linalg::Matrix& h) {
    const Eigen::Index rows = h.rows();
    const Eigen::Index cols = h.cols();
    std::vector<cplx> sums(static_cast<std::size_t>(rows + cols - 1), cplx{});
    std::vector<int> counts(sums.size(), 0);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) {
            sums[static_cast<std::size_t>(i + j)] += h(i, j);
            ++counts[static_cast<std::size_t>(i + j)];
        }
    linalg::Matrix out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            out(i, j) = sums[static_cast<std::size_t>(i + j)] /
                        static_cast<double>(counts[static_cast<std::size_t>(i + j)]);
    return out;
}

CadzowResult cadzow_denoise(const SpectralStack& stack, int m, double threshold, int max_iter) {
    if (m < 1) throw input_error("cadzow_denoise: m must be >= 1");
    if (!(threshold > 0.0)) throw input_error("cadzow_denoise: threshold must be positive");
    check_window(m, stack.n, stack.window, "cadzow_denoise");

    CadzowResult result;
    result.stack = stack;
    std::vector<cplx> best = stack.values;
    double best_ratio = std::numeric_limits<double>::infinity();

    for (int iter = 0;; ++iter) {
        SpectralStack cur = stack;
        cur.values = result.stack.values;
        HankelPair hp = build_hankel(cur);
        const auto sv = linalg::svd(hp.hfull).singular_values;
        const Eigen::Index k = sv.size();
        const double lam_m = m <= k ? sv(m - 1) : 0.0;
        const double lam_m1 = m + 1 <= k ? sv(m) : 0.0;
        const double ratio = lam_m == 0.0 ? 0.0 : lam_m1 / lam_m;
        if (ratio < best_ratio) {
            best_ratio = ratio;
            best = result.stack.values;
        }
        if (lam_m == 0.0 || ratio < threshold) {
            result.iterations = iter;
            result.converged = true;
            result.final_ratio = ratio;
            return result;
        }
        if (iter >= max_iter) {
            result.stack.values = best;
            result.iterations = iter;
            result.converged = false;
            result.final_ratio = best_ratio;
            return result;
        }
        const linalg::Matrix structured = antidiagonal_average(rank_truncate(hp.hfull, m));
        // the averaged matrix is exactly Hankel; its first column and last
        // row carry the full denoised value list
        std::vector<cplx>& vals = result.stack.values;
        for (Eigen::Index i = 0; i < structured.rows(); ++i)
            vals[static_cast<std::size_t>(i)] = structured(i, 0);
        for (Eigen::Index j = 1; j < structured.cols(); ++j)
            vals[static_cast<std::size_t>(structured.rows() - 1 + j)] =
                structured(structured.rows() - 1, j);
    }
}

}  // namespace dynsamp
