#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynsamp/rng.hpp"

namespace dynsamp {

using cplx = std::complex<double>;

/// Wraps a frequency into the torus [0, 1).
double canonical_xi(double xi);

/// Finite complex sequence with an explicit integer support window:
/// values[k] is the coefficient at index offset + k. All index bookkeeping
/// lives here so the operations on top stay window-agnostic.
struct Sequence {
    int offset = 0;
    std::vector<cplx> values;

    static Sequence delta();  // unit impulse at index 0

    bool empty() const { return values.empty(); }
    int lo() const { return offset; }
    int hi() const { return offset + static_cast<int>(values.size()) - 1; }
    cplx at(int n) const;  // 0 outside the window
};

/// Exact discrete convolution; output support is the Minkowski sum.
Sequence convolve(const Sequence& f, const Sequence& g);

/// (S_m s)(k) = s(m k).
Sequence downsample(const Sequence& s, int m);

/// Direct summation of sum_n s(n) e^{-2 pi i n xi}.
cplx spectrum_at(const Sequence& s, double xi);

/// Symmetric real convolution kernel a(-r..r). The spectrum flags describe
/// properties the estimators rely on; they are recorded rather than enforced
/// so that negative test cases remain representable.
struct Filter {
    int radius = 0;
    std::vector<double> coeffs;  // index k holds a(k - radius)
    bool normalized = false;          // |sum_k a(k) - 1| <= 1e-12
    bool strictly_decreasing = false; // spectrum strictly decreasing on [0, 1/2]

    /// Builds from a(-r..r); validates symmetry and finiteness, then grades
    /// the spectrum on a 1024-point grid over [0, 1/2].
    static Filter from_coeffs(std::vector<double> coeffs);

    double at(int k) const;
    /// Cosine-series evaluation of the spectrum (real by symmetry).
    double hat(double xi) const;
    Sequence to_sequence() const;
};

struct State {
    int radius = 0;
    std::vector<cplx> coeffs;  // index k holds x(k - radius)

    static State from_coeffs(std::vector<cplx> coeffs);
    static State delta();

    cplx at(int k) const;
    cplx hat(double xi) const;
    Sequence to_sequence() const;
};

struct NoiseSpec {
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::string distribution = "uniform";
};

/// The n snapshots y_l = (a^l * x)(m Z), l = 0..n-1. noise, when present,
/// records the perturbation to apply at the spectral level.
struct MeasurementSet {
    int m = 0;  // subsampling factor, odd and > 1
    int n = 0;  // number of time levels, >= 2m
    std::vector<Sequence> sequences;
    std::optional<NoiseSpec> noise;
};

/// l-fold self-convolution of the kernel; l = 0 yields the unit impulse.
Sequence filter_power(const Filter& a, int l);

MeasurementSet synthesize(const Filter& a, const State& x, int m, int n);

/// Folded spectrum of y_l at xi:
/// (1/m) sum_{i<m} ahat((xi+i)/m)^l xhat((xi+i)/m).
cplx poisson_spectrum(const Filter& a, const State& x, int m, int l, double xi);

struct NoisyValues {
    std::vector<cplx> values;
    std::vector<cplx> perturbations;  // audit record, one per value
};

/// Perturbs each value by u_re + i u_im with independent U(-eps, eps)
/// components, drawn in value order (real part first).
NoisyValues add_spectral_noise(const std::vector<cplx>& values, double epsilon, Rng& rng);

}  // namespace dynsamp
