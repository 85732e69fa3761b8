#include "dynsamp/signal.hpp"

#include <cmath>
#include <numbers>

#include "dynsamp/errors.hpp"

namespace dynsamp {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_finite(const std::vector<cplx>& v, const char* who) {
    for (const cplx& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw input_error(std::string(who) + ": non-finite coefficient");
}
}  // namespace

double canonical_xi(double xi) {
    double t = xi - std::floor(xi);
    if (t >= 1.0) t = 0.0;  // guards against floor rounding at the seam
    return t;
}

Sequence Sequence::delta() { return {0, {cplx(1.0, 0.0)}}; }

cplx Sequence::at(int n) const {
    if (empty() || n < lo() || n > hi()) return {};
    return values[static_cast<std::size_t>(n - offset)];
}

Sequence convolve(const Sequence& f, const Sequence& g) {
    if (f.empty() || g.empty()) return {};
    Sequence out;
    out.offset = f.offset + g.offset;
    out.values.assign(f.values.size() + g.values.size() - 1, cplx{});
    for (std::size_t i = 0; i < f.values.size(); ++i)
        for (std::size_t j = 0; j < g.values.size(); ++j)
            out.values[i + j] += f.values[i] * g.values[j];
    return out;
}

Sequence downsample(const Sequence& s, int m) {
    if (m < 1) throw input_error("downsample: factor must be >= 1");
    if (s.empty()) return {};
    // smallest k with m*k inside the window
    int k0 = s.lo() >= 0 ? (s.lo() + m - 1) / m : -((-s.lo()) / m);
    int k1 = s.hi() >= 0 ? s.hi() / m : -((-s.hi() + m - 1) / m);
    if (k0 > k1) return {};
    Sequence out;
    out.offset = k0;
    out.values.reserve(static_cast<std::size_t>(k1 - k0 + 1));
    for (int k = k0; k <= k1; ++k) out.values.push_back(s.at(m * k));
    return out;
}

cplx spectrum_at(const Sequence& s, double xi) {
    cplx acc{};
    for (std::size_t k = 0; k < s.values.size(); ++k) {
        const double phase = -kTwoPi * (s.offset + static_cast<int>(k)) * xi;
        acc += s.values[k] * cplx(std::cos(phase), std::sin(phase));
    }
    return acc;
}

Filter Filter::from_coeffs(std::vector<double> coeffs) {
    if (coeffs.empty() || coeffs.size() % 2 == 0)
        throw input_error("filter: coefficient list must have odd length 2r+1");
    for (double c : coeffs)
        if (!std::isfinite(c)) throw input_error("filter: non-finite coefficient");
    Filter f;
    f.radius = static_cast<int>(coeffs.size() / 2);
    f.coeffs = std::move(coeffs);
    for (int k = 1; k <= f.radius; ++k)
        if (std::abs(f.at(k) - f.at(-k)) > 1e-12)
            throw input_error("filter: coefficients must be symmetric, a(k) = a(-k)");
    double sum = 0.0;
    for (double c : f.coeffs) sum += c;
    f.normalized = std::abs(sum - 1.0) <= 1e-12;
    f.strictly_decreasing = true;
    constexpr int kGrid = 1024;
    double prev = f.hat(0.0);
    for (int i = 1; i < kGrid; ++i) {
        const double cur = f.hat(0.5 * i / (kGrid - 1));
        if (!(cur < prev)) {
            f.strictly_decreasing = false;
            break;
        }
        prev = cur;
    }
    return f;
}

double Filter::at(int k) const {
    if (k < -radius || k > radius) return 0.0;
    return coeffs[static_cast<std::size_t>(k + radius)];
}

double Filter::hat(double xi) const {
    double v = at(0);
    for (int k = 1; k <= radius; ++k) v += 2.0 * at(k) * std::cos(kTwoPi * k * xi);
    return v;
}

Sequence Filter::to_sequence() const {
    Sequence s;
    s.offset = -radius;
    s.values.assign(coeffs.begin(), coeffs.end());
    return s;
}

State State::from_coeffs(std::vector<cplx> coeffs) {
    if (coeffs.empty() || coeffs.size() % 2 == 0)
        throw input_error("state: coefficient list must have odd length 2r+1");
    require_finite(coeffs, "state");
    State x;
    x.radius = static_cast<int>(coeffs.size() / 2);
    x.coeffs = std::move(coeffs);
    return x;
}

State State::delta() { return from_coeffs({cplx(1.0, 0.0)}); }

cplx State::at(int k) const {
    if (k < -radius || k > radius) return {};
    return coeffs[static_cast<std::size_t>(k + radius)];
}

cplx State::hat(double xi) const {
    cplx v{};
    for (int k = -radius; k <= radius; ++k) {
        const double phase = -kTwoPi * k * xi;
        v += at(k) * cplx(std::cos(phase), std::sin(phase));
    }
    return v;
}

Sequence State::to_sequence() const {
    Sequence s;
    s.offset = -radius;
    s.values = coeffs;
    return s;
}

Sequence filter_power(const Filter& a, int l) {
    if (l < 0) throw input_error("filter_power: exponent must be nonnegative");
    Sequence acc = Sequence::delta();
    const Sequence base = a.to_sequence();
    for (int i = 0; i < l; ++i) acc = convolve(acc, base);
    return acc;
}

MeasurementSet synthesize(const Filter& a, const State& x, int m, int n) {
    if (m <= 1 || m % 2 == 0)
        throw input_error("synthesize: subsampling factor m must be odd and > 1");
    if (n < 2 * m) throw input_error("synthesize: need n >= 2m time levels");
    MeasurementSet ms;
    ms.m = m;
    ms.n = n;
    ms.sequences.reserve(static_cast<std::size_t>(n));
    const Sequence kernel = a.to_sequence();
    Sequence evolved = x.to_sequence();
    for (int l = 0; l < n; ++l) {
        ms.sequences.push_back(downsample(evolved, m));
        if (l + 1 < n) evolved = convolve(kernel, evolved);
    }
    return ms;
}

cplx poisson_spectrum(const Filter& a, const State& x, int m, int l, double xi) {
    if (m < 1) throw input_error("poisson_spectrum: m must be >= 1");
    if (l < 0) throw input_error("poisson_spectrum: l must be nonnegative");
    cplx acc{};
    for (int i = 0; i < m; ++i) {
        const double u = (xi + i) / m;
        acc += std::pow(a.hat(u), l) * x.hat(u);
    }
    return acc / static_cast<double>(m);
}

NoisyValues add_spectral_noise(const std::vector<cplx>& values, double epsilon, Rng& rng) {
    if (epsilon < 0.0) throw input_error("add_spectral_noise: epsilon must be >= 0");
    NoisyValues out;
    out.values.reserve(values.size());
    out.perturbations.reserve(values.size());
    for (const cplx& v : values) {
        const double re = rng.uniform_pm(epsilon);
        const double im = rng.uniform_pm(epsilon);
        out.perturbations.emplace_back(re, im);
        out.values.push_back(v + cplx(re, im));
    }
    return out;
}

}  // namespace dynsamp
