#include "projcurv/fourier.hpp"

#include <cmath>
#include <numeric>

#include "projcurv/errors.hpp"

namespace projcurv {

void CircularSamples::validate_count(int m) {
    if (m < 8 || m % 2 != 0)
        throw InvalidParameter("circle sample count must be even and >= 8, got " + std::to_string(m));
}

namespace {

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Forward complex transform X_j = sum_k x_k e^{-2pi i jk/n} (no scaling),
/// inverse with e^{+...} and 1/n.
void transform(std::vector<std::complex<double>>& x, bool inverse) {
    const size_t n = x.size();
    if (is_pow2(n)) {
        fft_pow2(x, inverse);
        return;
    }
    auto out = dft(x, inverse);
    x = std::move(out);
}

}  // namespace

void fft_pow2(std::span<std::complex<double>> a, bool inverse) {
    const size_t n = a.size();
    if (!is_pow2(n)) throw InvalidParameter("fft_pow2 requires a power-of-two length");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& c : a) c *= inv;
    }
}

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> data, bool inverse) {
    const size_t n = data.size();
    std::vector<std::complex<double>> out(n);
    const double sgn = inverse ? 1.0 : -1.0;
    for (size_t j = 0; j < n; ++j) {
        std::complex<double> acc(0.0, 0.0);
        for (size_t k = 0; k < n; ++k) {
            const double ang = sgn * kTwoPi * static_cast<double>(j * k % n) / static_cast<double>(n);
            acc += data[k] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[j] = inverse ? acc / static_cast<double>(n) : acc;
    }
    return out;
}

FourierSeries FourierSeries::fit(std::span<const double> samples) {
    const int m = static_cast<int>(samples.size());
    CircularSamples::validate_count(m);
    std::vector<std::complex<double>> x(samples.begin(), samples.end());
    transform(x, false);
    const int half = m / 2;
    FourierSeries s;
    s.a.assign(half + 1, 0.0);
    s.b.assign(half + 1, 0.0);
    s.a[0] = x[0].real() / m;
    for (int k = 1; k < half; ++k) {
        s.a[k] = 2.0 * x[k].real() / m;
        s.b[k] = -2.0 * x[k].imag() / m;
    }
    // Nyquist mode: cos only, counted once.
    s.a[half] = x[half].real() / m;
    return s;
}

double FourierSeries::eval(double phi) const {
    double acc = a[0];
    for (size_t k = 1; k < a.size(); ++k)
        acc += a[k] * std::cos(k * phi) + b[k] * std::sin(k * phi);
    return acc;
}

double FourierSeries::eval_derivative2(double phi) const {
    double acc = 0.0;
    for (size_t k = 1; k < a.size(); ++k) {
        const double k2 = -static_cast<double>(k) * static_cast<double>(k);
        acc += k2 * (a[k] * std::cos(k * phi) + b[k] * std::sin(k * phi));
    }
    return acc;
}

FourierSeries FourierSeries::plus_second_derivative() const {
    FourierSeries s = *this;
    for (size_t k = 0; k < s.a.size(); ++k) {
        const double f = 1.0 - static_cast<double>(k) * static_cast<double>(k);
        s.a[k] *= f;
        s.b[k] *= f;
    }
    return s;
}

std::vector<double> apply_circle_operator(std::span<const double> samples) {
    const int m = static_cast<int>(samples.size());
    CircularSamples::validate_count(m);
    std::vector<std::complex<double>> x(samples.begin(), samples.end());
    transform(x, false);
    const int half = m / 2;
    for (int k = 0; k <= half; ++k) {
        const double f = 1.0 - static_cast<double>(k) * static_cast<double>(k);
        x[k] *= f;
        if (k > 0 && k < half) x[m - k] *= f;
    }
    transform(x, true);
    std::vector<double> out(m);
    for (int i = 0; i < m; ++i) out[i] = x[i].real();
    return out;
}

std::vector<double> prefix_integral(std::span<const double> samples) {
    const int m = static_cast<int>(samples.size());
    CircularSamples::validate_count(m);
    const int half = m / 2;
    std::vector<std::complex<double>> x(samples.begin(), samples.end());
    transform(x, false);
    const double mean = x[0].real() / m;

    // Antiderivative of the oscillatory part: coefficients (a_k, b_k) map to
    // (-b_k/k, a_k/k); in spectral form c_k -> c_k / (i k). The constant is
    // fixed by P(0) = 0. Nyquist sin vanishes at the nodes, so drop it.
    std::vector<std::complex<double>> y(m, {0.0, 0.0});
    double p0 = 0.0;  // sum b_k / k
    for (int k = 1; k < half; ++k) {
        const std::complex<double> ck = x[k] / static_cast<double>(m);
        y[k] = ck / std::complex<double>(0.0, k);
        y[m - k] = std::conj(y[k]);
        p0 += -2.0 * ck.imag() / k;
    }
    for (auto& c : y) c *= static_cast<double>(m);
    transform(y, true);

    std::vector<double> out(m);
    for (int i = 0; i < m; ++i)
        out[i] = mean * (kTwoPi * i / m) + p0 + y[i].real();
    return out;
}

double periodic_trapezoid(std::span<const double> samples) {
    const double sum = std::accumulate(samples.begin(), samples.end(), 0.0);
    return sum * kTwoPi / static_cast<double>(samples.size());
}

}  // namespace projcurv
