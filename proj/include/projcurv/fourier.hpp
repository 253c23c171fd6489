#pragma once

#include <complex>
#include <span>
#include <vector>

#include "projcurv/vec.hpp"

namespace projcurv {

/// Values of a 2pi-periodic function at phi_k = 2*pi*k/M. M must be even and
/// >= 8; spectral claims hold only while M >= 2*(highest harmonic) + 2.
struct CircularSamples {
    std::vector<double> values;

    int size() const { return static_cast<int>(values.size()); }
    static void validate_count(int m);
};

/// Real trigonometric series f(phi) = a0 + sum_k a_k cos(k phi) + b_k sin(k phi).
struct FourierSeries {
    std::vector<double> a;  // a[0..K]
    std::vector<double> b;  // b[0] unused

    static FourierSeries fit(std::span<const double> samples);
    double eval(double phi) const;
    double eval_derivative2(double phi) const;
    /// Coefficient-wise map a_k,b_k -> (1-k^2) a_k, (1-k^2) b_k  (h -> h + h'').
    FourierSeries plus_second_derivative() const;
};

/// In-place complex FFT; n must be a power of two. inverse applies 1/n scaling.
void fft_pow2(std::span<std::complex<double>> data, bool inverse);

/// Discrete Fourier transform for arbitrary n (O(n^2) fallback).
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> data, bool inverse);

/// samples of h at uniform nodes -> samples of h + h'' at the same nodes.
std::vector<double> apply_circle_operator(std::span<const double> samples);

/// samples of u at phi_k -> P(phi_k) = integral of u over [0, phi_k], computed
/// spectrally (exact for band-limited u).
std::vector<double> prefix_integral(std::span<const double> samples);

/// Periodic trapezoid rule over [0, 2pi): 2pi * mean(samples).
double periodic_trapezoid(std::span<const double> samples);

}  // namespace projcurv
