#ifndef FRACBURG_SPECTRAL_HPP
#define FRACBURG_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "fracburg/grid.hpp"

namespace fracburg::spectral {

using cplx = std::complex<double>;
using Spectrum = std::vector<cplx>;

// Unnormalized DFT (FFTW sign conventions: forward e^{-i}, backward e^{+i}).
// Plans are cached per (m, N) and executions are serialized internally, so
// all entry points are safe to call from multiple threads.
Spectrum forward(const Field& f);
Spectrum forward(const GridSpec& g, const Spectrum& modes);  // complex input
Field inverse_real(const GridSpec& g, const Spectrum& modes); // backward / N^m, real part

/// Visit every mode: fn(flat_index, k1, k2, xi1, xi2). For m = 1 the second
/// axis reports k2 = 0, xi2 = 0.
template <class Fn>
void for_each_mode(const GridSpec& g, Fn&& fn) {
    const int n = g.n;
    if (g.m == 1) {
        for (int i = 0; i < n; ++i)
            fn(std::size_t(i), g.freq_index(i), 0, g.freq(i), 0.0);
    } else {
        std::size_t idx = 0;
        for (int i1 = 0; i1 < n; ++i1) {
            const int k1 = g.freq_index(i1);
            const double xi1 = g.freq(i1);
            for (int i2 = 0; i2 < n; ++i2, ++idx)
                fn(idx, k1, g.freq_index(i2), xi1, g.freq(i2));
        }
    }
}

/// f -> Re IDFT[ mult(xi) * DFT[f] ]. Pure Fourier-multiplier application;
/// the origin-shift phases cancel, so no parity factor is needed.
template <class Mult>
Field apply_multiplier(const Field& f, Mult&& mult) {
    Spectrum s = forward(f);
    for_each_mode(f.grid, [&](std::size_t i, int k1, int k2, double x1, double x2) {
        s[i] *= mult(k1, k2, x1, x2);
    });
    return inverse_real(f.grid, s);
}

/// Build the field whose continuous Fourier transform is sampled by psi on
/// the dual lattice: values(x_j) = (2L)^{-m} sum_k psi(xi_k) e^{i x_j xi_k}.
/// The (-1)^{k1+k2} parity factor accounts for the origin sitting at index
/// N/2 rather than 0.
template <class Psi>
Field synthesize(const GridSpec& g, Psi&& psi) {
    Spectrum s(g.size());
    for_each_mode(g, [&](std::size_t i, int k1, int k2, double x1, double x2) {
        const cplx v = psi(k1, k2, x1, x2);
        s[i] = ((k1 + k2) & 1) ? -v : v;
    });
    Field out = inverse_real(g, s);
    const double scale = std::pow(2.0 * g.box, -g.m);
    for (double& v : out.values) v *= scale * g.size();
    return out;
}

/// Periodic grid convolution: (a * b)(x_j) = sum_i a(x_i) b(x_j - x_i) h^m.
Field convolve(const Field& a, const Field& b);

} // namespace fracburg::spectral

#endif
