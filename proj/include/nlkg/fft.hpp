// Thin FFTW wrapper: cached deterministic plans, copy-in/copy-out buffers.
#pragma once

#include <complex>
#include <vector>

namespace nlkg {

using cdouble = std::complex<double>;

/// In-place complex DFT of length n (n a power of two).
/// sign = -1 forward (e^{-i 2pi jk/n}), +1 backward (unnormalized).
void fft(std::vector<cdouble>& data, int sign);

/// Forward DFT of real samples: F_k = sum_m f_m e^{-2*pi*i*k*m/n}.
std::vector<cdouble> fft_forward_real(const std::vector<double>& f);

/// Inverse of fft_forward_real including the 1/n factor; returns the real part.
std::vector<double> fft_inverse_to_real(const std::vector<cdouble>& F);

bool is_power_of_two(std::size_t n);

}  // namespace nlkg
