#pragma once

#include <complex>
#include <vector>

// Thin wrapper over FFTW with centre-origin index conventions.
//
// All grids in this project are "centred": sample i corresponds to coordinate
// (i - N/2) * step. centered_dft evaluates
//
//   out[j] = sum_i in[i] * exp(sign * 2*pi*I * (i - N/2)(j - N/2) / N)
//
// which is fftshift(fft(ifftshift(in))) in the usual notation. Plans are
// cached per (size, sign) and guarded by a mutex; execution is thread safe.
namespace fessi::fft {

using cvec = std::vector<std::complex<double>>;

// sign = -1: kernel exp(-2 pi I ...) (FFTW_FORWARD); sign = +1: the conjugate.
// No 1/N normalisation is applied in either direction.
cvec centered_dft(const cvec& in, int sign);

// In-place variant.
void centered_dft_inplace(cvec& data, int sign);

}  // namespace fessi::fft
