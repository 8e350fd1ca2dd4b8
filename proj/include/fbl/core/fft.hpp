#pragma once

#include <complex>
#include <vector>

namespace fbl {

using cplx = std::complex<double>;

// Thin wrappers over FFTW with estimate-mode plans, so repeated runs make the
// same algorithmic choices. Plans are cached per shape; execution is
// thread-safe.
namespace fft {

// unnormalized forward (sign -1) or backward (sign +1) transform, in place
void c2c_1d(std::vector<cplx>& data, int sign);
void c2c_1d(cplx* data, int n, int sign);

void c2c_2d(std::vector<cplx>& data, int n0, int n1, int sign);

// real 2-D transforms; spectrum has n0 * (n1/2 + 1) entries
void r2c_2d(const double* in, cplx* out, int n0, int n1);
void c2r_2d(const cplx* in, double* out, int n0, int n1);  // destroys nothing: copies input

// DCT-I (FFTW REDFT00) of length n, unnormalized
void dct1(double* data, int n);

}  // namespace fft

}  // namespace fbl
