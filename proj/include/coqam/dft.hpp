// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace coqam {

using cplx = std::complex<double>;

/// Fixed-size DFT with precomputed twiddles. Uses an iterative radix-2 FFT
/// when the size is a power of two and a direct O(n^2) evaluation otherwise
/// (transform sizes in this library are small: subcarrier counts and slot
/// counts, not sample counts).
///
/// Conventions: forward() applies e^{-j2*pi*nk/N}, backward() applies
/// e^{+j2*pi*nk/N} without the 1/N factor.
class Dft {
public:
    explicit Dft(int n);

    int size() const { return n_; }

    void forward(const cplx* in, cplx* out) const { transform(in, out, -1); }
    void backward(const cplx* in, cplx* out) const { transform(in, out, +1); }

    std::vector<cplx> forward(const std::vector<cplx>& in) const;
    std::vector<cplx> backward(const std::vector<cplx>& in) const;

private:
    void transform(const cplx* in, cplx* out, int sign) const;
    void fft_pow2(cplx* data, int sign) const;

    int n_;
    bool pow2_;
    std::vector<cplx> twiddle_;     // e^{-j2*pi*k/n}, k = 0..n-1
    std::vector<int> bitrev_;       // only for the pow2 path
};

} // namespace coqam
