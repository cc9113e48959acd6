// SPDX-License-Identifier: Apache-2.0
#include "coqam/dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coqam {

namespace {
bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }
}

Dft::Dft(int n) : n_(n), pow2_(is_pow2(n)) {
    if (n <= 0) throw std::invalid_argument("Dft: size must be positive");
    twiddle_.resize(n_);
    for (int k = 0; k < n_; ++k)
        twiddle_[k] = std::polar(1.0, -2.0 * std::numbers::pi * k / n_);
    if (pow2_) {
        bitrev_.resize(n_);
        int bits = 0;
        while ((1 << bits) < n_) ++bits;
        for (int i = 0; i < n_; ++i) {
            int r = 0;
            for (int b = 0; b < bits; ++b)
                if (i & (1 << b)) r |= 1 << (bits - 1 - b);
            bitrev_[i] = r;
        }
    }
}

std::vector<cplx> Dft::forward(const std::vector<cplx>& in) const {
    if (static_cast<int>(in.size()) != n_)
        throw std::invalid_argument("Dft::forward: length mismatch");
    std::vector<cplx> out(n_);
    forward(in.data(), out.data());
    return out;
}

std::vector<cplx> Dft::backward(const std::vector<cplx>& in) const {
    if (static_cast<int>(in.size()) != n_)
        throw std::invalid_argument("Dft::backward: length mismatch");
    std::vector<cplx> out(n_);
    backward(in.data(), out.data());
    return out;
}

void Dft::transform(const cplx* in, cplx* out, int sign) const {
    if (pow2_) {
        for (int i = 0; i < n_; ++i) out[bitrev_[i]] = in[i];
        fft_pow2(out, sign);
        return;
    }
    for (int k = 0; k < n_; ++k) {
        cplx acc = 0.0;
        for (int n = 0; n < n_; ++n) {
            // index of e^{-j2*pi*nk/N} with sign flip for backward
            long idx = (static_cast<long>(n) * k) % n_;
            cplx w = twiddle_[idx];
            acc += in[n] * (sign < 0 ? w : std::conj(w));
        }
        out[k] = acc;
    }
}

void Dft::fft_pow2(cplx* data, int sign) const {
    for (int len = 2; len <= n_; len <<= 1) {
        int step = n_ / len;
        for (int start = 0; start < n_; start += len) {
            for (int i = 0; i < len / 2; ++i) {
                cplx w = twiddle_[static_cast<size_t>(i) * step];
                if (sign > 0) w = std::conj(w);
                cplx a = data[start + i];
                cplx b = data[start + i + len / 2] * w;
                data[start + i] = a + b;
                data[start + i + len / 2] = a - b;
            }
        }
    }
}

} // namespace coqam
