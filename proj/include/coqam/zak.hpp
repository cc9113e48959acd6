// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "coqam/frame.hpp"
#include "coqam/pulse.hpp"

namespace coqam {

/// Discrete Zak transform coefficients of a length-N signal:
/// coeffs[u,v] = sum_{m=0}^{M-1} x[u + mK] e^{-j 2 pi v m / M},
/// u = 0..K-1, v = 0..M-1, row-major in (u, v).
struct ZakMatrix {
    int K = 0, M = 0;
    std::vector<cplx> c;

    ZakMatrix() = default;
    ZakMatrix(int K_, int M_) : K(K_), M(M_), c(static_cast<size_t>(K_) * M_) {}
    cplx& at(int u, int v) { return c[static_cast<size_t>(u) * M + v]; }
    const cplx& at(int u, int v) const { return c[static_cast<size_t>(u) * M + v]; }
};

/// Forward discrete Zak transform of a length-N complex signal.
ZakMatrix dzt(const std::vector<cplx>& x, const FrameParams& p);
ZakMatrix dzt(const std::vector<double>& x, const FrameParams& p);

/// Inverse transform: x[u + mK] = (1/M) sum_v coeffs[u,v] e^{+j 2 pi v m / M}.
std::vector<cplx> idzt(const ZakMatrix& z);

/// Orthogonalizes a real prototype filter for the staggered (offset-QAM)
/// lattice: returns the real, unit-energy pulse whose matched-filter basis
/// over K subcarriers and 2M half-slot shifts is orthonormal in the real
/// field. Computed in closed form in the Zak domain (see zak.cpp).
///
/// Throws std::invalid_argument on a non-real setup or length mismatch and
/// std::runtime_error when the pulse has Zak-domain zeros that make the
/// frame operator numerically singular, or when the result fails to be real.
Pulse orthogonalize_oqam(const Pulse& p, const FrameParams& params);

} // namespace coqam
