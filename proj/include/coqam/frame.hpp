// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace coqam {

using cplx = std::complex<double>;

/// Lattice geometry of one multicarrier frame: K subcarriers, M time slots,
/// frame body of N = M*K samples. alpha = K/2 - 1 is the phase-offset
/// parameter of the subcarrier modulation and D = N - 1 the delay parameter
/// of the phase-form synthesizer.
struct FrameParams {
    int K = 0;        // subcarriers (even, >= 4)
    int M = 0;        // time slots (>= 2)
    int N = 0;        // samples per frame body, M*K
    int alpha = 0;    // K/2 - 1
    int D = 0;        // N - 1
    int cp_len = 0;   // cyclic prefix length, 0 <= cp_len < N
};

/// Validates and derives frame geometry. Throws std::invalid_argument on an
/// inadmissible lattice (odd K, K < 4, M < 2, cp_len out of range).
FrameParams make_frame_params(int K, int M, int cp_len = 0);

/// Complex QAM symbols, K x M, row-major (subcarrier, slot).
struct QamGrid {
    int K = 0, M = 0;
    std::vector<cplx> v;

    QamGrid() = default;
    QamGrid(int K_, int M_) : K(K_), M(M_), v(static_cast<size_t>(K_) * M_) {}
    cplx& at(int k, int m) { return v[static_cast<size_t>(k) * M + m]; }
    const cplx& at(int k, int m) const { return v[static_cast<size_t>(k) * M + m]; }
};

/// Real staggered symbols, K x 2M, row-major (subcarrier, slot).
struct RealGrid {
    int K = 0, M2 = 0;   // M2 = 2*M
    std::vector<double> v;

    RealGrid() = default;
    RealGrid(int K_, int M2_) : K(K_), M2(M2_), v(static_cast<size_t>(K_) * M2_) {}
    double& at(int k, int m) { return v[static_cast<size_t>(k) * M2 + m]; }
    const double& at(int k, int m) const { return v[static_cast<size_t>(k) * M2 + m]; }
};

/// Phase factor phi_{k,m} = e^{j*pi*k*(M-1/2)} * M(m), where M(m) = 1 for
/// even m and j for odd m. Unit magnitude for all arguments.
cplx phase_term(int k, int m, int M);

/// Splits complex symbols into the K x 2M real staggered grid: real parts on
/// even slots, imaginary parts on odd slots. The odd-slot index map is
/// m2 -> ((m2+1)/2) mod M, i.e. the imaginary part of complex slot 0 wraps
/// to real-slot 2M-1. With this convention the phase-form and staggered-form
/// synthesizers agree sample-for-sample on the same grid.
RealGrid stagger(const QamGrid& grid, const FrameParams& p);

/// Exact inverse of stagger().
QamGrid destagger(const RealGrid& rg, const FrameParams& p);

/// Unit-average-energy QPSK constellation point from two bits.
cplx qpsk_point(int bit_i, int bit_q);

/// Hard decision to the nearest QPSK point.
cplx qpsk_decide(cplx x);

// CSV serialization for test fixtures: one row per subcarrier, complex
// values as "re+imj".
std::string to_csv(const QamGrid& g);
std::string to_csv(const RealGrid& g);
QamGrid qam_grid_from_csv(std::istream& in);
RealGrid real_grid_from_csv(std::istream& in);

} // namespace coqam
