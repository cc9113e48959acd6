// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coqam/frame.hpp"
#include "coqam/pulse.hpp"

namespace coqam {

/// Per-condition orthogonality residuals. condition is 1..4 (the four
/// matched-filter conditions of each family), m the time-shift index
/// (signed for the linear family), v the subcarrier-shift index.
struct OrthReport {
    struct Entry {
        int condition;
        int m;
        int v;
        double residual;
    };
    std::vector<Entry> entries;
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = false;

    /// CSV with columns condition,m,v,residual and a trailing summary line.
    std::string to_csv() const;
};

/// Linear-convolution orthogonality of the infinite staggered lattice:
/// evaluates the four conditions at n=0 for all v in 0..K-1 and |m| <= M
/// (beyond which the shifted supports cannot overlap). Residuals are
/// absolute deviations from delta[m] delta[v] (conditions 1,2) or 0
/// (conditions 3,4).
OrthReport check_oqam_ofdm(const Pulse& p, const FrameParams& params, double tol = 1e-10);

/// Circular-shift orthogonality over one frame: the four conditions as
/// modulo-N sums, m in 0..M-1, v in 0..K-1, against delta[(m) mod M] delta[v].
OrthReport check_wcp_coqam(const Pulse& p, const FrameParams& params, double tol = 1e-10);

/// Circular cross-ambiguity sum
/// s = sum_n p[(n - mK + beta)_N] g_v[n] p[(n + gamma)_N],
/// g_v[n] = e^{j 2 pi v (n - alpha/2)/K}. beta and gamma must be 0 or K/2.
cplx s_beta_gamma(const Pulse& p, int m, int v, int beta, int gamma,
                  const FrameParams& params);

/// Checks, for every admissible (m, beta, gamma, v), that the circular sum
/// s_beta_gamma equals the sum of its two linear-convolution components
/// (an algebraic identity valid for any pulse). Returns the max absolute
/// difference.
double verify_circular_decomposition(const Pulse& p, const FrameParams& params);

/// Brute-force ground truth for small lattices: real Gram matrix
/// G[a,b] = Re<basis_a, basis_b> of all K*2M staggered basis functions
/// (circular shifts, modulation, alternating j), a = k*2M + m row-major.
/// Orthogonality holds iff G is the identity.
struct GramMatrix {
    int n = 0;
    std::vector<double> g;   // row-major n x n

    double at(int a, int b) const { return g[static_cast<size_t>(a) * n + b]; }
    double max_abs_off_identity() const;
};
GramMatrix gram_oracle(const Pulse& p, const FrameParams& params);

} // namespace coqam
