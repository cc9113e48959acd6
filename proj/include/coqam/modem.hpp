// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coqam/frame.hpp"
#include "coqam/pulse.hpp"

namespace coqam {

/// Time-domain samples of one frame. `start` is the index of samples[0]
/// (nonzero only for the linear OQAM-OFDM synthesizer, whose pulse tails
/// extend before n=0). `cp_len` is the number of prefix samples currently
/// attached.
struct Waveform {
    std::vector<cplx> samples;
    int start = 0;
    int cp_len = 0;

    int length() const { return static_cast<int>(samples.size()); }
};

/// Linear (non-circular) staggered synthesis of one frame of M symbols:
/// x[n] = sum_k [ sum_m dR p[n-mK] + sum_m j dI p[n+K/2-mK] ] e^{j2pi k (n-alpha/2)/K}.
/// Output covers the full support [-K/2, 2N-K) implied by the finite shifts.
Waveform synth_oqam_ofdm(const RealGrid& rg, const Pulse& p, const FrameParams& params);

/// Circular synthesis in the phase form: half-slot shifts m = 0..2M-1 with
/// e^{j2pi k (n-D/2)/K} and the phase factor phi_{k,m}. phase_error is a
/// verification hook: it multiplies phi_{k,m} by e^{j*phase_error*m} so a
/// broken phase convention is detectable; leave 0 for normal use.
Waveform synth_wcp_phase(const RealGrid& rg, const Pulse& p, const FrameParams& params,
                         double phase_error = 0.0);

/// Circular synthesis in the staggered form (the production synthesizer):
/// full-slot shifts of real parts plus half-advanced shifts of imaginary
/// parts, modulated by g_k[n] = e^{j2pi k (n-alpha/2)/K}. Equals
/// synth_wcp_phase sample-for-sample on the same grid.
Waveform synth_wcp_staggered(const RealGrid& rg, const Pulse& p, const FrameParams& params);

/// Prepends the last cp_len samples of the frame; remove_cp inverts it.
Waveform add_cp(const Waveform& w, const FrameParams& params);
Waveform remove_cp(const Waveform& w, const FrameParams& params);

/// Matched-filter receiver for the circular staggered frame (CP already
/// removed): correlates against every basis function and takes the real
/// part. For a pulse orthogonal on this lattice the noiseless loopback is
/// exact.
RealGrid mf_receive_wcp(const Waveform& w, const Pulse& p, const FrameParams& params);

/// Plain multicarrier baseline: M blocks of unitary K-point synthesis
/// (rectangular pulse), single frame-level CP handled by add_cp/remove_cp.
Waveform ofdm_baseline_tx(const QamGrid& grid, const FrameParams& params);
QamGrid ofdm_baseline_rx(const Waveform& w, const FrameParams& params);

/// Waveform CSV: columns n,re,im.
std::string to_csv(const Waveform& w);

} // namespace coqam
