// SPDX-License-Identifier: Apache-2.0
#include "coqam/modem.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "coqam/dft.hpp"

namespace coqam {

namespace {

inline int wrap(int idx, int N) { return ((idx % N) + N) % N; }

void require_grid(const RealGrid& rg, const FrameParams& p, const char* who) {
    if (rg.K != p.K || rg.M2 != 2 * p.M)
        throw std::invalid_argument(std::string(who) + ": grid dimensions do not match params");
}

void require_pulse(const Pulse& pl, const FrameParams& p, const char* who) {
    if (pl.length() != p.N)
        throw std::invalid_argument(std::string(who) + ": pulse length must be M*K");
}

} // namespace

Waveform synth_oqam_ofdm(const RealGrid& rg, const Pulse& p, const FrameParams& params) {
    require_grid(rg, params, "synth_oqam_ofdm");
    require_pulse(p, params, "synth_oqam_ofdm");
    const int N = params.N, K = params.K, M = params.M, H = K / 2;
    const int start = -H;
    const int len = 2 * N - H;          // covers [-K/2, 2N-K)
    Waveform w;
    w.start = start;
    w.samples.assign(len, cplx(0.0, 0.0));
    const QamGrid d = destagger(rg, params);
    // per-subcarrier modulation is K-periodic; build each subcarrier's
    // real-envelope sum then modulate
    std::vector<double> env_re(len), env_im(len);
    for (int k = 0; k < K; ++k) {
        std::fill(env_re.begin(), env_re.end(), 0.0);
        std::fill(env_im.begin(), env_im.end(), 0.0);
        for (int m = 0; m < M; ++m) {
            const double dr = d.at(k, m).real();
            const double di = d.at(k, m).imag();
            if (dr != 0.0)
                for (int n = 0; n < N; ++n) env_re[n + m * K - start] += dr * p.taps[n];
            if (di != 0.0)
                for (int n = 0; n < N; ++n) env_im[n + m * K - H - start] += di * p.taps[n];
        }
        for (int i = 0; i < len; ++i) {
            if (env_re[i] == 0.0 && env_im[i] == 0.0) continue;
            const int n = start + i;
            const double th = 2.0 * std::numbers::pi * k * (n - params.alpha / 2.0) / K;
            w.samples[i] += cplx(env_re[i], env_im[i]) * std::polar(1.0, th);
        }
    }
    return w;
}

Waveform synth_wcp_phase(const RealGrid& rg, const Pulse& p, const FrameParams& params,
                         double phase_error) {
    require_grid(rg, params, "synth_wcp_phase");
    require_pulse(p, params, "synth_wcp_phase");
    const int N = params.N, K = params.K, M2 = 2 * params.M, H = K / 2;
    Waveform w;
    w.samples.assign(N, cplx(0.0, 0.0));
    for (int k = 0; k < K; ++k) {
        for (int m = 0; m < M2; ++m) {
            cplx phi = phase_term(k, m, params.M);
            if (phase_error != 0.0) phi *= std::polar(1.0, phase_error * m);
            const double coef = rg.at(k, m);
            if (coef == 0.0) continue;
            for (int n = 0; n < N; ++n) {
                const double th =
                    2.0 * std::numbers::pi * k * (n - params.D / 2.0) / K;
                w.samples[n] += coef * p.taps[wrap(n - m * H, N)] *
                                std::polar(1.0, th) * phi;
            }
        }
    }
    return w;
}

Waveform synth_wcp_staggered(const RealGrid& rg, const Pulse& p, const FrameParams& params) {
    require_grid(rg, params, "synth_wcp_staggered");
    require_pulse(p, params, "synth_wcp_staggered");
    const int N = params.N, K = params.K, M2 = 2 * params.M, H = K / 2;
    // Per half-slot m, the subcarrier sum
    //   A_m[n] = sum_k dg(k,m) M(m) e^{j2pi k (n-alpha/2)/K}
    // is K-periodic in n: one unnormalized backward DFT per slot, then
    // accumulate the circularly shifted pulse envelopes.
    Waveform w;
    w.samples.assign(N, cplx(0.0, 0.0));
    Dft dft(K);
    std::vector<cplx> coef(K), am(K);
    for (int m = 0; m < M2; ++m) {
        const cplx jfac = (m % 2 == 0) ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
        for (int k = 0; k < K; ++k) {
            const double th = -2.0 * std::numbers::pi * k * params.alpha / (2.0 * K);
            coef[k] = rg.at(k, m) * jfac * std::polar(1.0, th);
        }
        dft.backward(coef.data(), am.data());
        const int sh = m * H;
        for (int n = 0; n < N; ++n)
            w.samples[n] += am[n % K] * p.taps[wrap(n - sh, N)];
    }
    return w;
}

Waveform add_cp(const Waveform& w, const FrameParams& params) {
    if (w.cp_len != 0)
        throw std::invalid_argument("add_cp: waveform already has a prefix");
    if (w.length() != params.N)
        throw std::invalid_argument("add_cp: waveform length must be N");
    Waveform out;
    out.cp_len = params.cp_len;
    out.samples.reserve(params.N + params.cp_len);
    out.samples.insert(out.samples.end(),
                       w.samples.end() - params.cp_len, w.samples.end());
    out.samples.insert(out.samples.end(), w.samples.begin(), w.samples.end());
    return out;
}

Waveform remove_cp(const Waveform& w, const FrameParams& params) {
    if (w.length() != params.N + params.cp_len)
        throw std::invalid_argument("remove_cp: waveform length must be N + cp_len");
    Waveform out;
    out.samples.assign(w.samples.begin() + params.cp_len, w.samples.end());
    return out;
}

RealGrid mf_receive_wcp(const Waveform& w, const Pulse& p, const FrameParams& params) {
    require_pulse(p, params, "mf_receive_wcp");
    if (w.length() != params.N)
        throw std::invalid_argument("mf_receive_wcp: waveform length must be N (remove CP first)");
    const int N = params.N, K = params.K, M2 = 2 * params.M, H = K / 2;
    // d(k,m) = Re{ conj(M(m)) e^{+j pi k alpha / K} B_m[k] },
    // B_m[k] = sum_n y[n] p[(n - mK/2)_N] e^{-j2pi k n/K}: fold the windowed
    // signal into K bins, then one forward DFT per slot.
    RealGrid out(K, M2);
    Dft dft(K);
    std::vector<cplx> fold(K), spec(K);
    for (int m = 0; m < M2; ++m) {
        std::fill(fold.begin(), fold.end(), cplx(0.0, 0.0));
        const int sh = m * H;
        for (int n = 0; n < N; ++n)
            fold[n % K] += w.samples[n] * p.taps[wrap(n - sh, N)];
        dft.forward(fold.data(), spec.data());
        const cplx jconj = (m % 2 == 0) ? cplx(1.0, 0.0) : cplx(0.0, -1.0);
        for (int k = 0; k < K; ++k) {
            const double th = 2.0 * std::numbers::pi * k * params.alpha / (2.0 * K);
            out.at(k, m) = (jconj * std::polar(1.0, th) * spec[k]).real();
        }
    }
    return out;
}

Waveform ofdm_baseline_tx(const QamGrid& grid, const FrameParams& params) {
    if (grid.K != params.K || grid.M != params.M)
        throw std::invalid_argument("ofdm_baseline_tx: grid dimensions do not match params");
    const int K = params.K, M = params.M;
    Waveform w;
    w.samples.resize(params.N);
    Dft dft(K);
    std::vector<cplx> in(K), out(K);
    const double scale = 1.0 / std::sqrt(static_cast<double>(K));
    for (int m = 0; m < M; ++m) {
        for (int k = 0; k < K; ++k) in[k] = grid.at(k, m);
        dft.backward(in.data(), out.data());
        for (int n = 0; n < K; ++n)
            w.samples[static_cast<size_t>(m) * K + n] = out[n] * scale;
    }
    return w;
}

QamGrid ofdm_baseline_rx(const Waveform& w, const FrameParams& params) {
    if (w.length() != params.N)
        throw std::invalid_argument("ofdm_baseline_rx: waveform length must be N (remove CP first)");
    const int K = params.K, M = params.M;
    QamGrid g(K, M);
    Dft dft(K);
    std::vector<cplx> in(K), out(K);
    const double scale = 1.0 / std::sqrt(static_cast<double>(K));
    for (int m = 0; m < M; ++m) {
        for (int n = 0; n < K; ++n) in[n] = w.samples[static_cast<size_t>(m) * K + n];
        dft.forward(in.data(), out.data());
        for (int k = 0; k < K; ++k) g.at(k, m) = out[k] * scale;
    }
    return g;
}

std::string to_csv(const Waveform& w) {
    std::ostringstream os;
    os << "n,re,im\n";
    char re[32], im[32];
    for (int i = 0; i < w.length(); ++i) {
        std::snprintf(re, sizeof re, "%.17g", w.samples[i].real());
        std::snprintf(im, sizeof im, "%.17g", w.samples[i].imag());
        os << (w.start + i) << ',' << re << ',' << im << '\n';
    }
    return os.str();
}

} // namespace coqam
