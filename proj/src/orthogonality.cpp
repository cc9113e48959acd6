// SPDX-License-Identifier: Apache-2.0
#include "coqam/orthogonality.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace coqam {

namespace {

void require_real_pulse(const Pulse& p, const FrameParams& params, const char* who) {
    if (p.length() != params.N)
        throw std::invalid_argument(std::string(who) + ": pulse length must be M*K");
    for (double t : p.taps)
        if (!std::isfinite(t))
            throw std::invalid_argument(std::string(who) + ": non-finite tap");
}

// pulse value with zero padding outside [0, N)
inline double pad(const Pulse& p, int idx, int N) {
    return (idx >= 0 && idx < N) ? p.taps[idx] : 0.0;
}

inline int wrap(int idx, int N) { return ((idx % N) + N) % N; }

} // namespace

std::string OrthReport::to_csv() const {
    std::ostringstream os;
    os << "condition,m,v,residual\n";
    char buf[32];
    for (const auto& e : entries) {
        std::snprintf(buf, sizeof buf, "%.17g", e.residual);
        os << e.condition << ',' << e.m << ',' << e.v << ',' << buf << '\n';
    }
    std::snprintf(buf, sizeof buf, "%.17g", max_residual);
    os << "# max_residual=" << buf;
    std::snprintf(buf, sizeof buf, "%.17g", tol);
    os << " tol=" << buf << " pass=" << (pass ? 1 : 0) << '\n';
    return os.str();
}

OrthReport check_oqam_ofdm(const Pulse& p, const FrameParams& params, double tol) {
    require_real_pulse(p, params, "check_oqam_ofdm");
    const int N = params.N, K = params.K, M = params.M;
    const int H = K / 2;
    OrthReport rep;
    rep.tol = tol;
    // trig tables over the convolution index range tau in [-N-H, N+H)
    const int lo = -N - H, hi = N + H;
    std::vector<double> ct(hi - lo), st(hi - lo);
    for (int v = 0; v < K; ++v) {
        for (int tau = lo; tau < hi; ++tau) {
            const double th = 2.0 * std::numbers::pi * v * (tau - params.alpha / 2.0) / K;
            ct[tau - lo] = std::cos(th);
            st[tau - lo] = std::sin(th);
        }
        for (int m = -M; m <= M; ++m) {
            const double tgt = (m == 0 && v == 0) ? 1.0 : 0.0;
            double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;
            // condition 1: sum_tau p[tau - mK] cos(th) p[tau]
            // condition 2: sum_tau p[tau + K/2 - mK] cos(th) p[tau + K/2]
            // condition 3: -sum_tau p[tau + K/2 - mK] sin(th) p[tau]
            // condition 4: sum_tau p[tau - mK] sin(th) p[tau + K/2]
            for (int tau = lo; tau < hi; ++tau) {
                const double a = pad(p, tau - m * K, N);
                const double b = pad(p, tau + H - m * K, N);
                const double f0 = pad(p, tau, N);
                const double fh = pad(p, tau + H, N);
                const double cs = ct[tau - lo], sn = st[tau - lo];
                c1 += a * cs * f0;
                c2 += b * cs * fh;
                c3 -= b * sn * f0;
                c4 += a * sn * fh;
            }
            rep.entries.push_back({1, m, v, std::abs(c1 - tgt)});
            rep.entries.push_back({2, m, v, std::abs(c2 - tgt)});
            rep.entries.push_back({3, m, v, std::abs(c3)});
            rep.entries.push_back({4, m, v, std::abs(c4)});
        }
    }
    for (const auto& e : rep.entries) rep.max_residual = std::max(rep.max_residual, e.residual);
    rep.pass = rep.max_residual <= tol;
    return rep;
}

OrthReport check_wcp_coqam(const Pulse& p, const FrameParams& params, double tol) {
    require_real_pulse(p, params, "check_wcp_coqam");
    const int N = params.N, K = params.K, M = params.M;
    const int H = K / 2;
    OrthReport rep;
    rep.tol = tol;
    std::vector<double> ct(N), st(N);
    for (int v = 0; v < K; ++v) {
        for (int n = 0; n < N; ++n) {
            const double th = 2.0 * std::numbers::pi * v * (n - params.alpha / 2.0) / K;
            ct[n] = std::cos(th);
            st[n] = std::sin(th);
        }
        for (int m = 0; m < M; ++m) {
            const double tgt = (m % M == 0 && v == 0) ? 1.0 : 0.0;
            double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;
            for (int n = 0; n < N; ++n) {
                const double a = p.taps[wrap(n - m * K, N)];
                const double b = p.taps[wrap(n + H - m * K, N)];
                const double f0 = p.taps[n];
                const double fh = p.taps[wrap(n + H, N)];
                c1 += a * ct[n] * f0;
                c2 += b * ct[n] * fh;
                c3 -= b * st[n] * f0;
                c4 -= a * st[n] * fh;
            }
            rep.entries.push_back({1, m, v, std::abs(c1 - tgt)});
            rep.entries.push_back({2, m, v, std::abs(c2 - tgt)});
            rep.entries.push_back({3, m, v, std::abs(c3)});
            rep.entries.push_back({4, m, v, std::abs(c4)});
        }
    }
    for (const auto& e : rep.entries) rep.max_residual = std::max(rep.max_residual, e.residual);
    rep.pass = rep.max_residual <= tol;
    return rep;
}

cplx s_beta_gamma(const Pulse& p, int m, int v, int beta, int gamma,
                  const FrameParams& params) {
    require_real_pulse(p, params, "s_beta_gamma");
    const int N = params.N, K = params.K;
    if (beta != 0 && beta != K / 2)
        throw std::invalid_argument("s_beta_gamma: beta must be 0 or K/2");
    if (gamma != 0 && gamma != K / 2)
        throw std::invalid_argument("s_beta_gamma: gamma must be 0 or K/2");
    cplx acc = 0.0;
    for (int n = 0; n < N; ++n) {
        const double th = 2.0 * std::numbers::pi * v * (n - params.alpha / 2.0) / K;
        acc += p.taps[wrap(n - m * K + beta, N)] * std::polar(1.0, th) *
               p.taps[wrap(n + gamma, N)];
    }
    return acc;
}

double verify_circular_decomposition(const Pulse& p, const FrameParams& params) {
    require_real_pulse(p, params, "verify_circular_decomposition");
    const int N = params.N, K = params.K, M = params.M;
    const int H = K / 2;
    struct Case { int beta, gamma, m_lo, m_hi; };
    const Case cases[] = {
        {0, 0, 1, M}, {H, H, 1, M}, {H, 0, 1, M}, {0, H, 0, M - 1}};
    double worst = 0.0;
    const int lo = -N - H, hi = N + H;
    std::vector<cplx> gv(hi - lo);
    for (int v = 0; v < K; ++v) {
        for (int tau = lo; tau < hi; ++tau)
            gv[tau - lo] = std::polar(
                1.0, 2.0 * std::numbers::pi * v * (tau - params.alpha / 2.0) / K);
        for (const auto& c : cases) {
            for (int m = c.m_lo; m <= c.m_hi; ++m) {
                const cplx s = s_beta_gamma(p, m, v, c.beta, c.gamma, params);
                cplx lin = 0.0;
                for (int tau = lo; tau < hi; ++tau) {
                    const double w = pad(p, tau + c.gamma, N);
                    if (w == 0.0) continue;
                    lin += (pad(p, tau + (M - m) * K + c.beta, N) +
                            pad(p, tau - m * K + c.beta, N)) *
                           gv[tau - lo] * w;
                }
                worst = std::max(worst, std::abs(s - lin));
            }
        }
    }
    return worst;
}

double GramMatrix::max_abs_off_identity() const {
    double worst = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const double tgt = (a == b) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(at(a, b) - tgt));
        }
    return worst;
}

GramMatrix gram_oracle(const Pulse& p, const FrameParams& params) {
    require_real_pulse(p, params, "gram_oracle");
    const int N = params.N, K = params.K, M2 = 2 * params.M;
    const int nb = K * M2;
    // materialize all basis functions; fine for the small lattices this
    // oracle is meant for
    std::vector<cplx> basis(static_cast<size_t>(nb) * N);
    for (int k = 0; k < K; ++k) {
        for (int m = 0; m < M2; ++m) {
            cplx* b = &basis[(static_cast<size_t>(k) * M2 + m) * N];
            const cplx jfac = (m % 2 == 0) ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
            for (int n = 0; n < N; ++n) {
                const double th =
                    2.0 * std::numbers::pi * k * (n - params.alpha / 2.0) / K;
                b[n] = jfac * std::polar(1.0, th) * p.taps[wrap(n - m * (K / 2), N)];
            }
        }
    }
    GramMatrix g;
    g.n = nb;
    g.g.resize(static_cast<size_t>(nb) * nb);
    for (int a = 0; a < nb; ++a) {
        const cplx* ba = &basis[static_cast<size_t>(a) * N];
        for (int b = a; b < nb; ++b) {
            const cplx* bb = &basis[static_cast<size_t>(b) * N];
            double acc = 0.0;
            for (int n = 0; n < N; ++n)
                acc += (ba[n] * std::conj(bb[n])).real();
            g.g[static_cast<size_t>(a) * nb + b] = acc;
            g.g[static_cast<size_t>(b) * nb + a] = acc;
        }
    }
    return g;
}

} // namespace coqam
