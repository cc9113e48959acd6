// SPDX-License-Identifier: Apache-2.0
#include "coqam/zak.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coqam/dft.hpp"

namespace coqam {

ZakMatrix dzt(const std::vector<cplx>& x, const FrameParams& p) {
    if (static_cast<int>(x.size()) != p.N)
        throw std::invalid_argument("dzt: signal length must be M*K");
    ZakMatrix z(p.K, p.M);
    Dft dft(p.M);
    std::vector<cplx> poly(p.M), spec(p.M);
    for (int u = 0; u < p.K; ++u) {
        for (int m = 0; m < p.M; ++m) poly[m] = x[u + static_cast<size_t>(m) * p.K];
        dft.forward(poly.data(), spec.data());
        for (int v = 0; v < p.M; ++v) z.at(u, v) = spec[v];
    }
    return z;
}

ZakMatrix dzt(const std::vector<double>& x, const FrameParams& p) {
    std::vector<cplx> xc(x.begin(), x.end());
    return dzt(xc, p);
}

std::vector<cplx> idzt(const ZakMatrix& z) {
    if (z.K <= 0 || z.M <= 0 || z.c.size() != static_cast<size_t>(z.K) * z.M)
        throw std::invalid_argument("idzt: malformed Zak matrix");
    std::vector<cplx> x(static_cast<size_t>(z.K) * z.M);
    Dft dft(z.M);
    std::vector<cplx> spec(z.M), poly(z.M);
    for (int u = 0; u < z.K; ++u) {
        for (int v = 0; v < z.M; ++v) spec[v] = z.at(u, v);
        dft.backward(spec.data(), poly.data());
        for (int m = 0; m < z.M; ++m)
            x[u + static_cast<size_t>(m) * z.K] = poly[m] / static_cast<double>(z.M);
    }
    return x;
}

namespace {

// Inverse square root of a symmetric positive-definite 2x2 matrix
// [[a, b], [b, d]]: with s = sqrt(det) and t = sqrt(a + d + 2s),
// H^{1/2} = (H + s I)/t, hence H^{-1/2} = [[d+s, -b], [-b, a+s]] / (s t).
std::array<double, 3> invsqrt2x2(double a, double b, double d) {
    const double det = a * d - b * b;
    const double s = std::sqrt(std::max(det, 0.0));
    const double t = std::sqrt(a + d + 2.0 * s);
    const double den = s * t;
    return {(d + s) / den, -b / den, (a + s) / den};
}

} // namespace

// The staggered-lattice orthogonalization, computed exactly in the Zak
// domain over half-slot time steps. Let Z[u,w] be the K/2-step Zak
// transform of the real pulse,
//     Z[u,w] = sum_{r=0}^{2M-1} p[u + r K/2] e^{-j 2 pi w r / (2M)},
// u = 0..K/2-1, w = 0..2M-1. The frame operator of the matched-filter
// basis (K subcarrier modulations centered on alpha/2, 2M half-slot
// circular shifts, alternating j on odd slots, real inner product) acts on
// Zak coefficients in closed form: cell (u,w) couples only with its mirror
// cell (u~,w~), u~ = K/2-1-u, w~ = (M-w) mod 2M, through
//     a[u,w] = |Z[u,w]|^2 + |Z[u,w+M]|^2                      (diagonal)
//     c[u,w] = Z[u,w] Z[u~,w~] + Z[u,w+M] Z[u~,w~+M]          (conjugate coupling)
// so orthogonalizing reduces to an inverse square root of the 2x2 system
// per mirror pair. A pulse whose basis is already orthonormal has c = 0 and
// a constant, which makes the map idempotent.
Pulse orthogonalize_oqam(const Pulse& p, const FrameParams& params) {
    if (p.length() != params.N)
        throw std::invalid_argument("orthogonalize_oqam: pulse length must be M*K");
    const int U = params.K / 2;     // time cells
    const int W = 2 * params.M;     // modulation cells
    const int Mw = params.M;

    // half-step Zak transform
    std::vector<cplx> Z(static_cast<size_t>(U) * W);
    auto zat = [&](int u, int w) -> cplx& {
        return Z[static_cast<size_t>(u) * W + w];
    };
    {
        Dft dft(W);
        std::vector<cplx> poly(W), spec(W);
        for (int u = 0; u < U; ++u) {
            for (int r = 0; r < W; ++r)
                poly[r] = p.taps[u + static_cast<size_t>(r) * U];
            dft.forward(poly.data(), spec.data());
            for (int w = 0; w < W; ++w) zat(u, w) = spec[w];
        }
    }

    std::vector<cplx> Q(static_cast<size_t>(U) * W);
    auto qat = [&](int u, int w) -> cplx& {
        return Q[static_cast<size_t>(u) * W + w];
    };
    std::vector<char> done(static_cast<size_t>(U) * W, 0);

    double lam_min = std::numeric_limits<double>::infinity();
    double lam_max = 0.0;
    auto note_eigs = [&](double mean, double dev) {
        lam_min = std::min(lam_min, mean - dev);
        lam_max = std::max(lam_max, mean + dev);
    };

    for (int u = 0; u < U; ++u) {
        const int ub = (U - 1 - u) % U;
        for (int w = 0; w < W; ++w) {
            if (done[static_cast<size_t>(u) * W + w]) continue;
            const int wb = ((Mw - w) % W + W) % W;
            const cplx z1 = zat(u, w);
            const cplx z2 = zat(ub, wb);
            const double a1 = std::norm(zat(u, w)) + std::norm(zat(u, (w + Mw) % W));
            const double a2 = std::norm(zat(ub, wb)) + std::norm(zat(ub, (wb + Mw) % W));
            const cplx c = zat(u, w) * zat(ub, wb) +
                           zat(u, (w + Mw) % W) * zat(ub, (wb + Mw) % W);
            if (u == ub && w == wb) {
                // self-mirrored cell: F(z) = (a z + c conj(z))/2 as a real
                // 2x2 on (Re z, Im z)
                const double hr = 0.5 * (a1 + c.real());
                const double hi = 0.5 * c.imag();
                const double hd = 0.5 * (a1 - c.real());
                note_eigs(0.5 * a1, 0.5 * std::abs(c));
                const auto g = invsqrt2x2(hr, hi, hd);
                const double x = g[0] * z1.real() + g[1] * z1.imag();
                const double y = g[1] * z1.real() + g[2] * z1.imag();
                qat(u, w) = cplx(x, y);
                done[static_cast<size_t>(u) * W + w] = 1;
            } else {
                const double ac = std::abs(c);
                note_eigs(0.25 * (a1 + a2),
                          0.5 * std::hypot(0.5 * (a1 - a2), ac));
                const auto g = invsqrt2x2(0.5 * a1, 0.5 * ac, 0.5 * a2);
                const cplx ph = ac > 0.0 ? c / ac : cplx(0.0, 0.0);
                qat(u, w) = g[0] * z1 + g[1] * ph * std::conj(z2);
                qat(ub, wb) = g[2] * z2 + g[1] * ph * std::conj(z1);
                done[static_cast<size_t>(u) * W + w] = 1;
                done[static_cast<size_t>(ub) * W + wb] = 1;
            }
        }
    }

    if (!(lam_min > 1e-12 * lam_max))
        throw std::runtime_error(
            "orthogonalize_oqam: near-singular Zak-domain frame operator; "
            "pulse cannot be orthogonalized by scaling");

    // inverse half-step Zak transform
    Pulse out;
    out.gen = p.gen;
    out.param = p.param;
    out.K = params.K;
    out.M = params.M;
    out.taps.resize(params.N);
    double imag_energy = 0.0, total_energy = 0.0;
    {
        Dft dft(W);
        std::vector<cplx> spec(W), poly(W);
        for (int u = 0; u < U; ++u) {
            for (int w = 0; w < W; ++w) spec[w] = qat(u, w);
            dft.backward(spec.data(), poly.data());
            for (int r = 0; r < W; ++r) {
                const cplx val = poly[r] / static_cast<double>(W);
                imag_energy += val.imag() * val.imag();
                total_energy += std::norm(val);
                out.taps[u + static_cast<size_t>(r) * U] = val.real();
            }
        }
    }
    if (imag_energy > 1e-10 * total_energy)
        throw std::runtime_error(
            "orthogonalize_oqam: non-real result; convention violation");
    return normalize_energy(std::move(out));
}

} // namespace coqam
