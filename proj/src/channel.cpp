// SPDX-License-Identifier: Apache-2.0
#include "coqam/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "coqam/dft.hpp"
#include "coqam/zak.hpp"

namespace coqam {

FrameRng::FrameRng(uint64_t seed, uint32_t snr_index, uint64_t frame_index) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                      snr_index, static_cast<uint32_t>(frame_index),
                      static_cast<uint32_t>(frame_index >> 32)};
    eng_.seed(seq);
}

double FrameRng::uniform() {
    // 53-bit mantissa from the top bits
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

void FrameRng::gaussian_pair(double& a, double& b) {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * uniform();
    a = r * std::cos(th);
    b = r * std::sin(th);
}

cplx FrameRng::qpsk_symbol() {
    const uint64_t bits = eng_();
    return qpsk_point(static_cast<int>(bits & 1), static_cast<int>((bits >> 1) & 1));
}

Waveform awgn(const Waveform& w, double es_n0_db, FrameRng& rng, NoiseRef) {
    const double sigma2 = std::pow(10.0, -es_n0_db / 10.0);
    const double s = std::sqrt(sigma2 / 2.0);
    Waveform out = w;
    for (auto& x : out.samples) {
        double a, b;
        rng.gaussian_pair(a, b);
        x += cplx(s * a, s * b);
    }
    return out;
}

double theoretical_qpsk_ser(double es_n0_db) {
    const double g = std::pow(10.0, es_n0_db / 10.0);
    const double q = 0.5 * std::erfc(std::sqrt(g) / std::sqrt(2.0));
    return 2.0 * q - q * q;
}

namespace {

struct FrameOutcome {
    int symbol_errors = 0;
    bool frame_error = false;
};

// one Monte-Carlo frame through the configured chain
FrameOutcome run_frame(const SimConfig& cfg, const Pulse* pulse, double es_n0_db,
                       uint32_t snr_index, uint64_t frame_index) {
    const FrameParams& fp = cfg.params;
    FrameRng rng(cfg.seed, snr_index, frame_index);
    QamGrid tx(fp.K, fp.M);
    for (auto& d : tx.v) d = rng.qpsk_symbol();

    QamGrid rx;
    if (cfg.system == "ofdm") {
        Waveform w = ofdm_baseline_tx(tx, fp);
        w = add_cp(w, fp);
        w = awgn(w, es_n0_db, rng);
        w = remove_cp(w, fp);
        rx = ofdm_baseline_rx(w, fp);
    } else {
        Waveform w = synth_wcp_staggered(stagger(tx, fp), *pulse, fp);
        w = add_cp(w, fp);
        w = awgn(w, es_n0_db, rng);
        w = remove_cp(w, fp);
        rx = destagger(mf_receive_wcp(w, *pulse, fp), fp);
    }

    FrameOutcome oc;
    for (size_t i = 0; i < tx.v.size(); ++i)
        if (qpsk_decide(rx.v[i]) != tx.v[i]) ++oc.symbol_errors;
    oc.frame_error = oc.symbol_errors > 0;
    return oc;
}

int worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    n = std::min(n, 8u);
    if (const char* env = std::getenv("COQAM_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return static_cast<int>(n);
}

} // namespace

SweepResult run_ser(const SimConfig& cfg) {
    Pulse pulse;
    if (cfg.system == "wcp-coqam") {
        if (cfg.pulse_gen == "gaussian")
            pulse = gen_gaussian(cfg.params, cfg.pulse_param);
        else if (cfg.pulse_gen == "rc")
            pulse = gen_raised_cosine(cfg.params, cfg.pulse_param);
        else if (cfg.pulse_gen == "rect")
            pulse = gen_rectangular(cfg.params);
        else
            throw std::invalid_argument("run_ser: unknown pulse generator '" + cfg.pulse_gen + "'");
        if (cfg.orthogonalize) pulse = orthogonalize_oqam(pulse, cfg.params);
    }
    return run_ser(cfg, pulse);
}

SweepResult run_ser(const SimConfig& cfg, const Pulse& pulse) {
    if (cfg.es_n0_db.empty())
        throw std::invalid_argument("run_ser: SNR grid must be nonempty");
    if (cfg.target_frame_errors < 1)
        throw std::invalid_argument("run_ser: target_frame_errors must be >= 1");
    if (cfg.system != "ofdm" && cfg.system != "wcp-coqam")
        throw std::invalid_argument("run_ser: unknown system '" + cfg.system + "'");
    if (cfg.system == "wcp-coqam" && pulse.length() != cfg.params.N)
        throw std::invalid_argument("run_ser: pulse length must be M*K");

    const int nthreads = worker_count();
    constexpr long kBatch = 64;   // stop rule checked on batch boundaries

    SweepResult res;
    res.config = cfg;
    res.rng_name = kRngName;
    const long frame_symbols = static_cast<long>(cfg.params.K) * cfg.params.M;

    for (size_t si = 0; si < cfg.es_n0_db.size(); ++si) {
        SnrPoint pt;
        pt.es_n0_db = cfg.es_n0_db[si];
        std::vector<FrameOutcome> batch(kBatch);
        while (pt.frame_errors < cfg.target_frame_errors && pt.frames < cfg.max_frames) {
            const long todo = std::min<long>(kBatch, cfg.max_frames - pt.frames);
            auto work = [&](int t) {
                for (long i = t; i < todo; i += nthreads)
                    batch[i] = run_frame(cfg, &pulse, pt.es_n0_db,
                                         static_cast<uint32_t>(si),
                                         static_cast<uint64_t>(pt.frames + i));
            };
            if (nthreads > 1 && todo > 1) {
                std::vector<std::thread> pool;
                for (int t = 1; t < nthreads; ++t) pool.emplace_back(work, t);
                work(0);
                for (auto& th : pool) th.join();
            } else {
                work(0);
            }
            for (long i = 0; i < todo; ++i) {
                pt.symbol_errors += batch[i].symbol_errors;
                pt.frame_errors += batch[i].frame_error ? 1 : 0;
            }
            pt.frames += todo;
        }
        pt.symbols = pt.frames * frame_symbols;
        pt.ser = pt.symbols > 0 ? static_cast<double>(pt.symbol_errors) / pt.symbols : 0.0;
        pt.fer = pt.frames > 0 ? static_cast<double>(pt.frame_errors) / pt.frames : 0.0;
        pt.capped = pt.frame_errors < cfg.target_frame_errors;
        res.points.push_back(pt);
    }
    return res;
}

std::string SweepResult::to_csv() const {
    std::ostringstream os;
    os << "# system=" << config.system;
    if (config.system != "ofdm") {
        os << " pulse=" << config.pulse_gen << " param=" << config.pulse_param
           << " orthogonalize=" << (config.orthogonalize ? 1 : 0);
    }
    os << "\n# K=" << config.params.K << " M=" << config.params.M
       << " cp_len=" << config.params.cp_len << "\n";
    os << "# seed=" << config.seed << " rng=" << rng_name
       << " target_frame_errors=" << config.target_frame_errors
       << " max_frames=" << config.max_frames << "\n";
    os << "es_n0_db,frames,symbols,symbol_errors,frame_errors,ser,fer\n";
    char a[32], b[32], c[32];
    bool any_capped = false;
    for (const auto& p : points) {
        std::snprintf(a, sizeof a, "%.17g", p.es_n0_db);
        std::snprintf(b, sizeof b, "%.17g", p.ser);
        std::snprintf(c, sizeof c, "%.17g", p.fer);
        os << a << ',' << p.frames << ',' << p.symbols << ',' << p.symbol_errors
           << ',' << p.frame_errors << ',' << b << ',' << c << '\n';
        any_capped = any_capped || p.capped;
    }
    if (any_capped) {
        os << "# capped_points=";
        bool first = true;
        for (const auto& p : points)
            if (p.capped) {
                std::snprintf(a, sizeof a, "%.17g", p.es_n0_db);
                os << (first ? "" : ";") << a;
                first = false;
            }
        os << '\n';
    }
    return os.str();
}

std::vector<double> psd_estimate(const std::vector<Waveform>& ws, int nfft,
                                 bool allow_zero) {
    if (nfft <= 0 || (nfft & (nfft - 1)) != 0)
        throw std::invalid_argument("psd_estimate: nfft must be a power of two");
    std::vector<double> acc(nfft, 0.0);
    long segments = 0;
    Dft dft(nfft);
    std::vector<cplx> in(nfft), out(nfft);
    for (const auto& w : ws) {
        const int nseg = w.length() / nfft;
        for (int s = 0; s < nseg; ++s) {
            for (int i = 0; i < nfft; ++i)
                in[i] = w.samples[static_cast<size_t>(s) * nfft + i];
            dft.forward(in.data(), out.data());
            for (int i = 0; i < nfft; ++i) acc[i] += std::norm(out[i]);
            ++segments;
        }
    }
    if (segments == 0)
        throw std::invalid_argument("psd_estimate: no full nfft segment in input");
    double total = 0.0;
    for (double x : acc) total += x;
    if (total <= 0.0) {
        if (allow_zero) return std::vector<double>(nfft, 0.0);
        throw std::invalid_argument("psd_estimate: all-zero input");
    }
    for (double& x : acc) x /= total;
    return acc;
}

} // namespace coqam
