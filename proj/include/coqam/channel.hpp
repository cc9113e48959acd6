// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coqam/frame.hpp"
#include "coqam/modem.hpp"
#include "coqam/pulse.hpp"

namespace coqam {

/// Deterministic per-frame random stream: mt19937_64 seeded from
/// (seed, snr index, frame index) through std::seed_seq, with an internal
/// Box-Muller transform for Gaussian pairs. Identical draws for identical
/// keys regardless of execution order, so Monte-Carlo frames can run on any
/// number of threads with schedule-independent results.
class FrameRng {
public:
    FrameRng(uint64_t seed, uint32_t snr_index, uint64_t frame_index);

    double uniform();                       // in [0, 1)
    void gaussian_pair(double& a, double& b);
    cplx qpsk_symbol();

private:
    std::mt19937_64 eng_;
};

inline constexpr const char* kRngName = "mt19937_64/seed_seq(seed,snr,frame)/box-muller";

enum class NoiseRef { symbol_energy };

/// Adds circularly symmetric complex Gaussian noise with per-sample
/// variance sigma^2 = 10^(-es_n0_db/10), the calibration under which the
/// matched-filter output of a unit-energy-pulse chain (and the unitary
/// multicarrier baseline) sees exactly the nominal per-symbol Es/N0.
Waveform awgn(const Waveform& w, double es_n0_db, FrameRng& rng,
              NoiseRef ref = NoiseRef::symbol_energy);

/// Gray-coded QPSK over AWGN: SER = 2Q(sqrt(g)) - Q(sqrt(g))^2 with
/// g = 10^(es_n0_db/10).
double theoretical_qpsk_ser(double es_n0_db);

struct SimConfig {
    FrameParams params;
    std::string system = "wcp-coqam";   // "ofdm" | "wcp-coqam"
    std::string pulse_gen = "gaussian"; // "gaussian" | "rc" | "rect"
    double pulse_param = 0.1;
    bool orthogonalize = true;
    std::vector<double> es_n0_db;
    int target_frame_errors = 100;
    long max_frames = 1000000;
    uint64_t seed = 0;
};

struct SnrPoint {
    double es_n0_db = 0.0;
    long frames = 0;
    long symbols = 0;
    long symbol_errors = 0;
    long frame_errors = 0;
    double ser = 0.0;
    double fer = 0.0;
    bool capped = false;   // stopped by max_frames instead of the error target
};

struct SweepResult {
    SimConfig config;
    std::string rng_name;
    std::vector<SnrPoint> points;

    /// CSV with '#'-prefixed metadata lines, then
    /// es_n0_db,frames,symbols,symbol_errors,frame_errors,ser,fer rows.
    std::string to_csv() const;
};

/// Monte-Carlo SER/FER sweep: per SNR point, frames of random QPSK are
/// pushed through the configured chain until target_frame_errors frame
/// errors are collected or max_frames is reached. Frames are evaluated in
/// fixed batches so results do not depend on thread count; the COQAM_THREADS
/// environment variable caps parallelism.
SweepResult run_ser(const SimConfig& cfg);

/// Same sweep with an explicit prototype pulse (taken as-is; the config's
/// pulse generator fields are treated as metadata only).
SweepResult run_ser(const SimConfig& cfg, const Pulse& pulse);

/// Averaged periodogram over non-overlapping nfft-sample segments of the
/// given waveforms, normalized to unit sum. nfft must be a power of two.
/// An all-zero input throws unless allow_zero is set, in which case the
/// all-zero vector is returned.
std::vector<double> psd_estimate(const std::vector<Waveform>& ws, int nfft,
                                 bool allow_zero = false);

} // namespace coqam
