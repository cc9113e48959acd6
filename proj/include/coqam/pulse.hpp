// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coqam/frame.hpp"

namespace coqam {

/// Real prototype filter of length exactly N = M*K, plus the generator
/// metadata needed to reproduce it.
struct Pulse {
    std::vector<double> taps;
    std::string gen;       // "gaussian", "rc", "rect", or "custom"
    double param = 0.0;    // beta or roll-off; unused for rect
    int K = 0, M = 0;

    int length() const { return static_cast<int>(taps.size()); }
};

/// Sampled Gaussian centered at N/2, unit energy:
/// taps proportional to exp(-pi^2 (n - N/2)^2 / (beta^2 N^2)).
/// beta must be positive.
Pulse gen_gaussian(const FrameParams& p, double beta);

/// Time-domain raised-cosine impulse response with symbol period K samples
/// and the given roll-off in [0,1], centered at N/2, truncated to length N,
/// unit energy. The removable singularity at |t| = K/(2*rolloff) is
/// evaluated by its analytic limit.
Pulse gen_raised_cosine(const FrameParams& p, double rolloff);

/// Rectangular pulse: first K taps equal 1/sqrt(K), the rest zero.
Pulse gen_rectangular(const FrameParams& p);

/// Rescales to unit energy (sum of squared taps == 1). Throws on an
/// all-zero pulse.
Pulse normalize_energy(Pulse p);

double pulse_energy(const Pulse& p);

/// Pulse file format: header "# pulse K=<K> M=<M> gen=<name> param=<value>"
/// followed by one tap per line, full double precision (round-trip safe).
void write_pulse(std::ostream& os, const Pulse& p);
void write_pulse_file(const std::string& path, const Pulse& p);
Pulse read_pulse(std::istream& is);
Pulse read_pulse_file(const std::string& path);

} // namespace coqam
