// SPDX-License-Identifier: Apache-2.0
#include "coqam/pulse.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coqam {

namespace {

double sinc(double x) {
    if (std::abs(x) < 1e-12) return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

} // namespace

Pulse gen_gaussian(const FrameParams& p, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("gen_gaussian: beta must be > 0");
    Pulse out;
    out.gen = "gaussian";
    out.param = beta;
    out.K = p.K;
    out.M = p.M;
    out.taps.resize(p.N);
    const double c = p.N / 2.0;
    const double denom = beta * beta * static_cast<double>(p.N) * p.N;
    for (int n = 0; n < p.N; ++n) {
        const double d = n - c;
        out.taps[n] = std::exp(-std::numbers::pi * std::numbers::pi * d * d / denom);
    }
    return normalize_energy(std::move(out));
}

Pulse gen_raised_cosine(const FrameParams& p, double rolloff) {
    if (rolloff < 0.0 || rolloff > 1.0)
        throw std::invalid_argument("gen_raised_cosine: roll-off must be in [0,1]");
    Pulse out;
    out.gen = "rc";
    out.param = rolloff;
    out.K = p.K;
    out.M = p.M;
    out.taps.resize(p.N);
    const double c = p.N / 2.0;
    for (int n = 0; n < p.N; ++n) {
        const double t = (n - c) / p.K;   // in symbol periods
        double h;
        if (rolloff > 0.0 && std::abs(std::abs(t) - 1.0 / (2.0 * rolloff)) < 1e-9) {
            // limit of the 0/0 form at t = +-K/(2*rolloff)
            h = std::numbers::pi / 4.0 * sinc(1.0 / (2.0 * rolloff));
        } else {
            h = sinc(t) * std::cos(std::numbers::pi * rolloff * t) /
                (1.0 - 4.0 * rolloff * rolloff * t * t);
        }
        out.taps[n] = h;
    }
    return normalize_energy(std::move(out));
}

Pulse gen_rectangular(const FrameParams& p) {
    Pulse out;
    out.gen = "rect";
    out.param = 0.0;
    out.K = p.K;
    out.M = p.M;
    out.taps.assign(p.N, 0.0);
    const double a = 1.0 / std::sqrt(static_cast<double>(p.K));
    for (int n = 0; n < p.K; ++n) out.taps[n] = a;
    return out;
}

double pulse_energy(const Pulse& p) {
    double e = 0.0;
    for (double t : p.taps) e += t * t;
    return e;
}

Pulse normalize_energy(Pulse p) {
    const double e = pulse_energy(p);
    if (!(e > 0.0)) throw std::invalid_argument("normalize_energy: zero-energy pulse");
    const double s = 1.0 / std::sqrt(e);
    for (double& t : p.taps) t *= s;
    return p;
}

void write_pulse(std::ostream& os, const Pulse& p) {
    os << "# pulse K=" << p.K << " M=" << p.M << " gen=" << p.gen
       << " param=";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", p.param);
    os << buf << "\n";
    for (double t : p.taps) {
        std::snprintf(buf, sizeof buf, "%.17g", t);
        os << buf << "\n";
    }
}

void write_pulse_file(const std::string& path, const Pulse& p) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_pulse(os, p);
}

Pulse read_pulse(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("# pulse ", 0) != 0)
        throw std::invalid_argument("pulse file: missing '# pulse' header");
    Pulse p;
    std::istringstream hs(header.substr(8));
    std::string field;
    while (hs >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = field.substr(0, eq);
        const std::string val = field.substr(eq + 1);
        if (key == "K") p.K = std::stoi(val);
        else if (key == "M") p.M = std::stoi(val);
        else if (key == "gen") p.gen = val;
        else if (key == "param") p.param = std::stod(val);
    }
    if (p.K <= 0 || p.M <= 0)
        throw std::invalid_argument("pulse file: header lacks K/M");
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        p.taps.push_back(std::stod(line));
    }
    if (p.length() != p.K * p.M)
        throw std::invalid_argument("pulse file: tap count does not match K*M");
    return p;
}

Pulse read_pulse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open pulse file: " + path);
    return read_pulse(is);
}

} // namespace coqam
