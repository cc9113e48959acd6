// SPDX-License-Identifier: Apache-2.0
#include "coqam/frame.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace coqam {

FrameParams make_frame_params(int K, int M, int cp_len) {
    if (K < 4) throw std::invalid_argument("frame: K must be >= 4");
    if (K % 2 != 0) throw std::invalid_argument("frame: K must be even");
    if (M < 2) throw std::invalid_argument("frame: M must be >= 2");
    const long n = static_cast<long>(M) * K;
    if (cp_len < 0 || cp_len >= n)
        throw std::invalid_argument("frame: cp_len must be in [0, M*K)");
    FrameParams p;
    p.K = K;
    p.M = M;
    p.N = static_cast<int>(n);
    p.alpha = K / 2 - 1;
    p.D = p.N - 1;
    p.cp_len = cp_len;
    return p;
}

cplx phase_term(int k, int m, int M) {
    const cplx base = std::polar(1.0, std::numbers::pi * k * (M - 0.5));
    return (m % 2 == 0) ? base : base * cplx(0.0, 1.0);
}

RealGrid stagger(const QamGrid& grid, const FrameParams& p) {
    if (grid.K != p.K || grid.M != p.M)
        throw std::invalid_argument("stagger: grid dimensions do not match params");
    RealGrid rg(p.K, 2 * p.M);
    for (int k = 0; k < p.K; ++k) {
        for (int m = 0; m < p.M; ++m)
            rg.at(k, 2 * m) = grid.at(k, m).real();
        for (int m2 = 1; m2 < 2 * p.M; m2 += 2)
            rg.at(k, m2) = grid.at(k, ((m2 + 1) / 2) % p.M).imag();
    }
    return rg;
}

QamGrid destagger(const RealGrid& rg, const FrameParams& p) {
    if (rg.K != p.K || rg.M2 != 2 * p.M)
        throw std::invalid_argument("destagger: grid dimensions do not match params");
    QamGrid g(p.K, p.M);
    const int M2 = 2 * p.M;
    for (int k = 0; k < p.K; ++k)
        for (int m = 0; m < p.M; ++m) {
            const int odd = (2 * m - 1 + M2) % M2;
            g.at(k, m) = cplx(rg.at(k, 2 * m), rg.at(k, odd));
        }
    return g;
}

cplx qpsk_point(int bit_i, int bit_q) {
    const double s = 1.0 / std::sqrt(2.0);
    return cplx(bit_i ? s : -s, bit_q ? s : -s);
}

cplx qpsk_decide(cplx x) {
    const double s = 1.0 / std::sqrt(2.0);
    return cplx(x.real() >= 0 ? s : -s, x.imag() >= 0 ? s : -s);
}

namespace {

void format_double(std::ostream& os, double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    os << buf;
}

void format_cplx(std::ostream& os, cplx z) {
    format_double(os, z.real());
    if (z.imag() >= 0 || std::isnan(z.imag())) os << '+';
    format_double(os, z.imag());
    os << 'j';
}

cplx parse_cplx(const std::string& tok) {
    // "re+imj" / "re-imj"; the imaginary sign is the last +/- not part of
    // an exponent
    if (tok.empty() || tok.back() != 'j')
        throw std::invalid_argument("grid csv: bad complex token '" + tok + "'");
    const std::string body = tok.substr(0, tok.size() - 1);
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        const char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        throw std::invalid_argument("grid csv: bad complex token '" + tok + "'");
    return cplx(std::stod(body.substr(0, split)), std::stod(body.substr(split)));
}

} // namespace

std::string to_csv(const QamGrid& g) {
    std::ostringstream os;
    for (int k = 0; k < g.K; ++k) {
        for (int m = 0; m < g.M; ++m) {
            if (m) os << ',';
            format_cplx(os, g.at(k, m));
        }
        os << '\n';
    }
    return os.str();
}

std::string to_csv(const RealGrid& g) {
    std::ostringstream os;
    for (int k = 0; k < g.K; ++k) {
        for (int m = 0; m < g.M2; ++m) {
            if (m) os << ',';
            format_double(os, g.at(k, m));
        }
        os << '\n';
    }
    return os.str();
}

QamGrid qam_grid_from_csv(std::istream& in) {
    std::vector<std::vector<cplx>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<cplx> row;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ','))
            row.push_back(parse_cplx(tok));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("grid csv: empty input");
    QamGrid g(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int k = 0; k < g.K; ++k) {
        if (static_cast<int>(rows[k].size()) != g.M)
            throw std::invalid_argument("grid csv: ragged rows");
        for (int m = 0; m < g.M; ++m) g.at(k, m) = rows[k][m];
    }
    return g;
}

RealGrid real_grid_from_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ','))
            row.push_back(std::stod(tok));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("grid csv: empty input");
    RealGrid g(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int k = 0; k < g.K; ++k) {
        if (static_cast<int>(rows[k].size()) != g.M2)
            throw std::invalid_argument("grid csv: ragged rows");
        for (int m = 0; m < g.M2; ++m) g.at(k, m) = rows[k][m];
    }
    return g;
}

} // namespace coqam
