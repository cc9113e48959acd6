// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "coqam/pulse.hpp"

using namespace coqam;

TEST_CASE("gaussian pulse: length, energy, symmetry, center peak") {
    const FrameParams p = make_frame_params(128, 9, 0);
    const Pulse g = gen_gaussian(p, 0.1);
    REQUIRE(g.length() == 1152);
    CHECK(pulse_energy(g) == doctest::Approx(1.0).epsilon(1e-12));
    // single maximum at the center index
    int argmax = 0;
    for (int n = 0; n < g.length(); ++n)
        if (g.taps[n] > g.taps[argmax]) argmax = n;
    CHECK(argmax == 576);
    // even symmetry about N/2
    for (int d = 1; d < 576; ++d)
        CHECK(g.taps[576 - d] == doctest::Approx(g.taps[576 + d]).epsilon(1e-12));
}

TEST_CASE("gaussian matches the closed form at small size") {
    const FrameParams p = make_frame_params(4, 2, 0);
    const Pulse g = gen_gaussian(p, 0.5);
    // independent scalar evaluation then normalization
    std::vector<double> ref(8);
    double e = 0.0;
    for (int n = 0; n < 8; ++n) {
        const double d = n - 4.0;
        ref[n] = std::exp(-std::numbers::pi * std::numbers::pi * d * d / (0.25 * 64.0));
        e += ref[n] * ref[n];
    }
    for (int n = 0; n < 8; ++n)
        CHECK(g.taps[n] == doctest::Approx(ref[n] / std::sqrt(e)).epsilon(1e-12));
}

TEST_CASE("gaussian flattens as beta grows") {
    const FrameParams p = make_frame_params(8, 4, 0);
    const Pulse g = gen_gaussian(p, 1e4);
    double mn = g.taps[0], mx = g.taps[0];
    for (double t : g.taps) {
        mn = std::min(mn, t);
        mx = std::max(mx, t);
    }
    // max/min -> 1 as beta -> inf; at beta = 1e4 the exponent spread is
    // pi^2/(4 beta^2) ~ 2.5e-8
    CHECK(mx / mn == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("gaussian rejects nonpositive beta") {
    const FrameParams p = make_frame_params(4, 2, 0);
    CHECK_THROWS_AS(gen_gaussian(p, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gen_gaussian(p, -1.0), std::invalid_argument);
}

TEST_CASE("raised cosine: basic contract") {
    const FrameParams p = make_frame_params(128, 9, 0);
    const Pulse rc = gen_raised_cosine(p, 0.3);
    REQUIRE(rc.length() == 1152);
    CHECK(pulse_energy(rc) == doctest::Approx(1.0).epsilon(1e-12));
    for (int d = 1; d < 576; ++d)
        CHECK(rc.taps[576 - d] == doctest::Approx(rc.taps[576 + d]).epsilon(1e-12));
    CHECK_THROWS_AS(gen_raised_cosine(p, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(gen_raised_cosine(p, 1.1), std::invalid_argument);
}

TEST_CASE("raised cosine with zero roll-off is a sinc with nulls at multiples of K") {
    const FrameParams p = make_frame_params(16, 5, 0);
    const Pulse rc = gen_raised_cosine(p, 0.0);
    const int c = p.N / 2;
    for (int m = 1; m <= 2; ++m) {
        CHECK(std::abs(rc.taps[c + m * 16]) < 1e-9);
        CHECK(std::abs(rc.taps[c - m * 16]) < 1e-9);
    }
}

TEST_CASE("raised cosine matches the closed form incl. singular taps") {
    const FrameParams p = make_frame_params(8, 4, 0);
    const double ro = 0.3;
    const Pulse rc = gen_raised_cosine(p, ro);
    std::vector<double> ref(p.N);
    double e = 0.0;
    for (int n = 0; n < p.N; ++n) {
        const double t = (n - p.N / 2.0) / p.K;
        double h;
        if (std::abs(std::abs(t) - 1.0 / (2 * ro)) < 1e-9) {
            const double x = 1.0 / (2 * ro);
            h = std::numbers::pi / 4.0 * (std::sin(std::numbers::pi * x) / (std::numbers::pi * x));
        } else {
            const double s = (t == 0.0) ? 1.0
                                        : std::sin(std::numbers::pi * t) / (std::numbers::pi * t);
            h = s * std::cos(std::numbers::pi * ro * t) / (1 - 4 * ro * ro * t * t);
        }
        ref[n] = h;
        e += h * h;
    }
    for (int n = 0; n < p.N; ++n)
        CHECK(rc.taps[n] == doctest::Approx(ref[n] / std::sqrt(e)).epsilon(1e-12));
}

TEST_CASE("raised cosine singular taps take the analytic limit") {
    // K/(2*rolloff) = 10 samples, so the 0/0 points land exactly on taps
    const FrameParams p = make_frame_params(6, 4, 0);
    const Pulse rc = gen_raised_cosine(p, 0.3);
    const int c = p.N / 2;
    const double x = 1.0 / 0.6;   // singular offset in symbol periods
    const double limit = std::numbers::pi / 4.0 *
                         (std::sin(std::numbers::pi * x) / (std::numbers::pi * x));
    const double ratio = rc.taps[c + 10] / limit;   // normalization factor
    CHECK(std::isfinite(rc.taps[c + 10]));
    CHECK(rc.taps[c + 10] != 0.0);
    CHECK(rc.taps[c - 10] == doctest::Approx(rc.taps[c + 10]).epsilon(1e-12));
    // neighbours follow the regular formula scaled by the same factor
    const double t9 = (9.0) / 6.0;
    const double h9 = std::sin(std::numbers::pi * t9) / (std::numbers::pi * t9) *
                      std::cos(std::numbers::pi * 0.3 * t9) /
                      (1 - 4 * 0.3 * 0.3 * t9 * t9);
    CHECK(rc.taps[c + 9] == doctest::Approx(h9 * ratio).epsilon(1e-9));
}

TEST_CASE("rectangular pulse") {
    const FrameParams p = make_frame_params(4, 2, 0);
    const Pulse r = gen_rectangular(p);
    const std::vector<double> want{0.5, 0.5, 0.5, 0.5, 0, 0, 0, 0};
    REQUIRE(r.taps.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) CHECK(r.taps[i] == doctest::Approx(want[i]));
    CHECK(pulse_energy(r) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("normalize_energy") {
    Pulse p;
    p.K = 4;
    p.M = 1;
    p.taps = {2, 0, 0, 0};
    const Pulse n = normalize_energy(p);
    CHECK(n.taps[0] == doctest::Approx(1.0));

    // idempotence
    const Pulse n2 = normalize_energy(n);
    for (size_t i = 0; i < n.taps.size(); ++i)
        CHECK(n2.taps[i] == doctest::Approx(n.taps[i]).epsilon(1e-15));

    // direction preserved on random input
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ud(0.1, 2.0);
    Pulse r;
    r.taps.resize(16);
    for (auto& t : r.taps) t = ud(rng);
    const Pulse rn = normalize_energy(r);
    CHECK(pulse_energy(rn) == doctest::Approx(1.0).epsilon(1e-12));
    const double ratio = r.taps[3] / rn.taps[3];
    for (size_t i = 0; i < r.taps.size(); ++i)
        CHECK(r.taps[i] / rn.taps[i] == doctest::Approx(ratio).epsilon(1e-12));

    Pulse z;
    z.taps.assign(4, 0.0);
    CHECK_THROWS_AS(normalize_energy(z), std::invalid_argument);
}

TEST_CASE("pulse file round trip is bit exact") {
    const FrameParams p = make_frame_params(8, 4, 0);
    const Pulse g = gen_gaussian(p, 0.37);
    std::ostringstream os;
    write_pulse(os, g);
    std::istringstream is(os.str());
    const Pulse back = read_pulse(is);
    CHECK(back.K == g.K);
    CHECK(back.M == g.M);
    CHECK(back.gen == g.gen);
    CHECK(back.param == g.param);
    REQUIRE(back.taps.size() == g.taps.size());
    for (size_t i = 0; i < g.taps.size(); ++i) CHECK(back.taps[i] == g.taps[i]);
}

TEST_CASE("pulse file rejects garbage") {
    std::istringstream empty("");
    CHECK_THROWS(read_pulse(empty));
    std::istringstream bad("# pulse K=4 M=2 gen=rect param=0\n1.0\n");
    CHECK_THROWS(read_pulse(bad));
}
