// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "coqam/cli.hpp"
#include "coqam/orthogonality.hpp"
#include "coqam/pulse.hpp"

using namespace coqam;

namespace {

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name) : path("coqam_test_" + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("design-pulse writes an orthogonal pulse that check accepts") {
    TempPath f("dp.pulse");
    CHECK(run_cli({"design-pulse", "--K", "8", "--M", "4", "--gen", "gaussian",
                   "--beta", "0.3", "--orthogonalize", "--out", f.path}) == 0);
    const Pulse p = read_pulse_file(f.path);
    CHECK(p.K == 8);
    CHECK(p.length() == 32);
    const FrameParams fp = make_frame_params(8, 4, 0);
    CHECK(check_wcp_coqam(p, fp, 1e-10).pass);

    CHECK(run_cli({"check", "--pulse", f.path, "--family", "wcp-coqam"}) == 0);
}

TEST_CASE("design-pulse rect matches the 8-tap example") {
    TempPath f("rect.pulse");
    CHECK(run_cli({"design-pulse", "--K", "4", "--M", "2", "--gen", "rect",
                   "--out", f.path}) == 0);
    const Pulse p = read_pulse_file(f.path);
    REQUIRE(p.length() == 8);
    for (int n = 0; n < 4; ++n) CHECK(p.taps[n] == doctest::Approx(0.5));
    for (int n = 4; n < 8; ++n) CHECK(p.taps[n] == 0.0);
}

TEST_CASE("check fails on a raw RC and errors on a missing file") {
    TempPath f("rawrc.pulse");
    CHECK(run_cli({"design-pulse", "--K", "8", "--M", "4", "--gen", "rc",
                   "--rolloff", "0.3", "--out", f.path}) == 0);
    TempPath csv("report.csv");
    CHECK(run_cli({"check", "--pulse", f.path, "--family", "wcp-coqam",
                   "--out", csv.path}) == 1);
    std::ifstream is(csv.path);
    std::stringstream ss;
    ss << is.rdbuf();
    CHECK(ss.str().find("condition,m,v,residual") != std::string::npos);
    CHECK(ss.str().find("pass=0") != std::string::npos);

    CHECK(run_cli({"check", "--pulse", "does_not_exist.pulse"}) == 2);
}

TEST_CASE("check validates K/M flags against the file") {
    TempPath f("km.pulse");
    CHECK(run_cli({"design-pulse", "--K", "8", "--M", "4", "--gen", "rect",
                   "--out", f.path}) == 0);
    CHECK(run_cli({"check", "--pulse", f.path, "--K", "16"}) == 2);
}

TEST_CASE("simulate: same seed gives identical bytes, empty grid errors") {
    TempPath a("sim_a.csv"), b("sim_b.csv");
    const std::vector<std::string> common{
        "simulate", "--system", "ofdm", "--K", "8", "--M", "4",
        "--snr-start", "2", "--snr-stop", "4", "--snr-step", "2",
        "--target-frame-errors", "5", "--max-frames", "200", "--seed", "11"};
    auto with_out = [&](const std::string& p) {
        auto v = common;
        v.push_back("--out");
        v.push_back(p);
        return v;
    };
    CHECK(run_cli(with_out(a.path)) == 0);
    CHECK(run_cli(with_out(b.path)) == 0);
    std::ifstream ia(a.path), ib(b.path);
    std::stringstream sa, sb;
    sa << ia.rdbuf();
    sb << ib.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());

    CHECK(run_cli({"simulate", "--system", "ofdm", "--snr-start", "4",
                   "--snr-stop", "2", "--snr-step", "2"}) == 2);
    CHECK(run_cli({"simulate", "--system", "ofdm", "--snr-start", "0",
                   "--snr-stop", "2", "--snr-step", "0"}) == 2);
}

TEST_CASE("simulate accepts a pulse file") {
    TempPath f("simp.pulse"), out("simp.csv");
    CHECK(run_cli({"design-pulse", "--K", "8", "--M", "4", "--gen", "gaussian",
                   "--beta", "0.3", "--orthogonalize", "--out", f.path}) == 0);
    CHECK(run_cli({"simulate", "--system", "wcp-coqam", "--pulse", f.path,
                   "--snr-start", "4", "--snr-stop", "4", "--snr-step", "2",
                   "--target-frame-errors", "5", "--max-frames", "100",
                   "--seed", "3", "--out", out.path}) == 0);
    std::ifstream is(out.path);
    CHECK(is.good());
}

TEST_CASE("design-pulse at full scale yields a pulse the checker accepts") {
    TempPath f("full.pulse");
    CHECK(run_cli({"design-pulse", "--K", "128", "--M", "9", "--gen", "gaussian",
                   "--beta", "0.1", "--orthogonalize", "--out", f.path}) == 0);
    CHECK(run_cli({"check", "--pulse", f.path, "--K", "128", "--M", "9",
                   "--family", "wcp-coqam"}) == 0);
}

TEST_CASE("verify-paper passes on default and non-pow2 lattices, fails when corrupted") {
    CHECK(run_cli({"verify-paper"}) == 0);   // default lattice set
    CHECK(run_cli({"verify-paper", "--K", "6", "--M", "3"}) == 0);
    CHECK(run_cli({"verify-paper", "--K", "8", "--M", "4",
                   "--corrupt-phase", "0.001"}) == 1);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"no-such-command"}) == 2);
    CHECK(run_cli({"design-pulse", "--K", "8"}) == 2);   // missing --out
    CHECK(run_cli({"design-pulse", "--K", "7", "--M", "4", "--gen", "rect",
                   "--out", "x.pulse"}) == 2);           // odd K
}
