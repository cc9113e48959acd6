// SPDX-License-Identifier: Apache-2.0
#include "coqam/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "coqam/channel.hpp"
#include "coqam/frame.hpp"
#include "coqam/modem.hpp"
#include "coqam/orthogonality.hpp"
#include "coqam/pulse.hpp"
#include "coqam/zak.hpp"

namespace coqam {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Pulse generate(const FrameParams& fp, const std::string& gen, double beta, double rolloff) {
    if (gen == "gaussian") return gen_gaussian(fp, beta);
    if (gen == "rc") return gen_raised_cosine(fp, rolloff);
    if (gen == "rect") return gen_rectangular(fp);
    throw CLI::ValidationError("--gen", "unknown generator '" + gen + "'");
}

int cmd_design_pulse(int K, int M, const std::string& gen, double beta, double rolloff,
                     bool orthogonalize, const std::string& out) {
    const FrameParams fp = make_frame_params(K, M, 0);
    Pulse p = generate(fp, gen, beta, rolloff);
    if (orthogonalize) p = orthogonalize_oqam(p, fp);
    write_pulse_file(out, p);
    std::cout << "wrote " << out << " (" << p.length() << " taps, gen=" << p.gen
              << (orthogonalize ? ", orthogonalized" : "") << ")\n";
    return kExitPass;
}

int cmd_check(const std::string& pulse_path, int K, int M, double tol,
              const std::string& family, const std::string& out) {
    std::ifstream probe(pulse_path);
    if (!probe) {
        std::cerr << "error: cannot open pulse file: " << pulse_path << "\n";
        return kExitUsage;
    }
    Pulse p = read_pulse(probe);
    if (K > 0 && p.K != K) {
        std::cerr << "error: pulse file has K=" << p.K << ", flags say K=" << K << "\n";
        return kExitUsage;
    }
    if (M > 0 && p.M != M) {
        std::cerr << "error: pulse file has M=" << p.M << ", flags say M=" << M << "\n";
        return kExitUsage;
    }
    const FrameParams fp = make_frame_params(p.K, p.M, 0);

    std::string csv;
    bool pass = true;
    if (family == "oqam-ofdm" || family == "both") {
        OrthReport r = check_oqam_ofdm(p, fp, tol);
        std::cout << "oqam-ofdm: max residual " << r.max_residual
                  << (r.pass ? " PASS" : " FAIL") << "\n";
        csv += "# family=oqam-ofdm\n" + r.to_csv();
        pass = pass && r.pass;
    }
    if (family == "wcp-coqam" || family == "both") {
        OrthReport r = check_wcp_coqam(p, fp, tol);
        std::cout << "wcp-coqam: max residual " << r.max_residual
                  << (r.pass ? " PASS" : " FAIL") << "\n";
        csv += "# family=wcp-coqam\n" + r.to_csv();
        pass = pass && r.pass;
    }
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) {
            std::cerr << "error: cannot open for writing: " << out << "\n";
            return kExitUsage;
        }
        os << csv;
    } else {
        std::cout << csv;
    }
    return pass ? kExitPass : kExitFail;
}

int cmd_simulate(int K, int M, int cp, const std::string& system,
                 const std::string& pulse_path, const std::string& gen,
                 double beta, double rolloff, bool orthogonalize,
                 double snr_start, double snr_stop, double snr_step,
                 int target_frame_errors, long max_frames, uint64_t seed,
                 const std::string& out) {
    SimConfig cfg;
    cfg.system = system;
    cfg.target_frame_errors = target_frame_errors;
    cfg.max_frames = max_frames;
    cfg.seed = seed;
    Pulse file_pulse;
    if (!pulse_path.empty()) {
        file_pulse = read_pulse_file(pulse_path);
        K = file_pulse.K;
        M = file_pulse.M;
        cfg.pulse_gen = "file:" + pulse_path;
        cfg.orthogonalize = false;
    } else {
        cfg.pulse_gen = gen;
        cfg.pulse_param = (gen == "rc") ? rolloff : beta;
        cfg.orthogonalize = orthogonalize;
    }
    cfg.params = make_frame_params(K, M, cp);
    if (snr_step <= 0.0 || snr_stop < snr_start) {
        std::cerr << "error: empty SNR grid (need snr-stop >= snr-start, snr-step > 0)\n";
        return kExitUsage;
    }
    for (double s = snr_start; s <= snr_stop + 1e-9; s += snr_step)
        cfg.es_n0_db.push_back(s);

    const SweepResult res =
        pulse_path.empty() ? run_ser(cfg) : run_ser(cfg, file_pulse);
    const std::string csv = res.to_csv();
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) {
            std::cerr << "error: cannot open for writing: " << out << "\n";
            return kExitUsage;
        }
        os << csv;
    } else {
        std::cout << csv;
    }
    return kExitPass;
}

struct Lattice {
    int K, M;
};

int cmd_verify_paper(int K, int M, double eq_tol, double id_tol, double corrupt) {
    std::vector<Lattice> lattices;
    if (K > 0 && M > 0)
        lattices.push_back({K, M});
    else
        lattices = {{4, 2}, {8, 4}, {128, 9}};

    bool ok = true;
    for (const auto& lat : lattices) {
        const FrameParams fp = make_frame_params(lat.K, lat.M, 0);
        const Pulse p = gen_gaussian(fp, 0.2);

        // waveform equality of the two circular synthesizers
        double eq = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            FrameRng rng(1234, 0, static_cast<uint64_t>(trial));
            QamGrid g(fp.K, fp.M);
            for (auto& d : g.v) d = rng.qpsk_symbol();
            const RealGrid rg = stagger(g, fp);
            const Waveform a = synth_wcp_phase(rg, p, fp, corrupt);
            const Waveform b = synth_wcp_staggered(rg, p, fp);
            for (int n = 0; n < fp.N; ++n)
                eq = std::max(eq, std::abs(a.samples[n] - b.samples[n]));
        }

        // circular-to-linear decomposition identity on random pulses
        double idres = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            FrameRng rng(99, 1, static_cast<uint64_t>(trial));
            Pulse rp;
            rp.K = fp.K;
            rp.M = fp.M;
            rp.gen = "custom";
            rp.taps.resize(fp.N);
            for (auto& t : rp.taps) {
                double a, b;
                rng.gaussian_pair(a, b);
                t = a;
            }
            rp = normalize_energy(std::move(rp));
            idres = std::max(idres, verify_circular_decomposition(rp, fp));
        }

        // implication: a pulse passing the linear conditions passes the
        // circular ones at the same tolerance
        bool implication = true;
        for (double beta : {0.1, 0.2, 0.4, 0.8}) {
            Pulse cand = gen_gaussian(fp, beta);
            try {
                cand = orthogonalize_oqam(cand, fp);
            } catch (const std::runtime_error&) {
                // too concentrated for this lattice; test the raw pulse
            }
            const OrthReport lin = check_oqam_ofdm(cand, fp, 1e-10);
            if (lin.pass) {
                const OrthReport circ = check_wcp_coqam(cand, fp, 1e-10);
                implication = implication && circ.pass;
            }
        }

        const bool lat_ok = eq <= eq_tol && idres <= id_tol && implication;
        ok = ok && lat_ok;
        std::cout << "K=" << lat.K << " M=" << lat.M
                  << ": synth equality residual " << eq
                  << ", decomposition identity residual " << idres
                  << ", linear->circular implication "
                  << (implication ? "holds" : "VIOLATED")
                  << (lat_ok ? "  [ok]" : "  [FAIL]") << "\n";
    }
    return ok ? kExitPass : kExitFail;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"coqam: OQAM-OFDM / WCP-COQAM multicarrier modem toolkit"};
    app.require_subcommand(1);

    // design-pulse
    auto* design = app.add_subcommand("design-pulse", "generate (and optionally orthogonalize) a prototype pulse");
    int dK = 128, dM = 9;
    std::string dgen = "gaussian", dout;
    double dbeta = 0.1, drolloff = 0.3;
    bool dorth = false;
    design->add_option("--K", dK, "subcarrier count (even, >= 4)");
    design->add_option("--M", dM, "time slots per frame (>= 2)");
    design->add_option("--gen", dgen, "pulse family: gaussian|rc|rect")
        ->check(CLI::IsMember({"gaussian", "rc", "rect"}));
    design->add_option("--beta", dbeta, "gaussian width parameter");
    design->add_option("--rolloff", drolloff, "raised-cosine roll-off in [0,1]");
    design->add_flag("--orthogonalize", dorth, "orthogonalize for the staggered lattice");
    design->add_option("--out", dout, "output pulse file")->required();

    // check
    auto* check = app.add_subcommand("check", "verify orthogonality conditions of a pulse file");
    std::string cpulse, cfamily = "both", cout_path;
    int cK = 0, cM = 0;
    double ctol = 1e-10;
    check->add_option("--pulse", cpulse, "pulse file")->required();
    check->add_option("--K", cK, "expected subcarrier count (validated against the file)");
    check->add_option("--M", cM, "expected slot count (validated against the file)");
    check->add_option("--tol", ctol, "pass threshold on the max residual");
    check->add_option("--family", cfamily, "oqam-ofdm|wcp-coqam|both")
        ->check(CLI::IsMember({"oqam-ofdm", "wcp-coqam", "both"}));
    check->add_option("--out", cout_path, "residual CSV output path (default stdout)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo SER/FER sweep over AWGN");
    int sK = 128, sM = 9, scp = 0, starget = 100;
    long smax = 1000000;
    std::string ssystem = "wcp-coqam", spulse, sgen = "gaussian", sout;
    double sbeta = 0.1, srolloff = 0.3, sstart = 0.0, sstop = 12.0, sstep = 2.0;
    bool sorth = true;
    uint64_t sseed = 0;
    sim->add_option("--system", ssystem, "ofdm|wcp-coqam")
        ->check(CLI::IsMember({"ofdm", "wcp-coqam"}));
    sim->add_option("--K", sK, "subcarrier count");
    sim->add_option("--M", sM, "time slots per frame");
    sim->add_option("--cp", scp, "cyclic prefix length in samples");
    sim->add_option("--pulse", spulse, "pulse file (overrides --gen)");
    sim->add_option("--gen", sgen, "pulse family: gaussian|rc|rect")
        ->check(CLI::IsMember({"gaussian", "rc", "rect"}));
    sim->add_option("--beta", sbeta, "gaussian width parameter");
    sim->add_option("--rolloff", srolloff, "raised-cosine roll-off");
    sim->add_flag("--orthogonalize,!--no-orthogonalize", sorth,
                  "orthogonalize the generated pulse (default on)");
    sim->add_option("--snr-start", sstart, "first Es/N0 point in dB");
    sim->add_option("--snr-stop", sstop, "last Es/N0 point in dB");
    sim->add_option("--snr-step", sstep, "Es/N0 step in dB");
    sim->add_option("--target-frame-errors", starget, "stop rule per SNR point");
    sim->add_option("--max-frames", smax, "hard cap per SNR point");
    sim->add_option("--seed", sseed, "RNG seed");
    sim->add_option("--out", sout, "SweepResult CSV path (default stdout)");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run the equivalence, identity, and implication checks");
    int vK = 0, vM = 0;
    double veq = 1e-12, vid = 1e-10, vcorrupt = 0.0;
    verify->add_option("--K", vK, "single lattice: subcarrier count");
    verify->add_option("--M", vM, "single lattice: slot count");
    verify->add_option("--eq-tol", veq, "synthesizer equality tolerance");
    verify->add_option("--id-tol", vid, "decomposition identity tolerance");
    verify->add_option("--corrupt-phase", vcorrupt,
                       "test hook: per-slot phase error injected into the phase-form synthesizer");

    std::vector<const char*> argv;
    argv.push_back("coqam");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (design->parsed())
            return cmd_design_pulse(dK, dM, dgen, dbeta, drolloff, dorth, dout);
        if (check->parsed())
            return cmd_check(cpulse, cK, cM, ctol, cfamily, cout_path);
        if (sim->parsed())
            return cmd_simulate(sK, sM, scp, ssystem, spulse, sgen, sbeta, srolloff,
                                sorth, sstart, sstop, sstep, starget, smax, sseed, sout);
        if (verify->parsed())
            return cmd_verify_paper(vK, vM, veq, vid, vcorrupt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

} // namespace coqam
