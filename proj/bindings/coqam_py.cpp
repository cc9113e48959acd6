// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coqam/channel.hpp"
#include "coqam/modem.hpp"
#include "coqam/orthogonality.hpp"
#include "coqam/pulse.hpp"
#include "coqam/zak.hpp"

namespace py = pybind11;
using namespace coqam;

namespace {

Pulse pulse_from_array(py::array_t<double, py::array::c_style | py::array::forcecast> taps,
                       const FrameParams& fp) {
    Pulse p;
    p.K = fp.K;
    p.M = fp.M;
    p.gen = "custom";
    p.taps.assign(taps.data(), taps.data() + taps.size());
    return p;
}

py::array_t<double> pulse_to_array(const Pulse& p) {
    py::array_t<double> out(static_cast<py::ssize_t>(p.taps.size()));
    std::copy(p.taps.begin(), p.taps.end(), out.mutable_data());
    return out;
}

RealGrid grid_from_array(py::array_t<double, py::array::c_style | py::array::forcecast> a,
                         const FrameParams& fp) {
    if (a.ndim() != 2 || a.shape(0) != fp.K || a.shape(1) != 2 * fp.M)
        throw std::invalid_argument("real grid must have shape (K, 2M)");
    RealGrid g(fp.K, 2 * fp.M);
    std::copy(a.data(), a.data() + a.size(), g.v.begin());
    return g;
}

py::array_t<double> grid_to_array(const RealGrid& g) {
    py::array_t<double> out({g.K, g.M2});
    std::copy(g.v.begin(), g.v.end(), out.mutable_data());
    return out;
}

py::array_t<cplx> wave_to_array(const Waveform& w) {
    py::array_t<cplx> out(static_cast<py::ssize_t>(w.samples.size()));
    std::copy(w.samples.begin(), w.samples.end(), out.mutable_data());
    return out;
}

py::dict report_to_dict(const OrthReport& r) {
    py::dict d;
    d["max_residual"] = r.max_residual;
    d["tol"] = r.tol;
    d["pass"] = r.pass;
    return d;
}

} // namespace

PYBIND11_MODULE(_coqam, m) {
    m.doc() = "OQAM-OFDM / WCP-COQAM multicarrier modem core";

    py::class_<FrameParams>(m, "FrameParams")
        .def_readonly("K", &FrameParams::K)
        .def_readonly("M", &FrameParams::M)
        .def_readonly("N", &FrameParams::N)
        .def_readonly("alpha", &FrameParams::alpha)
        .def_readonly("D", &FrameParams::D)
        .def_readonly("cp_len", &FrameParams::cp_len)
        .def("__repr__", [](const FrameParams& p) {
            return "FrameParams(K=" + std::to_string(p.K) + ", M=" + std::to_string(p.M) +
                   ", cp_len=" + std::to_string(p.cp_len) + ")";
        });

    m.def("make_frame_params", &make_frame_params, py::arg("K"), py::arg("M"),
          py::arg("cp_len") = 0);

    m.def("gen_gaussian",
          [](const FrameParams& fp, double beta) { return pulse_to_array(gen_gaussian(fp, beta)); },
          py::arg("params"), py::arg("beta"));
    m.def("gen_raised_cosine",
          [](const FrameParams& fp, double ro) {
              return pulse_to_array(gen_raised_cosine(fp, ro));
          },
          py::arg("params"), py::arg("rolloff"));
    m.def("gen_rectangular",
          [](const FrameParams& fp) { return pulse_to_array(gen_rectangular(fp)); },
          py::arg("params"));

    m.def("orthogonalize",
          [](py::array_t<double, py::array::c_style | py::array::forcecast> taps,
             const FrameParams& fp) {
              return pulse_to_array(orthogonalize_oqam(pulse_from_array(taps, fp), fp));
          },
          py::arg("taps"), py::arg("params"),
          "Orthogonalize a real prototype pulse for the staggered lattice.");

    m.def("check_oqam_ofdm",
          [](py::array_t<double, py::array::c_style | py::array::forcecast> taps,
             const FrameParams& fp, double tol) {
              return report_to_dict(check_oqam_ofdm(pulse_from_array(taps, fp), fp, tol));
          },
          py::arg("taps"), py::arg("params"), py::arg("tol") = 1e-10);
    m.def("check_wcp_coqam",
          [](py::array_t<double, py::array::c_style | py::array::forcecast> taps,
             const FrameParams& fp, double tol) {
              return report_to_dict(check_wcp_coqam(pulse_from_array(taps, fp), fp, tol));
          },
          py::arg("taps"), py::arg("params"), py::arg("tol") = 1e-10);

    m.def("synth_wcp",
          [](py::array_t<double, py::array::c_style | py::array::forcecast> grid,
             py::array_t<double, py::array::c_style | py::array::forcecast> taps,
             const FrameParams& fp) {
              return wave_to_array(synth_wcp_staggered(grid_from_array(grid, fp),
                                                       pulse_from_array(taps, fp), fp));
          },
          py::arg("real_grid"), py::arg("taps"), py::arg("params"),
          "Synthesize one circular staggered frame from a (K, 2M) real grid.");

    m.def("mf_receive",
          [](py::array_t<cplx, py::array::c_style | py::array::forcecast> wave,
             py::array_t<double, py::array::c_style | py::array::forcecast> taps,
             const FrameParams& fp) {
              Waveform w;
              w.samples.assign(wave.data(), wave.data() + wave.size());
              return grid_to_array(mf_receive_wcp(w, pulse_from_array(taps, fp), fp));
          },
          py::arg("samples"), py::arg("taps"), py::arg("params"),
          "Matched-filter demodulation back to the (K, 2M) real grid.");

    m.def("stagger",
          [](py::array_t<cplx, py::array::c_style | py::array::forcecast> grid,
             const FrameParams& fp) {
              if (grid.ndim() != 2 || grid.shape(0) != fp.K || grid.shape(1) != fp.M)
                  throw std::invalid_argument("qam grid must have shape (K, M)");
              QamGrid g(fp.K, fp.M);
              std::copy(grid.data(), grid.data() + grid.size(), g.v.begin());
              return grid_to_array(stagger(g, fp));
          },
          py::arg("qam_grid"), py::arg("params"),
          "Split complex symbols into the (K, 2M) real staggered grid.");

    m.def("destagger",
          [](py::array_t<double, py::array::c_style | py::array::forcecast> grid,
             const FrameParams& fp) {
              const QamGrid g = destagger(grid_from_array(grid, fp), fp);
              py::array_t<cplx> out({fp.K, fp.M});
              std::copy(g.v.begin(), g.v.end(), out.mutable_data());
              return out;
          },
          py::arg("real_grid"), py::arg("params"),
          "Exact inverse of stagger().");

    m.def("theoretical_qpsk_ser", &theoretical_qpsk_ser, py::arg("es_n0_db"));

    m.def("run_ser",
          [](const FrameParams& fp, const std::string& system, const std::string& pulse_gen,
             double pulse_param, bool orthogonalize, const std::vector<double>& es_n0_db,
             int target_frame_errors, long max_frames, uint64_t seed) {
              SimConfig cfg;
              cfg.params = fp;
              cfg.system = system;
              cfg.pulse_gen = pulse_gen;
              cfg.pulse_param = pulse_param;
              cfg.orthogonalize = orthogonalize;
              cfg.es_n0_db = es_n0_db;
              cfg.target_frame_errors = target_frame_errors;
              cfg.max_frames = max_frames;
              cfg.seed = seed;
              const SweepResult r = run_ser(cfg);
              py::list points;
              for (const auto& p : r.points) {
                  py::dict d;
                  d["es_n0_db"] = p.es_n0_db;
                  d["frames"] = p.frames;
                  d["symbols"] = p.symbols;
                  d["symbol_errors"] = p.symbol_errors;
                  d["frame_errors"] = p.frame_errors;
                  d["ser"] = p.ser;
                  d["fer"] = p.fer;
                  d["capped"] = p.capped;
                  points.append(d);
              }
              py::dict out;
              out["rng"] = r.rng_name;
              out["points"] = points;
              out["csv"] = r.to_csv();
              return out;
          },
          py::arg("params"), py::arg("system") = "wcp-coqam",
          py::arg("pulse_gen") = "gaussian", py::arg("pulse_param") = 0.1,
          py::arg("orthogonalize") = true, py::arg("es_n0_db") = std::vector<double>{},
          py::arg("target_frame_errors") = 100, py::arg("max_frames") = 1000000,
          py::arg("seed") = 0,
          "Monte-Carlo SER/FER sweep over AWGN; returns per-point counts and the CSV.");
}
