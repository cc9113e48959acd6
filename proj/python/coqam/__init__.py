# SPDX-License-Identifier: Apache-2.0
"""OQAM-OFDM / WCP-COQAM multicarrier modem toolkit."""

from ._coqam import (
    FrameParams,
    check_oqam_ofdm,
    check_wcp_coqam,
    destagger,
    gen_gaussian,
    gen_raised_cosine,
    gen_rectangular,
    make_frame_params,
    mf_receive,
    orthogonalize,
    run_ser,
    stagger,
    synth_wcp,
    theoretical_qpsk_ser,
)

__all__ = [
    "FrameParams",
    "check_oqam_ofdm",
    "check_wcp_coqam",
    "destagger",
    "gen_gaussian",
    "gen_raised_cosine",
    "gen_rectangular",
    "make_frame_params",
    "mf_receive",
    "orthogonalize",
    "run_ser",
    "stagger",
    "synth_wcp",
    "theoretical_qpsk_ser",
]
