# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the python extension."""

import math

import numpy as np
import pytest

import coqam


def test_frame_params():
    p = coqam.make_frame_params(128, 9)
    assert (p.K, p.M, p.N, p.alpha, p.D) == (128, 9, 1152, 63, 1151)
    with pytest.raises(ValueError):
        coqam.make_frame_params(127, 9)


def test_orthogonalized_pulse_passes_checker():
    p = coqam.make_frame_params(16, 4)
    raw = coqam.gen_gaussian(p, 0.3)
    assert raw.shape == (64,)
    assert not coqam.check_wcp_coqam(raw, p)["pass"]
    q = coqam.orthogonalize(raw, p)
    rep = coqam.check_wcp_coqam(q, p)
    assert rep["pass"]
    assert rep["max_residual"] <= 1e-10


def test_noiseless_loopback():
    p = coqam.make_frame_params(16, 4)
    q = coqam.orthogonalize(coqam.gen_raised_cosine(p, 0.3), p)
    rng = np.random.default_rng(1)
    symbols = (
        rng.choice([-1.0, 1.0], size=(16, 4)) + 1j * rng.choice([-1.0, 1.0], size=(16, 4))
    ) / math.sqrt(2)
    grid = coqam.stagger(symbols, p)
    assert grid.shape == (16, 8)
    assert np.array_equal(coqam.destagger(grid, p), symbols)
    wave = coqam.synth_wcp(grid, q, p)
    assert wave.shape == (p.N,)
    back = coqam.mf_receive(wave, q, p)
    assert np.max(np.abs(back - grid)) < 1e-10


def test_theoretical_ser():
    assert coqam.theoretical_qpsk_ser(0.0) == pytest.approx(0.2921, rel=1e-3)
    assert coqam.theoretical_qpsk_ser(10.0) == pytest.approx(1.564e-3, rel=1e-3)


def test_run_ser_deterministic():
    p = coqam.make_frame_params(16, 3)
    kwargs = dict(
        params=p,
        system="ofdm",
        es_n0_db=[4.0],
        target_frame_errors=10,
        max_frames=2000,
        seed=5,
    )
    a = coqam.run_ser(**kwargs)
    b = coqam.run_ser(**kwargs)
    assert a["csv"] == b["csv"]
    point = a["points"][0]
    assert point["ser"] == point["symbol_errors"] / point["symbols"]
