"""Smoke tests for the python bindings: import, run the main operations,
spot-check a few pinned values against the native suite."""

import math

import pytest

import heliumq as hq


def test_constants():
    assert hq.h == 6.62607015e-34
    assert hq.hbar == pytest.approx(hq.h / (2 * math.pi), rel=1e-15)
    assert hq.__version__


def test_conversions():
    assert hq.linear_to_angular(1.0) == pytest.approx(2 * math.pi)
    assert hq.angular_to_linear(hq.linear_to_angular(5.1914e9)) == pytest.approx(5.1914e9)


def test_transmon_spectrum():
    params = hq.TransmonParams.from_ghz(13.887, 0.2710)
    spectrum = hq.diagonalize_transmon(params, 4)
    f01 = spectrum.levels[1] / hq.h
    assert 5.19e9 < f01 < 5.22e9
    assert spectrum.n_matrix[1][0] == pytest.approx(
        hq.charge_matrix_element_asymptotic(params, 0), rel=0.03
    )


def test_dressed_observables_and_fit():
    system = hq.JchSystem.from_ghz(13.887, 0.2710, 0.1235, 6.9348)
    obs = hq.dressed_observables(system)
    assert hq.angular_to_linear(obs.omega01) == pytest.approx(5.1914e9, rel=0.0025)
    assert hq.angular_to_linear(obs.delta_omega) == pytest.approx(8.75e6, rel=0.0025)

    fit = hq.fit_spectroscopy(obs)
    assert fit["converged"]
    assert fit["params"]["ej_over_h_hz"]["value"] == pytest.approx(13.887e9, rel=1e-4)


def test_dielectric_chain():
    assert hq.epsilon_from_frequencies(6.93480e9, 6.75395e9) == pytest.approx(1.0543, abs=5e-4)
    inputs = hq.DielectricInputs(epsilon=1.057, delta_cq=0.0078, delta_cg=0.0165)
    assert hq.delta_g01_model(inputs) == pytest.approx(-0.0306, abs=5e-4)


def test_decoherence_values():
    qp = hq.QuasiparticleParams(
        gap=160e-6 * hq.e_charge, x_neq=0.0, omega01=hq.linear_to_angular(5.1914e9)
    )
    assert hq.gamma_qp(qp, 4e-6) == pytest.approx(1.60e5, rel=0.02)
    rate, warned = hq.gamma_phi_photon(
        kappa=hq.linear_to_angular(120e3),
        chi=-hq.linear_to_angular(1.61e6),
        omega_c=hq.linear_to_angular(6.9348e9),
        n_th=0.0159,
    )
    assert rate == pytest.approx(1.19e4, rel=0.01)
    assert not warned
    assert hq.t_phi_from_t1_t2(20e-6, 15e-6) == pytest.approx(24e-6)
    ladder = hq.mb_level_ladder(hq.linear_to_angular(5.1914e9), hq.linear_to_angular(4.8834e9))
    assert hq.mb_population(ladder, 0.100, 1) == pytest.approx(0.0759, abs=1e-3)


def test_trace_pipeline_round_trip():
    spec = hq.T1TraceSpec()
    spec.seed = 42
    record = hq.gen_t1_trace(spec)
    fit = hq.fit_t1_trace(record)
    assert fit.converged
    assert fit.t1_s == pytest.approx(20e-6, rel=0.03)

    series_spec = hq.FrequencySeriesSpec()
    series_spec.seed = 9
    series = hq.gen_frequency_series(series_spec)
    detection = hq.detect_jumps(series.omega01_hz)
    agree = sum(
        int(mask == truth) for mask, truth in zip(detection.jump_mask, series.jumped)
    )
    assert agree >= 0.95 * len(series.jumped)


def test_series_statistics_rho():
    stats = hq.series_statistics([1.0, 2.0, 3.5, 4.25, 8.0], [2.0, 4.0, 7.0, 8.5, 16.0])
    assert stats.rho == 1.0
    undefined = hq.series_statistics([2.0, 2.0, 2.0], [1.0, 2.0, 3.0])
    assert undefined.rho is None
