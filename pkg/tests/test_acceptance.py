"""End-to-end acceptance checks for the whole package.

Each test prints one ``criterion N: PASS/FAIL`` line; the pytest -rA
summary (configured in pyproject.toml) shows them all in one place.
"""

import math

import numpy as np

from lgpol import (
    EvolutionConfig,
    InitialStateSpec,
    NoiseConfig,
    SweepConfig,
    apply_element,
    coherency_from_stokes,
    evolution_unitary,
    half_wave_plate,
    hermitian_eigenvalues,
    initial_state,
    intensities_c21,
    intensities_c31,
    intensities_c32,
    intensity,
    k_analytic,
    k_statistic,
    linear_polarizer,
    linear_retarder,
    quarter_wave_plate,
    repeat_trials,
    run_sweep,
    stokes_from_coherency,
)
from lgpol.polarization import _hermitian_defect

from helpers import random_state, random_stokes, random_unitary
from oracles import oracle_tables


def _verdict(number, label, body):
    try:
        body()
    except BaseException:
        print(f"criterion {number}: FAIL - {label}")
        raise
    print(f"criterion {number}: PASS - {label}")


def test_criterion_1_maximal_violation():
    def body():
        cfg = EvolutionConfig(0.0, 15.0)
        assert abs(k_analytic(cfg) - 1.5) <= 1e-12
        for spec in (
            InitialStateSpec.diagonal(),
            InitialStateSpec.unpolarized(),
            InitialStateSpec.partially_polarized(0.8),
        ):
            stat = k_statistic(initial_state(spec), cfg)
            assert abs(stat.k - 1.5) <= 1e-10
            assert stat.violated

    _verdict(1, "maximal K of 1.5 from closed form and pipeline", body)


def test_criterion_2_state_independence():
    def body():
        rng = np.random.default_rng(2026)
        worst = 0.0
        for i in range(1000):
            cfg = EvolutionConfig(rng.uniform(-360.0, 360.0), rng.uniform(-360.0, 360.0))
            rho = random_state(rng, rank=1 if i % 4 == 0 else 2)
            worst = max(worst, abs(k_statistic(rho, cfg).k - k_analytic(cfg)))
        assert worst <= 1e-10

    _verdict(2, "pipeline K matches the closed form for random states", body)


def test_criterion_3_theory_curve():
    def body():
        rows = run_sweep(
            SweepConfig(
                theta1=0.0,
                theta2_start=0.0,
                theta2_end=180.0,
                steps=361,
                noise=NoiseConfig(sigma_rel=0.02, seed=3),
            )
        )
        assert len(rows) == 361
        maxima = sorted(r.theta2_deg for r in rows if abs(r.k_theory - 1.5) <= 1e-9)
        minima = sorted(r.theta2_deg for r in rows if abs(r.k_theory + 3.0) <= 1e-9)
        unity = sorted(r.theta2_deg for r in rows if abs(r.k_theory - 1.0) <= 1e-9)
        assert maxima == [15.0, 75.0, 105.0, 165.0]
        assert minima == [45.0, 135.0]
        assert unity == [0.0, 22.5, 67.5, 90.0, 112.5, 157.5, 180.0]
        for row in rows:
            reduced = row.theta2_deg % 90.0
            in_band = 0.0 < reduced < 22.5 or 67.5 < reduced < 90.0
            assert row.violation == in_band
            assert abs(row.k_theory - row.k_pipeline) <= 1e-10
            assert -3.0 - 1e-9 <= row.k_theory <= 1.5 + 1e-9

    _verdict(3, "theory curve extrema and violation bands on the half-degree grid", body)


def _random_element(rng):
    kind = int(rng.integers(6))
    theta = float(rng.uniform(-360.0, 360.0))
    if kind == 0:
        return half_wave_plate(theta), True
    if kind == 1:
        return quarter_wave_plate(theta), True
    if kind == 2:
        return linear_retarder(theta, float(rng.uniform(0.0, 2.0 * math.pi))), True
    if kind == 3:
        return linear_polarizer(theta), False
    if kind == 4:
        cfg = EvolutionConfig(theta, float(rng.uniform(-360.0, 360.0)))
        return evolution_unitary(cfg), True
    return random_unitary(rng), True


def test_criterion_4_physicality_suite():
    def body():
        rng = np.random.default_rng(4)
        for _ in range(10_000):
            element, unitary = _random_element(rng)
            rho = random_state(rng)
            out = apply_element(element, rho)
            assert _hermitian_defect(out) <= 1e-12
            low, _ = hermitian_eigenvalues(out)
            assert low >= -1e-12
            if unitary:
                assert abs(intensity(out) - intensity(rho)) <= 1e-12
            s = random_stokes(rng)
            assert np.allclose(
                stokes_from_coherency(coherency_from_stokes(s)), s, atol=1e-12
            )

    _verdict(4, "element application preserves physicality; Stokes round trip", body)


def test_criterion_5_conservation():
    def body():
        rng = np.random.default_rng(5)
        for _ in range(2000):
            rho = random_state(rng)
            u = random_unitary(rng)
            total = intensity(rho)
            for table in (
                intensities_c21(rho, u),
                intensities_c32(rho, u),
                intensities_c31(rho, u),
            ):
                assert abs(table.total() - total) <= 1e-12

    _verdict(5, "every intensity table sums to the input intensity", body)


def test_criterion_6_noise_phenomenology():
    def body():
        rho = initial_state(InitialStateSpec.diagonal())
        cfg = EvolutionConfig(0.0, 15.0)
        noise = NoiseConfig(sigma_rel=0.02, seed=20260819)
        stats = repeat_trials(rho, cfg, noise, n_trials=10_000)
        assert abs(stats.mean_k - 1.5) <= 3.0 * stats.stderr_k
        overshoot = sum(k > 1.5 for k in stats.samples) / stats.n_trials
        assert 0.4 <= overshoot <= 0.6
        # the five-repeat protocol: nonzero, reproducible error bars
        five_a = repeat_trials(rho, cfg, noise, n_trials=5)
        five_b = repeat_trials(rho, cfg, noise, n_trials=5)
        assert five_a.samples == five_b.samples
        assert five_a.std_k > 0.0

    _verdict(6, "noisy K is unbiased at the optimum and overshoots half the time", body)


def test_criterion_7_oracle_equivalence():
    def body():
        rng = np.random.default_rng(7)
        for i in range(1000):
            rho = random_state(rng, rank=1 if i % 5 == 0 else 2)
            if i % 3 == 0:
                u = evolution_unitary(
                    EvolutionConfig(
                        float(rng.uniform(-180.0, 180.0)), float(rng.uniform(-180.0, 180.0))
                    )
                )
            else:
                u = random_unitary(rng)
            expected = oracle_tables(rho, u)
            produced = {
                "21": intensities_c21(rho, u).values,
                "32": intensities_c32(rho, u).values,
                "31": intensities_c31(rho, u).values,
            }
            for label, table in expected.items():
                for key, value in table.items():
                    assert abs(produced[label][key] - value) <= 1e-12

    _verdict(7, "intensity tables match the brute-force spectral oracle", body)
