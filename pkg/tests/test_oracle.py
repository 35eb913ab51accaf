"""Tests for the brute-force reference implementations."""

import math

import numpy as np
import pytest

from subspace_limits import (
    SamplingPlan,
    det_bruteforce,
    gap,
    gap_bruteforce,
    orthonormalize,
)


def random_subspace(rng, d, k):
    return orthonormalize(rng.standard_normal((k, d)))


# ---------------------------------------------------------------------------
# determinant


def test_det_identity():
    assert det_bruteforce(np.eye(3)) == pytest.approx(1.0)


def test_det_hand_value():
    assert det_bruteforce([[2.0, 1.0], [1.0, 1.0]]) == pytest.approx(1.0)


def test_det_singular():
    assert det_bruteforce([[1.0, 1.0], [1.0, 1.0]]) == pytest.approx(0.0)


def test_det_matches_production():
    rng = np.random.default_rng(31)
    for _ in range(200):
        n = int(rng.integers(1, 7))
        M = rng.standard_normal((n, n))
        want = float(np.linalg.det(M))
        assert det_bruteforce(M) == pytest.approx(want, rel=1e-9, abs=1e-12)


def test_det_size_limit():
    with pytest.raises(ValueError):
        det_bruteforce(np.eye(7))


# ---------------------------------------------------------------------------
# sampled gap


def test_plan_validation():
    with pytest.raises(ValueError):
        SamplingPlan(k=4)
    with pytest.raises(ValueError):
        SamplingPlan(k=2, n_samples=10)
    with pytest.raises(ValueError):
        SamplingPlan(k=2, levels=0)


def test_gap_bruteforce_identical_subspaces():
    rng = np.random.default_rng(32)
    U = random_subspace(rng, 4, 2)
    assert gap_bruteforce(U, U) <= 1e-12


def test_gap_bruteforce_orthogonal_lines():
    U = orthonormalize([(1.0, 0.0)])
    V = orthonormalize([(0.0, 1.0)])
    assert gap_bruteforce(U, V) == pytest.approx(1.0, abs=1e-12)


def test_gap_bruteforce_diagonal_line():
    U = orthonormalize([(1.0, 0.0)])
    V = orthonormalize([(1.0, 1.0)])
    assert gap_bruteforce(U, V) == pytest.approx(math.sqrt(0.5), abs=1e-3)


def test_gap_bruteforce_rejects_large_k():
    rng = np.random.default_rng(33)
    U = random_subspace(rng, 8, 4)
    V = random_subspace(rng, 8, 4)
    with pytest.raises(ValueError):
        gap_bruteforce(U, V)


def test_gap_bruteforce_deterministic():
    rng = np.random.default_rng(34)
    U = random_subspace(rng, 5, 3)
    V = random_subspace(rng, 5, 3)
    plan = SamplingPlan(k=3, n_samples=2000, levels=2)
    assert gap_bruteforce(U, V, plan) == gap_bruteforce(U, V, plan)


def test_gap_bruteforce_monotone_in_levels():
    rng = np.random.default_rng(35)
    for _ in range(20):
        d = int(rng.integers(2, 6))
        k = int(rng.integers(2, min(3, d) + 1))
        U = random_subspace(rng, d, k)
        V = random_subspace(rng, d, k)
        vals = [
            gap_bruteforce(U, V, SamplingPlan(k, n_samples=500, levels=levels))
            for levels in (1, 2, 3)
        ]
        assert vals[0] <= vals[1] <= vals[2]


def test_gap_bruteforce_agrees_with_closed_form():
    rng = np.random.default_rng(36)
    for _ in range(60):
        d = int(rng.integers(2, 6))
        k = int(rng.integers(1, min(3, d) + 1))
        U = random_subspace(rng, d, k)
        V = random_subspace(rng, d, k)
        assert abs(gap(U, V) - gap_bruteforce(U, V)) <= 1e-3


def test_gap_bruteforce_never_exceeds_closed_form():
    # sampling a supremum can only undershoot (up to round-off)
    rng = np.random.default_rng(37)
    for _ in range(60):
        d = int(rng.integers(2, 6))
        k = int(rng.integers(1, min(3, d) + 1))
        U = random_subspace(rng, d, k)
        V = random_subspace(rng, d, k)
        assert gap_bruteforce(U, V) <= gap(U, V) + 1e-9
