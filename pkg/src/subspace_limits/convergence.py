"""Convergence of subspace sequences under pluggable ideals on N.

A sequence of k-dimensional subspaces converges to a candidate limit V
under an ideal when, for every eps > 0, the set of indices whose gap to V
is at least eps belongs to the ideal. With the finite ideal this is plain
convergence; with the zero-density ideal it is statistical convergence;
with the block ideal it is a strictly weaker notion that tolerates whole
residue classes of bad indices.

Besides the gap criterion itself, four per-basis-vector criteria are
equivalent to it and are evaluated side by side by
:func:`equivalence_suite`:

* each basis vector's residual ||u_i - P_V(u_i)|| tends to 0,
* each coefficient mass sum_j <u_i, v_j>^2 tends to 1,
* each projection norm ||P_V(u_i)|| tends to 1,
* each joint volume ||u_i, v_1, ..., v_k|| tends to 0.

All evaluation is deterministic; identical inputs produce identical
reports regardless of thread count.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import linalg
from .ideals import (
    EmptyTail,
    Ideal,
    IdealVerdict,
    IndexSet,
    Status,
    SubsetOfBlocks,
    SubsetOfUnion,
    TailCertificate,
    decide_membership,
)
from .linalg import Subspace

DEFAULT_EPS_GRID = (0.5, 0.1, 0.01)

CRITERION_NAMES = (
    "gap",
    "vector_residual",
    "coefficient_mass",
    "projection_norm",
    "joint_volume",
)


class Verdict(enum.Enum):
    CONVERGES = "converges"
    DOES_NOT_CONVERGE = "does_not_converge"
    INCONCLUSIVE = "inconclusive"


class RuleEvaluationError(RuntimeError):
    """A sequence rule failed or returned a malformed subspace."""

    def __init__(self, index: int, message: str):
        self.index = index
        super().__init__(f"sequence rule failed at index {index}: {message}")


@dataclass(frozen=True)
class SubspaceSequence:
    """A deterministic rule n -> Subspace with fixed per-n bases.

    ``exceptional_certificate`` optionally maps eps to a tail certificate
    for the set {n : gap(U_n, V) >= eps} against the sequence's intended
    limit; it is what makes exact convergence verdicts possible.
    """

    ambient_dim: int
    k: int
    rule: Callable[[int], Subspace]
    exceptional_certificate: Optional[Callable[[float], TailCertificate]] = None
    description: str = ""

    def __post_init__(self):
        probe = self.rule(1)
        if probe.ambient_dim != self.ambient_dim or probe.k != self.k:
            raise ValueError(
                f"rule(1) returned k={probe.k} in dimension {probe.ambient_dim}, "
                f"declared k={self.k}, d={self.ambient_dim}"
            )


@dataclass(frozen=True)
class ScalarSequence:
    """A deterministic rule n -> real, optionally with eps certificates."""

    rule: Callable[[int], float]
    exceptional_certificate: Optional[Callable[[float], TailCertificate]] = None
    description: str = ""


@dataclass(frozen=True)
class ExceptionalSetTrace:
    """Indices where a per-n value meets or exceeds a threshold."""

    epsilon: float
    index_set: IndexSet
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)


def _thread_count(threads: Optional[int]) -> int:
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("SUBSPACE_LIMITS_THREADS", "")
    return max(1, int(env)) if env.strip() else 1


def _eval_rule(seq: SubspaceSequence, n: int) -> Subspace:
    try:
        U = seq.rule(n)
    except Exception as exc:
        raise RuleEvaluationError(n, str(exc)) from exc
    if not isinstance(U, Subspace) or U.k != seq.k or U.ambient_dim != seq.ambient_dim:
        raise RuleEvaluationError(
            n, f"rule returned {U!r}, expected k={seq.k}, d={seq.ambient_dim}"
        )
    return U


def _map_indices(fn, horizon: int, threads: Optional[int]) -> list:
    """Apply fn to 1..horizon, in parallel if asked, reducing in index order."""
    count = _thread_count(threads)
    ns = range(1, horizon + 1)
    if count == 1 or horizon < 64:
        return [fn(n) for n in ns]
    chunks = np.array_split(np.asarray(ns), count * 4)
    with ThreadPoolExecutor(max_workers=count) as pool:
        parts = pool.map(lambda chunk: [fn(int(n)) for n in chunk], chunks)
        return [row for part in parts for row in part]


def gap_trace(
    seq: SubspaceSequence, V: Subspace, horizon: int, threads: Optional[int] = None
) -> list[tuple[int, float]]:
    """The per-index gap to V: [(n, gap(U_n, V)) for n = 1..horizon]."""
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    vals = _map_indices(lambda n: linalg.gap(_eval_rule(seq, n), V), horizon, threads)
    return list(zip(range(1, horizon + 1), vals))


def exceptional_set(trace: Sequence[tuple[int, float]], epsilon: float) -> ExceptionalSetTrace:
    """Threshold a trace at >= epsilon, exactly.

    The trace must cover consecutive indices 1..horizon.
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    ns = np.asarray([n for n, _ in trace], dtype=np.int64)
    values = np.asarray([v for _, v in trace], dtype=float)
    if ns.size == 0 or not np.array_equal(ns, np.arange(1, ns.size + 1)):
        raise ValueError("trace must cover consecutive indices starting at 1")
    members = np.flatnonzero(values >= epsilon) + 1
    return ExceptionalSetTrace(epsilon, IndexSet(int(ns.size), members), values)


# --------------------------------------------------------------------------
# Reports


@dataclass(frozen=True)
class ScalarLimitReport:
    candidate: float
    per_epsilon: tuple[tuple[float, IdealVerdict], ...]
    overall: Verdict


@dataclass(frozen=True)
class CriterionReport:
    """Verdicts for one convergence criterion, conjoined over basis vectors."""

    name: str
    candidate: float
    per_vector: tuple[ScalarLimitReport, ...]
    overall: Verdict

    def eps_status(self, epsilon: float) -> Status:
        """Combined per-epsilon status across basis vectors."""
        statuses = [
            verdict.status
            for rep in self.per_vector
            for eps, verdict in rep.per_epsilon
            if eps == epsilon
        ]
        return _combine_statuses(statuses)


@dataclass(frozen=True)
class ConvergenceReport:
    ideal: Ideal
    horizon: int
    eps_grid: tuple[float, ...]
    criteria: tuple[CriterionReport, ...]
    overall: Verdict
    evidence: dict = field(default_factory=dict)

    def overall_by_criterion(self) -> dict[str, Verdict]:
        return {c.name: c.overall for c in self.criteria}

    def agreement_matrix(self) -> list[list[bool]]:
        v = [c.overall for c in self.criteria]
        return [[a == b for b in v] for a in v]

    def criteria_agree(self) -> bool:
        """All criteria that reached a verdict reached the same one."""
        decided = {c.overall for c in self.criteria if c.overall is not Verdict.INCONCLUSIVE}
        return len(decided) <= 1


def _combine_statuses(statuses: Sequence[Status]) -> Status:
    if any(s is Status.NOT_IN_IDEAL for s in statuses):
        return Status.NOT_IN_IDEAL
    if statuses and all(s is Status.IN_IDEAL for s in statuses):
        return Status.IN_IDEAL
    return Status.INCONCLUSIVE


def _overall_from_statuses(statuses: Sequence[Status]) -> Verdict:
    # a single eps with an exceptional set outside the ideal already
    # disproves convergence; all eps inside it establish convergence
    if any(s is Status.NOT_IN_IDEAL for s in statuses):
        return Verdict.DOES_NOT_CONVERGE
    if statuses and all(s is Status.IN_IDEAL for s in statuses):
        return Verdict.CONVERGES
    return Verdict.INCONCLUSIVE


def _conjoin(verdicts: Sequence[Verdict]) -> Verdict:
    if any(v is Verdict.DOES_NOT_CONVERGE for v in verdicts):
        return Verdict.DOES_NOT_CONVERGE
    if verdicts and all(v is Verdict.CONVERGES for v in verdicts):
        return Verdict.CONVERGES
    return Verdict.INCONCLUSIVE


def _validate_eps_grid(eps_grid: Sequence[float]) -> tuple[float, ...]:
    grid = tuple(float(e) for e in eps_grid)
    if not grid:
        raise ValueError("eps grid must be non-empty")
    if any(e <= 0 for e in grid):
        raise ValueError(f"eps grid must be strictly positive, got {grid}")
    return grid


def _limit_from_values(
    values: np.ndarray,
    candidate: float,
    ideal: Ideal,
    eps_grid: tuple[float, ...],
    certificate: Optional[Callable[[float], TailCertificate]],
) -> ScalarLimitReport:
    horizon = int(values.size)
    deviations = np.abs(values - candidate)
    per_epsilon = []
    for eps in eps_grid:
        members = np.flatnonzero(deviations >= eps) + 1
        P = IndexSet(horizon, members)
        cert = certificate(eps) if certificate is not None else None
        per_epsilon.append((eps, decide_membership(ideal, P, cert)))
    overall = _overall_from_statuses([v.status for _, v in per_epsilon])
    return ScalarLimitReport(float(candidate), tuple(per_epsilon), overall)


def scalar_i_limit(
    x: ScalarSequence,
    candidate: float,
    ideal: Ideal,
    eps_grid: Sequence[float] = DEFAULT_EPS_GRID,
    horizon: int = 1000,
) -> ScalarLimitReport:
    """Decide whether x_n tends to the candidate under the ideal.

    For each eps the exceptional set {n <= horizon : |x_n - candidate| >= eps}
    is formed and its ideal membership decided, using the sequence's
    certificate for that eps when one is attached. The overall verdict is
    Converges only when every eps lands inside the ideal.
    """
    grid = _validate_eps_grid(eps_grid)
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")

    def eval_one(n: int) -> float:
        try:
            return float(x.rule(n))
        except Exception as exc:
            raise RuleEvaluationError(n, str(exc)) from exc

    values = np.asarray([eval_one(n) for n in range(1, horizon + 1)], dtype=float)
    if not np.all(np.isfinite(values)):
        bad = int(np.flatnonzero(~np.isfinite(values))[0]) + 1
        raise RuleEvaluationError(bad, "rule produced a non-finite value")
    return _limit_from_values(values, candidate, ideal, grid, x.exceptional_certificate)


# --------------------------------------------------------------------------
# Per-index criterion traces


@dataclass(frozen=True)
class CriterionTraces:
    """Raw per-index values feeding all five criteria plus the volume check.

    Row n-1 of each array corresponds to index n; the columns of the
    two-dimensional arrays follow the basis vectors of U_n.
    """

    horizon: int
    k: int
    gap: np.ndarray               # (horizon,)
    residual: np.ndarray          # (horizon, k): ||u_i - P_V(u_i)||
    coefficient_mass: np.ndarray  # (horizon, k): sum_j <u_i, v_j>^2
    projection_norm: np.ndarray   # (horizon, k): ||P_V(u_i)||
    joint_volume: np.ndarray      # (horizon, k): ||u_i, v_1, ..., v_k||
    self_volume: np.ndarray       # (horizon, k): ||u_i, P_V(u_i)||


def criterion_traces(
    seq: SubspaceSequence, V: Subspace, horizon: int, threads: Optional[int] = None
) -> CriterionTraces:
    """Evaluate every criterion's raw values for n = 1..horizon."""
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    if V.ambient_dim != seq.ambient_dim or V.k != seq.k:
        raise linalg.DimensionMismatchError(
            f"candidate limit has k={V.k}, d={V.ambient_dim}; "
            f"sequence declares k={seq.k}, d={seq.ambient_dim}"
        )
    B = V.basis

    def eval_one(n: int):
        U = _eval_rule(seq, n)
        A = U.basis
        coeff = A @ B.T
        resid = A - coeff @ B
        g = linalg.gap(U, V)
        r = np.linalg.norm(resid, axis=1)
        mass = np.einsum("ij,ij->i", coeff, coeff)
        proj = np.linalg.norm(coeff @ B, axis=1)
        vol = np.array([linalg.n_norm(np.vstack([A[i], B])) for i in range(U.k)])
        self_vol = np.array(
            [linalg.n_norm(np.vstack([A[i], coeff[i] @ B])) for i in range(U.k)]
        )
        return g, r, mass, proj, vol, self_vol

    rows = _map_indices(eval_one, horizon, threads)
    return CriterionTraces(
        horizon=horizon,
        k=seq.k,
        gap=np.array([row[0] for row in rows]),
        residual=np.array([row[1] for row in rows]),
        coefficient_mass=np.array([row[2] for row in rows]),
        projection_norm=np.array([row[3] for row in rows]),
        joint_volume=np.array([row[4] for row in rows]),
        self_volume=np.array([row[5] for row in rows]),
    )


# --------------------------------------------------------------------------
# Convergence checkers


def _gap_criterion(
    gap_values: np.ndarray,
    ideal: Ideal,
    eps_grid: tuple[float, ...],
    certificate,
) -> CriterionReport:
    rep = _limit_from_values(gap_values, 0.0, ideal, eps_grid, certificate)
    return CriterionReport("gap", 0.0, (rep,), rep.overall)


def _vector_criterion(
    name: str,
    values: np.ndarray,
    candidate: float,
    ideal: Ideal,
    eps_grid: tuple[float, ...],
    certificate,
) -> CriterionReport:
    reps = tuple(
        _limit_from_values(values[:, i], candidate, ideal, eps_grid, certificate)
        for i in range(values.shape[1])
    )
    return CriterionReport(name, candidate, reps, _conjoin([r.overall for r in reps]))


def subspace_i_converges(
    seq: SubspaceSequence,
    V: Subspace,
    ideal: Ideal,
    eps_grid: Sequence[float] = DEFAULT_EPS_GRID,
    horizon: int = 1000,
    threads: Optional[int] = None,
) -> ConvergenceReport:
    """Decide convergence of the sequence to V under the ideal (gap criterion)."""
    grid = _validate_eps_grid(eps_grid)
    values = np.asarray([g for _, g in gap_trace(seq, V, horizon, threads)])
    crit = _gap_criterion(values, ideal, grid, seq.exceptional_certificate)
    evidence = {
        "sequence": seq.description,
        "gap_max": float(values.max()),
        "gap_final": float(values[-1]),
    }
    return ConvergenceReport(ideal, horizon, grid, (crit,), crit.overall, evidence)


def usual_converges(
    seq: SubspaceSequence,
    V: Subspace,
    eps_grid: Sequence[float] = DEFAULT_EPS_GRID,
    horizon: int = 1000,
    threads: Optional[int] = None,
) -> ConvergenceReport:
    """Plain convergence: the finite ideal's notion."""
    return subspace_i_converges(seq, V, Ideal.finite(), eps_grid, horizon, threads)


def statistical_converges(
    seq: SubspaceSequence,
    V: Subspace,
    eps_grid: Sequence[float] = DEFAULT_EPS_GRID,
    horizon: int = 1000,
    threads: Optional[int] = None,
) -> ConvergenceReport:
    """Statistical convergence: the zero-density ideal's notion."""
    return subspace_i_converges(seq, V, Ideal.density(), eps_grid, horizon, threads)


def equivalence_suite(
    seq: SubspaceSequence,
    V: Subspace,
    ideal: Ideal,
    eps_grid: Sequence[float] = DEFAULT_EPS_GRID,
    horizon: int = 1000,
    threads: Optional[int] = None,
    traces: Optional[CriterionTraces] = None,
) -> ConvergenceReport:
    """Evaluate all five equivalent convergence criteria side by side.

    Criteria two to five are judged per basis vector and conjoined. Pass
    precomputed ``traces`` to amortize evaluation across several ideals.
    """
    grid = _validate_eps_grid(eps_grid)
    if traces is None:
        traces = criterion_traces(seq, V, horizon, threads)
    elif traces.horizon != horizon or traces.k != seq.k:
        raise ValueError("precomputed traces do not match the sequence and horizon")
    # Each basis vector of U_n is a unit vector of U_n, so its residual is
    # at most the gap, and the other per-vector deviations are at most the
    # residual; a certificate for the gap's exceptional sets therefore
    # covers the exceptional sets of every criterion at the same eps.
    cert = seq.exceptional_certificate
    criteria = (
        _gap_criterion(traces.gap, ideal, grid, cert),
        _vector_criterion("vector_residual", traces.residual, 0.0, ideal, grid, cert),
        _vector_criterion(
            "coefficient_mass", traces.coefficient_mass, 1.0, ideal, grid, cert
        ),
        _vector_criterion(
            "projection_norm", traces.projection_norm, 1.0, ideal, grid, cert
        ),
        _vector_criterion("joint_volume", traces.joint_volume, 0.0, ideal, grid, cert),
    )
    evidence = {
        "sequence": seq.description,
        "gap_max": float(traces.gap.max()),
        "gap_final": float(traces.gap[-1]),
    }
    return ConvergenceReport(ideal, horizon, grid, criteria, criteria[0].overall, evidence)


@dataclass(frozen=True)
class VolumeCheckReport:
    """One-way check: convergence forces the self-projection volumes to 0.

    ``volume`` reports whether ||u_i, P_V(u_i)|| tends to 0 for every i.
    That is necessary for convergence but not sufficient (the volumes also
    vanish when the projections collapse to zero), so only the forward
    implication is asserted; ``converse_falsified`` flags inputs that
    witness the failure of the reverse direction.
    """

    volume: CriterionReport
    subspace_overall: Verdict
    implication_holds: bool
    converse_falsified: bool


def self_projection_volume_check(
    seq: SubspaceSequence,
    V: Subspace,
    ideal: Ideal,
    eps_grid: Sequence[float] = DEFAULT_EPS_GRID,
    horizon: int = 1000,
    threads: Optional[int] = None,
    traces: Optional[CriterionTraces] = None,
) -> VolumeCheckReport:
    """Evaluate the necessary-condition trace ||u_i, P_V(u_i)|| -> 0."""
    grid = _validate_eps_grid(eps_grid)
    if traces is None:
        traces = criterion_traces(seq, V, horizon, threads)
    cert = seq.exceptional_certificate
    volume = _vector_criterion(
        "self_projection_volume", traces.self_volume, 0.0, ideal, grid, cert
    )
    gap_crit = _gap_criterion(traces.gap, ideal, grid, cert)
    subspace_overall = gap_crit.overall
    implication_holds = not (
        subspace_overall is Verdict.CONVERGES and volume.overall is not Verdict.CONVERGES
    )
    converse_falsified = (
        volume.overall is Verdict.CONVERGES
        and subspace_overall is Verdict.DOES_NOT_CONVERGE
    )
    return VolumeCheckReport(volume, subspace_overall, implication_holds, converse_falsified)


# --------------------------------------------------------------------------
# Built-in sequences


def parity_split_example(variant: str = "amended"):
    """Line sequence in R^3 whose behavior depends on the parity of n.

    On odd n the line is span{e3}, orthogonal to the candidate limit
    V = span{e2}, so the gap is 1 there. On even n the line is the
    normalization of a tilt away from e2:

    * ``amended``: raw coefficients (sin(n)/n, 1, 0); after normalizing,
      the gap to V is |sin n| / sqrt(n^2 + sin^2 n) <= 1/n, which decays.
    * ``printed``: raw coefficients (sin(n)/n, 1/n, 0); the common 1/n
      factor cancels under normalization, leaving direction
      (sin n, 1, 0) / sqrt(1 + sin^2 n) whose gap to V oscillates with
      |sin n| and never decays.

    The amended variant carries an exceptional-set certificate: for each
    eps the bad indices lie in the odd block union a finite prefix, which
    puts them inside the block ideal but leaves them of density 1/2. The
    printed variant gets no certificate because its even-index gaps do
    not decay. Returns (sequence, candidate limit, recommended ideal).
    """
    if variant not in ("printed", "amended"):
        raise ValueError(f"variant must be 'printed' or 'amended', got {variant!r}")
    V = Subspace(np.array([[0.0, 1.0, 0.0]]))
    odd_line = np.array([[0.0, 0.0, 1.0]])

    def rule(n: int) -> Subspace:
        if n % 2 == 1:
            return Subspace(odd_line)
        s = math.sin(n)
        raw = np.array([s / n, 1.0, 0.0]) if variant == "amended" else np.array(
            [s / n, 1.0 / n, 0.0]
        )
        return Subspace((raw / np.linalg.norm(raw))[None, :])

    certificate = None
    if variant == "amended":

        def certificate(eps: float) -> TailCertificate:
            # even-index gaps are below 1/n, so they clear eps past 1/eps
            return SubsetOfUnion(
                (SubsetOfBlocks((1,)), EmptyTail(max(1, math.ceil(1.0 / eps))))
            )

    seq = SubspaceSequence(
        ambient_dim=3,
        k=1,
        rule=rule,
        exceptional_certificate=certificate,
        description=f"parity-split line in R^3 ({variant} variant)",
    )
    return seq, V, Ideal.blocks()


def constant_orthogonal_example():
    """The constant line span{e1} in R^2 against the limit V = span{e2}.

    The gap to V is identically 1, so the sequence converges under no
    admissible ideal; yet every self-projection volume ||u, P_V(u)|| is
    identically 0 because the projection itself vanishes. This is the
    standard witness that the volume check is one-directional. Returns
    (sequence, candidate limit).
    """
    line = Subspace(np.array([[1.0, 0.0]]))
    V = Subspace(np.array([[0.0, 1.0]]))
    seq = SubspaceSequence(
        ambient_dim=2,
        k=1,
        rule=lambda n: line,
        description="constant line span{e1} in R^2",
    )
    return seq, V
