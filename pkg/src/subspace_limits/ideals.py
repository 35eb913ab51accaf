"""Ideals on the natural numbers with finite-horizon membership verdicts.

Three ideal families are supported:

* the finite ideal (all finite subsets of N),
* the zero-density ideal (subsets whose natural density is 0),
* the block ideal (subsets meeting only finitely many of the dyadic
  blocks D_j = {2^(j-1) * (2s - 1) : s in N}, which partition N by the
  power of two dividing each number).

Whether an infinite set belongs to an ideal is undecidable from a finite
enumeration, so :func:`decide_membership` returns a tri-state verdict and
marks it *exact* or *empirical*. Exact verdicts require a tail
certificate, a symbolic description of everything the set could contain
beyond the enumerated horizon; empirical verdicts extrapolate from the
enumerated prefix using stabilization windows and dyadic density
checkpoints, and should be read as "what the data suggests".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

DEFAULT_TAU = 0.01                    # density threshold separating small from large
DEFAULT_STABILIZATION_FRACTION = 0.2  # trailing window that must stay quiet
DEFAULT_BLOCK_WINDOW_FRACTION = 0.2   # same, for newly seen block indices
DYADIC_CHECKPOINTS = 5                # partial densities at horizon / 2^i, i = 0..4


class CertificateError(ValueError):
    """A tail certificate contradicts the enumerated members."""


def block_index(n: int) -> int:
    """Index j of the dyadic block containing n.

    n belongs to block j exactly when 2^(j-1) is the largest power of two
    dividing n, so j is one plus the 2-adic valuation of n.
    """
    if n < 1:
        raise ValueError(f"naturals start at 1, got {n}")
    return (n & -n).bit_length()


@dataclass(frozen=True)
class IndexSet:
    """A finite-horizon enumeration of a subset of N.

    ``members`` holds every element of the underlying set that is <= the
    horizon, sorted and deduplicated. Nothing is known about the set
    beyond the horizon unless a tail certificate says otherwise.
    """

    horizon: int
    members: np.ndarray

    def __post_init__(self):
        if self.horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {self.horizon}")
        m = np.unique(np.asarray(self.members, dtype=np.int64)).reshape(-1)
        if m.size and (m[0] < 1 or m[-1] > self.horizon):
            raise ValueError(
                f"members must lie in [1, {self.horizon}], got range "
                f"[{m[0]}, {m[-1]}]"
            )
        m.setflags(write=False)
        object.__setattr__(self, "members", m)

    def __len__(self) -> int:
        return int(self.members.size)

    def __contains__(self, n: int) -> bool:
        i = int(np.searchsorted(self.members, n))
        return i < len(self) and int(self.members[i]) == int(n)

    def count_up_to(self, j: int) -> int:
        """Number of members that are <= j."""
        return int(np.searchsorted(self.members, j, side="right"))

    def last(self) -> int:
        """Largest member, or 0 for the empty set."""
        return int(self.members[-1]) if len(self) else 0

    def complement(self) -> "IndexSet":
        """Complement within {1, ..., horizon}."""
        mask = np.ones(self.horizon + 1, dtype=bool)
        mask[0] = False
        mask[self.members] = False
        return IndexSet(self.horizon, np.flatnonzero(mask))

    def union(self, other: "IndexSet") -> "IndexSet":
        if self.horizon != other.horizon:
            raise ValueError("union requires a shared horizon")
        return IndexSet(self.horizon, np.concatenate([self.members, other.members]))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IndexSet)
            and self.horizon == other.horizon
            and np.array_equal(self.members, other.members)
        )


# --------------------------------------------------------------------------
# Tail certificates


@dataclass(frozen=True)
class EmptyTail:
    """The set has no elements beyond ``bound``."""

    bound: int

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("bound must be >= 0")


@dataclass(frozen=True)
class SubsetOfBlocks:
    """The set is contained in the union of the listed dyadic blocks."""

    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(sorted(set(int(b) for b in self.blocks)))
        if not blocks or blocks[0] < 1:
            raise ValueError("need at least one block index, all >= 1")
        object.__setattr__(self, "blocks", blocks)


@dataclass(frozen=True)
class SubsetOfUnion:
    """The set is covered by the union of the component certificates' sets."""

    parts: tuple["TailCertificate", ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("need at least one component certificate")
        object.__setattr__(self, "parts", parts)


TailCertificate = Union[EmptyTail, SubsetOfBlocks, SubsetOfUnion]


def certificate_covers(cert: TailCertificate, n: int) -> bool:
    """Whether n lies in the superset the certificate describes."""
    if isinstance(cert, EmptyTail):
        return n <= cert.bound
    if isinstance(cert, SubsetOfBlocks):
        return block_index(n) in cert.blocks
    if isinstance(cert, SubsetOfUnion):
        return any(certificate_covers(p, n) for p in cert.parts)
    raise TypeError(f"not a tail certificate: {cert!r}")


def certificate_is_finite(cert: TailCertificate) -> bool:
    """Whether the certified superset is finite."""
    if isinstance(cert, EmptyTail):
        return True
    if isinstance(cert, SubsetOfBlocks):
        return False
    if isinstance(cert, SubsetOfUnion):
        return all(certificate_is_finite(p) for p in cert.parts)
    raise TypeError(f"not a tail certificate: {cert!r}")


def certificate_has_zero_density(cert: TailCertificate) -> bool:
    """Whether the certified superset provably has natural density zero.

    A dyadic block D_j has density 2^-j > 0, so only finite parts prove a
    zero-density bound within this certificate grammar.
    """
    if isinstance(cert, EmptyTail):
        return True
    if isinstance(cert, SubsetOfBlocks):
        return False
    if isinstance(cert, SubsetOfUnion):
        return all(certificate_has_zero_density(p) for p in cert.parts)
    raise TypeError(f"not a tail certificate: {cert!r}")


def certificate_describe(cert: TailCertificate) -> str:
    if isinstance(cert, EmptyTail):
        return f"empty beyond {cert.bound}"
    if isinstance(cert, SubsetOfBlocks):
        return f"subset of blocks {list(cert.blocks)}"
    if isinstance(cert, SubsetOfUnion):
        return " | ".join(certificate_describe(p) for p in cert.parts)
    raise TypeError(f"not a tail certificate: {cert!r}")


def validate_certificate(cert: TailCertificate, index_set: IndexSet) -> None:
    """Raise :class:`CertificateError` if any enumerated member escapes it."""
    for m in index_set.members:
        if not certificate_covers(cert, int(m)):
            raise CertificateError(
                f"member {int(m)} is outside the certified superset "
                f"({certificate_describe(cert)})"
            )


# --------------------------------------------------------------------------
# Ideals and verdicts


class IdealKind(enum.Enum):
    FINITE = "finite"
    DENSITY = "density"
    BLOCKS = "blocks"


@dataclass(frozen=True)
class Ideal:
    """One of the three built-in ideal families plus its empirical knobs.

    ``tau`` only matters for the density ideal. The window fractions set
    how much of the trailing horizon must be free of new members (finite
    ideal) or new block indices (block ideal) before an empirical InIdeal
    verdict is issued.
    """

    kind: IdealKind
    tau: float = DEFAULT_TAU
    stabilization_fraction: float = DEFAULT_STABILIZATION_FRACTION
    block_window_fraction: float = DEFAULT_BLOCK_WINDOW_FRACTION

    def __post_init__(self):
        if not isinstance(self.kind, IdealKind):
            object.__setattr__(self, "kind", IdealKind(self.kind))
        if not 0.0 < self.tau < 0.5:
            raise ValueError(f"tau must lie in (0, 0.5), got {self.tau}")
        for name in ("stabilization_fraction", "block_window_fraction"):
            f = getattr(self, name)
            if not 0.0 < f <= 1.0:
                raise ValueError(f"{name} must lie in (0, 1], got {f}")

    @staticmethod
    def finite() -> "Ideal":
        return Ideal(IdealKind.FINITE)

    @staticmethod
    def density(tau: float = DEFAULT_TAU) -> "Ideal":
        return Ideal(IdealKind.DENSITY, tau=tau)

    @staticmethod
    def blocks() -> "Ideal":
        return Ideal(IdealKind.BLOCKS)

    def describe(self) -> dict:
        out = {"kind": self.kind.value}
        if self.kind is IdealKind.DENSITY:
            out["tau"] = self.tau
        return out


class Status(enum.Enum):
    IN_IDEAL = "in_ideal"
    NOT_IN_IDEAL = "not_in_ideal"
    INCONCLUSIVE = "inconclusive"


class Mode(enum.Enum):
    EXACT = "exact"
    EMPIRICAL = "empirical"


@dataclass(frozen=True)
class IdealVerdict:
    status: Status
    mode: Mode
    evidence: dict = field(default_factory=dict)


# --------------------------------------------------------------------------
# Densities


def partial_density(P: IndexSet, j: int) -> float:
    """|P intersect {1..j}| / j, the j-th partial density of P."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    if j > P.horizon:
        raise ValueError(f"j={j} exceeds the enumerated horizon {P.horizon}")
    return P.count_up_to(j) / j


@dataclass(frozen=True)
class DensityEstimate:
    """Final partial density plus the dyadic checkpoint trail behind it."""

    estimate: float
    checkpoints: tuple[tuple[int, float], ...]  # (j, d_j) with j increasing

    def non_increasing(self) -> bool:
        """Trend check with 1/j slack to absorb single-element quantization."""
        return all(
            d2 <= d1 + 1.0 / j1
            for (j1, d1), (_, d2) in zip(self.checkpoints, self.checkpoints[1:])
        )

    def never_below(self, level: float) -> bool:
        """Whether every checkpoint density is at least ``level``."""
        return all(d >= level for _, d in self.checkpoints)


def density_estimate(P: IndexSet) -> DensityEstimate:
    """Partial density at the horizon with a dyadic trend trail.

    Checkpoints sit at horizon / 2^i for i = 4..0, so the horizon must be
    at least 16 for the trail to make sense.
    """
    if P.horizon < 16:
        raise ValueError(f"need horizon >= 16 for a dyadic trail, got {P.horizon}")
    js = [P.horizon // 2**i for i in range(DYADIC_CHECKPOINTS - 1, -1, -1)]
    checkpoints = tuple((j, partial_density(P, j)) for j in js)
    return DensityEstimate(checkpoints[-1][1], checkpoints)


# --------------------------------------------------------------------------
# Membership decisions


def _dyadic_windows(horizon: int) -> list[tuple[int, int]]:
    """Consecutive index windows (lo, hi] ending at the dyadic checkpoints."""
    js = [horizon // 2**i for i in range(DYADIC_CHECKPOINTS - 1, -1, -1)]
    windows = [(0, js[0])]
    windows += [(a, b) for a, b in zip(js, js[1:])]
    return windows


def _members_in_every_window(P: IndexSet) -> bool:
    return all(
        P.count_up_to(hi) - P.count_up_to(lo) > 0 for lo, hi in _dyadic_windows(P.horizon)
    )


def _block_first_occurrences(P: IndexSet) -> list[int]:
    """Member values at which a previously unseen block index appears."""
    seen: set[int] = set()
    events = []
    for m in P.members:
        j = block_index(int(m))
        if j not in seen:
            seen.add(j)
            events.append(int(m))
    return events


def decide_membership(
    ideal: Ideal, P: IndexSet, certificate: Optional[TailCertificate] = None
) -> IdealVerdict:
    """Tri-state membership verdict for P in the given ideal.

    With a certificate that settles the question the verdict is exact:
    any certified superset that is finite (finite ideal), has density
    zero (density ideal), or meets only finitely many blocks -- which
    every certificate in the grammar does -- (block ideal) yields
    InIdeal. A certificate that fails to settle it falls back to the
    empirical rules; a certificate contradicted by the data raises
    :class:`CertificateError`.

    Empirically, InIdeal needs the observed set to have stopped growing
    in the relevant sense (no members, or no new block indices, in the
    trailing stabilization window; or final density at most tau with a
    non-increasing dyadic trend), NotInIdeal needs persistent growth
    (members or new block indices in every dyadic window; or density at
    least 2 tau at every dyadic checkpoint), and anything in between is
    Inconclusive.
    """
    base_evidence: dict = {"horizon": P.horizon, "member_count": len(P)}
    if certificate is not None:
        validate_certificate(certificate, P)
        proves = {
            IdealKind.FINITE: certificate_is_finite(certificate),
            IdealKind.DENSITY: certificate_has_zero_density(certificate),
            IdealKind.BLOCKS: True,
        }[ideal.kind]
        if proves:
            return IdealVerdict(
                Status.IN_IDEAL,
                Mode.EXACT,
                {**base_evidence, "certificate": certificate_describe(certificate)},
            )
        base_evidence["certificate_note"] = (
            f"certificate ({certificate_describe(certificate)}) is consistent "
            f"but does not settle membership in the {ideal.kind.value} ideal"
        )

    if ideal.kind is IdealKind.FINITE:
        window = max(1, int(ideal.stabilization_fraction * P.horizon))
        last = P.last()
        evidence = {**base_evidence, "last_member": last, "window": window}
        if last <= P.horizon - window:
            return IdealVerdict(Status.IN_IDEAL, Mode.EMPIRICAL, evidence)
        if _members_in_every_window(P):
            evidence["note"] = "members keep appearing at every dyadic checkpoint"
            return IdealVerdict(Status.NOT_IN_IDEAL, Mode.EMPIRICAL, evidence)
        return IdealVerdict(Status.INCONCLUSIVE, Mode.EMPIRICAL, evidence)

    if ideal.kind is IdealKind.DENSITY:
        if P.horizon < 16:
            return IdealVerdict(
                Status.INCONCLUSIVE,
                Mode.EMPIRICAL,
                {**base_evidence, "note": "horizon too small for a density trend"},
            )
        est = density_estimate(P)
        evidence = {
            **base_evidence,
            "final_density": est.estimate,
            "checkpoints": list(est.checkpoints),
            "tau": ideal.tau,
        }
        if est.estimate <= ideal.tau and est.non_increasing():
            return IdealVerdict(Status.IN_IDEAL, Mode.EMPIRICAL, evidence)
        # a direction test on consecutive checkpoints is too brittle here: a
        # dense set plus a small prefix drifts slightly downward while its
        # density clearly stays put, so "persistently large" is judged by
        # the level at every dyadic scale instead
        if est.never_below(2.0 * ideal.tau):
            evidence["note"] = "density at least 2*tau at every dyadic checkpoint"
            return IdealVerdict(Status.NOT_IN_IDEAL, Mode.EMPIRICAL, evidence)
        return IdealVerdict(Status.INCONCLUSIVE, Mode.EMPIRICAL, evidence)

    # block ideal
    window = max(1, int(ideal.block_window_fraction * P.horizon))
    events = _block_first_occurrences(P)
    last_new = events[-1] if events else 0
    evidence = {
        **base_evidence,
        "distinct_blocks": len(events),
        "last_new_block_at": last_new,
        "window": window,
    }
    # Novelty comes first: block j cannot appear before index 2^(j-1), so a
    # set meeting ever more blocks produces first occurrences on an
    # exponential schedule and may still look quiet near the horizon. A new
    # block inside every dyadic window is that signature and overrides the
    # trailing-window stabilization test.
    windows = _dyadic_windows(P.horizon)
    if events and all(any(lo < e <= hi for e in events) for lo, hi in windows):
        evidence["note"] = "new block indices keep appearing at every dyadic checkpoint"
        return IdealVerdict(Status.NOT_IN_IDEAL, Mode.EMPIRICAL, evidence)
    if last_new <= P.horizon - window:
        return IdealVerdict(Status.IN_IDEAL, Mode.EMPIRICAL, evidence)
    return IdealVerdict(Status.INCONCLUSIVE, Mode.EMPIRICAL, evidence)


def filter_contains(
    ideal: Ideal,
    P: IndexSet,
    complement_certificate: Optional[TailCertificate] = None,
) -> IdealVerdict:
    """Whether P belongs to the filter dual to the ideal.

    P is in the filter exactly when its complement is in the ideal, so
    this decides membership of the complement within the horizon; the
    optional certificate describes the complement's tail. An InIdeal
    status therefore means "P is in the filter".
    """
    return decide_membership(ideal, P.complement(), complement_certificate)


# --------------------------------------------------------------------------
# Axiom verification


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class AxiomsReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def axioms_check(
    ideal: Ideal,
    family: Sequence[tuple[IndexSet, Optional[TailCertificate]]],
) -> AxiomsReport:
    """Verify the ideal axioms on a finite certified family.

    Checks, on the family's shared horizon: the empty set is a member;
    InIdeal verdicts are closed under pairwise union (certificates merge
    into a union certificate) and under taking subsets (which inherit the
    superset's certificate); every singleton is a member (admissibility);
    and the full horizon set without a certificate is never exactly
    InIdeal (non-triviality proxy).
    """
    if not family:
        raise ValueError("need at least one family member")
    horizon = family[0][0].horizon
    if any(p.horizon != horizon for p, _ in family):
        raise ValueError("family members must share a horizon")

    checks: list[AxiomCheck] = []

    empty = IndexSet(horizon, [])
    v = decide_membership(ideal, empty, EmptyTail(0))
    checks.append(
        AxiomCheck("empty_set", v.status is Status.IN_IDEAL, f"status={v.status.value}")
    )

    in_ideal = [
        (p, c) for p, c in family
        if decide_membership(ideal, p, c).status is Status.IN_IDEAL
    ]

    union_ok, union_notes = True, []
    for i in range(len(in_ideal)):
        for j in range(i + 1, len(in_ideal)):
            (pa, ca), (pb, cb) = in_ideal[i], in_ideal[j]
            merged = SubsetOfUnion((ca, cb)) if ca is not None and cb is not None else None
            vu = decide_membership(ideal, pa.union(pb), merged)
            if vu.status is not Status.IN_IDEAL:
                union_ok = False
                union_notes.append(f"pair ({i},{j}) -> {vu.status.value}")
    checks.append(
        AxiomCheck(
            "union_closure",
            union_ok,
            "; ".join(union_notes) or f"{len(in_ideal)} members, all pairwise unions InIdeal",
        )
    )

    subset_ok, subset_notes = True, []
    for idx, (p, c) in enumerate(in_ideal):
        for label, sub in (
            ("first_half", p.members[: len(p) // 2]),
            ("alternate", p.members[::2]),
        ):
            vs = decide_membership(ideal, IndexSet(horizon, sub), c)
            if vs.status is not Status.IN_IDEAL:
                subset_ok = False
                subset_notes.append(f"member {idx} {label} -> {vs.status.value}")
    checks.append(
        AxiomCheck(
            "subset_closure",
            subset_ok,
            "; ".join(subset_notes) or "prefix and alternate subsets stay InIdeal",
        )
    )

    singles = sorted({1, 2, 3, max(1, horizon // 2), horizon})
    single_ok = True
    for z in singles:
        vz = decide_membership(ideal, IndexSet(horizon, [z]), EmptyTail(z))
        single_ok = single_ok and vz.status is Status.IN_IDEAL
    checks.append(
        AxiomCheck("admissibility", single_ok, f"singletons {singles} all InIdeal")
    )

    full = IndexSet(horizon, np.arange(1, horizon + 1))
    vf = decide_membership(ideal, full, None)
    nontrivial = not (vf.status is Status.IN_IDEAL and vf.mode is Mode.EXACT)
    checks.append(
        AxiomCheck(
            "non_triviality",
            nontrivial,
            f"full horizon set -> {vf.status.value} ({vf.mode.value})",
        )
    )

    return AxiomsReport(tuple(checks))
