"""Command-line interface.

Four subcommands:

* ``gap BASIS_U BASIS_V`` prints the gap between the row spans of two
  numeric matrix files.
* ``analyze`` runs a convergence experiment (built-in sequence or JSON
  config) and writes a verdict report plus a per-index trace CSV. The
  exit code encodes the verdict: 0 converges, 1 does not converge,
  2 inconclusive, greater than 2 means an error.
* ``suite`` runs all five equivalence criteria plus the volume check and
  exits 0 exactly when every criterion that reached a verdict agrees.
* ``example`` lists the built-in sequences or emits a ready-made config.

Reports are JSON, traces are CSV with a fixed header, and both are byte
stable: re-running the same config reproduces identical files. The
optional SUBSPACE_LIMITS_THREADS environment variable caps the engine's
index-evaluation parallelism; results do not depend on it.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import linalg
from .convergence import (
    ConvergenceReport,
    CriterionReport,
    CriterionTraces,
    RuleEvaluationError,
    ScalarLimitReport,
    SubspaceSequence,
    Verdict,
    VolumeCheckReport,
    constant_orthogonal_example,
    criterion_traces,
    equivalence_suite,
    parity_split_example,
    self_projection_volume_check,
    subspace_i_converges,
)
from .ideals import Ideal, IdealKind
from .linalg import RankDeficiencyError, Subspace, orthonormalize

EXIT_CONVERGES = 0
EXIT_DOES_NOT_CONVERGE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3
EXIT_RUNTIME = 4

TRACE_HEADER = "n,gap,crit2_max_i,crit3_min_i,crit4_min_i,crit5_max_i"
REPORT_SCHEMA = "subspace-limits/report-v1"

DEFAULT_EPS = "0.5,0.1,0.01"
DEFAULT_HORIZON = 1000


class ConfigError(ValueError):
    """A config document failed validation; names the offending field."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"config field '{field}': {message}")


# --------------------------------------------------------------------------
# Built-in sequences and parametric families

BUILTIN_SEQUENCES = {
    "parity-split": {
        "builder": parity_split_example,
        "takes_variant": True,
        "summary": (
            "line in R^3: orthogonal to the limit on odd n, tilted toward it "
            "on even n; converges under the block ideal (amended variant) but "
            "not statistically and not in the usual sense"
        ),
        "default_config": {
            "sequence": {"builtin": "parity-split", "variant": "amended"},
            "ideal": {"kind": "blocks"},
            "horizon": 10000,
            "eps_grid": [0.5, 0.1, 0.01],
            "out_dir": "out",
        },
    },
    "orthogonal-constant": {
        "builder": lambda: constant_orthogonal_example() + (None,),
        "takes_variant": False,
        "summary": (
            "constant line span{e1} in R^2 against V = span{e2}: gap is "
            "identically 1, the self-projection volumes are identically 0; "
            "witnesses the one-way direction of the volume check"
        ),
        "default_config": {
            "sequence": {"builtin": "orthogonal-constant"},
            "ideal": {"kind": "density"},
            "horizon": 1000,
            "eps_grid": [0.5, 0.1, 0.01],
            "out_dir": "out",
        },
    },
}


def _complete_frame(v_rows: np.ndarray, d: int, rng: np.random.Generator) -> np.ndarray:
    """Extend orthonormal rows to a full orthonormal frame of R^d."""
    rows = [r for r in v_rows]
    while len(rows) < d:
        w = rng.standard_normal(d)
        for b in rows:
            w -= (w @ b) * b
        for b in rows:
            w -= (w @ b) * b
        norm = np.linalg.norm(w)
        if norm > 1e-6:
            rows.append(w / norm)
    return np.vstack(rows)


def _sine_profile(profile: dict, k: int, field: str):
    """Compile a profile spec into a function n -> per-vector sines."""
    kind = profile.get("kind")

    def per_vector(value, name) -> np.ndarray:
        arr = np.asarray(value, dtype=float).reshape(-1)
        if arr.size == 1:
            arr = np.repeat(arr, k)
        if arr.size != k:
            raise ConfigError(f"{field}.{name}", f"expected a scalar or {k} values")
        if np.any(arr < 0) or np.any(arr > 1):
            raise ConfigError(f"{field}.{name}", "sine magnitudes must lie in [0, 1]")
        return arr

    if kind == "constant":
        g = per_vector(profile.get("value", 0.0), "value")
        return lambda n: g
    if kind == "power_decay":
        a = per_vector(profile.get("scale", 1.0), "scale")
        p = float(profile.get("exponent", 1.0))
        if p <= 0:
            raise ConfigError(f"{field}.exponent", "must be positive")
        return lambda n: np.minimum(1.0, a / n**p)
    if kind == "parity":
        g = per_vector(profile.get("odd_value", 1.0), "odd_value")
        a = per_vector(profile.get("even_scale", 1.0), "even_scale")
        p = float(profile.get("even_exponent", 1.0))
        if p <= 0:
            raise ConfigError(f"{field}.even_exponent", "must be positive")
        return lambda n: g if n % 2 == 1 else np.minimum(1.0, a / n**p)
    raise ConfigError(
        f"{field}.kind", f"unknown profile kind {kind!r}; "
        "expected 'constant', 'power_decay' or 'parity'"
    )


def rotating_family(
    ambient_dim: int,
    k: int,
    profile: dict,
    seed: int = 0,
    limit_basis: Optional[np.ndarray] = None,
    field: str = "sequence.params",
):
    """Sequences rotating each limit direction toward a fixed companion.

    A deterministic orthonormal frame is drawn from ``seed`` (its first k
    rows span the candidate limit unless ``limit_basis`` overrides them).
    Basis vector i of U_n is cos(theta) v_i + sin(theta) w_i where w_i is
    the i-th companion direction and sin(theta) = profile(n)[i], so the
    gap to the limit is exactly max_i profile(n)[i]. Profiles:

    * ``{"kind": "constant", "value": g}``
    * ``{"kind": "power_decay", "scale": a, "exponent": p}``  (a / n^p)
    * ``{"kind": "parity", "odd_value": g, "even_scale": a,
      "even_exponent": p}``

    ``value``/``scale``/``odd_value``/``even_scale`` accept a scalar or a
    list of k values.
    """
    if ambient_dim < 2 * k:
        raise ConfigError(
            f"{field}.ambient_dim", f"rotating family needs ambient_dim >= 2k = {2 * k}"
        )
    rng = np.random.default_rng(seed)
    if limit_basis is not None:
        v_rows = orthonormalize(limit_basis).basis
        if v_rows.shape != (k, ambient_dim):
            raise ConfigError(
                "limit_basis", f"expected {k} rows of length {ambient_dim}"
            )
        frame = _complete_frame(v_rows, ambient_dim, rng)
    else:
        frame = _complete_frame(np.empty((0, ambient_dim)), ambient_dim, rng)
    V = Subspace(frame[:k])
    companions = frame[k : 2 * k]
    sines = _sine_profile(profile, k, f"{field}.profile")

    def rule(n: int) -> Subspace:
        s = sines(n)
        c = np.sqrt(1.0 - s * s)
        return Subspace(c[:, None] * V.basis + s[:, None] * companions)

    seq = SubspaceSequence(
        ambient_dim=ambient_dim,
        k=k,
        rule=rule,
        description=f"rotating family (k={k}, d={ambient_dim}, seed={seed}, "
        f"profile={profile.get('kind')})",
    )
    return seq, V


# --------------------------------------------------------------------------
# Experiment configuration


@dataclass
class ExperimentConfig:
    sequence: dict
    ideal: dict
    horizon: int
    eps_grid: list[float]
    out_dir: str
    limit_basis: Optional[list] = None

    def validate(self) -> None:
        if not isinstance(self.sequence, dict):
            raise ConfigError("sequence", "must be an object")
        keys = {"builtin", "family"} & set(self.sequence)
        if len(keys) != 1:
            raise ConfigError("sequence", "needs exactly one of 'builtin' or 'family'")
        if "builtin" in self.sequence:
            name = self.sequence["builtin"]
            if name not in BUILTIN_SEQUENCES:
                raise ConfigError(
                    "sequence.builtin",
                    f"unknown name {name!r}; choose from {sorted(BUILTIN_SEQUENCES)}",
                )
            variant = self.sequence.get("variant")
            if variant is not None and not BUILTIN_SEQUENCES[name]["takes_variant"]:
                raise ConfigError("sequence.variant", f"{name!r} takes no variant")
            if variant is not None and variant not in ("printed", "amended"):
                raise ConfigError("sequence.variant", "must be 'printed' or 'amended'")
        else:
            if self.sequence["family"] != "rotating":
                raise ConfigError(
                    "sequence.family", "the only parametric family is 'rotating'"
                )
            params = self.sequence.get("params")
            if not isinstance(params, dict):
                raise ConfigError("sequence.params", "must be an object")
            for key in ("ambient_dim", "k", "profile"):
                if key not in params:
                    raise ConfigError(f"sequence.params.{key}", "is required")
        if not isinstance(self.ideal, dict) or "kind" not in self.ideal:
            raise ConfigError("ideal", "must be an object with a 'kind'")
        try:
            IdealKind(self.ideal["kind"])
        except ValueError:
            raise ConfigError(
                "ideal.kind", f"must be one of {[k.value for k in IdealKind]}"
            ) from None
        tau = self.ideal.get("tau", 0.01)
        if not isinstance(tau, (int, float)) or not 0 < tau < 0.5:
            raise ConfigError("ideal.tau", "must be a number in (0, 0.5)")
        if not isinstance(self.horizon, int) or self.horizon < 16:
            raise ConfigError("horizon", "must be an integer >= 16")
        grid = self.eps_grid
        if (
            not isinstance(grid, list)
            or not grid
            or not all(isinstance(e, (int, float)) for e in grid)
        ):
            raise ConfigError("eps_grid", "must be a non-empty list of numbers")
        if any(e <= 0 for e in grid):
            raise ConfigError("eps_grid", "values must be strictly positive")
        if any(a <= b for a, b in zip(grid, grid[1:])):
            raise ConfigError("eps_grid", "values must be strictly decreasing")
        if not isinstance(self.out_dir, str) or not self.out_dir:
            raise ConfigError("out_dir", "must be a non-empty string")


CONFIG_KEYS = {"sequence", "ideal", "horizon", "eps_grid", "out_dir", "limit_basis"}


def load_config(path: str | Path) -> ExperimentConfig:
    """Parse and validate a JSON experiment config."""
    try:
        raw = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError("<document>", f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("<document>", "top level must be an object")
    unknown = set(raw) - CONFIG_KEYS
    if unknown:
        raise ConfigError(sorted(unknown)[0], "is not a recognized key")
    for key in ("sequence", "ideal", "horizon", "eps_grid"):
        if key not in raw:
            raise ConfigError(key, "is required")
    cfg = ExperimentConfig(
        sequence=raw["sequence"],
        ideal=raw["ideal"],
        horizon=raw["horizon"],
        eps_grid=raw["eps_grid"],
        out_dir=raw.get("out_dir", "out"),
        limit_basis=raw.get("limit_basis"),
    )
    cfg.validate()
    return cfg


def _ideal_from_spec(spec: dict) -> Ideal:
    kind = IdealKind(spec["kind"])
    if kind is IdealKind.DENSITY:
        return Ideal.density(float(spec.get("tau", 0.01)))
    return Ideal(kind)


def build_experiment(cfg: ExperimentConfig):
    """Materialize (sequence, candidate limit, ideal) from a validated config."""
    limit_rows = None
    if cfg.limit_basis is not None:
        try:
            limit_rows = np.asarray(cfg.limit_basis, dtype=float)
        except (TypeError, ValueError):
            raise ConfigError("limit_basis", "must be a numeric matrix (rows)") from None
        if limit_rows.ndim != 2:
            raise ConfigError("limit_basis", "must be a list of basis rows")

    if "builtin" in cfg.sequence:
        entry = BUILTIN_SEQUENCES[cfg.sequence["builtin"]]
        if entry["takes_variant"]:
            seq, V, _ = entry["builder"](cfg.sequence.get("variant", "amended"))
        else:
            seq, V, _ = entry["builder"]()
        if limit_rows is not None:
            V = orthonormalize(limit_rows)
            if V.ambient_dim != seq.ambient_dim or V.k != seq.k:
                raise ConfigError(
                    "limit_basis",
                    f"expected {seq.k} rows of length {seq.ambient_dim}",
                )
    else:
        params = cfg.sequence["params"]
        seq, V = rotating_family(
            ambient_dim=int(params["ambient_dim"]),
            k=int(params["k"]),
            profile=params["profile"],
            seed=int(params.get("seed", 0)),
            limit_basis=limit_rows,
        )
    return seq, V, _ideal_from_spec(cfg.ideal)


# --------------------------------------------------------------------------
# Output files


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def write_trace_csv(path: Path, traces: CriterionTraces) -> None:
    """Per-index worst-case trace of all criteria, byte stable across runs."""
    lines = [TRACE_HEADER]
    for i in range(traces.horizon):
        lines.append(
            ",".join(
                (
                    str(i + 1),
                    _fmt(traces.gap[i]),
                    _fmt(traces.residual[i].max()),
                    _fmt(traces.coefficient_mass[i].min()),
                    _fmt(traces.projection_norm[i].min()),
                    _fmt(traces.joint_volume[i].max()),
                )
            )
        )
    path.write_text("\n".join(lines) + "\n")


def _scalar_limit_to_dict(rep: ScalarLimitReport) -> dict:
    return {
        "candidate": rep.candidate,
        "overall": rep.overall.value,
        "per_epsilon": [
            {
                "epsilon": eps,
                "status": verdict.status.value,
                "mode": verdict.mode.value,
                "evidence": verdict.evidence,
            }
            for eps, verdict in rep.per_epsilon
        ],
    }


def _criterion_to_dict(crit: CriterionReport) -> dict:
    return {
        "name": crit.name,
        "candidate": crit.candidate,
        "overall": crit.overall.value,
        "per_vector": [_scalar_limit_to_dict(r) for r in crit.per_vector],
    }


def report_to_dict(
    report: ConvergenceReport,
    command: str,
    volume_check: Optional[VolumeCheckReport] = None,
) -> dict:
    doc = {
        "schema": REPORT_SCHEMA,
        "command": command,
        "ideal": report.ideal.describe(),
        "horizon": report.horizon,
        "eps_grid": list(report.eps_grid),
        "criteria": [_criterion_to_dict(c) for c in report.criteria],
        "overall": report.overall.value,
        "evidence": report.evidence,
    }
    if len(report.criteria) > 1:
        doc["agreement"] = {
            "overall_by_criterion": {
                name: verdict.value
                for name, verdict in report.overall_by_criterion().items()
            },
            "matrix": report.agreement_matrix(),
            "consistent": report.criteria_agree(),
        }
    if volume_check is not None:
        doc["volume_check"] = {
            "volume": _criterion_to_dict(volume_check.volume),
            "subspace_overall": volume_check.subspace_overall.value,
            "implication_holds": volume_check.implication_holds,
            "converse_falsified": volume_check.converse_falsified,
        }
    return doc


def write_report(path: Path, doc: dict) -> None:
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def read_report(path: str | Path) -> dict:
    """Parse a report file written by this CLI."""
    doc = json.loads(Path(path).read_text())
    if doc.get("schema") != REPORT_SCHEMA:
        raise ValueError(f"not a {REPORT_SCHEMA} document: {path}")
    return doc


def report_verdicts(doc: dict) -> dict:
    """Extract the verdict skeleton of a parsed report (for round-trips)."""
    return {
        "overall": doc["overall"],
        "criteria": {
            c["name"]: {
                "overall": c["overall"],
                "per_vector": [
                    [(e["epsilon"], e["status"]) for e in v["per_epsilon"]]
                    for v in c["per_vector"]
                ],
            }
            for c in doc["criteria"]
        },
    }


# --------------------------------------------------------------------------
# Subcommands


def _verdict_exit(verdict: Verdict) -> int:
    return {
        Verdict.CONVERGES: EXIT_CONVERGES,
        Verdict.DOES_NOT_CONVERGE: EXIT_DOES_NOT_CONVERGE,
        Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    }[verdict]


def _parse_eps(text: str) -> list[float]:
    try:
        grid = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ConfigError("eps_grid", f"could not parse {text!r}") from None
    return grid


def _config_from_args(args) -> ExperimentConfig:
    if args.config is not None:
        if args.builtin is not None:
            raise ConfigError("sequence", "give either a config file or a builtin name")
        cfg = load_config(args.config)
        if args.out_dir is not None:
            cfg.out_dir = args.out_dir
        return cfg
    if args.builtin is None:
        raise ConfigError("sequence", "give a builtin name or --config FILE")
    entry = BUILTIN_SEQUENCES.get(args.builtin)
    if entry is None:
        raise ConfigError(
            "sequence.builtin",
            f"unknown name {args.builtin!r}; choose from {sorted(BUILTIN_SEQUENCES)}",
        )
    sequence: dict = {"builtin": args.builtin}
    if entry["takes_variant"]:
        sequence["variant"] = args.variant or "amended"
    elif args.variant is not None:
        raise ConfigError("sequence.variant", f"{args.builtin!r} takes no variant")
    ideal_kind = args.ideal or entry["default_config"]["ideal"]["kind"]
    ideal: dict = {"kind": ideal_kind}
    if ideal_kind == "density":
        ideal["tau"] = args.tau
    cfg = ExperimentConfig(
        sequence=sequence,
        ideal=ideal,
        horizon=args.horizon,
        eps_grid=_parse_eps(args.eps),
        out_dir=args.out_dir or "out",
    )
    cfg.validate()
    return cfg


def _prepare(args):
    cfg = _config_from_args(args)
    seq, V, ideal = build_experiment(cfg)
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    traces = criterion_traces(seq, V, cfg.horizon)
    return cfg, seq, V, ideal, out_dir, traces


def cmd_analyze(args) -> int:
    cfg, seq, V, ideal, out_dir, traces = _prepare(args)
    report = subspace_i_converges(seq, V, ideal, cfg.eps_grid, cfg.horizon)
    doc = report_to_dict(report, "analyze")
    write_report(out_dir / "report.json", doc)
    write_trace_csv(out_dir / "trace.csv", traces)
    print(f"sequence: {seq.description}")
    print(f"ideal: {ideal.kind.value}   horizon: {cfg.horizon}   eps: {cfg.eps_grid}")
    for eps, verdict in report.criteria[0].per_vector[0].per_epsilon:
        print(f"  eps={eps:g}: {verdict.status.value} ({verdict.mode.value})")
    print(f"verdict: {report.overall.value}")
    print(f"wrote {out_dir / 'report.json'} and {out_dir / 'trace.csv'}")
    return _verdict_exit(report.overall)


def cmd_suite(args) -> int:
    cfg, seq, V, ideal, out_dir, traces = _prepare(args)
    report = equivalence_suite(
        seq, V, ideal, cfg.eps_grid, cfg.horizon, traces=traces
    )
    volume = self_projection_volume_check(
        seq, V, ideal, cfg.eps_grid, cfg.horizon, traces=traces
    )
    doc = report_to_dict(report, "suite", volume_check=volume)
    write_report(out_dir / "suite_report.json", doc)
    write_trace_csv(out_dir / "trace.csv", traces)
    print(f"sequence: {seq.description}")
    print(f"ideal: {ideal.kind.value}   horizon: {cfg.horizon}   eps: {cfg.eps_grid}")
    names = [c.name for c in report.criteria]
    width = max(len(n) for n in names)
    for crit in report.criteria:
        print(f"  {crit.name:<{width}}  {crit.overall.value}")
    matrix = report.agreement_matrix()
    print("agreement matrix (rows/cols in criterion order):")
    for row in matrix:
        print("  " + " ".join("=" if cell else "x" for cell in row))
    print(
        f"volume check: {volume.volume.overall.value} "
        f"(implication holds: {volume.implication_holds}, "
        f"converse falsified: {volume.converse_falsified})"
    )
    agree = report.criteria_agree()
    print(f"criteria agree: {agree}")
    print(f"wrote {out_dir / 'suite_report.json'} and {out_dir / 'trace.csv'}")
    return EXIT_CONVERGES if agree else EXIT_DOES_NOT_CONVERGE


def _load_matrix(path: str) -> np.ndarray:
    try:
        return np.loadtxt(path, ndmin=2)
    except ValueError:
        return np.loadtxt(path, ndmin=2, delimiter=",")


def cmd_gap(args) -> int:
    mu = _load_matrix(args.basis_u)
    mv = _load_matrix(args.basis_v)
    if mu.shape != mv.shape:
        raise ValueError(
            f"basis files must have matching shapes, got {mu.shape} and {mv.shape}"
        )
    U = orthonormalize(mu)
    V = orthonormalize(mv)
    print(f"{linalg.gap(U, V):.12g}")
    return EXIT_CONVERGES


def cmd_example(args) -> int:
    if args.name is None:
        for name, entry in sorted(BUILTIN_SEQUENCES.items()):
            print(f"{name}")
            print(f"    {entry['summary']}")
        return EXIT_CONVERGES
    entry = BUILTIN_SEQUENCES.get(args.name)
    if entry is None:
        raise ConfigError(
            "sequence.builtin",
            f"unknown name {args.name!r}; choose from {sorted(BUILTIN_SEQUENCES)}",
        )
    print(f"{args.name}: {entry['summary']}")
    if args.emit_config:
        path = Path(args.emit_config)
        path.write_text(json.dumps(entry["default_config"], indent=2, sort_keys=True) + "\n")
        print(f"wrote {path}")
    return EXIT_CONVERGES


# --------------------------------------------------------------------------
# Parser and entry point


class _Parser(argparse.ArgumentParser):
    # exit code 2 is reserved for inconclusive verdicts; usage errors use 3
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_experiment_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "builtin",
        nargs="?",
        help=f"built-in sequence name ({', '.join(sorted(BUILTIN_SEQUENCES))})",
    )
    sub.add_argument("--config", help="JSON experiment config file")
    sub.add_argument(
        "--variant",
        choices=("printed", "amended"),
        help="variant for built-ins that take one (default: amended)",
    )
    sub.add_argument(
        "--ideal",
        choices=[k.value for k in IdealKind],
        help="ideal to judge exceptional sets against (default: the built-in's choice)",
    )
    sub.add_argument(
        "--tau", type=float, default=0.01, help="density threshold (density ideal only)"
    )
    sub.add_argument(
        "--horizon", type=int, default=DEFAULT_HORIZON, help="number of indices to evaluate"
    )
    sub.add_argument(
        "--eps",
        default=DEFAULT_EPS,
        help="comma-separated, strictly decreasing epsilon grid",
    )
    sub.add_argument("--out-dir", help="directory for report and trace files")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="subspace-limits",
        description="Subspace gap computations and ideal-based convergence analysis.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_analyze = sub.add_parser(
        "analyze", help="run one experiment and report the convergence verdict"
    )
    _add_experiment_flags(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_suite = sub.add_parser(
        "suite", help="run all five equivalence criteria plus the volume check"
    )
    _add_experiment_flags(p_suite)
    p_suite.set_defaults(func=cmd_suite)

    p_gap = sub.add_parser("gap", help="gap between the row spans of two matrix files")
    p_gap.add_argument("basis_u", help="file with one spanning vector per row")
    p_gap.add_argument("basis_v", help="file with one spanning vector per row")
    p_gap.set_defaults(func=cmd_gap)

    p_example = sub.add_parser("example", help="describe built-in sequences")
    p_example.add_argument("name", nargs="?", help="built-in sequence name")
    p_example.add_argument(
        "--emit-config", metavar="FILE", help="write a ready-to-run config for NAME"
    )
    p_example.set_defaults(func=cmd_example)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuleEvaluationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except RankDeficiencyError as exc:
        print(f"error: rank-deficient input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
