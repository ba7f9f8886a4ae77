"""Command-line front-end.

Four subcommands:

* ``bounds``  sample the error lower-bound curves to CSV or JSON,
* ``cloner``  build one machine and report its full error analysis,
* ``lemmas``  run the seeded random sweeps of the inequality suite,
* ``verify``  optimize and sweep to confirm the bounds are tight floors.

Exit codes: 0 success, 1 usage or domain error, 2 I/O error,
3 invariant violation, 4 attainment failure. With a fixed ``--seed``
every emitted data file is reproduced byte for byte; the run manifest
carries the only volatile field (its timestamp) isolated on its own line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .bounds import (
    ae_lower_bound,
    hb_bound,
    re_lower_bound,
    sample_curve,
    table_csv,
)
from .cloners import ClonerSpec, closed_form_re_s, closed_form_re_wz
from .cloning import TwoStateSet, unitarity_residual
from .geometry import ALL_SWEEPS
from .search import verify_point

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_VIOLATION = 3
EXIT_ATTAINMENT = 4

ATTAINMENT_TOL = 1e-5
UNDEFINED_RE_TEXT = "undefined (identical ideal outputs)"


@dataclass(frozen=True)
class RunManifest:
    """Provenance record embedded in or accompanying every artifact."""

    command: str
    parameters: dict
    seed: int
    tool_version: str
    timestamp: str

    @classmethod
    def create(cls, command: str, parameters: dict, seed: int) -> "RunManifest":
        return cls(
            command=command,
            parameters=parameters,
            seed=seed,
            tool_version=__version__,
            timestamp=datetime.now(timezone.utc).isoformat(),
        )

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "seed": self.seed,
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
        }


class _Parser(argparse.ArgumentParser):
    """argparse with the exit-code contract (usage errors exit 1)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _env_seed() -> int:
    return int(os.environ.get("CLONEBOUND_SEED", "0"))


def _env_tol() -> float:
    return float(os.environ.get("CLONEBOUND_TOL", "1e-10"))


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _write_text(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8")


def build_parser() -> _Parser:
    parser = _Parser(prog="clonebound", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="emit the lower-bound curves")
    p.add_argument("--z-min", type=float, default=0.0)
    p.add_argument("--z-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=201)
    p.add_argument("--out", type=str, default=".", help="output directory")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("cloner", help="build and analyze one machine")
    p.add_argument("kind", choices=("sym", "asym", "wz"))
    p.add_argument("--z", type=float, default=None,
                   help="overlap of a canonical pair (alternative to --states)")
    p.add_argument("--states", type=str, default=None,
                   help="JSON file with explicit 'phi' and 'psi' amplitude lists")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--favored", choices=("phi", "psi"), default="phi")
    p.add_argument("--out", type=str, default=None, help="report file (default stdout)")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_cloner)

    p = sub.add_parser("lemmas", help="run the inequality sweeps")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--dims", type=str, default="2-8",
                   help="dimensions, e.g. '2-8' or '2,4,8'")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("verify", help="check the bounds are tight floors")
    p.add_argument("--z", type=str, required=True,
                   help="overlap value or comma list, each in (0, 0.99]")
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--sweep-trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", type=str, default=None, help="report file (default stdout)")
    p.set_defaults(func=cmd_verify)

    return parser


def _resolve_seed(args) -> int:
    return args.seed if args.seed is not None else _env_seed()


def cmd_bounds(args) -> int:
    if not (0.0 <= args.z_min < args.z_max <= 1.0) or args.steps < 2:
        print(
            f"clonebound bounds: invalid range [{args.z_min}, {args.z_max}] "
            f"with {args.steps} steps",
            file=sys.stderr,
        )
        return EXIT_USAGE
    seed = _resolve_seed(args)
    curve_re = sample_curve("re_lower_bound", re_lower_bound,
                            args.z_min, args.z_max, args.steps)
    curve_ae = sample_curve("ae_lower_bound", ae_lower_bound,
                            args.z_min, args.z_max, args.steps)
    curve_hb = sample_curve("hb_bound", hb_bound, args.z_min, args.z_max, args.steps)
    manifest = RunManifest.create(
        "bounds",
        {
            "z_min": args.z_min,
            "z_max": args.z_max,
            "steps": args.steps,
            "format": args.format,
        },
        seed,
    )
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        if args.format == "csv":
            _write_text(out_dir / "fig1.csv", curve_re.to_csv())
            _write_text(
                out_dir / "fig2.csv",
                table_csv(
                    ("z", "ae_bound", "hb_bound"),
                    (curve_ae.grid, curve_ae.values, curve_hb.values),
                ),
            )
            _write_text(
                out_dir / "run.manifest.json",
                _dump_json(
                    {"artifacts": ["fig1.csv", "fig2.csv"],
                     "manifest": manifest.as_dict()}
                ),
            )
            written = ["fig1.csv", "fig2.csv", "run.manifest.json"]
        else:
            fig1 = curve_re.to_json_dict()
            fig1["manifest"] = manifest.as_dict()
            fig2 = {
                "name": "fig2",
                "z": [float(v) for v in curve_ae.grid],
                "ae_bound": [float(v) for v in curve_ae.values],
                "hb_bound": [float(v) for v in curve_hb.values],
                "manifest": manifest.as_dict(),
            }
            _write_text(out_dir / "fig1.json", _dump_json(fig1))
            _write_text(out_dir / "fig2.json", _dump_json(fig2))
            written = ["fig1.json", "fig2.json"]
    except OSError as exc:
        print(f"clonebound bounds: cannot write to {out_dir}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {', '.join(written)} to {out_dir}")
    return EXIT_OK


def _load_state_file(path: str, dim_flag: int):
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    states = {}
    for key in ("phi", "psi"):
        if key not in payload:
            raise ValueError(f"state file is missing key {key!r}")
        pairs = np.asarray(payload[key], dtype=float)
        if pairs.ndim != 2 or pairs.shape[1] != 2 or pairs.shape[0] < 2:
            raise ValueError(f"state {key!r} must be a list of [re, im] pairs")
        vec = pairs[:, 0] + 1j * pairs[:, 1]
        n = np.linalg.norm(vec)
        if n == 0.0:
            raise ValueError(f"state {key!r} is the zero vector")
        if abs(n - 1.0) > 1e-6:
            print(
                f"clonebound cloner: warning: {key} renormalized "
                f"(norm was {n:.9g})",
                file=sys.stderr,
            )
        states[key] = vec / n
    if states["phi"].shape != states["psi"].shape:
        raise ValueError("phi and psi must have equal dimension")
    return TwoStateSet.from_states(states["phi"], states["psi"])


def cmd_cloner(args) -> int:
    if (args.z is None) == (args.states is None):
        print("clonebound cloner: provide exactly one of --z or --states",
              file=sys.stderr)
        return EXIT_USAGE
    seed = _resolve_seed(args)
    try:
        if args.states is not None:
            set_ = _load_state_file(args.states, args.dim)
        else:
            if not 0.0 <= args.z <= 1.0:
                raise ValueError(f"overlap z must be in [0, 1], got {args.z}")
            set_ = TwoStateSet.at_overlap(args.z, args.dim)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"clonebound cloner: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if set_.z >= 1.0 - 1e-12:
        print("clonebound cloner: identical states clone ideally; "
              "relative error undefined", file=sys.stderr)
        return EXIT_USAGE

    machine = {
        "sym": ClonerSpec.symmetric(),
        "asym": ClonerSpec.asymmetric(args.favored),
        "wz": ClonerSpec.wootters_zurek(),
    }[args.kind]
    result = machine.build(set_)

    z = set_.z
    closed = {
        "re_floor": float(re_lower_bound(z)),
        "ae_floor": float(ae_lower_bound(z)),
        "hb_floor": float(hb_bound(z)),
        "re_sym": closed_form_re_s(z),
        "re_wz_quoted": closed_form_re_wz(z),
    }
    manifest = RunManifest.create(
        "cloner",
        {"kind": args.kind, "z": z, "dim": set_.dim,
         "favored": args.favored if args.kind == "asym" else None,
         "states": args.states},
        seed,
    )
    report = {
        "kind": args.kind,
        "z": z,
        "delta": result.set.delta,
        "Delta": result.set.delta_product,
        "inputs": {
            "phi": [[float(a.real), float(a.imag)] for a in set_.phi],
            "psi": [[float(a.real), float(a.imag)] for a in set_.psi],
        },
        "per_state": {
            "phi": {"x": result.a_phi.x, "delta_s": result.a_phi.delta_s},
            "psi": {"x": result.a_psi.x, "delta_s": result.a_psi.delta_s},
        },
        "ae": result.ae,
        "re": result.re if result.re is not None else UNDEFINED_RE_TEXT,
        "closed_form": closed,
        "unitarity_residual": unitarity_residual(result),
        "manifest": manifest.as_dict(),
    }
    text = _dump_json(report)
    if args.out is None:
        sys.stdout.write(text)
    else:
        try:
            _write_text(Path(args.out), text)
        except OSError as exc:
            print(f"clonebound cloner: cannot write {args.out}: {exc}",
                  file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


def _parse_dims(text: str):
    text = text.strip()
    if "-" in text and "," not in text:
        lo, hi = text.split("-", 1)
        dims = tuple(range(int(lo), int(hi) + 1))
    else:
        dims = tuple(int(part) for part in text.split(","))
    if not dims or any(d < 2 for d in dims):
        raise ValueError(f"dimensions must all be >= 2, got {text!r}")
    return dims


def cmd_lemmas(args) -> int:
    if args.trials < 1:
        print("clonebound lemmas: --trials must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        dims = _parse_dims(args.dims)
    except ValueError as exc:
        print(f"clonebound lemmas: {exc}", file=sys.stderr)
        return EXIT_USAGE
    seed = _resolve_seed(args)
    tol = args.tol if args.tol is not None else _env_tol()
    total_violations = 0
    for name, sweep in ALL_SWEEPS:
        r = sweep(args.trials, dims=dims, seed=seed, tol=tol)
        total_violations += r.violations
        print(
            f"{name}: trials={r.trials} min_slack={r.min_slack:.6e} "
            f"violations={r.violations}"
        )
    if total_violations:
        print(f"clonebound lemmas: {total_violations} violations "
              f"(implementation bug: these are theorems)", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        z_values = [float(part) for part in args.z.split(",") if part.strip()]
    except ValueError:
        print(f"clonebound verify: cannot parse --z {args.z!r}", file=sys.stderr)
        return EXIT_USAGE
    if not z_values or any(not 0.0 < z <= 0.99 for z in z_values):
        print("clonebound verify: every z must lie in (0, 0.99]", file=sys.stderr)
        return EXIT_USAGE
    if args.restarts < 1 or args.sweep_trials < 1:
        print("clonebound verify: --restarts and --sweep-trials must be >= 1",
              file=sys.stderr)
        return EXIT_USAGE
    seed = _resolve_seed(args)
    records = [
        verify_point(z, restarts=args.restarts, seed=seed,
                     sweep_trials=args.sweep_trials)
        for z in z_values
    ]
    total_violations = sum(r.violations for r in records)
    max_gap = max(r.attainment_gap for r in records)
    manifest = RunManifest.create(
        "verify",
        {"z": z_values, "restarts": args.restarts,
         "sweep_trials": args.sweep_trials},
        seed,
    )
    report = {
        "points": [r.as_dict() for r in records],
        "violations": total_violations,
        "max_attainment_gap": max_gap,
        "manifest": manifest.as_dict(),
    }
    text = _dump_json(report)
    if args.out is None:
        sys.stdout.write(text)
    else:
        try:
            _write_text(Path(args.out), text)
        except OSError as exc:
            print(f"clonebound verify: cannot write {args.out}: {exc}",
                  file=sys.stderr)
            return EXIT_IO
    if total_violations:
        print(f"clonebound verify: {total_violations} floor violations",
              file=sys.stderr)
        return EXIT_VIOLATION
    if max_gap >= ATTAINMENT_TOL:
        print(f"clonebound verify: attainment gap {max_gap:.3e} "
              f"exceeds {ATTAINMENT_TOL}", file=sys.stderr)
        return EXIT_ATTAINMENT
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse raises for --help/--version (code 0) and usage errors.
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
