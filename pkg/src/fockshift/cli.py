"""Command-line front end: JSON config ingestion, command dispatch, and
report/CSV emission.

Subcommands: check, commutant, region, cesaro, spectra.  Every report embeds
the fully resolved configuration; all content except the timing block is
byte-identical across runs of the same config and version.  Exit code 0 means
every executed check passed (a divergence finding is not a failure), 1 means
a check failed, 2 means a precondition or configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from dataclasses import dataclass
from typing import Any

import numpy as np

from .words import Word, parse_word
from .weights import (
    DIVERGING,
    ConstantWeights,
    FinitePerturbationWeights,
    PeriodicWeights,
    ScaledWeights,
    TwoLetterRunWeights,
    WeightSystem,
    check_cocycles,
    check_intertwining,
    commutant_mu,
    condition6_sup,
    table_from_strings,
)
from .fock import TruncatedFock, commutation_defect, norm_check, vacuum_kernel_check
from .algebra import (
    FourierElement,
    cesaro_sum,
    commutant_extract,
    operator_from_fourier,
    pk_polynomial,
)
from .eigen import GridSpec, region_sample, write_region_csv
from .spectra import (
    MODE_LEFT_GROWTH,
    MODE_RIGHT,
    MODE_ZERO_LEFT_INVERSE,
    left_growth_certificate,
    right_membership,
    zero_left_inverses,
)

DEFAULT_DEPTH = 8
DEFAULT_TOLERANCE = 1e-10
DEFAULT_EPSILON = 0.02

POSITIVITY_MESSAGE = "weights must be strictly positive (every lambda_{i,w} > 0)"


class ConfigError(ValueError):
    """A configuration document violated the schema."""


@dataclass
class RunConfig:
    weights: WeightSystem
    document: dict
    depth: int
    tolerance: float
    epsilon: float

    def echo(self) -> dict:
        return {
            "weights": self.document,
            "depth": self.depth,
            "tolerance": self.tolerance,
            "epsilon": self.epsilon,
        }


def _expect(condition: bool, path: str, message: str) -> None:
    if not condition:
        raise ConfigError(f"{path}: {message}")


def _positive_number(value: Any, path: str) -> float:
    _expect(isinstance(value, (int, float)) and not isinstance(value, bool), path, "expected a number")
    if not float(value) > 0:
        raise ConfigError(f"{path}: {POSITIVITY_MESSAGE}")
    return float(value)


def _positive_list(value: Any, n: int, path: str) -> tuple[float, ...]:
    _expect(isinstance(value, list), path, "expected a list")
    _expect(len(value) == n, path, f"expected {n} entries")
    return tuple(_positive_number(v, f"{path}[{j}]") for j, v in enumerate(value))


def _weight_table(value: Any, n: int, path: str) -> dict:
    _expect(isinstance(value, dict), path, "expected an object with 'i:w' keys")
    for key, entry in value.items():
        _positive_number(entry, f"{path}.{key}")
    try:
        return table_from_strings(value, n)
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


FAMILY_FIELDS = {
    "constant": {"value"},
    "scaled": {"scales"},
    "finite_perturbation": {"cutoff", "table", "tail"},
    "periodic": {"period", "remainders"},
    "two_letter_m": {"m", "c"},
}

RUN_FIELDS = {"depth", "tolerance", "epsilon"}


def parse_config(document: Any) -> RunConfig:
    """Validate a weight-system document (strict: unknown fields rejected) and
    resolve the run defaults."""
    _expect(isinstance(document, dict), "$", "config must be a JSON object")
    _expect("n" in document, "$.n", "missing alphabet size")
    _expect("family" in document, "$.family", "missing weight family")
    n = document["n"]
    _expect(isinstance(n, int) and not isinstance(n, bool) and n >= 1, "$.n", "expected an integer >= 1")
    family = document["family"]
    _expect(family in FAMILY_FIELDS, "$.family", f"unknown family {family!r}, expected one of {sorted(FAMILY_FIELDS)}")

    allowed = {"n", "family"} | FAMILY_FIELDS[family] | RUN_FIELDS
    for key in document:
        _expect(key in allowed, f"$.{key}", f"unknown field for family {family!r}")
    for key in FAMILY_FIELDS[family]:
        _expect(key in document, f"$.{key}", "missing required field")

    try:
        if family == "constant":
            weights: WeightSystem = ConstantWeights(n, _positive_number(document["value"], "$.value"))
        elif family == "scaled":
            weights = ScaledWeights(n, _positive_list(document["scales"], n, "$.scales"))
        elif family == "finite_perturbation":
            cutoff = document["cutoff"]
            _expect(isinstance(cutoff, int) and cutoff >= 0, "$.cutoff", "expected an integer >= 0")
            weights = FinitePerturbationWeights(
                n,
                cutoff,
                _weight_table(document["table"], n, "$.table"),
                _positive_list(document["tail"], n, "$.tail"),
            )
        elif family == "periodic":
            period = document["period"]
            _expect(isinstance(period, int) and period >= 1, "$.period", "expected an integer >= 1")
            weights = PeriodicWeights(n, period, _weight_table(document["remainders"], n, "$.remainders"))
        else:
            _expect(n == 2, "$.n", "family 'two_letter_m' requires n = 2")
            weights = TwoLetterRunWeights(
                _positive_number(document["m"], "$.m"),
                _positive_number(document["c"], "$.c"),
            )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"$.{family}: {exc}") from exc

    depth = document.get("depth", DEFAULT_DEPTH)
    _expect(isinstance(depth, int) and depth >= 1, "$.depth", "expected an integer >= 1")
    tolerance = document.get("tolerance", DEFAULT_TOLERANCE)
    _expect(isinstance(tolerance, (int, float)) and tolerance > 0, "$.tolerance", "expected a positive number")
    epsilon = document.get("epsilon", DEFAULT_EPSILON)
    _expect(isinstance(epsilon, (int, float)) and epsilon > 0, "$.epsilon", "expected a positive number")
    return RunConfig(weights, dict(document), depth, float(tolerance), float(epsilon))


# ---------------------------------------------------------------------------
# serialization helpers
# ---------------------------------------------------------------------------


def _to_jsonable(value: Any) -> Any:
    if isinstance(value, Word):
        return str(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, dict):
        return {str(_to_jsonable(k)): _to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, frozenset, set)):
        return [_to_jsonable(v) for v in value]
    return value


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def _emit_report(report: dict, path: str | None) -> None:
    text = json.dumps(_to_jsonable(report), indent=2, sort_keys=True) + "\n"
    if path:
        _write_atomic(path, text)
    else:
        sys.stdout.write(text)


def parse_lambda(text: str) -> tuple[complex, ...]:
    """Comma-separated complex literals, 'a+bi' with reals as shorthand."""
    values = []
    for token in text.split(","):
        token = token.strip().replace("i", "j")
        try:
            values.append(complex(token))
        except ValueError as exc:
            raise ConfigError(f"malformed complex literal {token!r}") from exc
    return tuple(values)


def _worker_count() -> int:
    raw = os.environ.get("FOCKSHIFT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigError(f"FOCKSHIFT_THREADS must be an integer, got {raw!r}") from None


class _CheckRecorder:
    def __init__(self):
        self.entries: list[dict] = []
        self.timing: dict[str, float] = {}

    def run(self, name: str, tolerance: float, fn) -> Any:
        start = time.perf_counter()
        defect, witness, result = fn()
        self.timing[name] = time.perf_counter() - start
        self.entries.append(
            {
                "check": name,
                "max_defect": defect,
                "tolerance": tolerance,
                "pass": bool(defect <= tolerance),
                "witness": witness,
            }
        )
        return result

    def skip(self, name: str, reason: str) -> None:
        self.entries.append({"check": name, "skipped": True, "reason": reason})

    @property
    def all_passed(self) -> bool:
        return all(entry.get("pass", True) for entry in self.entries)


def _print_check_lines(entries: list[dict]) -> None:
    for entry in entries:
        if entry.get("skipped"):
            print(f"check {entry['check']}: SKIPPED ({entry['reason']})")
        else:
            status = "PASS" if entry["pass"] else "FAIL"
            print(
                f"check {entry['check']}: {status} "
                f"(defect {entry['max_defect']:.3e}, tolerance {entry['tolerance']:.1e})"
            )


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _cmd_check(config: RunConfig, args) -> tuple[int, dict]:
    ws = config.weights
    recorder = _CheckRecorder()
    tol = config.tolerance

    cocycle_depth = min(config.depth, 6)
    recorder.run(
        "cocycles",
        tol,
        lambda: (lambda rep: (rep.max_defect, rep.witness, rep))(check_cocycles(ws, None, cocycle_depth)),
    )

    condition = condition6_sup(ws, config.depth)
    recorder.entries.append(
        {
            "check": "condition6",
            "max_defect": 0.0,
            "tolerance": tol,
            "pass": True,
            "witness": {
                "sup_value": condition.value,
                "verdict": condition.verdict,
                "argmax": [condition.witness[0], condition.witness[1]],
                "certificate": condition.certificate,
            },
        }
    )

    space = TruncatedFock(ws.n, config.depth)
    if condition.verdict == DIVERGING:
        recorder.skip("intertwining", "commutant weights diverge; identity not meaningful here")
        recorder.skip("commutation", "right shifts unbounded; commutant checks skipped")
    else:
        recorder.run(
            "intertwining",
            tol,
            lambda: (lambda rep: (rep.max_defect, rep.witness, rep))(check_intertwining(ws, cocycle_depth)),
        )
        recorder.run(
            "commutation",
            tol,
            lambda: (lambda rep: (rep.max_defect, rep.witness, rep))(commutation_defect(space, ws)),
        )

    recorder.run(
        "norms",
        max(tol, 1e-8),  # power-iteration accuracy floor
        lambda: (
            lambda reports: (
                max(r.gap for r in reports),
                [{"letter": r.letter, "operator_norm": r.operator_norm, "weight_sup": r.weight_sup} for r in reports],
                reports,
            )
        )(norm_check(space, ws)),
    )
    recorder.run(
        "vacuum_kernel",
        tol,
        lambda: (
            lambda rep: (
                max(float(abs(rep.joint_kernel_dim - 1)), rep.projection_defect or 0.0),
                {"joint_kernel_dim": rep.joint_kernel_dim, "projection_defect": rep.projection_defect},
                rep,
            )
        )(vacuum_kernel_check(space, ws)),
    )

    _print_check_lines(recorder.entries)
    report = {
        "command": "check",
        "config": config.echo(),
        "checks": recorder.entries,
        "timing_seconds": recorder.timing,
    }
    return (0 if recorder.all_passed else 1), report


def _cmd_commutant(config: RunConfig, args) -> tuple[int, dict]:
    ws = config.weights
    condition = condition6_sup(ws, config.depth)
    if condition.verdict == DIVERGING:
        print(f"commutant weights diverge: {condition.certificate}")
        report = {
            "command": "commutant",
            "config": config.echo(),
            "condition6": {"verdict": condition.verdict, "certificate": condition.certificate},
            "mu_table": None,
        }
        return 0, report

    table = {}
    basis = TruncatedFock(ws.n, config.depth).basis
    for w in basis.words():
        for i in range(1, ws.n + 1):
            table[f"{i}:{w}"] = commutant_mu(ws, i, w)
    for key in table:
        print(f"mu {key} = {table[key]:.17g}")

    # round-trip a deterministic polynomial through coefficient extraction
    space = TruncatedFock(ws.n, config.depth)
    rng = np.random.default_rng(0)
    support_cap = max(0, min(3, config.depth - 2))
    coeffs = {}
    for w in TruncatedFock(ws.n, support_cap).basis.words():
        coeffs[w] = complex(rng.standard_normal(), rng.standard_normal())
    element = FourierElement.build(coeffs, ws)
    extraction = commutant_extract(operator_from_fourier(element, space), ws)
    recovery = max(abs(extraction.element.coeffs.get(w, 0.0) - a) for w, a in coeffs.items())
    defect = max(extraction.residual, recovery)
    passed = defect <= config.tolerance
    print(f"round-trip: {'PASS' if passed else 'FAIL'} (residual {extraction.residual:.3e}, recovery {recovery:.3e})")

    report = {
        "command": "commutant",
        "config": config.echo(),
        "condition6": {"verdict": condition.verdict, "sup_value": condition.value},
        "mu_table": table,
        "round_trip": {
            "residual": extraction.residual,
            "coefficient_recovery": recovery,
            "tolerance": config.tolerance,
            "pass": passed,
        },
    }
    return (0 if passed else 1), report


def _cmd_region(config: RunConfig, args) -> tuple[int, dict]:
    if not args.grid:
        raise ConfigError("region requires --grid lo:hi:step")
    grid = GridSpec.parse(args.grid)
    samples = region_sample(config.weights, grid, config.depth, config.epsilon, workers=_worker_count())
    if args.out:
        import io

        buffer = io.StringIO()
        write_region_csv(samples, buffer)
        _write_atomic(args.out, buffer.getvalue())
    else:
        write_region_csv(samples, sys.stdout)
    counts = {"inside": 0, "outside": 0, "inconclusive": 0}
    for s in samples:
        counts[s.verdict] += 1
    report = {
        "command": "region",
        "config": config.echo(),
        "grid": {"lo": grid.lo, "hi": grid.hi, "step": grid.step},
        "samples": len(samples),
        "verdicts": counts,
        "csv": args.out,
    }
    return 0, report


def _load_fourier_coeffs(path: str) -> dict[Word, complex]:
    with open(path) as handle:
        document = json.load(handle)
    if not isinstance(document, dict) or "coeffs" not in document:
        raise ConfigError(f"{path}: expected an object with a 'coeffs' field")
    out = {}
    for key, pair in document["coeffs"].items():
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ConfigError(f"{path}: coeffs.{key}: expected [re, im]")
        out[parse_word(key)] = complex(pair[0], pair[1])
    return out


def _cmd_cesaro(config: RunConfig, args) -> tuple[int, dict]:
    if not args.coeffs:
        raise ConfigError("cesaro requires --coeffs PATH")
    coeffs = _load_fourier_coeffs(args.coeffs)
    order = args.k or 4
    ws = config.weights
    space = TruncatedFock(ws.n, config.depth)
    element = FourierElement.build(coeffs, ws)
    if element.support_length() > config.depth:
        raise ConfigError("coefficient support exceeds the configured depth")
    operator = operator_from_fourier(element, space)
    smoothed = cesaro_sum(operator, order)
    polynomial = pk_polynomial(element, order, space)
    worst = 0.0
    witness = None
    for level in range(max(config.depth - order, 0) + 1):
        for v in space.basis.level_words(level):
            defect = float(np.linalg.norm(smoothed.column(v) - polynomial.column(v)))
            if defect > worst:
                worst, witness = defect, v
    passed = worst <= config.tolerance
    print(
        f"cesaro order {order}: {'PASS' if passed else 'FAIL'} "
        f"(max column defect {worst:.3e} over |v| <= {max(config.depth - order, 0)})"
    )
    report = {
        "command": "cesaro",
        "config": config.echo(),
        "order": order,
        "max_defect": worst,
        "witness": witness,
        "tolerance": config.tolerance,
        "pass": passed,
    }
    return (0 if passed else 1), report


def _cmd_spectra(config: RunConfig, args) -> tuple[int, dict]:
    if not args.lam:
        raise ConfigError("spectra requires at least one --lambda LIST")
    mode = args.mode
    reports = []
    failed = False
    for text in args.lam:
        point = parse_lambda(text)
        if len(point) != config.weights.n:
            raise ConfigError(f"--lambda {text!r} has {len(point)} coordinates, expected {config.weights.n}")
        if mode == MODE_RIGHT:
            result = right_membership(point, config.depth)
            # the top-level defect is the truncated geometric tail, not a failure
            ok = all(
                d <= config.tolerance
                for name, d in result.defects.items()
                if name != "identity_top_level"
            )
            failed |= not ok
            reports.append(
                {
                    "lambda": list(point),
                    "mode": result.mode,
                    "verdict": result.verdict,
                    "defects": result.defects,
                    "witness": result.witness,
                    "pass": ok,
                }
            )
        elif mode == MODE_LEFT_GROWTH:
            if all(abs(z) < 1.0 - 1e-12 for z in point):
                # no certificate covers the polydisc interior; membership there is open
                reports.append(
                    {"lambda": list(point), "mode": mode, "verdict": "unknown", "defects": {}, "witness": {}, "pass": True}
                )
                continue
            cert = left_growth_certificate(point, args.k or 16, args.bound)
            reports.append(
                {
                    "lambda": list(point),
                    "mode": mode,
                    "verdict": "in_spectrum" if cert.unbounded else "inconclusive",
                    "defects": {},
                    "witness": {
                        "case": cert.case,
                        "operator_index": cert.operator_index,
                        "run_letter": cert.run_letter,
                        "assumed_bound": cert.assumed_bound,
                        "bounds": cert.bounds,
                    },
                    "pass": True,
                }
            )
        elif mode == MODE_ZERO_LEFT_INVERSE:
            etas = {"eta1": {}, "eta2": {}}
            if args.coeffs:
                with open(args.coeffs) as handle:
                    document = json.load(handle)
                for key in etas:
                    entries = document.get(key, {})
                    etas[key] = {parse_word(k): complex(v[0], v[1]) for k, v in entries.items()}
            result = zero_left_inverses(etas["eta1"], etas["eta2"], config.depth)
            tol = max(config.tolerance, 1e-9)
            ok = result.max_identity_defect <= tol and result.reconstruction_residual <= tol
            failed |= not ok
            reports.append(
                {
                    "lambda": list(point),
                    "mode": mode,
                    "verdict": "solutions_exist" if ok else "check_failed",
                    "defects": {
                        "identity": result.max_identity_defect,
                        "reconstruction": result.reconstruction_residual,
                    },
                    "witness": {"form": "rank-one perturbations of the adjoint shifts"},
                    "pass": ok,
                }
            )
        else:
            raise ConfigError(f"unknown spectra mode {mode!r}")
    for entry in reports:
        print(f"lambda {entry['lambda']}: {entry['verdict']} ({'PASS' if entry['pass'] else 'FAIL'})")
    report = {"command": "spectra", "config": config.echo(), "mode": mode, "results": reports}
    return (0 if not failed else 1), report


COMMANDS = {
    "check": _cmd_check,
    "commutant": _cmd_commutant,
    "region": _cmd_region,
    "cesaro": _cmd_cesaro,
    "spectra": _cmd_spectra,
}


def run_command(verb: str, config: RunConfig, args) -> int:
    code, report = COMMANDS[verb](config, args)
    if args.report:
        _emit_report(report, args.report)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fockshift",
        description="Verification toolkit for weighted shifts on truncated Fock space.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in COMMANDS:
        cmd = sub.add_parser(verb)
        cmd.add_argument("--config", required=True, help="weight-system JSON document")
        cmd.add_argument("--depth", type=int, default=None, help="truncation depth override")
        cmd.add_argument("--tol", type=float, default=None, help="tolerance override")
        cmd.add_argument("--grid", default=None, help="grid spec lo:hi:step (region)")
        cmd.add_argument("--lambda", dest="lam", action="append", default=None,
                         help="comma-separated complex literals a+bi; repeatable (spectra)")
        cmd.add_argument("--coeffs", default=None, help="coefficient JSON path (cesaro, spectra zero-left)")
        cmd.add_argument("--k", type=int, default=None, help="Cesaro order / growth-table length")
        cmd.add_argument("--mode", default=MODE_RIGHT,
                         choices=[MODE_RIGHT, MODE_LEFT_GROWTH, MODE_ZERO_LEFT_INVERSE],
                         help="spectra mode")
        cmd.add_argument("--bound", type=float, default=0.0,
                         help="assumed vacuum-image bound for growth certificates")
        cmd.add_argument("--out", default=None, help="CSV output path (region)")
        cmd.add_argument("--report", default=None, help="JSON report path")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.config) as handle:
            document = json.load(handle)
    except OSError as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"config is not valid JSON: {exc}", file=sys.stderr)
        return 2
    try:
        config = parse_config(document)
        if args.depth is not None:
            if args.depth < 1:
                raise ConfigError("--depth must be at least 1")
            config.depth = args.depth
        if args.tol is not None:
            if args.tol <= 0:
                raise ConfigError("--tol must be positive")
            config.tolerance = args.tol
        return run_command(args.verb, config, args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
