"""Command-line experiment runner.

Verbs:

* ``run``    executes one experiment from a JSON config and writes the
  fringe/phase data (CSV or JSON) plus oracle deltas.
* ``sweep``  executes one experiment across a list-valued parameter,
  one output row per value, with principal and unwrapped phase columns.
* ``verify`` runs the seeded invariant batteries and reports one
  pass/fail line per property.

Exit codes: 0 success, 1 verification failures, 2 config/validation
error, 3 domain error (undefined phase, degenerate geometry, ...).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__
from .checks import SUITES, run_suites
from .errors import PhaseDomainError
from .experiments import RUNNERS, ExperimentOutcome

SEED_ENV_VAR = "PANCHA_SEED"
EXPERIMENTS = tuple(RUNNERS) + ("sweep",)
FORMATS = ("csv", "json")

#: scalar parameter kinds may be swept; structured kinds may not
_REQUIRED = object()
PARAM_SCHEMAS = {
    "pair": {
        "theta_a": ("number", _REQUIRED),
        "phi_a": ("number", _REQUIRED),
        "theta_b": ("number", _REQUIRED),
        "phi_b": ("number", _REQUIRED),
        "alpha": ("number", 0.0),
        "samples": ("int", 64),
    },
    "mixed": {
        "r": ("number", _REQUIRED),
        "angle": ("number", _REQUIRED),
        "axis": ("axis", (0.0, 0.0, 1.0)),
        "samples": ("int", 64),
    },
    "triangle": {
        "vertices": ("vertices", _REQUIRED),
        "r": ("number", 0.5),
    },
    "two-photon": {
        "lam": ("number", _REQUIRED),
        "triangle_a": ("vertices", _REQUIRED),
        "triangle_a_prime": ("vertices", _REQUIRED),
        "samples": ("int", 64),
    },
    "precession": {
        "theta": ("number", _REQUIRED),
        "phi": ("number", _REQUIRED),
        "r": ("number", 0.5),
        "subdivisions": ("int", 4096),
    },
    "dual": {
        "theta": ("number", _REQUIRED),
        "delta_phi": ("number", _REQUIRED),
        "samples": ("int", 64),
    },
}


class ConfigError(Exception):
    """Invalid experiment configuration (exit code 2)."""


class MultipleSweptParametersError(ConfigError):
    """More than one parameter was given as a sweep list."""


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _check_param(experiment: str, name: str, kind: str, value):
    where = f"{experiment}.{name}"
    if kind == "number":
        if not _is_number(value):
            raise ConfigError(f"{where} must be a number (radians), got {value!r}")
    elif kind == "int":
        if not isinstance(value, int) or isinstance(value, bool):
            raise ConfigError(f"{where} must be an integer, got {value!r}")
    elif kind == "axis":
        if (not isinstance(value, (list, tuple)) or len(value) != 3
                or not all(_is_number(v) for v in value)):
            raise ConfigError(f"{where} must be a 3-vector of numbers")
    elif kind == "vertices":
        ok = (isinstance(value, (list, tuple)) and len(value) == 3
              and all(isinstance(v, (list, tuple)) and len(v) == 2
                      and all(_is_number(x) for x in v) for v in value))
        if not ok:
            raise ConfigError(f"{where} must be three [theta, phi] pairs")
    else:  # pragma: no cover - schema table typo guard
        raise AssertionError(f"unknown parameter kind {kind}")


@dataclass
class RunPlan:
    """Validated config: base experiment, parameters, swept name (or None)."""

    experiment: str
    base: str
    parameters: dict
    swept: str | None
    seed: int
    output: str | None
    format: str


def validate_config(raw, *, allow_sweep: bool, default_seed: int) -> RunPlan:
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    allowed_top = {"experiment", "parameters", "seed", "output", "format", "base"}
    unknown = set(raw) - allowed_top
    if unknown:
        raise ConfigError(f"unknown config fields: {sorted(unknown)}")

    experiment = raw.get("experiment")
    if experiment not in EXPERIMENTS:
        raise ConfigError(
            f"experiment must be one of {sorted(EXPERIMENTS)}, got {experiment!r}")
    if experiment == "sweep":
        base = raw.get("base")
        if base not in RUNNERS:
            raise ConfigError(
                f"sweep configs need a 'base' experiment from {sorted(RUNNERS)}")
    else:
        if "base" in raw:
            raise ConfigError("'base' is only valid with experiment = 'sweep'")
        base = experiment

    params = raw.get("parameters")
    if not isinstance(params, dict):
        raise ConfigError("'parameters' must be an object")
    schema = PARAM_SCHEMAS[base]
    unknown = set(params) - set(schema)
    if unknown:
        raise ConfigError(f"unknown parameters for {base}: {sorted(unknown)}")
    for name, (_, default) in schema.items():
        if name not in params and default is _REQUIRED:
            raise ConfigError(f"missing required parameter {base}.{name}")

    swept = None
    cleaned = {name: default for name, (_, default) in schema.items()
               if default is not _REQUIRED}
    for name, value in params.items():
        kind = schema[name][0]
        if isinstance(value, list) and kind in ("number", "int"):
            if not value:
                raise ConfigError(f"sweep list for {base}.{name} is empty")
            for v in value:
                _check_param(base, name, kind, v)
            if swept is not None:
                raise MultipleSweptParametersError(
                    f"both {swept!r} and {name!r} are sweep lists; sweep exactly one")
            swept = name
            cleaned[name] = list(value)
        else:
            _check_param(base, name, kind, value)
            cleaned[name] = value

    wants_sweep = experiment == "sweep" or swept is not None
    if wants_sweep and not allow_sweep:
        raise ConfigError("this config sweeps a parameter; use the 'sweep' verb")
    if experiment == "sweep" and swept is None:
        raise ConfigError("sweep config has no list-valued parameter")

    if "seed" in raw and (not isinstance(raw["seed"], int)
                          or isinstance(raw["seed"], bool)):
        raise ConfigError("seed must be an integer")
    seed = raw.get("seed", default_seed)
    output = raw.get("output")
    if output is not None and not isinstance(output, str):
        raise ConfigError("output must be a path string")
    fmt = raw.get("format", "csv")
    if fmt not in FORMATS:
        raise ConfigError(f"format must be one of {FORMATS}")
    return RunPlan(experiment, base, cleaned, swept, seed, output, fmt)


# ---------------------------------------------------------------------------
# record assembly and serialization

def _versions() -> dict:
    return {
        "pancha": __version__,
        "numpy": np.__version__,
        "python": ".".join(map(str, sys.version_info[:3])),
    }


@dataclass
class RunRecord:
    """Everything one invocation produced (timestamp stays out of the
    serialized outputs so reruns are byte identical)."""

    config: dict
    results: dict
    oracle_deltas: dict
    versions: dict
    timestamp: float


def _fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _json_safe(value):
    if isinstance(value, float) and not np.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def _write_json(path: str, record: RunRecord):
    payload = _json_safe({
        "config": record.config,
        "results": record.results,
        "oracle_deltas": record.oracle_deltas,
        "versions": record.versions,
    })
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _write_csv(path: str, header: list[str], rows: list[list[float]]):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt_float(x) for x in row) + "\n")


def _single_record(plan: RunPlan, outcome: ExperimentOutcome) -> RunRecord:
    results = dict(outcome.results)
    if outcome.profile is not None:
        results["profile"] = {
            "chi": outcome.profile.chis.tolist(),
            "intensity": outcome.profile.intensities.tolist(),
        }
    return RunRecord(
        config=_config_echo(plan),
        results=results,
        oracle_deltas=dict(outcome.oracle_deltas),
        versions=_versions(),
        timestamp=time.time(),
    )


def _config_echo(plan: RunPlan) -> dict:
    echo = {
        "experiment": plan.experiment,
        "parameters": plan.parameters,
        "seed": plan.seed,
        "format": plan.format,
    }
    if plan.experiment == "sweep":
        echo["base"] = plan.base
    return echo


def _single_csv(outcome: ExperimentOutcome) -> tuple[list[str], list[list[float]]]:
    scalar_cols = list(outcome.results)
    delta_cols = [f"delta_{k}" for k in outcome.oracle_deltas]
    scalars = [outcome.results[k] for k in scalar_cols]
    deltas = [outcome.oracle_deltas[k] for k in outcome.oracle_deltas]
    if outcome.profile is None:
        return scalar_cols + delta_cols, [scalars + deltas]
    header = ["chi", "intensity"] + scalar_cols + delta_cols
    rows = [
        [chi, intensity] + scalars + deltas
        for chi, intensity in zip(outcome.profile.chis,
                                  outcome.profile.intensities)
    ]
    return header, rows


def _sweep_point(args) -> tuple[dict, dict, tuple]:
    base, params = args
    outcome = RUNNERS[base](params)
    return outcome.results, outcome.oracle_deltas, outcome.phase_keys


def run_sweep(plan: RunPlan, jobs: int) -> tuple[RunRecord, list[str],
                                                 list[list[float]]]:
    values = plan.parameters[plan.swept]
    tasks = [
        (plan.base, {**plan.parameters, plan.swept: value}) for value in values
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            points = list(pool.map(_sweep_point, tasks))
    else:
        points = [_sweep_point(t) for t in tasks]

    result_keys = list(points[0][0])
    delta_keys = list(points[0][1])
    phase_keys = points[0][2]
    columns: dict[str, list[float]] = {plan.swept: [float(v) for v in values]}
    for key in result_keys:
        columns[key] = [p[0][key] for p in points]
    for key in phase_keys:
        columns[f"{key}_unwrapped"] = np.unwrap(columns[key]).tolist()
    for key in delta_keys:
        columns[f"delta_{key}"] = [p[1][key] for p in points]

    header = list(columns)
    rows = [[columns[col][i] for col in header] for i in range(len(values))]
    record = RunRecord(
        config=_config_echo(plan),
        results={"swept": plan.swept, "rows": columns},
        oracle_deltas={
            f"max_{k}": max(p[1][k] for p in points) for k in delta_keys
        },
        versions=_versions(),
        timestamp=time.time(),
    )
    return record, header, rows


# ---------------------------------------------------------------------------
# verbs

def _load_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc


def _resolve_seed(args, raw_config) -> int:
    if args.seed is not None:
        return args.seed
    if isinstance(raw_config, dict) and "seed" in raw_config:
        seed = raw_config["seed"]
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise ConfigError("seed must be an integer")
        return seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ConfigError(f"{SEED_ENV_VAR} must be an integer") from exc
    return 0


def _output_path(plan: RunPlan, args) -> str:
    if args.out:
        return args.out
    if plan.output:
        return plan.output
    return f"pancha-{plan.experiment}.{plan.format}"


def _emit(plan: RunPlan, args, record: RunRecord, header, rows) -> str:
    path = _output_path(plan, args)
    if plan.format == "json":
        _write_json(path, record)
    else:
        _write_csv(path, header, rows)
    return path


def _cmd_run(args) -> int:
    raw = _load_config(args.config)
    seed = _resolve_seed(args, raw)
    plan = validate_config(raw, allow_sweep=True, default_seed=seed)
    plan.seed = seed
    if args.format:
        plan.format = args.format
    if (plan.base == "precession" and args.subdivisions
            and "subdivisions" not in plan.parameters):
        plan.parameters["subdivisions"] = args.subdivisions

    if plan.swept is not None or plan.experiment == "sweep":
        record, header, rows = run_sweep(plan, jobs=args.jobs)
    else:
        outcome = RUNNERS[plan.base](plan.parameters)
        record = _single_record(plan, outcome)
        header, rows = _single_csv(outcome)
    path = _emit(plan, args, record, header, rows)
    for key, value in record.oracle_deltas.items():
        print(f"{key}: {_fmt_float(value)}", file=sys.stderr)
    print(f"wrote {plan.experiment} results to {path}")
    return 0


def _cmd_sweep(args) -> int:
    raw = _load_config(args.config)
    seed = _resolve_seed(args, raw)
    plan = validate_config(raw, allow_sweep=True, default_seed=seed)
    plan.seed = seed
    if args.format:
        plan.format = args.format
    if plan.swept is None:
        raise ConfigError("sweep needs exactly one list-valued parameter")
    if (plan.base == "precession" and args.subdivisions
            and "subdivisions" not in plan.parameters):
        plan.parameters["subdivisions"] = args.subdivisions
    record, header, rows = run_sweep(plan, jobs=args.jobs)
    path = _emit(plan, args, record, header, rows)
    print(f"wrote {len(rows)}-point sweep of '{plan.swept}' to {path}")
    return 0


def _cmd_verify(args) -> int:
    seed = args.seed
    if seed is None:
        env = os.environ.get(SEED_ENV_VAR, "0")
        try:
            seed = int(env)
        except ValueError as exc:
            raise ConfigError(f"{SEED_ENV_VAR} must be an integer") from exc
    results = run_suites(args.suite, seed=seed, tol_scale=args.tol_scale)
    failures = sum(0 if result.passed else 1 for result in results)
    for result in results:
        print(f"[{result.suite}] {result.line()}")
    print(f"{len(results) - failures}/{len(results)} properties passed")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pancha",
        description="Relative-phase interferometry experiments and checks",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="JSON experiment config")
    common.add_argument("--out", help="output path (overrides config.output)")
    common.add_argument("--format", choices=FORMATS,
                        help="output format (overrides config.format)")
    common.add_argument("--seed", type=int,
                        help=f"seed (falls back to config, then ${SEED_ENV_VAR})")
    common.add_argument("--subdivisions", type=int,
                        help="path subdivisions for simulated evolutions")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="worker processes for sweep points")

    run_p = sub.add_parser("run", parents=[common],
                           help="execute one experiment config")
    run_p.set_defaults(fn=_cmd_run)

    sweep_p = sub.add_parser("sweep", parents=[common],
                             help="execute a one-parameter sweep")
    sweep_p.set_defaults(fn=_cmd_sweep)

    verify_p = sub.add_parser("verify", help="run the invariant batteries")
    verify_p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    verify_p.add_argument("--seed", type=int, default=None)
    verify_p.add_argument("--tol-scale", type=float, default=1.0,
                          help="tolerance multiplier (harness self-test knob)")
    verify_p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except PhaseDomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
