"""Command-line front end: parameter sweeps, tables, and scattering runs.

Subcommands
-----------
spin-sweep        geometric phases and Bell concurrence over a deviation grid
heisenberg-table  spin-chain concurrence prediction per scattering momentum
hubbard-scatter   full two-packet collision run from a JSON config
lattice-measures  every concurrence measure of a stored lattice state

All commands are deterministic given their inputs; ``--seed`` is recorded in
the report provenance.  Exit codes: 0 success, 2 bad configuration/usage,
3 domain error, 1 anything else; errors print one line
``ERROR <Class>: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from importlib import resources

import numpy as np

from . import heisenberg, hubbard, reporting
from .berry_lattice import lattice_berry_phase
from .concurrence import concurrence_summary
from .errors import ConfigError, DomainError, SpinberryError
from .lattice import RegionPartition, TwoElectronState
from .spin_geometry import (
    bell_coefficients,
    berry_phase_analytic,
    concurrence_from_theta,
)

_ANGLE_RE = re.compile(r"^([+-]?\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?$")


def parse_angle(text: str) -> float:
    """Parse '0.5', 'pi', '2pi', 'pi/4', '3pi/4', '-pi/2' into radians."""
    token = text.strip().lower()
    m = _ANGLE_RE.match(token)
    if m:
        coef_txt, div_txt = m.groups()
        coef = {"": 1.0, "+": 1.0, "-": -1.0}.get(coef_txt, None)
        if coef is None:
            coef = float(coef_txt)
        value = coef * math.pi
        if div_txt:
            value /= float(div_txt)
        return value
    try:
        return float(token)
    except ValueError:
        raise ConfigError(f"cannot parse angle {text!r}") from None


def parse_grid(text: str) -> np.ndarray:
    """Parse 'START:STOP:POINTS' (angle syntax allowed) into a grid."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid must be START:STOP:POINTS, got {text!r}")
    start, stop = parse_angle(parts[0]), parse_angle(parts[1])
    try:
        points = int(parts[2])
    except ValueError:
        raise ConfigError(f"grid POINTS must be an integer, got {parts[2]!r}") from None
    if points < 2:
        raise ConfigError(f"grid needs at least 2 points, got {points}")
    if not start < stop:
        raise ConfigError(f"grid needs START < STOP, got {start} >= {stop}")
    return np.linspace(start, stop, points)


def parse_sites(text: str) -> list:
    """Parse '1-32' (inclusive) or '1,2,5' into a site list."""
    token = text.strip()
    if re.match(r"^\d+\s*-\s*\d+$", token):
        lo, hi = (int(x) for x in token.split("-"))
        if lo >= hi:
            raise ConfigError(f"site range {text!r} is empty")
        return list(range(lo, hi + 1))
    try:
        return [int(x) for x in token.split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"cannot parse site list {text!r}") from None


# -- subcommand implementations ----------------------------------------------


def run_theta_sweep(grid: np.ndarray, n: int = 1, seed=None) -> dict:
    """Rows (theta, berry_up, berry_down, a_mag, b_mag, concurrence)."""
    rows = []
    for theta in grid:
        coeffs = bell_coefficients(float(theta), n)
        rows.append(
            {
                "theta": float(theta),
                "berry_up": berry_phase_analytic(float(theta), "up"),
                "berry_down": berry_phase_analytic(float(theta), "down"),
                "a_mag": coeffs.a_mag,
                "b_mag": coeffs.b_mag,
                "concurrence": concurrence_from_theta(float(theta)),
            }
        )
    config = {
        "quantity": "theta-sweep",
        "grid": [float(grid[0]), float(grid[-1]), int(grid.size)],
        "n": n,
    }
    columns = ["theta", "berry_up", "berry_down", "a_mag", "b_mag", "concurrence"]
    return reporting.make_report(config, columns, rows, seed)


def run_heisenberg_table(t: float, u: float, k0_values, seed=None) -> dict:
    """Rows (k0, theta, berry_phase, concurrence, concurrence_2dp, note).

    Momenta outside the mapping's validity produce a per-row error note;
    the run continues.
    """
    rows = []
    for k0 in k0_values:
        try:
            row = heisenberg.concurrence_vs_k0(t, u, float(k0))
            row["concurrence_2dp"] = reporting.round_two_decimals(row["concurrence"])
        except DomainError as exc:
            row = {
                "k0": float(k0),
                "theta": None,
                "berry_phase": None,
                "concurrence": None,
                "concurrence_2dp": None,
                "note": f"error: {exc}",
            }
        rows.append(row)
    config = {"quantity": "heisenberg-table", "t": t, "U": u,
              "k0": [float(k) for k in k0_values]}
    columns = ["k0", "theta", "berry_phase", "concurrence", "concurrence_2dp", "note"]
    return reporting.make_report(config, columns, rows, seed)


def run_lattice_measures(state: TwoElectronState, part: RegionPartition, seed=None) -> dict:
    """Single-record table with every concurrence measure of one state."""
    summary = concurrence_summary(state, part)
    phi = lattice_berry_phase(state, part)
    row = dict(summary)
    row["berry_phase_re"] = phi.real
    row["berry_phase_im"] = phi.imag
    row["berry_concurrence"] = abs(phi) / (2.0 * math.pi)
    config = {
        "quantity": "lattice-measures",
        "num_sites": state.num_sites,
        "region_a": sorted(part.region_a),
        "region_b": sorted(part.region_b),
    }
    columns = [
        "overlap_concurrence", "spin_correlator_concurrence",
        "bell_pair_concurrence", "wootters_concurrence",
        "berry_phase_re", "berry_phase_im", "berry_concurrence",
        "w_nonflip", "w_flip", "w_other",
    ]
    return reporting.make_report(config, columns, [row], seed)


def run_hubbard_scatter(config_doc: dict, t_override=None, seed=None) -> dict:
    config = hubbard.config_from_dict(config_doc)
    if t_override is not None:
        config = hubbard.ScatterConfig(
            params=config.params,
            left=config.left,
            right=config.right,
            partition=config.partition,
            method=config.method,
            dt=config.dt,
            time_policy=hubbard.TimePolicy(mode="fixed", t_final=t_override),
        )
    report = hubbard.scatter_experiment(config)
    report["provenance"] = reporting.make_provenance(seed)
    flat = dict(report["result"])
    flat["measurement_time"] = report["measurement_time"]
    flat["concurrence_gap"] = report["concurrence_gap"]
    flat["berry_concurrence"] = report["berry_concurrence"]
    pred = report["heisenberg_prediction"]
    flat["heisenberg_concurrence"] = pred.get("concurrence")
    report["columns"] = sorted(flat)
    report["results"] = [flat]
    return report


def bundled_example_config() -> dict:
    text = resources.files("spinberry.data").joinpath(
        "hubbard_scatter_example.json"
    ).read_text(encoding="utf-8")
    return json.loads(text)


# -- argument wiring -----------------------------------------------------------


def _add_io_flags(sub):
    sub.add_argument("--out", default=None, metavar="PATH",
                     help="output file (default: stdout)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv",
                     help="output format (default csv)")
    sub.add_argument("--seed", type=int, default=None,
                     help="recorded in provenance; commands are deterministic")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinberry",
        description="Spin entanglement of two delocalised lattice fermions "
                    "via geometric phases",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sweep = subs.add_parser("spin-sweep", help="deviation-angle sweep")
    sweep.add_argument("--grid", default="0:pi:101",
                       help="theta grid START:STOP:POINTS (default 0:pi:101)")
    sweep.add_argument("--n", type=int, default=1,
                       help="odd constraint-family index (default 1)")
    _add_io_flags(sweep)

    table = subs.add_parser("heisenberg-table", help="momentum table")
    table.add_argument("--t", type=float, default=1.0, help="hopping (default 1)")
    table.add_argument("--u", "--U", dest="u", type=float, default=1.0,
                       help="onsite repulsion (default 1)")
    group = table.add_mutually_exclusive_group(required=True)
    group.add_argument("--k0", help="comma-separated momenta, e.g. 'pi/4,pi/2,3pi/4'")
    group.add_argument("--grid", help="momentum grid START:STOP:POINTS")
    _add_io_flags(table)

    scatter = subs.add_parser("hubbard-scatter", help="two-packet collision run")
    group = scatter.add_mutually_exclusive_group(required=True)
    group.add_argument("--config", metavar="PATH", help="JSON run configuration")
    group.add_argument("--bundled-example", action="store_true",
                       help="use the packaged N=64, t=U=1, k0=pi/2 example")
    scatter.add_argument("--t-final", type=float, default=None,
                         help="override the time policy with a fixed time")
    _add_io_flags(scatter)

    measures = subs.add_parser("lattice-measures", help="measures of a stored state")
    measures.add_argument("--state", required=True, metavar="PATH",
                          help="state file (JSON: num_sites, entries)")
    measures.add_argument("--region-a", required=True,
                          help="sites of region A ('1-4' or '1,2,3')")
    measures.add_argument("--region-b", required=True,
                          help="sites of region B")
    _add_io_flags(measures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "spin-sweep":
            report = run_theta_sweep(parse_grid(args.grid), args.n, args.seed)
        elif args.command == "heisenberg-table":
            if args.k0:
                k0s = [parse_angle(tok) for tok in args.k0.split(",") if tok.strip()]
                if not k0s:
                    raise ConfigError("--k0 parsed to an empty momentum list")
            else:
                k0s = list(parse_grid(args.grid))
            report = run_heisenberg_table(args.t, args.u, k0s, args.seed)
        elif args.command == "hubbard-scatter":
            if args.bundled_example:
                doc = bundled_example_config()
            else:
                try:
                    with open(args.config, "r", encoding="utf-8") as fh:
                        doc = json.load(fh)
                except FileNotFoundError:
                    raise ConfigError(f"config file not found: {args.config}") from None
                except json.JSONDecodeError as exc:
                    raise ConfigError(f"config is not valid JSON: {exc}") from None
            report = run_hubbard_scatter(doc, args.t_final, args.seed)
        elif args.command == "lattice-measures":
            try:
                state = TwoElectronState.load(args.state)
            except FileNotFoundError:
                raise ConfigError(f"state file not found: {args.state}") from None
            except json.JSONDecodeError as exc:
                raise ConfigError(f"state file is not valid JSON: {exc}") from None
            part = RegionPartition(parse_sites(args.region_a), parse_sites(args.region_b))
            report = run_lattice_measures(state, part, args.seed)
        else:  # pragma: no cover - argparse enforces the choices
            raise ConfigError(f"unknown command {args.command!r}")
        reporting.emit(report, args.out, args.format)
        return 0
    except ConfigError as exc:
        print(f"ERROR ConfigError: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"ERROR DomainError: {exc}", file=sys.stderr)
        return 3
    except SpinberryError as exc:
        print(f"ERROR {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"ERROR IOError: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
