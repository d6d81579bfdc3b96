"""Command-line entry point.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

import mpmath

from . import asymptotics, graphs, maps, oracle, singular, verify
from .series import SeriesError

DEFAULT_ORDER = 64
PRECISION_ENV = "CHORDPLANAR_PRECISION"

GRAPH_FAMILIES = ["all", "connected", "2conn", "3conn", "triangulations"]
MAP_FAMILIES = ["maps", "2conn-maps"]
FIT_FAMILIES = GRAPH_FAMILIES + MAP_FAMILIES + ["ternary"]


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    order: int = DEFAULT_ORDER
    precision_bits: int = 256
    fmt: str = "json"
    output: str | None = None
    options: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.order < 1:
            raise UsageError("--order must be positive")
        if self.precision_bits < 64:
            raise UsageError("--precision-bits must be at least 64")
        if self.fmt not in ("json", "csv"):
            raise UsageError("--format must be json or csv")


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV, "256")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{PRECISION_ENV}={raw!r} is not an integer") from None


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chordplanar",
                                description="Enumeration of chordal planar graphs and maps.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, order=True, fmt=False):
        if order:
            sp.add_argument("--order", type=int, default=DEFAULT_ORDER,
                            help="series truncation order N (default 64)")
        sp.add_argument("--precision-bits", type=int, default=None,
                        help=f"working precision (default ${PRECISION_ENV} or 256)")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")
        if fmt:
            sp.add_argument("--format", choices=["json", "csv"], default="json")
        else:
            sp.add_argument("--json", action="store_true", help="JSON output (the default)")

    sp = sub.add_parser("count", help="exact counting table")
    sp.add_argument("--family", required=True, choices=GRAPH_FAMILIES + MAP_FAMILIES)
    sp.add_argument("--n-max", type=int, default=20)
    common(sp, fmt=True)

    sp = sub.add_parser("series", help="dump a generating function")
    sp.add_argument("--family", required=True,
                    choices=GRAPH_FAMILIES + MAP_FAMILIES + ["networks", "ternary"])
    sp.add_argument("--bivariate", action="store_true",
                    help="keep the edge variable y (graph families all, connected, 2conn, networks)")
    common(sp)

    sp = sub.add_parser("constants", help="asymptotic constants report")
    sp.add_argument("--theorem", type=int, choices=[1, 2], required=True)
    common(sp, order=False)

    sp = sub.add_parser("verify", help="run the invariant battery")
    sp.add_argument("--keep-going", action="store_true", help="do not stop at the first failure")
    common(sp)

    sp = sub.add_parser("fit", help="empirical asymptotic fit from exact coefficients")
    sp.add_argument("--family", required=True, choices=FIT_FAMILIES)
    common(sp)
    sp.set_defaults(order=256)

    sp = sub.add_parser("reconcile", help="analytic vs empirical vs printed constants")
    sp.add_argument("--theorem", type=int, choices=[1, 2], required=True)
    common(sp)
    sp.set_defaults(order=256)

    sp = sub.add_parser("oracle", help="brute-force census of small graphs")
    sp.add_argument("--n", type=int, required=True)
    common(sp, order=False)
    return p


def _config(ns: argparse.Namespace) -> RunConfig:
    bits = ns.precision_bits if ns.precision_bits is not None else _default_precision()
    opts = {k: v for k, v in vars(ns).items()
            if k not in ("command", "order", "precision_bits", "format", "output", "json")}
    cfg = RunConfig(ns.command, getattr(ns, "order", DEFAULT_ORDER), bits,
                    getattr(ns, "format", "json"), ns.output, opts)
    cfg.validate()
    return cfg


# -- subcommands ------------------------------------------------------------

def _count(cfg: RunConfig) -> tuple[str, int]:
    fam, n_max = cfg.options["family"], cfg.options["n_max"]
    if n_max < 1:
        raise UsageError("--n-max must be positive")
    if n_max > cfg.order:
        raise UsageError(f"--n-max {n_max} exceeds --order {cfg.order}")
    if fam in MAP_FAMILIES:
        table = maps.map_count_table(fam, n_max, cfg.order)
    else:
        table = graphs.count_table(fam, n_max, cfg.order)
    return (table.to_csv() if cfg.fmt == "csv" else table.to_json() + "\n"), 0


def _series(cfg: RunConfig) -> tuple[str, int]:
    fam, n = cfg.options["family"], cfg.order
    if cfg.options["bivariate"]:
        builders = {"all": lambda: graphs.all_graphs_series(n),
                    "connected": lambda: graphs.connected_series(n),
                    "2conn": lambda: graphs.two_connected_series_bivariate(n),
                    "networks": lambda: graphs.network_series(n)}
        if fam not in builders:
            raise UsageError(f"--bivariate is not available for {fam}")
        s = builders[fam]()
    elif fam == "ternary":
        s = graphs.ternary_series(n)
    elif fam == "triangulations":
        s = graphs.unrooted_triangulation_series(n)
    elif fam == "3conn":
        raise UsageError("3conn has a closed formula; use count")
    elif fam == "maps":
        s = maps.all_maps_series(n)
    elif fam == "2conn-maps":
        s = maps.two_connected_maps_series(n)
    elif fam == "networks":
        s = graphs.network_system(n, False)[0]
    elif fam == "all":
        s = graphs.all_graphs_series(n, False)
    elif fam == "connected":
        s = graphs.connected_series(n, False)
    else:
        s = graphs.two_connected_series_closed(n)
    return json.dumps({"family": fam, "order": n, "coefficients": s.to_json()}) + "\n", 0


def _constants(cfg: RunConfig) -> tuple[str, int]:
    rep = singular.constants_report(cfg.options["theorem"], cfg.precision_bits)
    return rep.to_json() + "\n", 0


def _verify(cfg: RunConfig) -> tuple[str, int]:
    results = []
    for r in verify.run_checks(cfg.order, fail_fast=not cfg.options["keep_going"]):
        print(r.line(), file=sys.stderr)
        results.append(r)
    ok = all(r.ok for r in results)
    return verify.summary_json(results) + "\n", 0 if ok else 1


def _fit_sequence(fam: str, order: int) -> tuple[list, str]:
    if fam == "ternary":
        return graphs.ternary_series(order).ogf_counts(), "ogf"
    if fam in MAP_FAMILIES:
        return maps.map_sequence(fam, order), "ogf"
    if fam == "3conn":
        return [0, 0, 0, 0] + [graphs.count_3connected(n) for n in range(4, order + 1)], "egf"
    return graphs.egf_sequence(fam, order), "egf"


def _fit(cfg: RunConfig) -> tuple[str, int]:
    seq, scaling = _fit_sequence(cfg.options["family"], cfg.order)
    try:
        fit = asymptotics.empirical_fit(seq, scaling, precision_bits=cfg.precision_bits)
    except asymptotics.FitError as exc:
        raise UsageError(str(exc)) from None
    out = fit.to_dict()
    out["family"] = cfg.options["family"]
    return json.dumps(out, indent=2) + "\n", 0


def _reconcile(cfg: RunConfig) -> tuple[str, int]:
    rows = asymptotics.reconcile_theorem(cfg.options["theorem"], cfg.order, cfg.precision_bits)
    ok = all(r.consistent for r in rows)
    return json.dumps({"theorem": cfg.options["theorem"], "order": cfg.order,
                       "consistent": ok, "rows": [r.to_dict() for r in rows]}, indent=2) + "\n", \
        0 if ok else 1


def _oracle(cfg: RunConfig) -> tuple[str, int]:
    n = cfg.options["n"]
    if not 1 <= n <= oracle.MAX_CENSUS:
        raise UsageError(f"--n must be between 1 and {oracle.MAX_CENSUS}")
    c = oracle.census(n)
    return json.dumps({"n": n, "rows": [{"family": k, "count": v}
                                        for k, v in c.to_dict().items() if k != "n"]},
                      indent=2) + "\n", 0


COMMANDS = {"count": _count, "series": _series, "constants": _constants, "verify": _verify,
            "fit": _fit, "reconcile": _reconcile, "oracle": _oracle}


def run(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(ns)
        with mpmath.workprec(cfg.precision_bits):
            text, code = COMMANDS[cfg.command](cfg)
    except (UsageError, SeriesError, ValueError) as exc:
        print(f"chordplanar {ns.command}: error: {exc}", file=sys.stderr)
        return 2
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
