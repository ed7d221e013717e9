"""Command-line front end.

    rootsieve separate --fn pruitt:3 --map newton --pred p0 --d 0.5 --lo 1.5 --hi 25.5
    rootsieve table --fn oscillating --map halley --pred p1 --lo -0.0097 --hi 0.0097 --depths 3
    rootsieve sieve --k 4 --full

Exit status: 0 when something was found, 2 when nothing was, 1 on usage errors.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import asdict, dataclass
from typing import Optional

from . import pruitt, serialize
from .expression import ParseError
from .funcmodel import Interval, model_from_spec
from .itermaps import make_map
from .predicates import BOTH, MODES, P0, PredicateConfig
from .quasistep import EducatedMap
from .sweep import DEFAULT_RMAX, DEFAULT_TOL, GridSpec, analyze, detect_runs, sweep_grid

TABLE_DIGITS = 8


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    fn: str
    map: str
    pred: str
    lo: float
    hi: float
    d: Optional[float] = None
    n: int = 1500
    tol: float = DEFAULT_TOL
    rmax: int = DEFAULT_RMAX
    format: str = "table"
    out: Optional[str] = None
    dlo: Optional[float] = None
    dhi: Optional[float] = None
    depths: int = 3

    def validate(self):
        if self.pred in (P0, BOTH) and self.d is None:
            raise UsageError(f"--pred {self.pred} requires --d")
        if self.d is not None and not self.d > 0:
            raise UsageError("--d must be positive")
        if not self.lo < self.hi:
            raise UsageError("--lo must be smaller than --hi")
        if self.n < 2:
            raise UsageError("--n must be at least 2")
        if not self.tol > 0:
            raise UsageError("--tol must be positive")
        if self.rmax < 1:
            raise UsageError("--rmax must be at least 1")
        if self.depths < 1:
            raise UsageError("--depths must be at least 1")
        if (self.dlo is None) != (self.dhi is None):
            raise UsageError("--dlo and --dhi go together")

    def build(self):
        """Model, predicate configuration and grid for this run."""
        grid_iv = Interval(self.lo, self.hi)
        model = model_from_spec(self.fn, grid_iv)
        if self.dlo is not None:
            domain = Interval(self.dlo, self.dhi)
        else:
            domain = model.domain.hull(grid_iv)
        cfg = PredicateConfig(domain, self.pred, self.d)
        return model, cfg, GridSpec(self.lo, self.hi, self.n)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("out")
        d.pop("format")
        return d


def _add_run_flags(p: argparse.ArgumentParser):
    p.add_argument("--fn", required=True,
                   help="pruitt:K, oscillating, oscillating:recip, poly:c0,c1,... or an expression in x")
    p.add_argument("--map", required=True, choices=["newton", "halley"])
    p.add_argument("--pred", required=True, choices=list(MODES))
    p.add_argument("--d", type=float, help="vertical displacement (P0 and both)")
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--n", type=int, default=1500, help="grid subdivisions (default 1500)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--rmax", type=int, default=DEFAULT_RMAX)
    p.add_argument("--dlo", type=float, help="predicate domain lower end (default: hull of function domain and grid)")
    p.add_argument("--dhi", type=float)
    p.add_argument("--format", choices=["csv", "json", "table"], default="table")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--threads", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rootsieve", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("separate", help="separate and refine the roots on an interval")
    _add_run_flags(p)

    p = sub.add_parser("table", help="tabulate the discretized educated map")
    _add_run_flags(p)
    p.add_argument("--depths", type=int, default=3, help="emit depths 1..R (default 3)")

    p = sub.add_parser("sieve", help="primes in (p_k, p_k^2] from the Pruitt step map")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--full", action="store_true", help="also print zeros and multiplicities")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--out")
    return parser


def _config(args) -> RunConfig:
    cfg = RunConfig(args.fn, args.map, args.pred, args.lo, args.hi, args.d, args.n,
                    args.tol, args.rmax, args.format, args.out, args.dlo, args.dhi,
                    getattr(args, "depths", 3))
    cfg.validate()
    return cfg


def _num(v: float) -> str:
    return f"{v:.{TABLE_DIGITS}g}"


def _emit(text: str, path: Optional[str], stdout):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def cmd_separate(args, stdout) -> int:
    rc = _config(args)
    model, cfg, grid = rc.build()
    result = analyze(model, rc.map, cfg, grid, rc.tol, rc.rmax, args.threads, rc.as_dict())
    if rc.format == "json":
        text = serialize.result_to_json(result)
    elif rc.format == "csv":
        text = serialize.reports_to_csv(result)
    else:
        lines = [f"{len(result.runs)} runs, {len(result.reports)} roots"]
        lines.append(f"{'root':>24}  {'residual':>10}  depth  invariant  run")
        for r in result.reports:
            flag = " possibly-multiple" if r.possibly_multiple else ""
            lines.append(f"{r.root!r:>24}  {r.residual:10.3e}  {r.depth:5d}  {str(r.invariant):>9}"
                         f"  [{_num(r.run.lo)}, {_num(r.run.hi)}]{flag}")
        text = "\n".join(lines) + "\n"
    _emit(text, rc.out, stdout)
    return 0 if result.reports else 2


def cmd_table(args, stdout) -> int:
    rc = _config(args)
    model, cfg, grid = rc.build()
    em = EducatedMap(make_map(rc.map, model, cfg.domain), cfg)
    table = sweep_grid(em, grid, rc.depths, args.threads)
    runs = detect_runs(table)
    if rc.format == "csv":
        text = serialize.table_to_csv(table)
    elif rc.format == "json":
        text = serialize.dumps(serialize.table_to_dict(table, runs, rc.as_dict()))
    else:
        shown = table.rendered()
        lines = ["x, " + ", ".join(f"depth{r + 1}" for r in range(table.depths))]
        for x, row in zip(table.x, shown):
            lines.append(", ".join(_num(v) if v != 0.0 else "0" for v in (x, *row)))
        lines.append(f"# {len(runs)} runs")
        text = "\n".join(lines) + "\n"
    _emit(text, rc.out, stdout)
    return 0 if runs else 2


def cmd_sieve(args, stdout) -> int:
    if not 1 <= args.k <= pruitt.MAX_K:
        raise UsageError(f"--k must be in [1, {pruitt.MAX_K}]")
    if args.format == "json":
        text = serialize.dumps(pruitt.to_dict(args.k, args.full))
    else:
        primes = pruitt.sieve_primes(args.k)
        lines = [" ".join(map(str, primes))]
        if args.full:
            table = pruitt.classify_multiplicity(args.k)
            lines.append("zeros: " + " ".join(str(j) for j, _ in table.entries))
            for m in range(1, table.max_multiplicity + 1):
                lines.append(f"m={m}: " + " ".join(f"{j}:{m}" for j in table.with_multiplicity(m)))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out, stdout)
    return 0 if pruitt.sieve_primes(args.k) else 2


COMMANDS = {"separate": cmd_separate, "table": cmd_table, "sieve": cmd_sieve}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, stdout)
    except (UsageError, ParseError, ValueError, OSError) as exc:
        stderr.write(f"rootsieve: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
