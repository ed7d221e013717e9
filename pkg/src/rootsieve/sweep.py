"""Discretized educated maps: grid sweep, run detection and root refinement.

The pipeline is

    sweep_grid -> detect_runs -> refine_run (one root per run) -> merge

A *run* is a maximal block of consecutive grid points where the educating
predicate holds.  Each run is refined from its seed (the grid point with
the smallest |f|) by composing the educated map until two successive
depths agree to a relative tolerance.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .funcmodel import FunctionModel, Interval
from .itermaps import make_map
from .predicates import PredicateConfig
from .quasistep import EducatedMap

THREADS_ENV = "ROOTSIEVE_THREADS"
DEFAULT_TOL = 1e-12
DEFAULT_RMAX = 8


@dataclass(frozen=True)
class GridSpec:
    lo: float
    hi: float
    n: int

    def __post_init__(self):
        Interval(self.lo, self.hi)
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 2:
            raise ValueError(f"number of subdivisions must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def interval(self) -> Interval:
        return Interval(self.lo, self.hi)

    @property
    def h(self) -> float:
        return (self.hi - self.lo) / self.n

    def points(self) -> np.ndarray:
        return self.lo + np.arange(self.n + 1) * self.h


@dataclass
class SweepTable:
    """Educated-map values on a grid, one column per composition depth.

    Suppressed cells hold NaN in ``values`` and True in ``suppressed``.
    """

    grid: GridSpec
    x: np.ndarray
    values: np.ndarray
    suppressed: np.ndarray

    @property
    def depths(self) -> int:
        return self.values.shape[1]

    def rendered(self) -> np.ndarray:
        """Values with suppressed cells shown as 0."""
        return np.where(self.suppressed, 0.0, self.values)

    def holds(self) -> np.ndarray:
        """Where the predicate holds (the depth-1 column is not suppressed)."""
        return ~self.suppressed[:, 0]


@dataclass(frozen=True)
class PredicateRun:
    first_index: int
    last_index: int
    lo: float
    hi: float
    points: tuple = field(repr=False)
    values: tuple = field(repr=False)

    def __len__(self):
        return self.last_index - self.first_index + 1

    @property
    def indices(self) -> range:
        return range(self.first_index, self.last_index + 1)


@dataclass(frozen=True)
class RootReport:
    run: PredicateRun
    root: float
    residual: float
    depth: int
    invariant: bool
    possibly_multiple: bool = False
    is_root: bool = True
    diagnostic: str = ""


def thread_count(workers: Optional[int] = None) -> int:
    cap = os.environ.get(THREADS_ENV)
    n = workers if workers is not None else (int(cap) if cap else 1)
    if cap:
        n = min(n, int(cap))
    return max(1, n)


def sweep_grid(em: EducatedMap, grid: GridSpec, r_max: int = 3,
               workers: Optional[int] = None) -> SweepTable:
    """Tabulate the 1..r_max-fold educated map at every grid point.

    Points may be evaluated on several threads; each result is written at
    its own index, so the table does not depend on the worker count.
    """
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    if not em.cfg.domain.contains_interval(grid.interval):
        raise ValueError(f"grid [{grid.lo}, {grid.hi}] is not inside the predicate domain "
                         f"[{em.cfg.domain.lo}, {em.cfg.domain.hi}]")
    x = grid.points()
    values = np.full((x.size, r_max), np.nan)

    def fill(idx):
        for i in idx:
            for r, v in enumerate(em.depths(float(x[i]), r_max)):
                if v is not None:
                    values[i, r] = v

    n_threads = thread_count(workers)
    if n_threads == 1:
        fill(range(x.size))
    else:
        chunks = np.array_split(np.arange(x.size), n_threads)
        with ThreadPoolExecutor(n_threads) as pool:
            list(pool.map(fill, chunks))
    return SweepTable(grid, x, values, np.isnan(values))


def detect_runs(table: SweepTable) -> list[PredicateRun]:
    """Maximal blocks of consecutive grid points where the predicate holds."""
    holds = table.holds()
    if holds.size == 0:
        raise ValueError("empty sweep table")
    padded = np.concatenate(([False], holds, [False])).astype(np.int8)
    edges = np.diff(padded)
    starts = np.flatnonzero(edges == 1)
    stops = np.flatnonzero(edges == -1) - 1
    runs = []
    for a, b in zip(starts, stops):
        a, b = int(a), int(b)
        runs.append(PredicateRun(
            a, b, float(table.x[a]), float(table.x[b]),
            tuple(float(v) for v in table.x[a:b + 1]),
            tuple(float(v) for v in table.values[a:b + 1, 0]),
        ))
    return runs


def _model_of(em: EducatedMap) -> Optional[FunctionModel]:
    return getattr(em.g, "model", None)


def _residual(em: EducatedMap, model: Optional[FunctionModel], z: float) -> float:
    if model is not None:
        fz = model.value(z)
        return math.inf if fz is None else abs(fz)
    gz = em.g(z)
    return math.inf if gz is None else abs(gz - z)


def _seed(em: EducatedMap, model: Optional[FunctionModel], run: PredicateRun) -> float:
    if model is not None:
        def score(x):
            fx = model.value(x)
            return math.inf if fx is None else abs(fx)
        return min(run.points, key=score)
    return min(zip(run.points, run.values), key=lambda p: abs(p[1] - p[0]))[0]


def refine_run(em: EducatedMap, run: PredicateRun, tol: float = DEFAULT_TOL,
               r_max: int = DEFAULT_RMAX, h: Optional[float] = None,
               model: Optional[FunctionModel] = None, span_depth: Optional[int] = None) -> RootReport:
    """Compose the educated map from the run's seed until numerical invariance.

    Invariance at depth r means |Psi^(r+1)(x) - Psi^r(x)| <= tol * max(1, |Psi^r(x)|);
    the reported root is Psi^(r+1)(x).  If r_max is reached first, the last
    value is reported with ``invariant=False``.

    The run is flagged ``possibly_multiple`` when its points, pushed through
    ``span_depth`` (default ``r_max``) compositions, still spread over more than four grid steps.
    """
    if len(run) == 0:
        raise ValueError("empty run")
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    model = model if model is not None else _model_of(em)
    if h is None:
        h = (run.hi - run.lo) / max(len(run) - 1, 1)
    multiple = _spread(em, run, span_depth or r_max) > 4.0 * h

    seed = _seed(em, model, run)
    prev = em.step(seed)
    root, depth, invariant, diag = prev, 1, False, ""
    if prev is None:
        root, diag = seed, "seed suppressed at depth 1"
    else:
        for r in range(1, r_max):
            nxt = em.step(prev)
            if nxt is None:
                diag = f"suppressed at depth {r + 1}"
                break
            root, depth = nxt, r
            if abs(nxt - prev) <= tol * max(1.0, abs(prev)):
                invariant = True
                break
            prev = nxt
            depth = r + 1
        else:
            diag = f"no invariance up to depth {r_max}"
    if not run.lo - h <= root <= run.hi + h:
        diag = (diag + "; " if diag else "") + "root left the run's neighbourhood"
    residual = _residual(em, model, root)
    return RootReport(run, root, residual, depth, invariant, multiple,
                      _looks_like_root(model, root, h), diag)


def _spread(em: EducatedMap, run: PredicateRun, depth: int) -> float:
    deep = [v for v in (em.depths(x, depth)[-1] for x in run.points) if v is not None]
    return max(deep) - min(deep) if deep else 0.0


def _looks_like_root(model: Optional[FunctionModel], z: float, h: float) -> bool:
    # Halley's map also fixes critical points of f; a Newton correction
    # larger than the grid spacing means z is not a root.
    if model is None:
        return True
    j = model.jet(z)
    if j is None:
        return False
    return abs(j.value) <= h * abs(j.d1)


@dataclass
class SeparationResult:
    config: dict
    grid: GridSpec
    runs: list
    reports: list
    rejected: list = field(default_factory=list)

    @property
    def roots(self) -> list[float]:
        return [r.root for r in self.reports]


def merge_reports(reports, h: float, tol: float) -> list[RootReport]:
    """Sort by root and fold adjacent duplicates, keeping the smaller residual."""
    out: list[RootReport] = []
    for rep in sorted(reports, key=lambda r: r.root):
        if out:
            last = out[-1]
            gap = abs(rep.root - last.root)
            if gap <= 2.0 * h and gap <= tol * max(1.0, abs(last.root)):
                if rep.residual < last.residual:
                    out[-1] = rep
                continue
        out.append(rep)
    return out


def analyze(model: FunctionModel, kind: str, cfg: PredicateConfig, grid: GridSpec,
            tol: float = DEFAULT_TOL, r_max: int = DEFAULT_RMAX,
            workers: Optional[int] = None, config: Optional[dict] = None) -> SeparationResult:
    """Full pipeline; returns runs, accepted reports and rejected ones.

    Reports whose refined point is a fixed point of the map but not a root
    of f are moved to ``rejected``.
    """
    g = make_map(kind, model, cfg.domain)
    em = EducatedMap(g, cfg)
    table = sweep_grid(em, grid, 1, workers)
    runs = detect_runs(table)
    h = grid.h
    reports = [refine_run(em, run, tol, r_max, h=h, model=model) for run in runs]
    accepted = [r for r in reports if r.is_root]
    rejected = [r for r in reports if not r.is_root]
    if config is None:
        config = {"fn": model.source, "map": kind, "pred": cfg.mode, "d": cfg.d,
                  "domain": [cfg.domain.lo, cfg.domain.hi], "tol": tol, "rmax": r_max}
    return SeparationResult(config, grid, runs, merge_reports(accepted, h, tol), rejected)


def separate(model: FunctionModel, kind: str, cfg: PredicateConfig, grid: GridSpec,
             tol: float = DEFAULT_TOL, r_max: int = DEFAULT_RMAX,
             workers: Optional[int] = None) -> list[RootReport]:
    """Separated and refined roots of ``model`` on ``grid``, sorted by root."""
    return analyze(model, kind, cfg, grid, tol, r_max, workers).reports
