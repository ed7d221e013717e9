"""Educated quasi-step maps and the separation utilities that go with them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import predicates
from .funcmodel import (MAX_PRUITT_K, check_pruitt_k, divisible_by_first_primes,
                        pruitt_interval)
from .predicates import PredicateConfig

# Suppressed values are ``None``.  The literal 0 only appears in rendered tables.
SUPPRESSED = None


@dataclass(frozen=True)
class EducatedMap:
    """The map g educated by ``cfg``, composed ``r`` times.

    One application returns g(x) under P0 and g(g(x)) under P1 or both,
    provided the predicate holds at x; otherwise the point is suppressed.
    Deeper compositions re-apply the educated map, so a suppression at any
    intermediate point is final.
    """

    g: Callable[[float], Optional[float]]
    cfg: PredicateConfig
    r: int = 1

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("composition depth r must be >= 1")

    def step(self, x: Optional[float]) -> Optional[float]:
        if x is None:
            return None
        out = predicates.evaluate(self.g, self.cfg, x)
        return out.image if out.holds else None

    def depths(self, x: float, r_max: Optional[int] = None) -> list:
        """Values of the 1-, 2-, ..., r_max-fold compositions at x."""
        r_max = self.r if r_max is None else r_max
        vals = []
        v = x
        for _ in range(r_max):
            v = self.step(v)
            vals.append(v)
        return vals

    def __call__(self, x: float) -> Optional[float]:
        v = x
        for _ in range(self.r):
            v = self.step(v)
            if v is None:
                return None
        return v


def educated_eval(em: EducatedMap, x: float) -> Optional[float]:
    return em(x)


@dataclass(frozen=True)
class RootSet:
    points: tuple

    def __post_init__(self):
        pts = tuple(sorted(self.points))
        if any(b <= a for a, b in zip(pts, pts[1:])):
            raise ValueError("points must be distinct")
        object.__setattr__(self, "points", pts)

    @property
    def resolution(self) -> float:
        return resolution(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def _points(z) -> Sequence[float]:
    return z.points if isinstance(z, RootSet) else sorted(z)


def resolution(z) -> float:
    """Smallest gap between consecutive points."""
    pts = _points(z)
    if len(pts) < 2:
        raise ValueError("resolution needs at least two points")
    return min(b - a for a, b in zip(pts, pts[1:]))


def separation_bound(z) -> float:
    """Half the resolution; displacements strictly below it keep attracting
    fixed points in separate P0 plateaus."""
    return resolution(z) / 2.0


def closest_integer(x: float) -> int:
    # round() breaks ties to even
    return int(round(x))


def pruitt_step_map(k: int, x: float) -> int:
    """[x] where the k-th Pruitt function vanishes at [x], else 0.

    The vanishing test is integer divisibility by the first k primes.
    """
    check_pruitt_k(k, MAX_PRUITT_K)
    if x not in pruitt_interval(k):
        raise ValueError(f"x={x} lies outside the Pruitt interval for k={k}")
    j = closest_integer(x)
    return j if divisible_by_first_primes(k, j) else 0
