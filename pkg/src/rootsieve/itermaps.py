"""Iteration maps whose fixed points encode the roots of f.

A map returns a float, or ``None`` when the step is singular (zero
denominator, non-finite jet, overflow).  At an exact zero of f both maps
return x, which is also their limit at a multiple root where f' vanishes
too.  No damping or safeguarding is done here; rejecting bad steps is the
predicates' job.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .funcmodel import FunctionModel, Interval

NEWTON = "newton"
HALLEY = "halley"
CUSTOM = "custom"


def _finite(y: float) -> Optional[float]:
    return y if math.isfinite(y) else None


def newton_step(model: FunctionModel, x: float) -> Optional[float]:
    j = model.jet(x)
    if j is None:
        return None
    if j.value == 0.0:
        return x
    if j.d1 == 0.0:
        return None
    try:
        return _finite(x - j.value / j.d1)
    except OverflowError:
        return None


def halley_step(model: FunctionModel, x: float) -> Optional[float]:
    j = model.jet(x)
    if j is None:
        return None
    f, f1, f2 = j.value, j.d1, j.d2
    if f == 0.0:
        return x
    den = 2.0 * f1 * f1 - f * f2
    if den == 0.0 or not math.isfinite(den):
        return None
    try:
        return _finite(x - 2.0 * f * f1 / den)
    except OverflowError:
        return None


@dataclass(frozen=True)
class IterationMap:
    """A map g on ``domain``: Newton or Halley for ``model``, or a custom callable."""

    kind: str
    domain: Interval
    model: Optional[FunctionModel] = None
    func: Optional[Callable[[float], Optional[float]]] = None

    def __post_init__(self):
        if self.kind in (NEWTON, HALLEY):
            if self.model is None:
                raise ValueError(f"{self.kind} map needs a function model")
        elif self.kind == CUSTOM:
            if self.func is None:
                raise ValueError("custom map needs a callable")
        else:
            raise ValueError(f"unknown map kind {self.kind!r}")

    @classmethod
    def newton(cls, model: FunctionModel, domain: Optional[Interval] = None):
        return cls(NEWTON, domain or model.domain, model=model)

    @classmethod
    def halley(cls, model: FunctionModel, domain: Optional[Interval] = None):
        return cls(HALLEY, domain or model.domain, model=model)

    @classmethod
    def custom(cls, func, domain: Interval, model: Optional[FunctionModel] = None):
        return cls(CUSTOM, domain, model=model, func=func)

    def __call__(self, x: float) -> Optional[float]:
        if x is None or not math.isfinite(x):
            return None
        if self.kind == NEWTON:
            return newton_step(self.model, x)
        if self.kind == HALLEY:
            return halley_step(self.model, x)
        try:
            y = self.func(x)
        except (ZeroDivisionError, ValueError, OverflowError):
            return None
        if y is None:
            return None
        y = float(y)
        return y if math.isfinite(y) else None


def make_map(kind: str, model: FunctionModel, domain: Optional[Interval] = None) -> IterationMap:
    kind = kind.lower()
    if kind == NEWTON:
        return IterationMap.newton(model, domain)
    if kind == HALLEY:
        return IterationMap.halley(model, domain)
    raise ValueError(f"map kind must be 'newton' or 'halley', got {kind!r}")


def newton_eval(m: IterationMap, x: float) -> Optional[float]:
    return newton_step(m.model, x)


def halley_eval(m: IterationMap, x: float) -> Optional[float]:
    return halley_step(m.model, x)


def iterate_r(g: Callable[[float], Optional[float]], x: float, r: int) -> Optional[float]:
    """``g`` composed ``r`` times, or ``None`` as soon as an iterate is singular."""
    if r < 1:
        raise ValueError("r must be >= 1")
    for _ in range(r):
        x = g(x)
        if x is None:
            return None
    return x
