"""The vertical-displacement predicate P0 and the slope predicate P1.

P0 holds at x when x and y = g(x) lie in D and |y - x| < d.
P1 holds at x when x, y = g(x) and w = g(y) lie in D and |w - y| <= |y - x|.
D is closed.  A singular (``None``) map value makes either predicate false.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .funcmodel import Interval

P0 = "p0"
P1 = "p1"
BOTH = "both"
MODES = (P0, P1, BOTH)

Map = Callable[[float], Optional[float]]


@dataclass(frozen=True)
class PredicateConfig:
    domain: Interval
    mode: str = P1
    d: Optional[float] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.mode in (P0, BOTH):
            if self.d is None or not (self.d > 0.0 and math.isfinite(self.d)):
                raise ValueError(f"mode {self.mode!r} needs a finite displacement d > 0")


@dataclass(frozen=True)
class PredicateOutcome:
    holds: bool
    image: Optional[float] = None


FALSE = PredicateOutcome(False)


def eval_p0(g: Map, cfg: PredicateConfig, x: float) -> PredicateOutcome:
    D = cfg.domain
    if x not in D:
        return FALSE
    y = g(x)
    if y not in D or not abs(y - x) < cfg.d:
        return FALSE
    return PredicateOutcome(True, y)


def _p1_images(g: Map, D: Interval, x: float):
    if x not in D:
        return None
    y = g(x)
    if y not in D:
        return None
    w = g(y)
    if w not in D:
        return None
    return y, w


def eval_p1(g: Map, cfg: PredicateConfig, x: float) -> PredicateOutcome:
    yw = _p1_images(g, cfg.domain, x)
    if yw is None:
        return FALSE
    y, w = yw
    if abs(w - y) <= abs(y - x):
        return PredicateOutcome(True, w)
    return FALSE


def eval_both(g: Map, cfg: PredicateConfig, x: float) -> PredicateOutcome:
    yw = _p1_images(g, cfg.domain, x)
    if yw is None:
        return FALSE
    y, w = yw
    if abs(y - x) < cfg.d and abs(w - y) <= abs(y - x):
        return PredicateOutcome(True, w)
    return FALSE


_EVALUATORS = {P0: eval_p0, P1: eval_p1, BOTH: eval_both}


def evaluate(g: Map, cfg: PredicateConfig, x: float) -> PredicateOutcome:
    """Dispatch on ``cfg.mode``."""
    return _EVALUATORS[cfg.mode](g, cfg, x)
