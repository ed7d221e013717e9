"""Target functions f together with f' and f''.

Three sources are supported: named registry entries with closed-form
derivatives (the Pruitt family and the oscillating test function),
polynomials in ascending coefficient order evaluated by Horner's scheme,
and parsed expressions differentiated with hyper-dual numbers.

Every evaluation returns a :class:`Jet2` or ``None``; ``None`` is the
non-finite flag (a pole, a derivative blow-up, a domain error).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import hyperdual as hd
from .expression import Node, evaluate, format_expression, parse_expression

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
          53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
MAX_PRUITT_K = len(PRIMES)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError(f"interval endpoints must be finite, got [{self.lo}, {self.hi}]")
        if not self.lo < self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, x) -> bool:
        return x is not None and self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class Jet2:
    value: float
    d1: float
    d2: float


def _finite_jet(v, d1, d2) -> Optional[Jet2]:
    if math.isfinite(v) and math.isfinite(d1) and math.isfinite(d2):
        return Jet2(v, d1, d2)
    return None


@dataclass(frozen=True)
class FunctionModel:
    """A real function with its first two derivatives.

    ``kind`` is ``"registry"``, ``"polynomial"`` or ``"expression"``;
    ``source`` is the text the model was built from.
    """

    kind: str
    source: str
    domain: Interval
    _jet: Callable[[float], tuple] = field(repr=False, compare=False)
    coeffs: Optional[tuple] = None
    tree: Optional[Node] = field(default=None, repr=False)

    def jet(self, x: float) -> Optional[Jet2]:
        try:
            v, d1, d2 = self._jet(float(x))
        except (ZeroDivisionError, ValueError, OverflowError):
            return None
        return _finite_jet(v, d1, d2)

    def value(self, x: float) -> Optional[float]:
        j = self.jet(x)
        return None if j is None else j.value

    def __call__(self, x: float) -> Optional[float]:
        return self.value(x)


def eval_jet2(model: FunctionModel, x: float) -> Optional[Jet2]:
    """``(f, f', f'')`` at ``x``, or ``None`` where any of them is not finite."""
    return model.jet(x)


# -- polynomials -----------------------------------------------------------

def horner_jet(coeffs: Sequence[float], x: float) -> tuple:
    """Value, first and second derivative of ``sum(c[i] * x**i)``.

    A degree-n polynomial costs n multiply-adds per derivative order.
    """
    p, d1, d2 = coeffs[-1], 0.0, 0.0
    for c in reversed(coeffs[:-1]):
        d2 = d2 * x + d1
        d1 = d1 * x + p
        p = p * x + c
    return p, d1, 2.0 * d2


def polynomial_model(coeffs: Sequence[float], domain: Interval) -> FunctionModel:
    coeffs = tuple(float(c) for c in coeffs)
    if not coeffs:
        raise ValueError("polynomial needs at least one coefficient")
    source = "poly:" + ",".join(repr(c) for c in coeffs)
    return FunctionModel("polynomial", source, domain,
                         lambda x: horner_jet(coeffs, x), coeffs=coeffs)


# -- expressions -----------------------------------------------------------

def expression_model(text_or_tree, domain: Interval) -> FunctionModel:
    tree = parse_expression(text_or_tree) if isinstance(text_or_tree, str) else text_or_tree

    def jet(x):
        r = evaluate(tree, hd.HyperDual.variable(x))
        return r.re, r.e1, r.e12

    return FunctionModel("expression", format_expression(tree), domain, jet, tree=tree)


# -- Pruitt family ---------------------------------------------------------

def _sinpi_over(x: float, p: int) -> tuple:
    """``sin(pi x / p)`` and ``cos(pi x / p)`` with exact zeros at multiples of p.

    The argument is reduced by the nearest multiple of ``p`` first; the
    subtraction is exact, so integer multiples give a sine of exactly 0.
    """
    n = math.floor(x / p + 0.5)
    t = x - n * p
    a = math.pi * t / p
    s, c = math.sin(a), math.cos(a)
    if n % 2:
        s, c = -s, -c
    return s, c


def pruitt_jet(k: int, x: float) -> tuple:
    """f_k(x) = prod_{i<=k} sin(pi x / p_i) with derivatives by the product rule."""
    v, d1, d2 = 1.0, 0.0, 0.0
    for p in PRIMES[:k]:
        a = math.pi / p
        s, c = _sinpi_over(x, p)
        s1, s2 = a * c, -a * a * s
        v, d1, d2 = v * s, v * s1 + d1 * s, v * s2 + 2.0 * d1 * s1 + d2 * s
    return v, d1, d2


def pruitt_interval(k: int) -> Interval:
    check_pruitt_k(k, MAX_PRUITT_K)
    p = PRIMES[k - 1]
    return Interval(1.5, p * p + 1.0 / 3.0)


def check_pruitt_k(k, kmax: int):
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= kmax:
        raise ValueError(f"k must be an integer in [1, {kmax}], got {k!r}")


def pruitt_model(k: int) -> FunctionModel:
    """The k-th Pruitt function on [3/2, p_k^2 + 1/3]."""
    domain = pruitt_interval(k)
    return FunctionModel("registry", f"pruitt:{k}", domain, lambda x: pruitt_jet(k, x))


def divisible_by_first_primes(k: int, j: int) -> bool:
    """True iff the integer j is a multiple of one of the first k primes."""
    return any(j % p == 0 for p in PRIMES[:k])


def prime_divisor_count(k: int, j: int) -> int:
    return sum(1 for p in PRIMES[:k] if j % p == 0)


# -- oscillating test functions -------------------------------------------

OSCILLATING_DOMAIN = Interval(-0.5, 0.5)


def oscillating_jet(x: float) -> tuple:
    """(x + 1/2)^(3/2) sin(1/x^2) and its derivatives; singular at 0."""
    if x == 0.0:
        raise ZeroDivisionError("oscillating function is not differentiable at 0")
    b = x + 0.5
    if b <= 0.0:
        raise ValueError("outside (-1/2, inf)")
    sb = math.sqrt(b)
    u, u1, u2 = b * sb, 1.5 * sb, 0.75 / sb
    x2 = x * x
    t = 1.0 / x2
    t1 = -2.0 * t / x
    t2 = 6.0 * t * t
    s, c = math.sin(t), math.cos(t)
    v1, v2 = c * t1, -s * t1 * t1 + c * t2
    return u * s, u1 * s + u * v1, u2 * s + 2.0 * u1 * v1 + u * v2


def oscillating_recip_jet(x: float) -> tuple:
    """(x + 1/2)^(3/2) sin(1/x) and its derivatives; singular at 0."""
    if x == 0.0:
        raise ZeroDivisionError("oscillating function is not differentiable at 0")
    b = x + 0.5
    if b <= 0.0:
        raise ValueError("outside (-1/2, inf)")
    sb = math.sqrt(b)
    u, u1, u2 = b * sb, 1.5 * sb, 0.75 / sb
    t = 1.0 / x
    t1 = -t * t
    t2 = -2.0 * t1 * t
    s, c = math.sin(t), math.cos(t)
    v1, v2 = c * t1, -s * t1 * t1 + c * t2
    return u * s, u1 * s + u * v1, u2 * s + 2.0 * u1 * v1 + u * v2


def oscillating_model(variant: str = "") -> FunctionModel:
    if variant in ("", "sq"):
        return FunctionModel("registry", "oscillating", OSCILLATING_DOMAIN, oscillating_jet)
    if variant == "recip":
        return FunctionModel("registry", "oscillating:recip", OSCILLATING_DOMAIN,
                             oscillating_recip_jet)
    raise ValueError(f"unknown oscillating variant {variant!r}")


# -- spec strings ----------------------------------------------------------

def model_from_spec(spec: str, domain: Optional[Interval] = None) -> FunctionModel:
    """Build a model from ``pruitt:k``, ``oscillating[:recip]``,
    ``poly:c0,c1,...`` or a plain expression in ``x``.

    Polynomials and expressions take ``domain`` (required for them).
    """
    spec = spec.strip()
    head, _, rest = spec.partition(":")
    if head == "pruitt":
        try:
            k = int(rest)
        except ValueError:
            raise ValueError(f"bad Pruitt index in {spec!r}") from None
        return pruitt_model(k)
    if head == "oscillating":
        return oscillating_model(rest)
    if domain is None:
        raise ValueError(f"a domain is required for {spec!r}")
    if head == "poly":
        try:
            coeffs = [float(c) for c in rest.split(",")]
        except ValueError:
            raise ValueError(f"bad polynomial coefficients in {spec!r}") from None
        return polynomial_model(coeffs, domain)
    return expression_model(spec, domain)
