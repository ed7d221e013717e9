import math
import zlib

import numpy as np
import pytest

from oracles import central_differences, jet_agrees
from rootsieve import hyperdual as hd
from rootsieve.funcmodel import (PRIMES, Interval, Jet2, eval_jet2, expression_model, horner_jet,
                                 model_from_spec, oscillating_model, polynomial_model, pruitt_model)


def test_interval_invariants():
    with pytest.raises(ValueError):
        Interval(1.0, 1.0)
    with pytest.raises(ValueError):
        Interval(0.0, math.inf)
    iv = Interval(-1.0, 1.0)
    assert 1.0 in iv and -1.0 in iv and 1.5 not in iv and None not in iv
    assert float("nan") not in iv


def test_cube_jet():
    m = expression_model("x^3", Interval(-5, 5))
    assert eval_jet2(m, 2.0) == Jet2(8.0, 12.0, 12.0)


def test_sin_jet_at_zero():
    m = expression_model("sin(x)", Interval(-5, 5))
    assert eval_jet2(m, 0.0) == Jet2(0.0, 1.0, -0.0)


def test_oscillating_expression_singular_at_zero():
    m = expression_model("(x+1/2)^(3/2)*sin(1/x)", Interval(-0.5, 0.5))
    assert eval_jet2(m, 0.0) is None
    assert eval_jet2(oscillating_model(), 0.0) is None
    assert eval_jet2(oscillating_model("recip"), 0.0) is None


@pytest.mark.parametrize("text, x", [("1/x", 0.0), ("sqrt(x)", -1.0), ("log(x)", 0.0),
                                     ("x^(1/2)", -2.0), ("abs(x)", 0.0), ("exp(x)", 1e6)])
def test_singularities_flagged(text, x):
    assert eval_jet2(expression_model(text, Interval(-10, 10)), x) is None


def test_registry_matches_parsed_expressions():
    """Closed-form registry derivatives against hyper-dual ones on the same formula."""
    rng = np.random.default_rng(7)
    pairs = [
        (pruitt_model(3), "sin(x*pi/2)*sin(x*pi/3)*sin(x*pi/5)", Interval(1.5, 25.3)),
        (oscillating_model(), "(x+1/2)^(3/2)*sin(1/x^2)", Interval(0.05, 0.5)),
        (oscillating_model("recip"), "(x+1/2)^(3/2)*sin(1/x)", Interval(-0.45, -0.05)),
    ]
    for reg, text, iv in pairs:
        expr = expression_model(text, iv)
        for x in rng.uniform(iv.lo, iv.hi, 200):
            a, b = reg.jet(x), expr.jet(x)
            for u, v in zip((a.value, a.d1, a.d2), (b.value, b.d1, b.d2)):
                assert u == pytest.approx(v, rel=1e-9, abs=1e-9 * max(abs(b.d1), 1.0))


def test_horner_matches_numpy():
    coeffs = [3.0, -1.0, 0.5, 2.0, -0.25]
    p = np.polynomial.Polynomial(coeffs)
    for x in (-2.0, -0.3, 0.0, 1.7):
        v, d1, d2 = horner_jet(coeffs, x)
        assert v == pytest.approx(p(x))
        assert d1 == pytest.approx(p.deriv()(x))
        assert d2 == pytest.approx(p.deriv(2)(x))


class _Counting(float):
    muls = 0

    def __mul__(self, other):
        _Counting.muls += 1
        return _Counting(float(self) * float(other))

    __rmul__ = __mul__

    def __add__(self, other):
        return _Counting(float(self) + float(other))

    __radd__ = __add__


@pytest.mark.parametrize("degree", [1, 2, 5, 9])
def test_horner_step_count(degree):
    _Counting.muls = 0
    horner_jet([_Counting(1.0)] * (degree + 1), _Counting(0.5))
    # n multiply-adds for each of value, first and second derivative, plus the final 2*
    assert _Counting.muls == 3 * degree + 1


@pytest.mark.parametrize("spec", ["pruitt:1", "pruitt:2", "pruitt:3", "pruitt:4", "pruitt:6",
                                  "poly:1,-3,0,2", "poly:-2,0,1", "poly:0.5,1,-4,0,0,1"])
def test_registry_and_polynomial_against_finite_differences(spec):
    model = model_from_spec(spec, Interval(-3, 3))
    rng = np.random.default_rng(zlib.crc32(spec.encode()))
    for x in rng.uniform(model.domain.lo, model.domain.hi, 100):
        jet = model.jet(x)
        assert jet_agrees(jet, central_differences(lambda t: model.jet(t).value, x))


def test_oscillating_registry_against_finite_differences():
    model = oscillating_model()
    rng = np.random.default_rng(11)
    xs = rng.uniform(0.3, 0.5, 100) * rng.choice([-1.0, 1.0], 100)
    for x in xs:
        assert jet_agrees(model.jet(x), central_differences(lambda t: model.jet(t).value, x))


def test_pruitt_examples():
    m = pruitt_model(3)
    assert m.value(7.0) != 0.0
    assert m.value(6.0) == 0.0
    assert m.domain == Interval(1.5, 25 + 1 / 3)


def test_pruitt_range():
    with pytest.raises(ValueError):
        pruitt_model(0)
    with pytest.raises(ValueError):
        pruitt_model(26)
    assert pruitt_model(25).domain.hi == pytest.approx(97 ** 2 + 1 / 3)


@pytest.mark.parametrize("k", range(1, 11))
def test_pruitt_integer_zeros_follow_divisibility(k):
    m = pruitt_model(k)
    for j in range(2, PRIMES[k - 1] ** 2 + 1):
        divisible = any(j % p == 0 for p in PRIMES[:k])
        assert (m.value(float(j)) == 0.0) == divisible, j


def test_model_from_spec():
    assert model_from_spec("pruitt:4").source == "pruitt:4"
    assert model_from_spec("oscillating").domain == Interval(-0.5, 0.5)
    p = model_from_spec("poly:-2,0,1", Interval(0, 2))
    assert p.coeffs == (-2.0, 0.0, 1.0) and p.value(2.0) == 2.0
    e = model_from_spec("x^2 - 2", Interval(0, 2))
    assert e.kind == "expression" and e.value(3.0) == 7.0
    with pytest.raises(ValueError):
        model_from_spec("x^2", None)
    with pytest.raises(ValueError):
        model_from_spec("pruitt:abc")
    with pytest.raises(ValueError):
        model_from_spec("poly:1,,2", Interval(0, 1))


def test_hyperdual_variable_exponent():
    # d/dx 2^x = ln2 2^x
    y = hd.HyperDual.variable(1.5) ** 1.0
    assert y.re == 1.5
    z = 2.0 ** hd.HyperDual.variable(1.5)
    assert z.e1 == pytest.approx(math.log(2) * 2 ** 1.5)
    assert z.e12 == pytest.approx(math.log(2) ** 2 * 2 ** 1.5)


def test_polynomial_model_jet():
    m = polynomial_model([-2.0, 0.0, 1.0], Interval(0, 2))
    assert m.jet(1.5) == Jet2(0.25, 3.0, 2.0)
    assert m.source == "poly:-2.0,0.0,1.0"


def test_oscillating_zeros_are_inverse_square_roots():
    """Zeros of sin(1/x^2) are 1/sqrt(n pi); the reference refined value is n = 3392."""
    import mpmath
    with mpmath.workdps(40):
        z = 1 / mpmath.sqrt(3392 * mpmath.pi)
        assert mpmath.nstr(z, 20, strip_zeros=False) == "0.0096871749212619757899"
    m = oscillating_model()
    zf = float(z)
    assert abs(m.value(zf)) <= 1e-9 and abs(m.value(zf * (1 + 1e-6))) > 1e-6
