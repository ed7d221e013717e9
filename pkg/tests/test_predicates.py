import math

import pytest
from hypothesis import given, strategies as st

from rootsieve.funcmodel import Interval, expression_model, pruitt_model
from rootsieve.itermaps import IterationMap
from rootsieve.predicates import BOTH, P0, P1, PredicateConfig, eval_both, eval_p0, eval_p1, evaluate

D = Interval(-2.0, 2.0)
xs = st.floats(-3, 3, allow_nan=False)
ds = st.floats(1e-6, 5, allow_nan=False)

# a small zoo of maps, including singular and domain-escaping ones
MAPS = [
    lambda x: x / 2,
    lambda x: 2 * x,
    lambda x: None if x == 0 else 1 / x,
    lambda x: x * x - 1,
    IterationMap.newton(expression_model("x^3 - x", D)),
    IterationMap.halley(expression_model("x^3 - x", D)),
]
maps = st.sampled_from(MAPS)


def test_config_validation():
    with pytest.raises(ValueError):
        PredicateConfig(D, P0)
    with pytest.raises(ValueError):
        PredicateConfig(D, BOTH, d=0.0)
    with pytest.raises(ValueError):
        PredicateConfig(D, P0, d=math.inf)
    with pytest.raises(ValueError):
        PredicateConfig(D, "p2", d=1.0)
    assert PredicateConfig(D).mode == P1


@given(maps, xs, ds)
def test_both_is_conjunction(g, x, d):
    p0 = eval_p0(g, PredicateConfig(D, P0, d), x)
    p1 = eval_p1(g, PredicateConfig(D, P1), x)
    both = eval_both(g, PredicateConfig(D, BOTH, d), x)
    assert both.holds == (p0.holds and p1.holds)
    if both.holds:
        assert both.image == p1.image


@given(maps, xs, ds, ds)
def test_p0_monotone_in_d(g, x, d1, d2):
    lo, hi = sorted((d1, d2))
    if eval_p0(g, PredicateConfig(D, P0, lo), x).holds:
        assert eval_p0(g, PredicateConfig(D, P0, hi), x).holds


@given(maps, xs)
def test_outside_domain_is_false(g, x):
    if x not in D:
        for cfg in (PredicateConfig(D, P0, 1.0), PredicateConfig(D, P1), PredicateConfig(D, BOTH, 1.0)):
            assert not evaluate(g, cfg, x).holds


@given(maps, xs, ds)
def test_images_match_definitions(g, x, d):
    o0 = eval_p0(g, PredicateConfig(D, P0, d), x)
    if o0.holds:
        y = g(x)
        assert o0.image == y and y in D and abs(y - x) < d
    o1 = eval_p1(g, PredicateConfig(D, P1), x)
    if o1.holds:
        y = g(x)
        w = g(y)
        assert o1.image == w and abs(w - y) <= abs(y - x)


def test_p0_is_strict_and_p1_is_not():
    g = lambda x: x + 0.5
    assert not eval_p0(g, PredicateConfig(D, P0, 0.5), 0.0).holds
    assert eval_p0(g, PredicateConfig(D, P0, 0.5000001), 0.0).holds
    # equal steps satisfy the non-strict slope predicate
    assert eval_p1(g, PredicateConfig(D, P1), 0.0).holds


def test_singular_map_makes_predicates_false():
    g = lambda x: None
    assert not eval_p0(g, PredicateConfig(D, P0, 1.0), 0.3).holds
    assert not eval_p1(g, PredicateConfig(D, P1), 0.3).holds


def test_p1_needs_second_image_in_domain():
    g = lambda x: 1.5 * x
    # 1.2 -> 1.8 -> 2.7 leaves D
    assert not eval_p1(g, PredicateConfig(D, P1), 1.2).holds


def test_newton_on_pruitt_fixed_point():
    f3 = pruitt_model(3)
    g = IterationMap.newton(f3)
    cfg = PredicateConfig(f3.domain, P0, 0.5)
    out = eval_p0(g, cfg, 6.0)
    assert out.holds and out.image == 6.0
