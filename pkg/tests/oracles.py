"""Independent reference computations shared by the tests."""
import numpy as np

EPS = np.finfo(float).eps


def _d1(f, x, h):
    return (f(x + h) - f(x - h)) / (2 * h)


def _d2(f, x, h):
    return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h)


def central_differences(f, x):
    """Central-difference f' and f'' with the steps eps^(1/3) and eps^(1/4) (scaled by |x|).

    The steps grow with |x| while the Pruitt factors keep an O(1) length
    scale, so one Richardson level (h and h/2) removes the h^2 term.
    """
    h1 = EPS ** (1 / 3) * max(1.0, abs(x))
    h2 = EPS ** (1 / 4) * max(1.0, abs(x))
    d1 = (4 * _d1(f, x, h1 / 2) - _d1(f, x, h1)) / 3
    d2 = (4 * _d2(f, x, h2 / 2) - _d2(f, x, h2)) / 3
    return d1, d2


def jet_agrees(jet, fd, rel=1e-5):
    """Relative agreement, scaled by max(|d|, |f|, |f'|) so sign changes of f'' are harmless."""
    scale = max(abs(jet.value), abs(jet.d1))
    return (abs(jet.d1 - fd[0]) <= rel * max(abs(jet.d1), scale)
            and abs(jet.d2 - fd[1]) <= rel * max(abs(jet.d2), scale))


def bisect(f, a, b, steps=200):
    fa = f(a)
    for _ in range(steps):
        m = 0.5 * (a + b)
        if m in (a, b):
            break
        fm = f(m)
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    return a if abs(f(a)) <= abs(f(b)) else b


def eratosthenes(n):
    flags = np.ones(n + 1, dtype=bool)
    flags[:2] = False
    for i in range(2, int(n ** 0.5) + 1):
        if flags[i]:
            flags[i * i::i] = False
    return set(np.flatnonzero(flags).tolist())
