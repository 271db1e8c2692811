"""Minimal double-double arithmetic for compensated series summation.

A value is a ``(hi, lo)`` pair of floats (or numpy arrays, elementwise) with
``hi + lo`` carrying ~31 significant digits. Only the handful of operations
needed by the alternating series in :mod:`hyperbessel.specfun` is provided.
Products rely on Dekker splitting, which assumes strict IEEE-754 double
arithmetic (numpy's default; do not run under value-changing fast-math).
"""

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a, b):
    # requires |a| >= |b| elementwise
    s = a + b
    return s, b - (s - a)


def split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    ah, al = split(a)
    bh, bl = split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def from_float(a):
    return a, a * 0.0


def neg(x):
    return -x[0], -x[1]


def add(x, y):
    s, e = two_sum(x[0], y[0])
    return quick_two_sum(s, e + x[1] + y[1])


def mul(x, y):
    p, e = two_prod(x[0], y[0])
    return quick_two_sum(p, e + x[0] * y[1] + x[1] * y[0])


def mul_d(x, c):
    p, e = two_prod(x[0], c)
    return quick_two_sum(p, e + x[1] * c)


def div(x, y):
    """x / y by three-step long division; y must be nonzero."""
    q0 = x[0] / y[0]
    r = add(x, neg(mul_d(y, q0)))
    q1 = r[0] / y[0]
    r = add(r, neg(mul_d(y, q1)))
    q2 = r[0] / y[0]
    s, e = quick_two_sum(q0, q1)
    return quick_two_sum(s, e + q2)


def to_float(x):
    return x[0] + x[1]
