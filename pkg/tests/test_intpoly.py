import random

from fractions import Fraction

import pytest

from isozeta import intpoly as ip


def test_trim_and_degree():
    assert ip.trim([1, 2, 0, 0]) == (1, 2)
    assert ip.trim([0]) == ()
    assert ip.degree(()) == -1
    assert ip.degree((5,)) == 0
    assert ip.degree((0, 0, 3)) == 2


def test_arithmetic_matches_evaluation():
    rng = random.Random(1)
    for _ in range(100):
        f = tuple(rng.randint(-5, 5) for _ in range(rng.randint(0, 5)))
        g = tuple(rng.randint(-5, 5) for _ in range(rng.randint(0, 5)))
        for x in (-2, -1, 0, 1, 3):
            assert ip.evaluate(ip.add(f, g), x) == ip.evaluate(f, x) + ip.evaluate(g, x)
            assert ip.evaluate(ip.mul(f, g), x) == ip.evaluate(f, x) * ip.evaluate(g, x)
            assert ip.evaluate(ip.sub(f, g), x) == ip.evaluate(f, x) - ip.evaluate(g, x)


def test_divmod_exact_roundtrip():
    rng = random.Random(2)
    for _ in range(60):
        g = tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 4)))
        if ip.trim(g) == ():
            continue
        q = tuple(rng.randint(-4, 4) for _ in range(rng.randint(0, 4)))
        r = tuple(rng.randint(-4, 4) for _ in range(max(0, ip.degree(g))))
        f = ip.add(ip.mul(q, g), r)
        qq, rr = ip.divmod_exact(f, g)
        assert ip.add(ip.mul(qq, g), rr) == tuple(Fraction(c) for c in ip.trim(f)) or ip.trim(
            [Fraction(c) for c in ip.add(ip.mul(qq, g), rr)]
        ) == tuple(Fraction(c) for c in ip.trim(f))


def test_try_exact_div():
    f = ip.mul((1, -1), (1, -2))
    assert ip.try_exact_div(f, (1, -1)) == (1, -2)
    assert ip.try_exact_div((1, 1), (1, -1)) is None
    assert ip.try_exact_div((2, 2), (2,)) == (1, 1)


def test_lagrange_recovers_polynomial():
    f = (3, -2, 0, 7)
    pts = [(x, ip.evaluate(f, x)) for x in (0, 1, -1, 2, -2)]
    assert ip.lagrange_interpolate(pts) == f


def test_bareiss_det_matches_cofactor_expansion():
    def slow_det(m):
        n = len(m)
        if n == 0:
            return 1
        if n == 1:
            return m[0][0]
        total = 0
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            total += (-1) ** j * m[0][j] * slow_det(minor)
        return total

    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(0, 5)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert ip.bareiss_det(m) == slow_det(m)


def test_primitive_gcd():
    f = ip.mul((1, -1), (2, 0, 6))
    g = ip.mul((1, -1), (3, 3))
    assert ip.primitive_gcd(f, g) == (1, -1)
    assert ip.primitive_gcd((1, -1), (1, 1)) == (1,)


def test_to_str():
    assert ip.to_str((1, -3, 2)) == "1 - 3*u + 2*u^2"
    assert ip.to_str(()) == "0"
    assert ip.to_str((0, 1)) == "u"
    assert ip.to_str((-1, 0, 1)) == "-1 + u^2"


def test_pow_negative_exponent_rejected():
    with pytest.raises(ValueError):
        ip.pow_((1, 1), -1)
