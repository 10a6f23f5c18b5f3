"""Field construction and arithmetic."""

import random

import pytest

from rscwe import (
    CharacteristicTwoError,
    InvalidPrimeError,
    ParameterOutOfRangeError,
    SizeLimitError,
    build_field,
)
from rscwe.gf import min_weight_modulus

# Frozen from an independent scan: monic degree-m polynomials in ascending
# coefficient-code order, first one that sympy's GF(p) irreducibility test
# accepts.
CANONICAL_MODULI = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (3, 1): (0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 7): (2, 0, 1, 0, 0, 0, 0, 1),
    (5, 1): (0, 1),
    (5, 2): (2, 0, 1),
    (5, 4): (2, 0, 0, 0, 1),
    (7, 3): (2, 0, 0, 1),
    (11, 2): (1, 0, 1),
    (13, 3): (2, 0, 0, 1),
}


def naive_is_irreducible(f, p):
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    m = len(f) - 1

    def poly_rem(a, b):
        a = list(a)
        while len(a) >= len(b):
            c = a[-1]
            if c:
                off = len(a) - len(b)
                for i in range(len(b) - 1):
                    a[off + i] = (a[off + i] - c * b[i]) % p
            a.pop()
        while a and a[-1] == 0:
            a.pop()
        return a

    for d in range(1, m // 2 + 1):
        for code in range(p**d):
            coeffs = []
            v = code
            for _ in range(d):
                coeffs.append(v % p)
                v //= p
            g = coeffs + [1]
            if not poly_rem(f, g):
                return False
    return True


@pytest.mark.parametrize("p,m", sorted(CANONICAL_MODULI))
def test_canonical_modulus_frozen(p, m):
    assert min_weight_modulus(p, m) == CANONICAL_MODULI[(p, m)]


@pytest.mark.parametrize("p,m", [(2, 4), (3, 3), (5, 2), (7, 2)])
def test_canonical_modulus_is_minimal(p, m):
    # every smaller-coded monic polynomial must be reducible
    chosen = min_weight_modulus(p, m)
    chosen_code = sum(c * p**i for i, c in enumerate(chosen[:m]))
    assert naive_is_irreducible(list(chosen), p)
    for code in range(chosen_code):
        coeffs = []
        v = code
        for _ in range(m):
            coeffs.append(v % p)
            v //= p
        assert not naive_is_irreducible(coeffs + [1], p)


def test_build_field_validation():
    with pytest.raises(InvalidPrimeError):
        build_field(4, 1)
    with pytest.raises(InvalidPrimeError):
        build_field(1, 1)
    with pytest.raises(InvalidPrimeError):
        build_field(-3, 1)
    with pytest.raises(ParameterOutOfRangeError):
        build_field(2, 0)
    with pytest.raises(SizeLimitError):
        build_field(2, 13)  # 8192 > 4096
    assert build_field(2, 13, max_q=10000).q == 8192
    with pytest.raises(SizeLimitError):
        build_field(67, 2)


def test_basic_attributes():
    ctx = build_field(3, 2)
    assert (ctx.p, ctx.m, ctx.q) == (3, 2, 9)
    assert ctx.modulus_text() == "x^2 + 1"
    assert list(ctx.elements()) == list(range(9))


SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]
BIG_FIELDS = [(2, 4), (5, 2), (3, 3), (7, 2), (2, 5)]


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, m):
    ctx = build_field(p, m)
    q = ctx.q
    for a in range(q):
        assert ctx.add(a, 0) == a
        assert ctx.mul(a, 1) == a
        assert ctx.mul(a, 0) == 0
        assert ctx.add(a, ctx.neg(a)) == 0
        for b in range(q):
            assert ctx.add(a, b) == ctx.add(b, a)
            assert ctx.mul(a, b) == ctx.mul(b, a)
            assert ctx.sub(a, b) == ctx.add(a, ctx.neg(b))
            for c in range(q):
                assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
                assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
                assert ctx.mul(a, ctx.add(b, c)) == ctx.add(
                    ctx.mul(a, b), ctx.mul(a, c)
                )


@pytest.mark.parametrize("p,m", BIG_FIELDS)
def test_field_axioms_sampled(p, m):
    ctx = build_field(p, m)
    rng = random.Random(1000 * p + m)
    for _ in range(10_000):
        a = rng.randrange(ctx.q)
        b = rng.randrange(ctx.q)
        c = rng.randrange(ctx.q)
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(a, b) == ctx.mul(b, a)
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.sub(a, b) == ctx.add(a, ctx.neg(b))


@pytest.mark.parametrize("p,m", SMALL_FIELDS + BIG_FIELDS)
def test_inverses(p, m):
    ctx = build_field(p, m)
    for a in range(1, ctx.q):
        inv = ctx.inv(a)
        assert ctx.mul(a, inv) == 1
    with pytest.raises(ZeroDivisionError):
        ctx.inv(0)


def test_char_two_mul_example():
    ctx = build_field(2, 2)
    # the generator (code 2) squares to itself plus one
    assert ctx.mul(2, 2) == 3
    assert ctx.mul(2, 3) == 1


@pytest.mark.parametrize("p,m", SMALL_FIELDS + BIG_FIELDS)
def test_pow(p, m):
    ctx = build_field(p, m)
    rng = random.Random(7 * p + m)
    for _ in range(200):
        a = rng.randrange(ctx.q)
        e = rng.randrange(0, 3 * ctx.q)
        acc = 1
        for _ in range(e):
            acc = ctx.mul(acc, a)
        assert ctx.pow(a, e) == acc
    for a in range(1, ctx.q):
        assert ctx.pow(a, ctx.q - 1) == 1
        assert ctx.pow(a, -1) == ctx.inv(a)
    for a in range(ctx.q):
        assert ctx.pow(a, ctx.q) == a


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_trace(p, m):
    ctx = build_field(p, m)
    q = ctx.q
    for x in range(q):
        assert 0 <= ctx.trace(x) < p
        assert ctx.trace(ctx.pow(x, p)) == ctx.trace(x)
    for x in range(q):
        for y in range(q):
            lhs = ctx.trace(ctx.add(x, y))
            assert lhs == (ctx.trace(x) + ctx.trace(y)) % p
    # trace is balanced: each value of F_p is hit q/p times
    hits = [0] * p
    for x in range(q):
        hits[ctx.trace(x)] += 1
    assert hits == [q // p] * p


def test_trace_gf4_frozen():
    ctx = build_field(2, 2)
    assert [ctx.trace(x) for x in range(4)] == [0, 0, 1, 1]


def test_trace_prime_field_is_identity():
    ctx = build_field(5, 1)
    assert [ctx.trace(x) for x in range(5)] == [0, 1, 2, 3, 4]


def test_quadratic_character_gf5_frozen():
    ctx = build_field(5, 1)
    assert [ctx.quadratic_character(x) for x in range(5)] == [0, 1, -1, -1, 1]


@pytest.mark.parametrize("p,m", [(3, 1), (5, 1), (7, 1), (3, 2), (3, 3), (5, 2), (11, 1)])
def test_quadratic_character(p, m):
    ctx = build_field(p, m)
    q = ctx.q
    eta = ctx.quadratic_character
    assert eta(0) == 0
    squares = {ctx.mul(x, x) for x in range(1, q)}
    assert len(squares) == (q - 1) // 2
    for x in range(1, q):
        assert eta(x) == (1 if x in squares else -1)
        for y in range(1, q):
            assert eta(ctx.mul(x, y)) == eta(x) * eta(y)
    assert sum(eta(x) for x in range(q)) == 0


def test_quadratic_character_char_two():
    ctx = build_field(2, 2)
    with pytest.raises(CharacteristicTwoError):
        ctx.quadratic_character(1)


def test_tables_agree_with_direct_arithmetic():
    # GF(81) builds no tables automatically; force them and compare
    plain = build_field(3, 4)
    tabled = build_field(3, 4)
    assert tabled.ensure_tables()
    rng = random.Random(81)
    pairs = [(rng.randrange(81), rng.randrange(81)) for _ in range(3000)]
    for a, b in pairs:
        assert plain.add(a, b) == tabled.add(a, b)
        assert plain.mul(a, b) == tabled.mul(a, b)


def test_tables_refused_above_limit():
    ctx = build_field(2, 11, max_q=4096)
    assert not ctx.ensure_tables()
    assert ctx.mul(3, 5) == ctx.mul(5, 3)


def test_validate_element():
    ctx = build_field(3, 1)
    ctx.validate_element(2)
    for bad in (-1, 3, "1", 1.0, True):
        with pytest.raises(ParameterOutOfRangeError):
            ctx.validate_element(bad)
