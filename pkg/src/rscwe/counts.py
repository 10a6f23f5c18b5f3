"""Closed-form counts of solutions to a2*x^2 + a1*x + a0 = rho over GF(q).

Each closed form has a brute-force twin (count_oracle, m_oracle) that settles
disagreements by direct enumeration.  The punctured domain drops a single
evaluation point beta; "vertex" below is the critical value
(4*a2)^(-1) * (4*a0*a2 - a1^2) of the quadratic, defined for odd q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CharacteristicTwoError, DegenerateQuadraticError
from .gf import FieldContext


@dataclass(frozen=True)
class CountQuery:
    """Arguments of one count: f(x) = a2 x^2 + a1 x + a0, target rho.

    beta is None for the full-field domain, or the dropped point for the
    punctured domain F \\ {beta}.
    """

    ctx: FieldContext
    a2: int
    a1: int
    a0: int
    rho: int
    beta: int | None = None

    def __post_init__(self):
        for v in (self.a2, self.a1, self.a0, self.rho):
            self.ctx.validate_element(v)
        if self.beta is not None:
            self.ctx.validate_element(self.beta)


def _value_at(ctx: FieldContext, a2: int, a1: int, a0: int, x: int) -> int:
    return ctx.add(ctx.mul(ctx.add(ctx.mul(a2, x), a1), x), a0)


def _vertex(ctx: FieldContext, a2: int, a1: int, a0: int) -> int:
    """(4 a2)^(-1) (4 a0 a2 - a1^2); odd characteristic, a2 != 0."""
    four = 4 % ctx.p
    inv_4a2 = ctx.inv(ctx.mul(four, a2))
    num = ctx.sub(ctx.mul(four, ctx.mul(a0, a2)), ctx.mul(a1, a1))
    return ctx.mul(inv_4a2, num)


def count_oracle(query: CountQuery) -> int:
    """Count solutions by trying every x in the domain."""
    ctx = query.ctx
    n = 0
    for x in ctx.elements():
        if x == query.beta:
            continue
        if _value_at(ctx, query.a2, query.a1, query.a0, x) == query.rho:
            n += 1
    return n


def count_full_field(query: CountQuery) -> int:
    """Closed-form count over the whole field."""
    if query.beta is not None:
        raise ValueError("count_full_field takes a full-field query (beta=None)")
    ctx, a2, a1, a0, rho = query.ctx, query.a2, query.a1, query.a0, query.rho
    if a2 == 0:
        if a1 == 0:
            return ctx.q if rho == a0 else 0
        return 1
    if ctx.p == 2:
        if a1 == 0:
            # x -> a2 x^2 is a bijection in characteristic 2
            return 1
        arg = ctx.mul(ctx.mul(a2, ctx.inv(ctx.mul(a1, a1))), ctx.sub(rho, a0))
        return 2 if ctx.trace(arg) == 0 else 0
    vertex = _vertex(ctx, a2, a1, a0)
    if rho == vertex:
        return 1
    eta = ctx.quadratic_character
    return 1 + eta(a2) * eta(ctx.sub(rho, vertex))


def count_punctured(query: CountQuery) -> int:
    """Closed-form count over F \\ {beta}."""
    if query.beta is None:
        raise ValueError("count_punctured needs a punctured query (beta set)")
    ctx, a2, a1, a0, rho = query.ctx, query.a2, query.a1, query.a0, query.rho
    beta = query.beta
    image = _value_at(ctx, a2, a1, a0, beta)
    if a2 == 0:
        if a1 == 0:
            return ctx.q - 1 if rho == a0 else 0
        return 0 if rho == image else 1
    if ctx.p == 2:
        if a1 == 0:
            return 0 if rho == image else 1
        arg = ctx.mul(ctx.mul(a2, ctx.inv(ctx.mul(a1, a1))), ctx.sub(rho, a0))
        if ctx.trace(arg) != 0:
            return 0
        return 1 if rho == image else 2
    vertex = _vertex(ctx, a2, a1, a0)
    if rho == vertex:
        return 0 if rho == image else 1
    eta = ctx.quadratic_character
    spread = eta(a2) * eta(ctx.sub(rho, vertex))
    if rho == image:
        return spread
    return 1 + spread


def m_cardinality(ctx: FieldContext, beta: int, g2: int, g1: int, g0: int) -> int:
    """Number of quadratics with leading coefficient g2, vertex value g1,
    and value g0 at beta; independent of beta.  Odd characteristic only."""
    if ctx.p == 2:
        raise CharacteristicTwoError("vertex values need odd characteristic")
    for v in (beta, g2, g1, g0):
        ctx.validate_element(v)
    if g2 == 0:
        raise DegenerateQuadraticError("leading coefficient g2 must be nonzero")
    if g0 == g1:
        return 1
    eta = ctx.quadratic_character
    return 0 if eta(g2) * eta(ctx.sub(g0, g1)) == -1 else 2


def m_oracle(ctx: FieldContext, beta: int, g2: int, g1: int, g0: int) -> int:
    """Same count by enumerating a1; a2 = g2 is fixed and a0 is forced by
    the value-at-beta constraint, leaving only the vertex check."""
    if ctx.p == 2:
        raise CharacteristicTwoError("vertex values need odd characteristic")
    for v in (beta, g2, g1, g0):
        ctx.validate_element(v)
    if g2 == 0:
        raise DegenerateQuadraticError("leading coefficient g2 must be nonzero")
    n = 0
    g2b2 = ctx.mul(g2, ctx.mul(beta, beta))
    for a1 in ctx.elements():
        a0 = ctx.sub(ctx.sub(g0, g2b2), ctx.mul(a1, beta))
        if _vertex(ctx, g2, a1, a0) == g1:
            n += 1
    return n
