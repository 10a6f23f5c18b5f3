"""Reed-Solomon codes RS_k(alpha) and their extended variants over GF(q).

A message is a tuple (f_0, ..., f_{k-1}) of field codes, read as the
polynomial f(x) = f_0 + f_1 x + ... + f_{k-1} x^{k-1}.  A codeword is the
tuple of values of f on the evaluation points, with the leading coefficient
f_{k-1} appended once more when the code is extended.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import (
    DimensionMismatchError,
    DuplicateEvaluationPointError,
    ParameterOutOfRangeError,
    SizeLimitError,
)
from .gf import FieldContext

DEFAULT_ENUM_BUDGET = 2**24

Message = tuple[int, ...]
Codeword = tuple[int, ...]

EVAL_KINDS = ("full", "punctured", "primitive", "standard", "custom")


def make_eval_set(
    ctx: FieldContext,
    kind: str,
    *,
    beta: int | None = None,
    points: tuple[int, ...] | None = None,
) -> tuple[int, ...]:
    """Build an evaluation-point tuple of one of the named kinds.

    full: all q elements ascending; punctured: all but beta, ascending;
    primitive: all nonzero elements; standard: 0 followed by the nonzero
    elements; custom: the given points, checked for duplicates.
    """
    if kind == "full":
        return tuple(ctx.elements())
    if kind == "punctured":
        if beta is None:
            raise ParameterOutOfRangeError("punctured evaluation set needs beta")
        ctx.validate_element(beta)
        return tuple(x for x in ctx.elements() if x != beta)
    if kind == "primitive":
        return tuple(range(1, ctx.q))
    if kind == "standard":
        return tuple(range(ctx.q))
    if kind == "custom":
        if points is None:
            raise ParameterOutOfRangeError("custom evaluation set needs points")
        pts = tuple(points)
        seen = set()
        for x in pts:
            ctx.validate_element(x)
            if x in seen:
                raise DuplicateEvaluationPointError(f"evaluation point {x} repeats")
            seen.add(x)
        return pts
    raise ParameterOutOfRangeError(
        f"unknown evaluation-set kind {kind!r}; expected one of {EVAL_KINDS}"
    )


@dataclass(frozen=True)
class CodeSpec:
    """Parameters of one (extended) Reed-Solomon code."""

    ctx: FieldContext
    k: int
    alpha: tuple[int, ...]
    extended: bool = False

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ParameterOutOfRangeError(f"dimension k = {self.k!r} must be >= 1")
        seen = set()
        for x in self.alpha:
            self.ctx.validate_element(x)
            if x in seen:
                raise DuplicateEvaluationPointError(f"evaluation point {x} repeats")
            seen.add(x)
        if self.k > len(self.alpha):
            raise ParameterOutOfRangeError(
                f"dimension k = {self.k} exceeds the {len(self.alpha)} evaluation points"
            )

    @property
    def n(self) -> int:
        """Number of evaluation points (excludes the extension coordinate)."""
        return len(self.alpha)

    @property
    def length(self) -> int:
        return self.n + 1 if self.extended else self.n

    @property
    def size(self) -> int:
        return self.ctx.q**self.k


def encode(spec: CodeSpec, message: Message) -> Codeword:
    """Evaluate the message polynomial on alpha (Horner), then extend."""
    if len(message) != spec.k:
        raise DimensionMismatchError(
            f"message has {len(message)} coefficients, code dimension is {spec.k}"
        )
    ctx = spec.ctx
    for c in message:
        ctx.validate_element(c)
    add, mul = ctx.add, ctx.mul
    top = message[-1]
    rest = message[-2::-1]
    word = []
    for a in spec.alpha:
        acc = top
        for c in rest:
            acc = add(mul(acc, a), c)
        word.append(acc)
    if spec.extended:
        word.append(top)
    return tuple(word)


def enumerate_codewords(
    spec: CodeSpec, *, budget: int | None = None
) -> Iterator[Codeword]:
    """All q^k codewords, messages in lexicographic code order.

    The budget check happens at call time, so an oversized request fails
    before any work starts.
    """
    limit = DEFAULT_ENUM_BUDGET if budget is None else budget
    if spec.size > limit:
        raise SizeLimitError(
            f"enumeration of q^k = {spec.size} codewords exceeds the budget {limit}",
            budget=limit,
        )

    def stream() -> Iterator[Codeword]:
        q, k = spec.ctx.q, spec.k
        for message in product(range(q), repeat=k):
            yield encode(spec, message)

    return stream()
