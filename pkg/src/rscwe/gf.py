"""Arithmetic in GF(p^m) with integer-coded elements.

An element with coefficient vector (c_0, ..., c_{m-1}) over F_p (low degree
first) is coded as the integer c_0 + c_1*p + ... + c_{m-1}*p^{m-1}, so codes
run over range(q) and the prime subfield occupies codes 0..p-1.  The modulus
is the monic irreducible polynomial of degree m whose own coefficient vector
codes to the smallest integer, which makes every field here reproducible from
(p, m) alone.
"""

from __future__ import annotations

from .errors import (
    CharacteristicTwoError,
    InvalidPrimeError,
    ParameterOutOfRangeError,
    SizeLimitError,
)

DEFAULT_MAX_Q = 4096

# q*q multiplication/addition tables are built lazily for extension fields up
# to this size; prime fields always use direct modular arithmetic instead.
TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- polynomial helpers over F_p (coefficient lists, low degree first) --------


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    """a mod f with f monic; coefficients kept in [0, p)."""
    a = [c % p for c in a]
    while len(a) >= len(f):
        c = a[-1]
        if c:
            off = len(a) - len(f)
            for i in range(len(f) - 1):
                a[off + i] = (a[off + i] - c * f[i]) % p
        a.pop()
    return _ptrim(a)

def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return _pmod(prod, f, p)


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd; gcd(a, 0) = monic multiple of a."""
    a, b = _ptrim([c % p for c in a]), _ptrim([c % p for c in b])
    while b:
        lead_inv = pow(b[-1], p - 2, p)
        monic_b = [(c * lead_inv) % p for c in b]
        a, b = b, _pmod(a, monic_b, p)
    if a:
        lead_inv = pow(a[-1], p - 2, p)
        a = [(c * lead_inv) % p for c in a]
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    """Monic f of degree >= 1; roots pass, then gcd with x^(p^i) - x."""
    m = len(f) - 1
    if m == 1:
        return True
    for a in range(p):
        acc = 0
        for c in reversed(f):
            acc = (acc * a + c) % p
        if acc == 0:
            return False
    r = [0, 1]
    for _ in range(1, m // 2 + 1):
        r = _ppowmod(r, p, f, p)
        diff = r[:] + [0] * (2 - len(r))
        diff[1] = (diff[1] - 1) % p
        if _pgcd(f, diff, p) != [1]:
            return False
    return True


def _poly_text(coeffs: tuple[int, ...]) -> str:
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        if d == 0:
            parts.append(str(c))
        else:
            x = "x" if d == 1 else f"x^{d}"
            parts.append(x if c == 1 else f"{c}{x}")
    return " + ".join(parts) if parts else "0"


class FieldContext:
    """GF(p^m) under the canonical modulus; elements are integer codes."""

    __slots__ = (
        "p", "m", "q", "modulus",
        "_digits", "_weights", "_red",
        "_add_t", "_mul_t", "_trace_t", "_eta_t",
    )

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self._add_t = None
        self._mul_t = None
        self._trace_t = None
        self._eta_t = None
        if m > 1:
            self._weights = [p**i for i in range(m)]
            self._digits = [self._decode(x) for x in range(self.q)]
            # reduction rows: digits of x^(m+i) mod modulus for i = 0..m-2
            row = [(-c) % p for c in modulus[:m]]
            rows = [tuple(row)]
            for _ in range(m - 2):
                top = row[m - 1]
                row = [0] + row[: m - 1]
                if top:
                    for j in range(m):
                        row[j] = (row[j] + top * rows[0][j]) % p
                rows.append(tuple(row))
            self._red = rows

    def _decode(self, x: int) -> tuple[int, ...]:
        digits = []
        for _ in range(self.m):
            digits.append(x % self.p)
            x //= self.p
        return tuple(digits)

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p}, m={self.m}, modulus={self.modulus_text()!r})"

    def modulus_text(self) -> str:
        return _poly_text(self.modulus)

    def validate_element(self, x: int) -> int:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.q:
            raise ParameterOutOfRangeError(
                f"element code {x!r} not in range(0, {self.q})"
            )
        return x

    def elements(self) -> range:
        """All q elements in ascending code order."""
        return range(self.q)

    # -- ring operations ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        t = self._add_t
        if t is not None:
            return t[a][b]
        if self.m == 1:
            return (a + b) % self.p
        da, db = self._digits[a], self._digits[b]
        p, w = self.p, self._weights
        return sum(((x + y) % p) * w[i] for i, (x, y) in enumerate(zip(da, db)))

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        p, w = self.p, self._weights
        return sum(((-x) % p) * w[i] for i, x in enumerate(self._digits[a]))

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        da, db = self._digits[a], self._digits[b]
        p, w = self.p, self._weights
        return sum(((x - y) % p) * w[i] for i, (x, y) in enumerate(zip(da, db)))

    def mul(self, a: int, b: int) -> int:
        t = self._mul_t
        if t is not None:
            return t[a][b]
        if self.m == 1:
            return (a * b) % self.p
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        m, p = self.m, self.p
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * m - 1)
        for i in range(m):
            x = da[i]
            if x:
                for j in range(m):
                    prod[i + j] += x * db[j]
        red = self._red
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[d] % p
            if c:
                row = red[d - m]
                for j in range(m):
                    prod[j] += c * row[j]
        w = self._weights
        return sum((prod[i] % p) * w[i] for i in range(m))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of the zero element")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if self.m == 1:
            if e < 0:
                a = self.inv(a)
                e = -e
            return pow(a, e, self.p)
        if e < 0:
            a = self.inv(a)
            e = -e
        result = 1
        mul = self.mul
        while e:
            if e & 1:
                result = mul(result, a)
            a = mul(a, a)
            e >>= 1
        return result

    # -- field-theoretic maps --------------------------------------------

    def trace(self, x: int) -> int:
        """Trace to F_p; the result is a prime-subfield code in range(p)."""
        if self.m == 1:
            return x
        t = self._trace_t
        if t is None:
            t = self._build_trace_table()
        return t[x]

    def _build_trace_table(self) -> list[int]:
        table = []
        p, m = self.p, self.m
        for x in range(self.q):
            y = x
            s = x
            for _ in range(m - 1):
                y = self.pow(y, p)
                s = self.add(s, y)
            if s >= p:
                raise AssertionError(f"trace of {x} landed outside the prime subfield")
            table.append(s)
        self._trace_t = table
        return table

    def quadratic_character(self, x: int) -> int:
        """eta(x) in {-1, 0, +1}; raises in characteristic 2."""
        if self.p == 2:
            raise CharacteristicTwoError(
                "quadratic character undefined in characteristic 2"
            )
        t = self._eta_t
        if t is None:
            t = self._build_eta_table()
        return t[x]

    def _build_eta_table(self) -> list[int]:
        half = (self.q - 1) // 2
        minus_one = self.neg(1)
        table = [0]
        for x in range(1, self.q):
            v = self.pow(x, half)
            if v == 1:
                table.append(1)
            elif v == minus_one:
                table.append(-1)
            else:
                raise AssertionError(f"x^((q-1)/2) = {v} is neither 1 nor -1")
        self._eta_t = table
        return table

    # -- lookup tables ----------------------------------------------------

    def ensure_tables(self) -> bool:
        """Build q*q add/mul tables for extension fields when q is small."""
        if self.m == 1:
            return True
        if self.q > TABLE_LIMIT:
            return False
        if self._mul_t is None:
            q = self.q
            add, mul = [], []
            for a in range(q):
                add.append([self.add(a, b) for b in range(q)])
                mul.append([self._mul_poly(a, b) for b in range(q)])
            # assign after both finish so add() keeps digit path during build
            self._add_t = add
            self._mul_t = mul
        return True


def min_weight_modulus(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible degree-m polynomial with smallest-coded coefficients."""
    for code in range(p**m):
        coeffs = []
        x = code
        for _ in range(m):
            coeffs.append(x % p)
            x //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {m} over F_{p}")


def build_field(p: int, m: int, *, max_q: int = DEFAULT_MAX_Q) -> FieldContext:
    """Construct GF(p^m) with the canonical modulus.

    Raises InvalidPrimeError for composite p, ParameterOutOfRangeError for
    m < 1, and SizeLimitError when p^m exceeds max_q.
    """
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise InvalidPrimeError(f"p must be prime (got {p!r})")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ParameterOutOfRangeError(f"extension degree m = {m!r} must be >= 1")
    q = p**m
    if q > max_q:
        raise SizeLimitError(
            f"field size q = {q} exceeds the configured bound {max_q}", budget=max_q
        )
    ctx = FieldContext(p, m, min_weight_modulus(p, m))
    if ctx.m > 1 and ctx.q <= 64:
        ctx.ensure_tables()
    return ctx
