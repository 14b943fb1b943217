"""Exact arithmetic over small finite fields GF(p^m).

Elements use an integer encoding: 0 is the zero element and the nonzero
element alpha^j is the integer j + 1, where alpha is the root of the
field's primitive polynomial.  Polynomial coefficient vectors are ordered
degree-descending (constant term last).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

# Pinned default primitive polynomials, degree-descending coefficients.
# GF(27) is fixed to x^3 + 2x + 1 so its tables match the usual printed form.
_DEFAULT_POLYS = {
    (3, 3): (1, 0, 2, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_mul_mod(a, b, prim, p):
    """Multiply two coefficient tuples modulo prim over GF(p)."""
    m = len(prim) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] = (prod[i + j] + ca * cb) % p
    # reduce degree-descending prod modulo prim (monic)
    while len(prod) > m:
        lead = prod[0]
        if lead:
            for i in range(len(prim)):
                prod[i] = (prod[i] - lead * prim[i]) % p
        prod.pop(0)
    while len(prod) < m:
        prod.insert(0, 0)
    return tuple(prod)


class Field:
    """GF(p^m) with precomputed exp/log tables.

    Immutable after construction; all operations are pure.
    """

    def __init__(self, p: int, m: int, primitive_poly: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if m < 1:
            raise ValueError("m must be >= 1")
        self.p = p
        self.m = m
        self.q = p ** m
        if primitive_poly is None:
            primitive_poly = _DEFAULT_POLYS.get((p, m)) or _find_primitive_poly(p, m)
        poly = tuple(c % p for c in primitive_poly)
        if len(poly) != m + 1 or poly[0] != 1:
            raise ValueError("primitive polynomial must be monic of degree m")
        self.primitive_poly = poly
        self._build_tables()

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        one = (0,) * (m - 1) + (1,)
        if m == 1:
            # find a generator of GF(p)*; alpha is the root of x - g
            g = p - self.primitive_poly[1]
            alpha = (g % p,)
        else:
            alpha = (0,) * (m - 2) + (1, 0)
        exp = [one]
        cur = one
        for _ in range(q - 2):
            cur = _poly_mul_mod(cur, alpha, self.primitive_poly, p)
            exp.append(cur)
        log = {poly: j for j, poly in enumerate(exp)}
        zero = (0,) * m
        if len(log) != q - 1 or zero in log:
            raise ValueError("polynomial is not primitive (alpha does not "
                             "generate the multiplicative group)")
        self._exp = exp          # exponent -> coefficient tuple
        self._log = log          # coefficient tuple -> exponent
        self._zero_poly = zero

    # --- representation conversions -------------------------------------

    def poly(self, a: int) -> Tuple[int, ...]:
        """Coefficient tuple (degree-descending) of integer-encoded a."""
        self._check(a)
        if a == 0:
            return self._zero_poly
        return self._exp[a - 1]

    def from_poly(self, coeffs: Sequence[int]) -> int:
        c = tuple(v % self.p for v in coeffs)
        if len(c) < self.m:
            c = (0,) * (self.m - len(c)) + c
        if all(v == 0 for v in c):
            return 0
        return self._log[c] + 1

    def exp(self, j: int) -> int:
        """Integer encoding of alpha^j."""
        return (j % (self.q - 1)) + 1

    def log(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("log of the zero element")
        return a - 1

    # --- arithmetic ------------------------------------------------------

    def _check(self, a: int):
        if not (0 <= a < self.q):
            raise ValueError(f"element {a} outside [0, {self.q})")

    def add(self, a: int, b: int) -> int:
        pa, pb = self.poly(a), self.poly(b)
        return self.from_poly(tuple((x + y) % self.p for x, y in zip(pa, pb)))

    def neg(self, a: int) -> int:
        return self.from_poly(tuple((-x) % self.p for x in self.poly(a)))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if a == 0 or b == 0:
            return 0
        return ((a - 1 + b - 1) % (self.q - 1)) + 1

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("inverse of the zero element")
        return ((self.q - 1 - (a - 1)) % (self.q - 1)) + 1

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if a == 0:
            if e <= 0:
                raise ZeroDivisionError("0 to a non-positive power")
            return 0
        return ((a - 1) * e % (self.q - 1)) + 1

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"Field(p={self.p}, m={self.m}, poly={self.primitive_poly})"


def _find_primitive_poly(p: int, m: int) -> Tuple[int, ...]:
    """Smallest (lexicographic) monic primitive polynomial of degree m over GF(p)."""
    import itertools
    if m == 1:
        # x - g for the smallest generator g of GF(p)*
        for g in range(2, p):
            seen = set()
            cur = 1
            for _ in range(p - 1):
                seen.add(cur)
                cur = cur * g % p
            if len(seen) == p - 1:
                return (1, (-g) % p)
        return (1, p - 1)  # p = 2: x + 1
    for tail in itertools.product(range(p), repeat=m):
        cand = (1,) + tail
        if cand[-1] == 0:
            continue  # x divides it
        try:
            Field(p, m, cand)
            return cand
        except ValueError:
            continue
    raise ValueError(f"no primitive polynomial found for GF({p}^{m})")


@lru_cache(maxsize=None)
def field_make(p: int, m: int, primitive_poly: Optional[Tuple[int, ...]] = None) -> Field:
    """Construct (and cache) GF(p^m) with the default or given primitive polynomial."""
    return Field(p, m, primitive_poly)


def field_arith(f: Field, op: str, a: int, b: int) -> int:
    fn = {"add": f.add, "sub": f.sub, "mul": f.mul, "div": f.div}.get(op)
    if fn is None:
        raise ValueError(f"unknown op {op!r}")
    return fn(a, b)


def field_explog(f: Field, direction: str, v: int) -> int:
    if direction == "exp":
        return f.exp(v)
    if direction == "log":
        return f.log(v)
    raise ValueError(f"unknown direction {direction!r}")
