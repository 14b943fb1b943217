"""Symbol classification: quotient/remainder decomposition, remainder-class
to field-element maps, reduced classes generated by critical vectors, and
second-layer symbol recovery.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import prob
from .field import Field

Vec4 = Tuple[int, int, int, int]


@dataclass(frozen=True)
class RemainderDecomposition:
    quotient: Vec4
    remainder: Vec4


def split(x: Sequence[int], l: int) -> RemainderDecomposition:
    """Componentwise Euclidean division of a symbol by 2l+1."""
    d = 2 * l + 1
    return RemainderDecomposition(
        quotient=tuple(v // d for v in x),
        remainder=tuple(v % d for v in x),
    )


def combine(dec: RemainderDecomposition, l: int, k: int) -> Vec4:
    """Inverse of split; checks the result is a valid resolution-k symbol."""
    d = 2 * l + 1
    x = tuple(d * a + b for a, b in zip(dec.quotient, dec.remainder))
    return prob.check_prob_vector(x, k)


def remainder_vectors(l: int, k: int) -> List[Vec4]:
    """All remainder vectors with entry sum congruent to k mod 2l+1, lex order."""
    d = 2 * l + 1
    return [b for b in itertools.product(range(d), repeat=4) if sum(b) % d == k % d]


# --- remainder class maps ---------------------------------------------------

# The paper's arbitrary mapping between the 27 remainder vectors (sum = 0
# mod 3) and GF(27) integers, for l=1 (Table I).
TABLE_I: Dict[Vec4, int] = {
    (0, 0, 0, 0): 0, (1, 1, 1, 0): 1, (2, 2, 2, 0): 2,
    (0, 1, 1, 1): 3, (1, 2, 2, 1): 4, (2, 0, 0, 1): 5,
    (0, 2, 2, 2): 6, (1, 0, 0, 2): 7, (2, 1, 1, 2): 8,
    (0, 0, 1, 2): 9, (1, 1, 2, 2): 10, (2, 2, 0, 2): 11,
    (0, 0, 2, 1): 12, (1, 1, 0, 1): 13, (2, 2, 1, 1): 14,
    (0, 2, 1, 0): 15, (1, 0, 2, 0): 16, (2, 1, 0, 0): 17,
    (0, 1, 0, 2): 18, (1, 2, 1, 2): 19, (2, 0, 2, 2): 20,
    (0, 2, 0, 1): 21, (1, 0, 1, 1): 22, (2, 1, 2, 1): 23,
    (0, 1, 2, 0): 24, (1, 2, 0, 0): 25, (2, 0, 1, 0): 26,
}


@dataclass(frozen=True)
class RemainderClassMap:
    """Injective map remainder vector -> field integer (None = unmapped)."""
    l: int
    q: int
    entries: Dict[Vec4, int]

    @property
    def inverse(self) -> Dict[int, Vec4]:
        return {v: b for b, v in self.entries.items()}


def make_class_map(l: int, k: int, q: Optional[int] = None) -> RemainderClassMap:
    """Canonical remainder-class map.

    For l=1, k = 0 mod 3 and q=27 this is Table I verbatim.  Otherwise the
    remainder vectors are enumerated lexicographically against field
    integers 0..q-1; when q is smaller than (2l+1)^3 the tail remains
    unmapped (decoded as erasures).
    """
    qc = (2 * l + 1) ** 3
    if q is None:
        q = qc
    if l == 1 and k % 3 == 0 and q == 27:
        return RemainderClassMap(l=l, q=q, entries=dict(TABLE_I))
    vecs = remainder_vectors(l, k)
    entries = {b: i for i, b in enumerate(vecs[:q])}
    return RemainderClassMap(l=l, q=q, entries=entries)


def class_index(b: Sequence[int], cmap: RemainderClassMap) -> Optional[int]:
    """Field integer of the remainder vector, or None when unmapped."""
    d = 2 * cmap.l + 1
    if len(b) != 4 or any(not (0 <= v < d) for v in b):
        raise ValueError(f"malformed remainder vector {tuple(b)}")
    return cmap.entries.get(tuple(b))


def poly_class_map(f: Field, l: int, k: int) -> RemainderClassMap:
    """Additive remainder->field map b -> b1*a^2 + b2*a + b3 over GF((2l+1)^3).

    Requires 2l+1 = f.p prime and f.m = 3.  The fourth remainder entry is
    redundant given the sum constraint.  This is the embedding used by the
    improved Hamming construction (it is linear in b, unlike Table I).
    """
    if f.p != 2 * l + 1 or f.m != 3:
        raise ValueError("field must be GF((2l+1)^3) with 2l+1 prime")
    entries = {b: f.from_poly(b[:3]) for b in remainder_vectors(l, k)}
    return RemainderClassMap(l=l, q=f.q, entries=entries)


# --- second-layer recovery --------------------------------------------------

def second_layer_recover(y: Sequence[int], b: Sequence[int], l: int,
                         k: Optional[int] = None) -> Vec4:
    """The unique symbol x with remainder vector b within the l-ball of y.

    Raises if no candidate exists (more than t errors, or wrong class).
    """
    if k is None:
        k = sum(y)
    d = 2 * l + 1
    b = tuple(b)
    # the l-ball is symmetric: x = y + e over valid e covers exactly the
    # centers x for which y lies in the l-ball of x
    for e in prob.symbol_error_ball(tuple(y), l, k):
        x = prob.apply_error(tuple(y), e)
        if tuple(v % d for v in x) == b:
            return x
    raise ValueError(f"no symbol with remainder {b} within magnitude {l} of {tuple(y)}")


# --- reduced classes ---------------------------------------------------------

def is_remainder_error_pattern(dvec: Sequence[int], l: int) -> bool:
    """True iff dvec is the mod-(2l+1) signature of some l-LMPE."""
    d = 2 * l + 1
    if any(not (0 <= v < d) for v in dvec):
        raise ValueError(f"entries of {tuple(dvec)} must be in [0, 2l]")
    up = sum(v for v in dvec if v <= l)
    down = sum(d - v for v in dvec if v > l)
    return up == down and up <= l


def remainder_error_patterns(l: int, include_zero: bool = False) -> List[Vec4]:
    """All (nonzero by default) remainder error patterns, lex order."""
    d = 2 * l + 1
    out = [dv for dv in itertools.product(range(d), repeat=4)
           if is_remainder_error_pattern(dv, l)]
    if not include_zero:
        out = [dv for dv in out if any(dv)]
    return out


def _scale(b: Sequence[int], i: int, d: int) -> Vec4:
    return tuple(v * i % d for v in b)


def find_critical_vectors(l: int) -> List[Vec4]:
    """All critical vectors: b1=1, sum(b) = 0 mod 2l+1, and no scaling
    i*b (i in [1, 2l]) is a remainder error pattern."""
    d = 2 * l + 1
    out = []
    for rest in itertools.product(range(d), repeat=3):
        b = (1,) + rest
        if sum(b) % d != 0:
            continue
        if any(is_remainder_error_pattern(_scale(b, i, d), l) for i in range(1, d)):
            continue
        out.append(b)
    return out


@dataclass(frozen=True)
class ReducedClassTable:
    """(2l+1)^2 classes x (2l+1) columns of remainder vectors."""
    l: int
    k: int
    critical: Vec4
    rows: Tuple[Tuple[Vec4, ...], ...]

    def locate(self, b: Sequence[int]) -> Tuple[int, int]:
        """(class index, column index) of a remainder vector."""
        b = tuple(b)
        for ri, row in enumerate(self.rows):
            for ci, v in enumerate(row):
                if v == b:
                    return ri, ci
        raise KeyError(f"remainder vector {b} not in table")


def build_reduced_table(l: int, k: int, critical: Sequence[int]) -> ReducedClassTable:
    """Reduced classification generated by a critical vector.

    Column 0 holds the remainder vectors with first entry 0 (lex order by
    row); column i adds i*critical (mod 2l+1).  For k not divisible by
    2l+1, k is added to the last entry of every vector (mod 2l+1).
    """
    d = 2 * l + 1
    critical = tuple(critical)
    if critical not in find_critical_vectors(l):
        raise ValueError(f"{critical} is not a critical vector for l={l}")
    shift = k % d
    rows = []
    for rest in itertools.product(range(d), repeat=3):
        if sum(rest) % d != 0:
            continue
        base = (0,) + rest
        row = []
        for i in range(d):
            v = tuple((a + i * c) % d for a, c in zip(base, critical))
            v = v[:3] + ((v[3] + shift) % d,)
            row.append(v)
        rows.append(tuple(row))
    rows.sort(key=lambda row: row[0])
    return ReducedClassTable(l=l, k=k, critical=critical, rows=tuple(rows))


def validate_classification(table: ReducedClassTable, l: int) -> bool:
    """Exhaustively check conditions C1 (no in-row pair differs by a
    remainder error pattern) and C2 (exact cover of remainder vectors)."""
    d = 2 * l + 1
    seen = set()
    for row in table.rows:
        for v in row:
            if v in seen:
                return False  # C2: duplicate
            seen.add(v)
        for v1, v2 in itertools.combinations(row, 2):
            diff = tuple((a - b) % d for a, b in zip(v1, v2))
            if is_remainder_error_pattern(diff, l):
                return False  # C1
            diff = tuple((b - a) % d for a, b in zip(v1, v2))
            if is_remainder_error_pattern(diff, l):
                return False  # C1
    expected = set(remainder_vectors(l, table.k))
    return seen == expected  # C2: exact cover
