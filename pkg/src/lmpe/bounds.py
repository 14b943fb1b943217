"""Closed-form analyses for LMPE correction codes: sphere-packing and
Gilbert-Varshamov bounds, geodesic ball volume terms, quotient counting,
rate formulas, and redundancy comparisons.

All bound arithmetic is carried out in the log domain: binomials via exact
integers converted with an arbitrary-precision log2, since quantities like
C(k+3,3)^n overflow any fixed-width float.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from .prob import alphabet_size


def log2_int(value: int) -> float:
    """log2 of a positive integer of arbitrary size."""
    if value <= 0:
        raise ValueError("need a positive integer")
    bits = value.bit_length()
    shift = max(bits - 64, 0)
    return math.log2(value >> shift) + shift


def log2_frac(value: Fraction) -> float:
    return log2_int(value.numerator) - log2_int(value.denominator)


def log2_binom(n: int, k: int) -> float:
    if k < 0 or k > n:
        return float("-inf")
    if n < 10_000:
        return log2_int(math.comb(n, k))
    return (math.lgamma(n + 1) - math.lgamma(k + 1)
            - math.lgamma(n - k + 1)) / math.log(2)


@dataclass
class BoundReport:
    log2_code_size_bound: float
    rate: float
    formula_variant: str
    validity: Dict[str, bool] = field(default_factory=dict)


@dataclass
class QuotientCount:
    s: int
    case: str  # "I" or "II"
    s_min: int
    Q: int
    Qprime_range: List[int]


def e_min(l: int) -> int:
    """Smallest error-ball size for magnitude at most l: the count at a
    corner vector, sum_{i=0}^{l} C(i+2,2) = l^3/6 + l^2 + 11l/6 + 1."""
    if l < 0:
        raise ValueError("l must be >= 0")
    return sum(math.comb(i + 2, 2) for i in range(l + 1))


def e_count(lprime: int) -> int:
    """Exact error-ball size at an interior symbol for magnitude at most
    l': (10/3)l'^3 + 5l'^2 + (11/3)l' + 1."""
    if lprime < 0:
        raise ValueError("l' must be >= 0")
    return (10 * lprime ** 3 + 15 * lprime ** 2 + 11 * lprime) // 3 + 1


def sphere_packing(n: int, k: int, t: int, l: int,
                   variant: str = "relaxed") -> BoundReport:
    """Sphere-packing upper bound on the LMPE code size.

    relaxed: denominator C(n,t)(1/6)^t l^(3t); exact: sum_{t'=0}^{t}
    C(n,t') E_min^t'.  Requires k >= 4l.
    """
    if k < 4 * l:
        raise ValueError("sphere-packing bound needs k >= 4l")
    if variant not in ("relaxed", "exact"):
        raise ValueError("variant must be relaxed or exact")
    total = n * log2_int(alphabet_size(k))
    if variant == "relaxed":
        if t == 0:
            denom = 0.0
        else:
            denom = log2_binom(n, t) + t * math.log2(l ** 3 / 6)
    else:
        em = e_min(l)
        denom = log2_int(sum(math.comb(n, tp) * em ** tp
                             for tp in range(t + 1)))
    bound = total - denom
    rate = bound / total if total else 1.0
    return BoundReport(bound, rate, variant)


def gv_bound(n: int, k: int, t: int, l: int) -> BoundReport:
    """Gilbert-Varshamov lower bound on the LMPE code size, with the
    large-n validity condition n > (1/l^3)(2t)^2 3.02^(2t) as a flag."""
    total = n * log2_int(alphabet_size(k))
    d = 2 * t
    if t == 0:
        denom = 0.0
        valid = True
    else:
        denom = (log2_int(d) + log2_binom(n, d)
                 + d * math.log2(10 / 3) + 6 * t * math.log2(l))
        valid = n > (d ** 2) * (3.02 ** d) / l ** 3
    bound = total - denom
    rate = bound / total if total else 1.0
    return BoundReport(bound, rate, "gv", {"condition_met": valid})


def _composition_cube_sums(d: int) -> List[int]:
    """For each i in 1..d, the sum over compositions of d into i positive
    parts of the product of cubed parts, via powers of P(x) = sum c^3 x^c."""
    base = [0] + [c ** 3 for c in range(1, d + 1)]  # coefficient index = c
    out = []
    cur = [1] + [0] * d
    for _ in range(d):
        nxt = [0] * (d + 1)
        for a, ca in enumerate(cur):
            if ca:
                for b in range(1, d + 1 - a):
                    nxt[a + b] += ca * base[b]
        cur = nxt
        out.append(cur[d])
    return out


def ball_volume_terms(n: int, l: int, d: int) -> Dict[str, List[float]]:
    """Geodesic ball case volumes V(i) with lower/upper bounds L(i), U(i)
    for i in 1..d, in log2 domain."""
    if d < 1:
        raise ValueError("d must be >= 1")
    cube_sums = _composition_cube_sums(d)
    V, L, U = [], [], []
    for i in range(1, d + 1):
        common = log2_binom(n, i) + i * math.log2(10 / 3) + 3 * i * math.log2(l)
        comps = log2_binom(d - 1, i - 1)
        V.append(common + log2_int(cube_sums[i - 1]))
        L.append(common + comps + 3 * math.log2(d - i + 1))
        U.append(common + comps + 3 * i * math.log2(d / i))
    return {"V": V, "L": L, "U": U}


def quotient_counts(k: int, l: int) -> QuotientCount:
    """Count of quotient vectors compatible with parity remainder choices."""
    if k < 1 or l < 0:
        raise ValueError("need k >= 1, l >= 0")
    p = 2 * l + 1
    s = k // p
    if 6 * l + 3 + (k % p) <= 8 * l:
        case = "I"
        s_min = max(s - 3, 0)
    else:
        case = "II"
        s_min = max(s - 2, 0)
    q_total = sum(math.comb(j + 3, 3) for j in range(s_min, s + 1))
    q_range = [math.comb(j + 3, 3) for j in range(s_min, s + 1)]
    return QuotientCount(s, case, s_min, q_total, q_range)


def rate_nonsystematic(n: int, m: int, k: int, l: int,
                       variant: str = "exact") -> float:
    """Rate of the non-systematic remainder construction."""
    if m > n:
        raise ValueError("m must be <= n")
    if variant == "exact":
        s_min = quotient_counts(k, l).s_min
        per = log2_int(alphabet_size(k))
        parity_info = log2_int(math.comb(s_min + 3, 3))
        return (m * per + (n - m) * parity_info) / (n * per)
    if variant == "approx":
        frac = m / n
        return frac + (1 - math.log2(2 * l + 1) / math.log2(k)) * (1 - frac)
    raise ValueError("variant must be exact or approx")


def rate_systematic(n: int, m: int, g: int) -> float:
    """Rate m/(m+r) of the systematic construction, where the n-m parity
    symbols are packed g Gray digits per probability vector (with padding)."""
    if m > n or g < 1:
        raise ValueError("need m <= n and g >= 1")
    r = -((m - n) // g)  # ceil((n-m)/g)
    return m / (m + r)


REDUNDANCY_METHODS = ("naive_hamming", "hamming_remainder", "improved_hamming",
                      "hamming_reduced", "bch_remainder", "bch_reduced")


def redundancy_bits(method: str, n: int, k: int = 0, l: int = 1,
                    t: int = 1) -> float:
    """Redundancy in bits for single- and multiple-error strategies at l=1
    (the Hamming rows are l=1 specializations)."""
    if method not in REDUNDANCY_METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method in ("naive_hamming", "hamming_remainder", "improved_hamming",
                  "hamming_reduced"):
        if t != 1:
            raise ValueError(f"{method} corrects a single symbol error")
        if l != 1:
            raise ValueError(f"{method} formula is specialized to l=1")
    if method == "naive_hamming":
        if k < 1:
            raise ValueError("naive_hamming needs the resolution k")
        return log2_int((alphabet_size(k) - 1) * n + 1)
    if method == "hamming_remainder":
        return log2_int(26 * n + 1)
    if method == "improved_hamming":
        return log2_int(13 * n + 1)
    if method == "hamming_reduced":
        return log2_int(8 * n + 1) + math.log2(3)
    if method == "bch_remainder":
        return 2 * t * math.log2(n + 1)
    return 3 * t * math.log2(n + 1)  # bch_reduced
