"""Probability vectors, limited-magnitude probability errors (LMPEs),
error-ball enumeration, a geodesic-distance oracle, and a channel sampler.

A symbol is a tuple of 4 non-negative integers summing to the resolution k.
An error is a zero-sum integer 4-tuple; its magnitude is the sum of its
positive entries.  An (l, t) LMPE perturbs at most t symbols of a word,
each by an error of magnitude at most l.
"""

import itertools
import random
from collections import deque
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

Symbol = Tuple[int, int, int, int]
Error = Tuple[int, int, int, int]
Word = Tuple[Symbol, ...]

M = 4  # number of nucleotides; fixed throughout


def is_prob_vector(x: Sequence[int], k: int) -> bool:
    return len(x) == M and all(0 <= v <= k for v in x) and sum(x) == k


def check_prob_vector(x: Sequence[int], k: int) -> Symbol:
    if not is_prob_vector(x, k):
        raise ValueError(f"{tuple(x)} is not a probability vector of resolution {k}")
    return tuple(x)


def alphabet(k: int) -> Iterator[Symbol]:
    """All probability vectors of resolution k, lexicographic order."""
    for a in range(k + 1):
        for b in range(k - a + 1):
            for c in range(k - a - b + 1):
                yield (a, b, c, k - a - b - c)


def alphabet_size(k: int) -> int:
    return comb(k + 3, 3)


def magnitude(e: Sequence[int]) -> int:
    return sum(v for v in e if v > 0)


def lmpe_is_valid(e: Sequence[int], l: int) -> bool:
    """True iff e is a valid l-LMPE for one symbol (Lemma 1: zero-sum
    with total absolute change at most 2l)."""
    return sum(e) == 0 and sum(abs(v) for v in e) <= 2 * l


def symbol_error_ball(x: Symbol, l: int, k: Optional[int] = None) -> List[Error]:
    """All valid l-LMPEs applicable to x (including zero), lexicographic."""
    if k is None:
        k = sum(x)
    out = []
    for e1 in range(-2 * l, 2 * l + 1):
        for e2 in range(-2 * l, 2 * l + 1):
            for e3 in range(-2 * l, 2 * l + 1):
                e4 = -(e1 + e2 + e3)
                e = (e1, e2, e3, e4)
                if lmpe_is_valid(e, l) and all(0 <= xi + ei <= k for xi, ei in zip(x, e)):
                    out.append(e)
    return out


def apply_error(x: Symbol, e: Error) -> Symbol:
    return tuple(xi + ei for xi, ei in zip(x, e))


def symbol_ball_vectors(x: Symbol, l: int, k: Optional[int] = None) -> List[Symbol]:
    """All symbols reachable from x by an l-LMPE (including x), lex on errors."""
    return [apply_error(x, e) for e in symbol_error_ball(x, l, k)]


def word_error_ball_size(x: Word, l: int, t: int, guard: int = 10 ** 9) -> int:
    """Exact number of words reachable from x by an (l, t) LMPE."""
    n = len(x)
    k = sum(x[0])
    nonzero = [len(symbol_error_ball(s, l, k)) - 1 for s in x]
    if (max(nonzero, default=0) + 1) ** min(t, n) > guard:
        raise ValueError("word error ball too large to enumerate")
    # coefficients of prod (1 + c_i z) truncated at degree t
    coeffs = [1] + [0] * t
    for c in nonzero:
        for d in range(min(t, len(coeffs) - 1), 0, -1):
            coeffs[d] += coeffs[d - 1] * c
    return sum(coeffs)


def word_neighbors(x: Word, l: int, k: int) -> Iterator[Word]:
    """Words reachable from x by a single-symbol nonzero l-LMPE."""
    for i, s in enumerate(x):
        for e in symbol_error_ball(s, l, k):
            if any(e):
                yield x[:i] + (apply_error(s, e),) + x[i + 1:]


def geodesic_distance(x: Word, y: Word, l: int, guard: int = 10 ** 6) -> Optional[int]:
    """Minimum number of single-symbol l-LMPE steps from x to y.

    Returns None when y is unreachable.  Breadth-first search with a
    visited-set guard; intended for tiny instances.
    """
    if len(x) != len(y) or sum(x[0]) != sum(y[0]):
        raise ValueError("words must share n and k")
    if x == y:
        return 0
    k = sum(x[0])
    seen = {x}
    frontier = deque([(x, 0)])
    while frontier:
        cur, d = frontier.popleft()
        for nxt in word_neighbors(cur, l, k):
            if nxt == y:
                return d + 1
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > guard:
                    raise ValueError("geodesic search guard exceeded")
                frontier.append((nxt, d + 1))
    return None


def geodesic_ball(x: Word, l: int, radius: int, guard: int = 10 ** 6) -> set:
    """All words within the given geodesic radius of x."""
    k = sum(x[0])
    seen = {x}
    frontier = [x]
    for _ in range(radius):
        nxt_frontier = []
        for cur in frontier:
            for nxt in word_neighbors(cur, l, k):
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > guard:
                        raise ValueError("geodesic ball guard exceeded")
                    nxt_frontier.append(nxt)
        frontier = nxt_frontier
    return seen


def sample_lmpe(x: Word, l: int, t: int, seed: int) -> Tuple[Error, ...]:
    """Sample an (l, t) LMPE applicable to x, deterministically from seed.

    The number of corrupted positions t' is uniform on [0, t], positions
    are a uniform t'-subset, and each corrupted symbol gets a uniform
    nonzero valid error.
    """
    n = len(x)
    if t > n:
        raise ValueError("t cannot exceed word length")
    k = sum(x[0])
    rng = random.Random(seed)
    tprime = rng.randint(0, t)
    positions = sorted(rng.sample(range(n), tprime))
    errors = [(0, 0, 0, 0)] * n
    for i in positions:
        ball = [e for e in symbol_error_ball(x[i], l, k) if any(e)]
        if ball:
            errors[i] = rng.choice(ball)
    return tuple(errors)


def apply_word_error(x: Word, errors: Sequence[Error]) -> Word:
    return tuple(apply_error(s, e) for s, e in zip(x, errors))


# --- codeword file format -------------------------------------------------
# One word per line; symbols separated by ';', values by ','.

def format_word(x: Word) -> str:
    return ";".join(",".join(str(v) for v in s) for s in x)


def parse_word(line: str, k: Optional[int] = None) -> Word:
    parts = line.strip().split(";")
    symbols = []
    for part in parts:
        vals = part.split(",")
        if len(vals) != M:
            raise ValueError(f"symbol {part!r} does not have {M} values")
        try:
            s = tuple(int(v) for v in vals)
        except ValueError:
            raise ValueError(f"non-integer value in symbol {part!r}")
        symbols.append(s)
    kk = sum(symbols[0]) if k is None else k
    for s in symbols:
        check_prob_vector(s, kk)
    return tuple(symbols)


def parse_word_file(text: str, k: Optional[int] = None) -> List[Word]:
    words = []
    for line in text.splitlines():
        if line.strip():
            words.append(parse_word(line, k))
    return words
