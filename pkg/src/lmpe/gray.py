"""Gray mappings between length-g field words and probability vectors.

A Gray mapping injects all q^g codewords into the alphabet of resolution-k
probability vectors such that any two mapped vectors differing by a nonzero
2l-limited-magnitude probability error have codewords at Hamming distance
exactly 1.  Parity digits can then ride on dedicated symbols: a symbol error
touches at most one parity digit.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .bounds import e_count
from .prob import alphabet, alphabet_size, is_prob_vector, symbol_ball_vectors

Codeword = Tuple[int, ...]
Vector = Tuple[int, ...]


@dataclass(frozen=True)
class GrayMapping:
    pairs: Dict[Codeword, Vector]
    k: int
    l: int
    q: int
    g: int

    def inverse(self) -> Dict[Vector, Codeword]:
        return {v: c for c, v in self.pairs.items()}


def _hamming(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def gray_validate(m: GrayMapping) -> bool:
    """Exhaustively check Definition of a Gray mapping: injectivity, full
    codeword coverage, and distance exactly 1 across 2l-LMPE neighbors."""
    if len(m.pairs) != m.q ** m.g:
        return False
    inv = m.inverse()
    if len(inv) != len(m.pairs):
        return False  # not injective
    if any(not is_prob_vector(vec, m.k) for vec in inv):
        return False
    for vec, cw in inv.items():
        for nb in symbol_ball_vectors(vec, 2 * m.l, m.k):
            if nb == vec:
                continue
            other = inv.get(nb)
            if other is not None and _hamming(cw, other) != 1:
                return False
    return True


def gray_efficiency(q: int, g: int, k: int) -> Fraction:
    """Fraction of the symbol alphabet consumed by the mapping: q^g / C(k+3,3)."""
    return Fraction(q ** g, alphabet_size(k))


def gray_existence_k(l: int, q: int, g: int) -> int:
    """Smallest resolution at which the breadth-first search is guaranteed
    to succeed: C(k+3,3) >= q^g * E_2l."""
    need = q ** g * e_count(2 * l)
    k = 0
    while alphabet_size(k) < need:
        k += 1
    return k


def gray_extend(m: GrayMapping, k2: int) -> GrayMapping:
    """Lift a mapping to a higher resolution by adding k2-k to the last
    coordinate of every image vector; validity is preserved because the
    pairwise differences are unchanged."""
    if k2 <= m.k:
        raise ValueError("k2 must exceed the mapping's resolution")
    shift = k2 - m.k
    pairs = {cw: (v[0], v[1], v[2], v[3] + shift) for cw, v in m.pairs.items()}
    return GrayMapping(pairs, k2, m.l, m.q, m.g)


# --- search -------------------------------------------------------------------

def _search_bfs(k: int, l: int, q: int, g: int) -> Optional[GrayMapping]:
    """Canonical breadth-first search: probability vectors visited in lex
    order, unused codewords tried in lex order, error balls iterated in lex
    delta order."""
    target = q ** g
    codewords = list(itertools.product(range(q), repeat=g))
    used = set()
    mapped: Dict[Vector, Codeword] = {}
    visited = set()
    vectors = list(alphabet(k))
    total = len(vectors)
    queue: List[Vector] = []
    vec_iter = iter(vectors)

    def first_valid(bvec: Vector) -> Optional[Codeword]:
        neighbors = [mapped[nb] for nb in symbol_ball_vectors(bvec, 2 * l, k)
                     if nb != bvec and nb in mapped]
        for cw in codewords:
            if cw in used:
                continue
            if all(_hamming(cw, nb) == 1 for nb in neighbors):
                return cw
        return None

    while len(mapped) < target:
        if not queue:
            seed = next((v for v in vec_iter if v not in visited), None)
            if seed is None:
                return None
            cw = next((c for c in codewords if c not in used), None)
            if cw is None:
                return None
            mapped[seed] = cw
            used.add(cw)
            visited.add(seed)
            queue.append(seed)
        center = queue.pop(0)
        for bvec in symbol_ball_vectors(center, 2 * l, k):
            if bvec in visited:
                continue
            visited.add(bvec)
            cw = first_valid(bvec)
            if cw is not None:
                mapped[bvec] = cw
                used.add(cw)
                queue.append(bvec)
                if len(mapped) == target:
                    break
        if len(visited) == total and len(mapped) < target:
            return None
    return GrayMapping({c: v for v, c in mapped.items()}, k, l, q, g)


def _search_residue(k: int, l: int, q: int, g: int) -> Optional[GrayMapping]:
    """Residue construction for l=1, q=27, g=2: every nonzero 2-LMPE changes
    the residue u = x mod 3, so codewords of the form (label(u + s(x)),
    label(s(x))) are at distance exactly 1 across every edge provided the
    row function s satisfies s(y) - s(x) ∈ {0, -(e mod 3)} on each edge and
    hits each of the 27 zero-sum rows once per residue class.  A verified
    row table for k=19 is shipped as package data; higher resolutions are
    reached by extension."""
    if not (l == 1 and q == 27 and g == 2 and k >= 19):
        return None
    from ._gray_seed import SIGMA_ROWS
    base_k = 19
    rows = sorted({tuple(r) for r in (_z3_rows())})
    row_label = {r: i for i, r in enumerate(rows)}
    coset = sorted({tuple(v % 3 for v in x) for x in alphabet(base_k)})
    coset_label = {u: i for i, u in enumerate(coset)}
    pairs: Dict[Codeword, Vector] = {}
    for vec_key, row_idx in SIGMA_ROWS.items():
        x = tuple(vec_key)
        s = rows[row_idx]
        u_plus_s = tuple((x[i] + s[i]) % 3 for i in range(4))
        cw = (coset_label[u_plus_s], row_idx)
        pairs[cw] = x
    m = GrayMapping(pairs, base_k, l, q, g)
    if len(pairs) != q ** g:
        return None
    if k > base_k:
        m = gray_extend(m, k)
    return m


def _z3_rows() -> Iterable[Tuple[int, int, int, int]]:
    for r in itertools.product(range(3), repeat=4):
        if sum(r) % 3 == 0:
            yield r


POLICIES = ("auto", "canonical", "residue")


def gray_search(k: int, l: int, q: int, g: int,
                policy: str = "auto") -> Optional[GrayMapping]:
    """Search for a Gray mapping; returns None on failure.

    Policies: 'canonical' is the pinned-order breadth-first search;
    'residue' is the constructive mapping for (l=1, q=27, g=2, k>=19);
    'auto' uses the residue construction where it applies and the canonical
    search otherwise.  All policies are deterministic.
    """
    if q > (2 * l + 1) ** 3:
        raise ValueError("need q <= (2l+1)^3")
    if q ** g > alphabet_size(k):
        raise ValueError("need q^g <= C(k+3,3)")
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    if policy in ("auto", "residue"):
        m = _search_residue(k, l, q, g)
        if m is not None:
            return m
        if policy == "residue":
            return None
    return _search_bfs(k, l, q, g)


# --- serialization --------------------------------------------------------------

def format_mapping(m: GrayMapping) -> str:
    lines = [f"# gray mapping k={m.k} l={m.l} q={m.q} g={m.g}"]
    for cw in sorted(m.pairs):
        vec = m.pairs[cw]
        lines.append(",".join(map(str, cw)) + " -> " + ",".join(map(str, vec)))
    return "\n".join(lines) + "\n"


def parse_mapping(text: str, k: int = 0, l: int = 0, q: int = 0,
                  g: int = 0) -> GrayMapping:
    """Parse format_mapping output; parameters default to the header line."""
    pairs: Dict[Codeword, Vector] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("# gray mapping"):
            fields = dict(part.split("=") for part in line.split()[3:])
            k = k or int(fields.get("k", 0))
            l = l or int(fields.get("l", 0))
            q = q or int(fields.get("q", 0))
            g = g or int(fields.get("g", 0))
            continue
        if not line or line.startswith("#"):
            continue
        left, _, right = line.partition("->")
        cw = tuple(int(v) for v in left.strip().split(","))
        vec = tuple(int(v) for v in right.strip().split(","))
        if len(cw) != g or len(vec) != 4:
            raise ValueError(f"malformed mapping line: {raw!r}")
        pairs[cw] = vec
    return GrayMapping(pairs, k, l, q, g)
