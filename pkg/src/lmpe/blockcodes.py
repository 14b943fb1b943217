"""Linear block codes over GF(q): Hamming, narrow-sense BCH with
errors-and-erasures decoding, the improved Hamming code, and shortening.

Codewords are lists of field integers with information symbols first and
parity symbols last.  Decoders verify their output and raise DecodeFailure
instead of silently miscorrecting.
"""

import itertools
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .field import Field, field_make


class DecodeFailure(Exception):
    """The received word is outside the code's correction guarantee."""


# --- polynomial helpers over a field (coefficient index = degree) -----------

def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_add(f: Field, a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = f.add(out[i], c)
    return _poly_trim(out)


def _poly_mul(f: Field, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = f.add(out[i + j], f.mul(ca, cb))
    return _poly_trim(out)


def _poly_scale(f: Field, a, s):
    return _poly_trim([f.mul(c, s) for c in a])


def _poly_divmod(f: Field, a, b):
    a = list(a)
    deg_b = len(b) - 1
    inv_lead = f.inv(b[-1])
    quot = [0] * max(len(a) - deg_b, 1)
    while len(a) - 1 >= deg_b and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - 1 - deg_b
        factor = f.mul(a[-1], inv_lead)
        quot[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] = f.sub(a[shift + i], f.mul(factor, c))
        a.pop()
    if not a:
        a = [0]
    return _poly_trim(quot), _poly_trim(a)


def _poly_eval(f: Field, p, x):
    acc = 0
    for c in reversed(p):
        acc = f.add(f.mul(acc, x), c)
    return acc


def _poly_deriv(f: Field, p):
    out = [0] * max(len(p) - 1, 1)
    for i in range(1, len(p)):
        # i * p[i] in the field = p[i] added i times (characteristic p)
        c = 0
        for _ in range(i % f.p):
            c = f.add(c, p[i])
        out[i - 1] = c
    return _poly_trim(out)


# --- linear algebra over a field --------------------------------------------

def solve_linear(f: Field, rows: List[List[int]], rhs: List[int]) -> Optional[List[int]]:
    """Solve A x = rhs by Gaussian elimination; None if inconsistent.
    Requires unique solution (full column rank)."""
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    piv_rows = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if piv is None:
            return None  # rank deficiency: no unique solution
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = f.inv(aug[row][col])
        aug[row] = [f.mul(inv, v) for v in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [f.sub(v, f.mul(factor, w)) for v, w in zip(aug[r], aug[row])]
        piv_rows.append(row)
        row += 1
    for r in range(row, m):
        if aug[r][-1] != 0:
            return None  # inconsistent
    return [aug[i][-1] for i in range(ncols)]


# --- block code base ---------------------------------------------------------

class BlockCode:
    """A linear code over GF(q) with systematic encode and verified decode."""

    field: Field
    n: int
    kdim: int
    distance: int  # designed distance used in the correction guarantee

    def encode(self, info: Sequence[int]) -> List[int]:
        raise NotImplementedError

    def decode(self, received: Sequence[int],
               erasures: Sequence[int] = ()) -> List[int]:
        raise NotImplementedError

    def info_of(self, codeword: Sequence[int]) -> List[int]:
        return list(codeword[:self.kdim])


# --- Hamming -----------------------------------------------------------------

def major_columns(f: Field, r: int) -> List[Tuple[int, ...]]:
    """All length-r columns whose first nonzero entry is 1, lex order."""
    cols = []
    for col in itertools.product(range(f.q), repeat=r):
        nz = next((v for v in col if v != 0), None)
        if nz == 1:
            cols.append(col)
    return cols


class HammingCode(BlockCode):
    """q-ary Hamming code: parity-check columns are all major columns,
    arranged so the identity sits in the last r positions."""

    def __init__(self, field: Field, r: int):
        if r < 2:
            raise ValueError("r must be >= 2")
        self.field = field
        self.r = r
        cols = major_columns(field, r)
        ident = [tuple(1 if i == j else 0 for i in range(r)) for j in range(r)]
        ident_set = set(ident)
        self.columns = [c for c in cols if c not in ident_set] + ident
        self.n = len(self.columns)
        assert self.n == (field.q ** r - 1) // (field.q - 1)
        self.kdim = self.n - r
        self.distance = 3

    def _col_mul(self, col, s):
        return tuple(self.field.mul(v, s) for v in col)

    def syndrome(self, word: Sequence[int]) -> Tuple[int, ...]:
        f = self.field
        syn = [0] * self.r
        for col, v in zip(self.columns, word):
            if v:
                for i in range(self.r):
                    syn[i] = f.add(syn[i], f.mul(col[i], v))
        return tuple(syn)

    def encode(self, info: Sequence[int]) -> List[int]:
        if len(info) != self.kdim:
            raise ValueError("info length mismatch")
        f = self.field
        syn = self.syndrome(list(info) + [0] * self.r)
        # parity columns are the identity, so parity = -partial syndrome
        return list(info) + [f.neg(v) for v in syn]

    def decode(self, received: Sequence[int],
               erasures: Sequence[int] = ()) -> List[int]:
        f = self.field
        word = list(received)
        erasures = sorted(set(erasures))
        if erasures:
            if len(erasures) > self.distance - 1:
                raise DecodeFailure("too many erasures")
            for p in erasures:
                word[p] = 0
            syn = self.syndrome(word)
            rows = [[self.columns[p][i] for p in erasures] for i in range(self.r)]
            sol = solve_linear(f, rows, [f.neg(v) for v in syn])
            if sol is None:
                raise DecodeFailure("erasure equations unsolvable")
            for p, v in zip(erasures, sol):
                word[p] = v
            return word
        syn = self.syndrome(word)
        if not any(syn):
            return word
        # single error e at column c: syndrome = e * c; normalize to a major column
        first = next(v for v in syn if v != 0)
        major = self._col_mul(syn, f.inv(first))
        try:
            pos = self.columns.index(major)
        except ValueError:
            raise DecodeFailure("syndrome matches no column")
        word[pos] = f.sub(word[pos], first)
        if any(self.syndrome(word)):
            raise DecodeFailure("correction did not zero the syndrome")
        return word


def hamming_make(field: Field, r: int) -> HammingCode:
    return HammingCode(field, r)


# --- improved Hamming (single error from a restricted set) -------------------

class ImprovedHammingCode(BlockCode):
    """Hamming code extended with minor-column scalar classes; corrects a
    single error whose value lies in the configured error set."""

    def __init__(self, field: Field, r: int, error_set: Sequence[int]):
        self.field = field
        self.r = r
        self.error_set = sorted(set(error_set))
        if 0 in self.error_set or not self.error_set:
            raise ValueError("error set must be nonzero field elements")
        f = field
        majors = major_columns(f, r)
        scalars = [1]
        # scan candidate scalars in increasing power exponent (integer order)
        for i in range(2, f.q):
            ok = all(f.mul(i, e1) != f.mul(j, e2)
                     for e1 in self.error_set
                     for e2 in self.error_set
                     for j in scalars)
            if ok:
                scalars.append(i)
        self.scalars = scalars
        ident = [tuple(1 if i == j else 0 for i in range(r)) for j in range(r)]
        ident_set = set(ident)
        cols = []
        for s in scalars:
            for c in majors:
                col = tuple(f.mul(v, s) for v in c)
                if col not in ident_set:
                    cols.append(col)
        self.columns = cols + ident
        self.n = len(self.columns)
        self.kdim = self.n - r
        self.distance = 3
        # syndrome table: e * column -> (position, e)
        table: Dict[Tuple[int, ...], Tuple[int, int]] = {}
        for pos, col in enumerate(self.columns):
            for e in self.error_set:
                syn = tuple(f.mul(e, v) for v in col)
                if syn in table:
                    raise ValueError("syndromes not distinct; error set too large")
                table[syn] = (pos, e)
        self._table = table

    def syndrome(self, word: Sequence[int]) -> Tuple[int, ...]:
        f = self.field
        syn = [0] * self.r
        for col, v in zip(self.columns, word):
            if v:
                for i in range(self.r):
                    syn[i] = f.add(syn[i], f.mul(col[i], v))
        return tuple(syn)

    def encode(self, info: Sequence[int]) -> List[int]:
        if len(info) != self.kdim:
            raise ValueError("info length mismatch")
        f = self.field
        syn = self.syndrome(list(info) + [0] * self.r)
        return list(info) + [f.neg(v) for v in syn]

    def decode(self, received: Sequence[int],
               erasures: Sequence[int] = ()) -> List[int]:
        if erasures:
            raise DecodeFailure("improved Hamming decoder does not take erasures")
        word = list(received)
        syn = self.syndrome(word)
        if not any(syn):
            return word
        hit = self._table.get(syn)
        if hit is None:
            raise DecodeFailure("syndrome outside the restricted error set")
        pos, e = hit
        word[pos] = self.field.sub(word[pos], e)
        return word


def improved_hamming_make(field: Field, r: int,
                          error_set: Sequence[int]) -> ImprovedHammingCode:
    return ImprovedHammingCode(field, r, error_set)


def i_max(l: int, q: int) -> int:
    """Maximum number of scalar classes for the improved Hamming code:
    floor((q-1) / ((10/3)l^3 + 5l^2 + (11/3)l))."""
    denom = Fraction(10, 3) * l ** 3 + 5 * l ** 2 + Fraction(11, 3) * l
    return int(Fraction(q - 1) / denom)


# --- BCH ----------------------------------------------------------------------

class BchCode(BlockCode):
    """Narrow-sense BCH code over GF(q) with designed distance delta,
    built from consecutive roots beta^1..beta^(delta-1) in GF(q^w).

    Decodes any pattern with 2*errors + erasures < delta (Sugiyama key
    equation, Forney values), with explicit verification.
    """

    def __init__(self, field: Field, w: int, t: Optional[int] = None,
                 delta: Optional[int] = None):
        if delta is None:
            if t is None:
                raise ValueError("give t or delta")
            delta = 2 * t + 1
        self.field = field
        self.w = w
        self.delta = delta
        self.distance = delta
        q = field.q
        self.n = q ** w - 1
        if delta - 1 >= self.n:
            raise ValueError("designed distance too large for code length")
        big = field_make(field.p, field.m * w) if w > 1 else field
        self.big = big
        self._build_embedding()
        self._build_generator()
        self.kdim = self.n - (len(self.generator) - 1)

    # embedding phi: GF(q) -> GF(q^w), a field homomorphism
    def _build_embedding(self):
        f, big, w = self.field, self.big, self.w
        if w == 1:
            self._emb = list(range(f.q))
            self._emb_inv = {a: a for a in range(f.q)}
            return
        # find a root gamma of the small field's primitive polynomial inside
        # the big field; candidates lie in the order-(q-1) subgroup
        coeffs = [big.from_poly((c,)) for c in f.primitive_poly]  # constants
        c = (big.q - 1) // (f.q - 1)
        gamma = None
        for j in range(f.q - 1):
            cand = big.exp(c * j)
            acc = 0
            for co in coeffs:
                acc = big.add(big.mul(acc, cand), co)
            if acc == 0:
                gamma = cand
                break
        if gamma is None:
            raise ValueError("no embedding root found (incompatible fields)")
        emb = [0] * f.q
        cur = big.from_poly((1,))
        for j in range(f.q - 1):
            emb[j + 1] = cur
            cur = big.mul(cur, gamma)
        self._emb = emb
        self._emb_inv = {v: a for a, v in enumerate(emb)}

    def _build_generator(self):
        f, big = self.field, self.big
        q = f.q
        # beta: primitive element of GF(q^w) (alpha of the big field)
        beta_exp = 1
        covered: Set[int] = set()
        gen_big = [big.from_poly((1,))]  # constant 1 in the big field
        for i in range(1, self.delta):
            if i in covered:
                continue
            # q-cyclotomic coset of i mod n
            coset = []
            j = i
            while j not in coset:
                coset.append(j)
                j = j * q % self.n
            covered.update(coset)
            for j in coset:
                root = big.exp(j * beta_exp)
                gen_big = _poly_mul(big, gen_big, [big.neg(root), big.from_poly((1,))])
        # coefficients must lie in the embedded subfield
        gen = []
        for co in gen_big:
            if co not in self._emb_inv:
                raise ValueError("generator coefficient outside subfield")
            gen.append(self._emb_inv[co])
        self.generator = gen

    # external word layout: info symbols first, parities last;
    # external position j corresponds to degree n-1-j
    def _to_poly(self, word: Sequence[int]) -> List[int]:
        return _poly_trim(list(reversed(list(word))))

    def encode(self, info: Sequence[int]) -> List[int]:
        if len(info) != self.kdim:
            raise ValueError("info length mismatch")
        f = self.field
        r = self.n - self.kdim
        msg_poly = _poly_trim([0] * r + list(reversed(list(info))))
        _, rem = _poly_divmod(f, msg_poly, self.generator)
        parity = [f.neg(rem[i]) if i < len(rem) else 0 for i in range(r)]
        return list(info) + list(reversed(parity))

    def syndromes(self, word: Sequence[int]) -> List[int]:
        """S_i = R(beta^i) for i = 1..delta-1, in the big field."""
        big = self.big
        rec = [self._emb[v] for v in word]
        poly = list(reversed(rec))  # degree = n-1-extpos
        return [_poly_eval(big, poly, big.exp(i)) for i in range(1, self.delta)]

    def decode(self, received: Sequence[int],
               erasures: Sequence[int] = ()) -> List[int]:
        f, big = self.field, self.big
        n, delta = self.n, self.delta
        if len(received) != n:
            raise ValueError("received length mismatch")
        erasures = sorted(set(erasures))
        eps = len(erasures)
        if eps >= delta:
            raise DecodeFailure("too many erasures")
        word = list(received)
        for p in erasures:
            word[p] = 0
        S = self.syndromes(word)
        if not any(S) and eps == 0:
            return word
        one = big.from_poly((1,))
        # erasure locator Gamma(x) = prod (1 - X_j x), X_j = beta^(n-1-pos)
        gamma = [one]
        era_loc = [big.exp(n - 1 - p) for p in erasures]
        for X in era_loc:
            gamma = _poly_mul(big, gamma, [one, big.neg(X)])
        # key equation via Euclid on x^(delta-1) and Xi = Gamma*S mod x^(delta-1)
        s_poly = _poly_trim(list(S))
        xi = _poly_mul(big, gamma, s_poly)[:delta - 1]
        xi = _poly_trim(list(xi))
        a = [0] * (delta - 1) + [one]
        b = xi
        t_prev, t_cur = [0], [one]
        r_prev, r_cur = a, b
        bound = (delta - 1 + eps) / 2
        while len(r_cur) - 1 >= bound and any(r_cur):
            quot, rem = _poly_divmod(big, r_prev, r_cur)
            r_prev, r_cur = r_cur, rem
            t_next = _poly_add(big, t_prev, _poly_scale(big, _poly_mul(big, quot, t_cur), big.from_poly((f.p - 1,))))
            t_prev, t_cur = t_cur, t_next
        lam = t_cur
        if lam[0] == 0:
            raise DecodeFailure("singular error locator")
        # normalize lambda(0) = 1
        lam = _poly_scale(big, lam, big.inv(lam[0]))
        omega = _poly_scale(big, r_cur, big.inv(t_cur[0])) if any(r_cur) else [0]
        psi = _poly_mul(big, lam, gamma)
        nerr = len(lam) - 1
        if 2 * nerr + eps >= delta:
            raise DecodeFailure("error locator degree outside guarantee")
        # Chien search over all positions
        positions = []
        for pos in range(n):
            X = big.exp(n - 1 - pos)
            if _poly_eval(big, psi, big.inv(X)) == 0:
                positions.append(pos)
        if len(positions) != len(psi) - 1:
            raise DecodeFailure("error locator roots do not match degree")
        dpsi = _poly_deriv(big, psi)
        corrected = list(word)
        for pos in positions:
            X = big.exp(n - 1 - pos)
            xinv = big.inv(X)
            num = _poly_eval(big, omega, xinv)
            den = _poly_eval(big, dpsi, xinv)
            if den == 0:
                raise DecodeFailure("Forney derivative vanished")
            e_big = big.neg(big.div(num, den))
            e = self._emb_inv.get(e_big)
            if e is None:
                raise DecodeFailure("error value outside the symbol field")
            corrected[pos] = f.sub(corrected[pos], e)
        if any(self.syndromes(corrected)):
            raise DecodeFailure("correction did not zero the syndromes")
        actual_errors = sum(1 for p, (u, v) in enumerate(zip(word, corrected))
                            if u != v and p not in erasures)
        if 2 * actual_errors + eps >= delta:
            raise DecodeFailure("corrected pattern outside guarantee")
        return corrected


def bch_make(field: Field, w: int, t: Optional[int] = None,
             delta: Optional[int] = None) -> BchCode:
    return BchCode(field, w, t=t, delta=delta)


# --- shortening ----------------------------------------------------------------

class ShortenedCode(BlockCode):
    """A code with its leading information positions fixed to zero."""

    def __init__(self, base: BlockCode, n: int):
        if not (base.n - base.kdim < n <= base.n):
            raise ValueError("invalid shortened length")
        self.base = base
        self.field = base.field
        self.n = n
        self.cut = base.n - n
        self.kdim = base.kdim - self.cut
        self.distance = base.distance

    def encode(self, info: Sequence[int]) -> List[int]:
        if len(info) != self.kdim:
            raise ValueError("info length mismatch")
        return self.base.encode([0] * self.cut + list(info))[self.cut:]

    def decode(self, received: Sequence[int],
               erasures: Sequence[int] = ()) -> List[int]:
        full = [0] * self.cut + list(received)
        out = self.base.decode(full, [p + self.cut for p in erasures])
        if any(out[:self.cut]):
            raise DecodeFailure("shortened prefix decoded nonzero")
        return out[self.cut:]
