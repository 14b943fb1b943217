"""Full LMPE codecs: classify each symbol, protect the classes with a block
code, and recover symbols from corrected classes.

Variants: 'remainder' (classes are remainder vectors, one block code),
'reduced' (classes are reduced-table rows plus a second erasure-decoded
layer on first remainder entries), 'improved_hamming' (remainder classes
with the restricted-error Hamming code, t=1), and 'systematic' (information
symbols verbatim, field parities packed onto parity symbols via a Gray
mapping).
"""

import math
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from . import blockcodes
from .blockcodes import (BchCode, DecodeFailure, ShortenedCode, bch_make,
                         hamming_make, improved_hamming_make)
from .bounds import quotient_counts, rate_nonsystematic, rate_systematic
from .classify import (RemainderClassMap, build_reduced_table, class_index,
                       find_critical_vectors, make_class_map, poly_class_map,
                       remainder_error_patterns, second_layer_recover, split)
from .field import Field, field_make, is_prime
from .gray import GrayMapping, gray_search
from .prob import check_prob_vector, symbol_ball_vectors

Vector = Tuple[int, int, int, int]

VARIANTS = ("remainder", "reduced", "improved_hamming", "systematic")


@dataclass
class LmpeCodeSpec:
    variant: str
    k: int
    l: int
    t: int
    q: int = 0            # first-layer field size (0 = natural (2l+1)^3)
    w: int = 0            # BCH extension degree (BCH-based variants)
    r: int = 0            # Hamming redundancy (Hamming-based variants)
    n: int = 0            # symbol count (0 = natural length; else shortened)
    m: int = 0            # info symbols (systematic; 0 = derived)
    g: int = 0            # Gray digits per parity symbol (systematic)
    class_map: str = "auto"  # auto | table1 | lex | poly
    gray_policy: str = "auto"


@dataclass
class Message:
    info_symbols: List[Vector]
    parity_quotients: List[int] = dc_field(default_factory=list)


@dataclass
class DecodeResult:
    message: Message
    word: List[Vector]               # corrected codeword
    corrected_positions: List[int]
    erasure_positions: List[int]


# --- quotient vector ranking ---------------------------------------------------

def quotient_unrank(index: int, target_sum: int) -> Vector:
    """index-th weak composition of target_sum into 4 parts, lex order."""
    if index < 0 or index >= math.comb(target_sum + 3, 3):
        raise ValueError("quotient index out of range")
    out = []
    rest = target_sum
    for pos in range(3):
        a = 0
        while True:
            block = math.comb(rest - a + 2 - pos, 2 - pos)
            if index < block:
                break
            index -= block
            a += 1
        out.append(a)
        rest -= a
    out.append(rest)
    return tuple(out)


def quotient_rank(a: Sequence[int]) -> int:
    """Lexicographic rank of a weak composition among those with its sum."""
    total = sum(a)
    rank = 0
    rest = total
    for pos in range(3):
        for v in range(a[pos]):
            rank += math.comb(rest - v + 2 - pos, 2 - pos)
        rest -= a[pos]
    return rank


# --- codec ---------------------------------------------------------------------

class LmpeCode:
    """A built codec; immutable after construction."""

    def __init__(self, spec: LmpeCodeSpec):
        if spec.variant not in VARIANTS:
            raise ValueError(f"unknown variant {spec.variant!r}")
        if spec.k < 6 * spec.l:
            raise ValueError("resolution too small: need k >= 6l")
        self.spec = spec
        self.k, self.l, self.t = spec.k, spec.l, spec.t
        self.s_min = quotient_counts(spec.k, spec.l).s_min
        self.quotient_messages = math.comb(self.s_min + 3, 3)
        build = getattr(self, "_build_" + spec.variant)
        build()

    # -- shared helpers --

    def _field_for(self, q: int) -> Field:
        for p in range(2, q + 1):
            if is_prime(p) and q % p == 0:
                m = round(math.log(q, p))
                if p ** m == q:
                    return field_make(p, m)
        raise ValueError(f"{q} is not a prime power")

    def _make_layer1(self, f: Field, natural_only: bool = False):
        spec = self.spec
        if spec.r:
            code = hamming_make(f, spec.r)
        elif spec.w:
            code = bch_make(f, spec.w, t=spec.t)
        else:
            raise ValueError("give Hamming redundancy r or BCH degree w")
        if spec.n and spec.n != code.n:
            code = ShortenedCode(code, spec.n)
        return code

    # -- remainder classes (Construction 1) --

    def _build_remainder(self, improved: bool = False):
        spec = self.spec
        q = spec.q or (2 * spec.l + 1) ** 3
        f = self._field_for(q)
        if improved:
            if spec.t != 1:
                raise ValueError("improved Hamming corrects t=1 only")
            self.cmap = poly_class_map(f, spec.l, spec.k)
            patterns = remainder_error_patterns(spec.l)
            error_set = sorted({self.cmap.entries[b] for b in patterns})
            code = improved_hamming_make(f, spec.r or 2, error_set)
            if spec.n and spec.n != code.n:
                code = ShortenedCode(code, spec.n)
        else:
            if spec.class_map == "poly":
                self.cmap = poly_class_map(f, spec.l, spec.k)
            else:
                self.cmap = make_class_map(spec.l, spec.k, f.q)
            code = self._make_layer1(f)
        self.field = f
        self.layer1 = code
        self.n = code.n
        self.m = code.kdim
        self.layout = {"info": list(range(self.m)),
                       "parity": list(range(self.m, self.n))}
        self.rate = rate_nonsystematic(self.n, self.m, spec.k, spec.l, "exact")

    def _build_improved_hamming(self):
        self._build_remainder(improved=True)

    def _encode_remainder(self, msg: Message) -> List[Vector]:
        self._check_message(msg)
        classes = []
        for x in msg.info_symbols:
            b = split(x, self.l).remainder
            c = class_index(b, self.cmap)
            if c is None:
                raise ValueError(f"info symbol {x} has an unmapped remainder class")
            classes.append(c)
        codeword = self.layer1.encode(classes)
        word = list(msg.info_symbols)
        for idx, pos in enumerate(self.layout["parity"]):
            b = self.cmap.inverse[codeword[pos]]
            word.append(self._parity_symbol(b, msg.parity_quotients[idx]))
        return word

    def _parity_symbol(self, b: Sequence[int], quotient_index: int) -> Vector:
        s_b = (self.k - sum(b)) // (2 * self.l + 1)
        if quotient_index >= self.quotient_messages:
            raise ValueError("parity quotient index out of range")
        a = quotient_unrank(quotient_index, s_b)
        d = 2 * self.l + 1
        return tuple(d * a[i] + b[i] for i in range(4))

    def _decode_remainder(self, received: Sequence[Vector]) -> DecodeResult:
        self._check_word(received)
        classes, erasures = [], []
        for pos, y in enumerate(received):
            c = class_index(split(y, self.l).remainder, self.cmap)
            if c is None:
                erasures.append(pos)
                c = 0
            classes.append(c)
        try:
            corrected = self.layer1.decode(classes, erasures)
        except DecodeFailure:
            raise
        word, touched = [], []
        for pos, y in enumerate(received):
            b = self.cmap.inverse[corrected[pos]]
            try:
                x = second_layer_recover(y, b, self.l, self.k)
            except ValueError:
                raise DecodeFailure(
                    f"no vector with the corrected class in the l-ball at {pos}")
            word.append(x)
            if x != tuple(y):
                touched.append(pos)
        return DecodeResult(self._extract_message(word), word, touched, erasures)

    def _extract_message(self, word: Sequence[Vector]) -> Message:
        info = [word[p] for p in self.layout["info"]]
        quots = [quotient_rank(split(word[p], self.l).quotient)
                 for p in self.layout["parity"]]
        return Message(info, quots)

    # -- reduced classes (Construction 2) --

    def _build_reduced(self):
        spec = self.spec
        if spec.l > 4:
            raise ValueError("no critical vector exists for l > 4")
        criticals = find_critical_vectors(spec.l)
        if not criticals:
            raise ValueError("no critical vector found")
        self.table = build_reduced_table(spec.l, spec.k, criticals[0])
        d = 2 * spec.l + 1
        f1 = self._field_for(d * d)
        f2 = self._field_for(d)
        w = spec.w or 1
        layer1 = bch_make(f1, w, t=spec.t)
        layer2 = bch_make(f2, 2 * w * f1.m // (2 * f2.m), delta=spec.t + 1)
        if layer2.n != layer1.n:
            raise ValueError("layer lengths disagree")
        r1 = layer1.n - layer1.kdim
        r2 = layer2.n - layer2.kdim
        if r1 != r2:
            raise ValueError(
                f"layer redundancies differ (r1={r1}, r2={r2}); "
                "this layout requires matching parity lengths")
        if spec.n and spec.n != layer1.n:
            layer1 = ShortenedCode(layer1, spec.n)
            layer2 = ShortenedCode(layer2, spec.n)
        self.field = f1
        self.layer1, self.layer2 = layer1, layer2
        self.n = layer1.n
        self.m = layer1.kdim
        self.layout = {"info": list(range(self.m)),
                       "parity": list(range(self.m, self.n))}
        self.rate = rate_nonsystematic(self.n, self.m, spec.k, spec.l, "exact")

    def _encode_reduced(self, msg: Message) -> List[Vector]:
        self._check_message(msg)
        rows, firsts = [], []
        for x in msg.info_symbols:
            b = split(x, self.l).remainder
            row, col = self.table.locate(b)
            rows.append(row)
            firsts.append(col)
        rows_cw = self.layer1.encode(rows)
        firsts_cw = self.layer2.encode(firsts)
        word = list(msg.info_symbols)
        for idx, pos in enumerate(self.layout["parity"]):
            b = self.table.rows[rows_cw[pos]][firsts_cw[pos]]
            word.append(self._parity_symbol(b, msg.parity_quotients[idx]))
        return word

    def _decode_reduced(self, received: Sequence[Vector]) -> DecodeResult:
        self._check_word(received)
        rows, firsts = [], []
        for y in received:
            b = split(y, self.l).remainder
            row, col = self.table.locate(b)
            rows.append(row)
            firsts.append(col)
        rows_fixed = self.layer1.decode(rows)
        err_pos = [i for i, (a, b) in enumerate(zip(rows, rows_fixed)) if a != b]
        first_in = list(firsts)
        for p in err_pos:
            first_in[p] = 0
        firsts_fixed = self.layer2.decode(first_in, erasures=err_pos)
        word, touched = [], []
        for pos, y in enumerate(received):
            b = self.table.rows[rows_fixed[pos]][firsts_fixed[pos]]
            try:
                x = second_layer_recover(y, b, self.l, self.k)
            except ValueError:
                raise DecodeFailure(
                    f"no vector with the corrected class in the l-ball at {pos}")
            word.append(x)
            if x != tuple(y):
                touched.append(pos)
        return DecodeResult(self._extract_message(word), word, touched, err_pos)

    # -- systematic (Construction 5) --

    def _build_systematic(self):
        spec = self.spec
        if not (spec.q and spec.w and spec.g and spec.m):
            raise ValueError("systematic variant needs q, w, g and m")
        f = self._field_for(spec.q)
        self.cmap = make_class_map(spec.l, spec.k, f.q)
        base = bch_make(f, spec.w, t=spec.t)
        self.field_n = spec.n or base.n
        if self.field_n < spec.m + (base.n - base.kdim):
            raise ValueError("field length too short for m plus BCH parities")
        code = ShortenedCode(base, spec.m + (base.n - base.kdim))
        self.layer1 = code
        self.parity_digits = code.n - code.kdim
        declared = self.field_n - spec.m
        self.r = -((-declared) // spec.g)  # ceil(declared / g)
        self.gray = gray_search(spec.k, spec.l, spec.q, spec.g,
                                policy=spec.gray_policy)
        if self.gray is None:
            raise ValueError("no Gray mapping found for these parameters")
        self._gray_inv = self.gray.inverse()
        self.field = f
        self.m = spec.m
        self.n = spec.m + self.r
        self.layout = {"info": list(range(spec.m)),
                       "parity": list(range(spec.m, self.n))}
        self.rate = rate_systematic(self.field_n, spec.m, spec.g)

    def _encode_systematic(self, msg: Message) -> List[Vector]:
        self._check_message(msg)
        spec = self.spec
        classes = []
        for x in msg.info_symbols:
            c = class_index(split(x, self.l).remainder, self.cmap)
            if c is None:
                raise ValueError(f"info symbol {x} has an unmapped remainder class")
            classes.append(c)
        codeword = self.layer1.encode(classes)
        digits = list(codeword[self.m:]) + [0] * (self.r * spec.g - self.parity_digits)
        word = list(msg.info_symbols)
        for j in range(self.r):
            chunk = tuple(digits[j * spec.g:(j + 1) * spec.g])
            word.append(self.gray.pairs[chunk])
        return word

    def _decode_systematic(self, received: Sequence[Vector]) -> DecodeResult:
        self._check_word(received)
        spec = self.spec
        classes, erasures = [], []
        for pos in self.layout["info"]:
            c = class_index(split(received[pos], self.l).remainder, self.cmap)
            if c is None:
                erasures.append(pos)
                c = 0
            classes.append(c)
        digits: List[Optional[int]] = []
        parity_cws = []
        for j, pos in enumerate(self.layout["parity"]):
            cw = self._nearest_gray(received[pos])
            parity_cws.append(cw)
            digits.extend(cw if cw is not None else [None] * spec.g)
        field_word = list(classes)
        for i in range(self.parity_digits):
            if digits[i] is None:
                erasures.append(self.m + i)
                field_word.append(0)
            else:
                field_word.append(digits[i])
        corrected = self.layer1.decode(field_word, erasures)
        word, touched = [], []
        for pos in self.layout["info"]:
            b = self.cmap.inverse[corrected[pos]]
            try:
                x = second_layer_recover(received[pos], b, self.l, self.k)
            except ValueError:
                raise DecodeFailure(
                    f"no vector with the corrected class in the l-ball at {pos}")
            word.append(x)
            if x != tuple(received[pos]):
                touched.append(pos)
        parity_fixed = list(corrected[self.m:]) + \
            [0] * (self.r * spec.g - self.parity_digits)
        for j, pos in enumerate(self.layout["parity"]):
            chunk = tuple(parity_fixed[j * spec.g:(j + 1) * spec.g])
            x = self.gray.pairs[chunk]
            word.append(x)
            if x != tuple(received[pos]):
                touched.append(pos)
        return DecodeResult(Message(word[:self.m]), word, touched, erasures)

    def _nearest_gray(self, y: Vector) -> Optional[Tuple[int, ...]]:
        """Gray codeword of any mapped vector within the l-ball of y.

        An exact match wins: an uncorrupted column must yield its own
        codeword, not that of a mapped neighbour earlier in ball order.
        """
        exact = self._gray_inv.get(tuple(y))
        if exact is not None:
            return exact
        for cand in symbol_ball_vectors(tuple(y), self.l, self.k):
            cw = self._gray_inv.get(cand)
            if cw is not None:
                return cw
        return None

    # -- shared entry points --

    def encode(self, msg: Message) -> List[Vector]:
        return getattr(self, "_encode_" + self._family())(msg)

    def decode(self, received: Sequence[Vector]) -> DecodeResult:
        return getattr(self, "_decode_" + self._family())(received)

    def _family(self) -> str:
        if self.spec.variant in ("remainder", "improved_hamming"):
            return "remainder"
        return self.spec.variant

    def _check_message(self, msg: Message):
        if len(msg.info_symbols) != self.m:
            raise ValueError(f"expected {self.m} information symbols")
        for x in msg.info_symbols:
            check_prob_vector(x, self.k)
        if self.spec.variant != "systematic":
            n_parity = len(self.layout["parity"])
            if len(msg.parity_quotients) != n_parity:
                raise ValueError(f"expected {n_parity} parity quotient indices")
            for idx in msg.parity_quotients:
                if not (0 <= idx < self.quotient_messages):
                    raise ValueError("parity quotient index out of range")

    def _check_word(self, word: Sequence[Vector]):
        if len(word) != self.n:
            raise ValueError(f"expected {self.n} symbols, got {len(word)}")
        for x in word:
            check_prob_vector(x, self.k)


def build(spec: LmpeCodeSpec) -> LmpeCode:
    return LmpeCode(spec)


def lmpe_encode(code: LmpeCode, msg: Message) -> List[Vector]:
    return code.encode(msg)


def lmpe_decode(code: LmpeCode, received: Sequence[Vector]) -> DecodeResult:
    return code.decode(received)
