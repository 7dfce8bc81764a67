"""The Z3-graded cubic algebra: words, normal forms, products, conjugation.

Generators come in conjugate pairs of families, ``theta``/``thetaBar`` (two
generators by default) and ``q``/``qBar`` (three).  Unbarred generators have
grade 1 and barred ones grade 2.  The defining relations are

* ``x_A x_B x_C = j x_B x_C x_A`` for grade-1 triples,
* ``y_A y_B y_C = j^2 y_B y_C y_A`` for grade-2 triples,
* ``x_A y_B = -j y_B x_A`` between the two grades.

A canonical word puts every grade-1 symbol before every grade-2 symbol; each
block is either shorter than three, or a length-3 block written as the
lexicographically smallest of its cyclic rotations.  Blocks of length four or
more vanish, as does any cube ``x_A x_A x_A``.

All phases met during rewriting are powers of ``z = exp(i*pi/6)``, so the
rewriting itself tracks an integer exponent mod 12 and converts at the end.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import CapacityError, DomainError, FamilyMixError
from .scalars import ONE, ZERO, CycloScalar, zeta_power

FAMILIES = ("theta", "thetaBar", "q", "qBar")
_PAIR = {"theta": "theta", "thetaBar": "theta", "q": "q", "qBar": "q"}
_BAR = {"theta": "thetaBar", "thetaBar": "theta", "q": "qBar", "qBar": "q"}
_GRADE = {"theta": 1, "q": 1, "thetaBar": 2, "qBar": 2}
_SHORT = {"theta": "t", "thetaBar": "tb", "q": "q", "qBar": "qb"}
_LONG = {v: k for k, v in _SHORT.items()}

DEFAULT_N = {"theta": 2, "q": 3}
WORD_CAP = 8

# zeta exponents: x y -> y x costs -j (z^10); y x -> x y costs -j^2 (z^2);
# one left rotation of a grade-1 triple costs j (z^4), of a grade-2 triple j^2 (z^8)
_EXCHANGE_EXP = 2
_ROTATE_EXP = {1: 4, 2: 8}


class Generator(NamedTuple):
    family: str
    index: int

    @property
    def grade(self) -> int:
        return _GRADE[self.family]

    def bar(self) -> "Generator":
        return Generator(_BAR[self.family], self.index)

    def __str__(self):
        return f"{_SHORT[self.family]}{self.index}"


Word = tuple  # tuple[Generator, ...]


def gen(family: str, index: int) -> Generator:
    if family not in _GRADE:
        raise DomainError(f"unknown generator family {family!r}")
    if index < 1:
        raise DomainError("generator indices start at 1")
    return Generator(family, index)


def word(*symbols) -> Word:
    """Build a word from ``Generator`` objects or ``(family, index)`` pairs."""
    return tuple(s if isinstance(s, Generator) else gen(*s) for s in symbols)


def render_word(w: Sequence[Generator]) -> str:
    return " ".join(str(g) for g in w) if w else "1"


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.split():
        head = tok.rstrip("0123456789")
        if head not in _LONG or head == tok:
            raise ValueError(f"bad generator token {tok!r}")
        out.append(gen(_LONG[head], int(tok[len(head):])))
    return tuple(out)


def grade(w: Sequence[Generator]) -> int:
    return sum(g.grade for g in w) % 3


def _check_word(w: Sequence[Generator], cap: int) -> None:
    if len(w) > cap:
        raise CapacityError(f"word of length {len(w)} exceeds cap {cap}")
    if len({_PAIR[g.family] for g in w}) > 1:
        raise FamilyMixError("theta and q generators cannot share a word")


def _canonical_triple(indices: tuple) -> tuple[int, tuple]:
    """Return (number of left rotations, lexicographically least rotation)."""
    rots = [indices[k:] + indices[:k] for k in range(3)]
    k = min(range(3), key=lambda r: rots[r])
    return k, rots[k]


@lru_cache(maxsize=None)
def _normal_form_exp(w: Word) -> Optional[tuple[int, Word]]:
    ones = [g for g in w if g.grade == 1]
    twos = [g for g in w if g.grade == 2]
    if len(ones) > 3 or len(twos) > 3:
        return None
    exp = 0
    seen_two = 0
    for g in w:
        if g.grade == 2:
            seen_two += 1
        else:
            exp += _EXCHANGE_EXP * seen_two
    blocks = []
    for block, g_ in ((ones, 1), (twos, 2)):
        if len(block) == 3:
            idx = tuple(g.index for g in block)
            if idx[0] == idx[1] == idx[2]:
                # x^3 = j x^3 forces x^3 = 0
                return None
            k, least = _canonical_triple(idx)
            exp += _ROTATE_EXP[g_] * k
            block = [Generator(block[0].family, i) for i in least]
        blocks.extend(block)
    return exp % 12, tuple(blocks)


def normal_form(w: Sequence[Generator], cap: int = WORD_CAP) -> Optional[tuple[CycloScalar, Word]]:
    """Reduce a word to ``(coefficient, canonical word)``, or ``None`` when it vanishes."""
    w = tuple(w)
    _check_word(w, cap)
    res = _normal_form_exp(w)
    if res is None:
        return None
    exp, canon = res
    return zeta_power(exp), canon


def is_canonical(w: Sequence[Generator]) -> bool:
    res = _normal_form_exp(tuple(w))
    return res is not None and res == (0, tuple(w))


class AlgebraElement:
    """Finite linear combination of canonical words with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                self._accumulate(tuple(w), CycloScalar.coerce(c))

    def _accumulate(self, w: Word, c: CycloScalar) -> None:
        if c.is_zero():
            return
        nf = normal_form(w)
        if nf is None:
            return
        phase, canon = nf
        total = self.terms.get(canon, ZERO) + phase * c
        if total.is_zero():
            self.terms.pop(canon, None)
        else:
            self.terms[canon] = total

    @classmethod
    def from_word(cls, w: Sequence[Generator], coeff=ONE) -> "AlgebraElement":
        return cls([(tuple(w), coeff)])

    @classmethod
    def unit(cls) -> "AlgebraElement":
        return cls([((), ONE)])

    def is_zero(self) -> bool:
        return not self.terms

    def grade(self):
        """Common grade of all terms, ``None`` for zero, ``"mixed"`` otherwise."""
        grades = {grade(w) for w in self.terms}
        if not grades:
            return None
        return grades.pop() if len(grades) == 1 else "mixed"

    def coefficient(self, w: Sequence[Generator]) -> CycloScalar:
        return self.terms.get(tuple(w), ZERO)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = AlgebraElement()
        out.terms = dict(self.terms)
        for w, c in other.terms.items():
            out._accumulate(w, c)
        return out

    def __neg__(self):
        out = AlgebraElement()
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = CycloScalar.coerce(c)
        out = AlgebraElement()
        if not c.is_zero():
            out.terms = {w: c * v for w, v in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = [f"({c}) {render_word(w)}" for w, c in sorted(self.terms.items(), key=lambda t: _word_key(t[0]))]
        return " + ".join(parts)

    __repr__ = __str__


def _word_key(w: Sequence[Generator]):
    return (len(w), [(g.grade, g.index) for g in w])


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    out = AlgebraElement()
    for wx, cx in x.terms.items():
        for wy, cy in y.terms.items():
            w = wx + wy
            if len({_PAIR[g.family] for g in w}) > 1:
                raise FamilyMixError("theta and q generators cannot share a word")
            # canonical factors have at most three symbols per grade; longer products vanish
            if sum(g.grade == 1 for g in w) > 3 or sum(g.grade == 2 for g in w) > 3:
                continue
            out._accumulate(w, cx * cy)
    return out


def conjugate(x: AlgebraElement) -> AlgebraElement:
    """Antilinear automorphism swapping each family with its bar.

    Symbol order is kept: with order reversal the map would send the grade-1
    cyclic relation to the grade-2 one with the wrong phase.
    """
    out = AlgebraElement()
    for w, c in x.terms.items():
        out._accumulate(tuple(g.bar() for g in w), c.conj())
    return out


def exchange_phase(n_grade1: int, n_grade2: int) -> CycloScalar:
    """Phase from moving a block of ``n_grade1`` grade-1 symbols right past ``n_grade2`` grade-2 ones."""
    factor = zeta_power(10)  # -j per adjacent exchange
    phase = ONE
    for _ in range(n_grade1 * n_grade2):
        phase = phase * factor
    return phase


def anticommutation_witness(n: int, left: int = 3, right: int = 3) -> CycloScalar:
    """Phase picked up when a grade-1 block passes a grade-2 block.

    Builds a concrete nonvanishing word (``left`` grade-1 symbols followed by
    ``right`` grade-2 symbols over ``n`` generators), bubbles the grade-1
    symbols to the right one adjacent exchange at a time, and multiplies the
    per-exchange phase ``-j``.
    """
    if not (1 <= left <= 3 and 1 <= right <= 3):
        raise DomainError("blocks must have length 1..3")
    if n < 2 and (left == 3 or right == 3):
        raise DomainError("a nonvanishing cubic block needs at least two generators")
    def block(length):
        return [1, 1, 2][:length] if n >= 2 else [1] * length
    family = "theta" if n == 2 else "q"
    w = [Generator(family, i) for i in block(left)] + [Generator(_BAR[family], i) for i in block(right)]
    step = zeta_power(10)
    phase = ONE
    swapped = True
    while swapped:
        swapped = False
        for k in range(len(w) - 1):
            if w[k].grade == 1 and w[k + 1].grade == 2:
                w[k], w[k + 1] = w[k + 1], w[k]
                phase = phase * step
                swapped = True
    return phase


def _symbols(families: Iterable[str], n: int) -> list[Generator]:
    return [Generator(f, i) for f in families for i in range(1, n + 1)]


def enumerate_basis(families, n: Optional[int] = None, length: int = 3) -> list[Word]:
    """Canonical basis words of a given length over the given families.

    ``families`` is one family name or a tuple such as ``("theta", "thetaBar")``.
    The result is sorted and contains every distinct nonvanishing canonical word
    reachable from some word of that length.
    """
    if isinstance(families, str):
        families = (families,)
    families = tuple(families)
    for f in families:
        if f not in _GRADE:
            raise DomainError(f"unknown generator family {f!r}")
    if len({_PAIR[f] for f in families}) > 1:
        raise FamilyMixError("theta and q generators cannot share a word")
    if n is None:
        n = DEFAULT_N[_PAIR[families[0]]]
    if length < 0 or length > WORD_CAP:
        raise CapacityError(f"length must be in 0..{WORD_CAP}")
    found = set()
    for w in product(_symbols(families, n), repeat=length):
        res = _normal_form_exp(w)
        if res is not None:
            found.add(res[1])
    return sorted(found, key=_word_key)


def algebra_dimension(family: str = "theta", n: Optional[int] = None, max_length: int = 3) -> int:
    """Number of canonical words of lengths 1..max_length (the unit is not counted)."""
    return sum(len(enumerate_basis(family, n, L)) for L in range(1, max_length + 1))


def dimension_formula(n: int) -> tuple[int, int, int]:
    return n, n * n, (n**3 - n) // 3
