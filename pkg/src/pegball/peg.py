"""Peg permutations: permutations decorated with +, - or the bullet.

The bullet is rendered "." in canonical ASCII; the UTF-8 characters for the
bullet and the minus sign are accepted on input. Text grammar: tokens
separated by single spaces, each token a decimal value immediately followed
by its decoration, e.g. "3+ 4. 1- 5- 2+".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .perm import ParseError, Perm, check_permutation, pattern_of

__all__ = [
    "Decoration",
    "PegPermutation",
    "StripDirection",
    "Strip",
    "ExceptionalKind",
    "strips",
    "perm_strips",
    "is_clean_compact",
    "is_compact",
    "peg_of",
    "oriented_reversal",
    "oriented_prefix_reversal",
    "peg_pattern_contains",
    "clean_compact_proper_patterns",
    "exceptional",
    "exceptional_t",
    "min_inflation",
    "enumerate_clean_compact",
    "identity_peg",
    "parse_peg",
    "format_peg",
    "peg_sort_key",
]


class Decoration(str, Enum):
    PLUS = "+"
    MINUS = "-"
    DOT = "."

    @classmethod
    def from_char(cls, ch: str) -> "Decoration":
        if ch in ("•", "∙"):
            ch = "."
        elif ch in ("−", "–"):
            ch = "-"
        try:
            return cls(ch)
        except ValueError:
            raise ParseError(f"unknown decoration: {ch!r}") from None

    @property
    def order(self) -> int:
        """Canonical sort order: + < - < bullet."""
        return ("+", "-", ".").index(self.value)


PLUS = Decoration.PLUS
MINUS = Decoration.MINUS
DOT = Decoration.DOT

_FLIP = {PLUS: MINUS, MINUS: PLUS, DOT: DOT}


class StripDirection(Enum):
    INC = "inc"
    DEC = "dec"
    SINGLETON = "singleton"


Strip = tuple[int, int, StripDirection]


@dataclass(frozen=True)
class PegPermutation:
    """A permutation with one decoration per element.

    >>> pp = PegPermutation((2, 1), ("+", "."))
    >>> str(pp)
    '2+ 1.'
    >>> len(pp)
    2
    """

    base: Perm
    decorations: tuple[Decoration, ...]

    def __post_init__(self) -> None:
        base = tuple(self.base)
        decs = tuple(Decoration.from_char(d) if not isinstance(d, Decoration) else d
                     for d in self.decorations)
        check_permutation(base)
        if len(decs) != len(base):
            raise ValueError(
                f"{len(decs)} decorations for a permutation of length {len(base)}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "decorations", decs)

    def __len__(self) -> int:
        return len(self.base)

    def __str__(self) -> str:
        return format_peg(self)

    @property
    def is_clean_compact(self) -> bool:
        return is_clean_compact(self)

    @property
    def is_compact(self) -> bool:
        return is_compact(self)

    @property
    def strips(self) -> list[Strip]:
        return strips(self)

    def bullet_values(self) -> frozenset[int]:
        """Values carrying the bullet; invariant under oriented reversals."""
        return frozenset(v for v, d in zip(self.base, self.decorations) if d is DOT)


def _linked(v1: int, d1: Decoration, v2: int, d2: Decoration) -> bool:
    """Adjacent pair belongs to a common strip."""
    if v2 == v1 + 1:
        return d1 is not MINUS and d2 is not MINUS
    if v2 == v1 - 1:
        return d1 is not PLUS and d2 is not PLUS
    return False


def strips(pp: PegPermutation) -> list[Strip]:
    """Maximal runs of consecutive values with compatible decorations.

    Increasing strips require every decoration in {+, .}, decreasing ones
    every decoration in {-, .}. Positions are 1-based and inclusive.

    >>> strips(parse_peg("3+ 4. 1- 5- 2+"))[0]
    (1, 2, <StripDirection.INC: 'inc'>)
    >>> strips(parse_peg("3. 2. 1."))
    [(1, 3, <StripDirection.DEC: 'dec'>)]
    """
    base, decs = pp.base, pp.decorations
    n = len(base)
    out: list[Strip] = []
    i = 0
    while i < n:
        j = i
        while j + 1 < n and _linked(base[j], decs[j], base[j + 1], decs[j + 1]):
            j += 1
        if j == i:
            direction = StripDirection.SINGLETON
        elif base[i + 1] == base[i] + 1:
            direction = StripDirection.INC
        else:
            direction = StripDirection.DEC
        out.append((i + 1, j + 1, direction))
        i = j + 1
    return out


def perm_strips(p: Perm) -> list[Strip]:
    """Strips of a standard permutation: maximal runs of consecutive values.

    >>> perm_strips((3, 2, 4, 5, 1, 6, 7, 8))
    [(1, 2, <StripDirection.DEC: 'dec'>), (3, 4, <StripDirection.INC: 'inc'>), (5, 5, <StripDirection.SINGLETON: 'singleton'>), (6, 8, <StripDirection.INC: 'inc'>)]
    """
    n = len(p)
    out: list[Strip] = []
    i = 0
    while i < n:
        j = i
        if j + 1 < n and abs(p[j + 1] - p[j]) == 1:
            step = p[j + 1] - p[j]
            while j + 1 < n and p[j + 1] - p[j] == step:
                j += 1
            direction = StripDirection.INC if step == 1 else StripDirection.DEC
        else:
            direction = StripDirection.SINGLETON
        out.append((i + 1, j + 1, direction))
        i = j + 1
    return out


def is_clean_compact(pp: PegPermutation) -> bool:
    """All strips have length 1.

    >>> is_clean_compact(parse_peg("2+ 5- 4+ 1. 3-"))
    True
    >>> is_clean_compact(parse_peg("3. 4. 1- 5- 2+"))
    False
    """
    base, decs = pp.base, pp.decorations
    return not any(_linked(base[i], decs[i], base[i + 1], decs[i + 1])
                   for i in range(len(base) - 1))


def is_compact(pp: PegPermutation) -> bool:
    """Strips of length >= 2 consist only of bullet-decorated elements.

    >>> is_compact(parse_peg("3. 4. 1- 5- 2+"))
    True
    >>> is_compact(parse_peg("3+ 4. 1- 5- 2+"))
    False
    """
    for start, end, direction in strips(pp):
        if direction is not StripDirection.SINGLETON:
            if any(pp.decorations[i] is not DOT for i in range(start - 1, end)):
                return False
    return True


def peg_of(p: Perm) -> PegPermutation:
    """Collapse each strip of p to its minimum; the result is clean compact.

    >>> str(peg_of((3, 2, 4, 5, 1, 6, 7, 8)))
    '2- 3+ 1. 4+'
    >>> str(peg_of((3, 4, 1, 2)))
    '2+ 1+'
    >>> str(peg_of((1, 2, 3)))
    '1+'
    """
    if not p:
        raise ValueError("peg of the empty permutation is undefined")
    minima: list[int] = []
    decs: list[Decoration] = []
    for start, end, direction in perm_strips(p):
        minima.append(min(p[start - 1], p[end - 1]))
        if direction is StripDirection.INC:
            decs.append(PLUS)
        elif direction is StripDirection.DEC:
            decs.append(MINUS)
        else:
            decs.append(DOT)
    ranks = sorted(minima)
    base = tuple(ranks.index(m) + 1 for m in minima)
    return PegPermutation(base, tuple(decs))


def oriented_reversal(pp: PegPermutation, i: int, j: int) -> PegPermutation:
    """Reverse base positions i..j and swap + and - inside the segment.

    >>> str(oriented_reversal(parse_peg("3+ 1+ 2- 5. 4+"), 2, 4))
    '3+ 5. 2+ 1- 4+'
    >>> str(oriented_reversal(parse_peg("1+ 2+"), 1, 2))
    '2- 1-'
    """
    if not (1 <= i <= j <= len(pp)):
        raise IndexError(f"reversal indices out of range: i={i}, j={j}, n={len(pp)}")
    base = pp.base[: i - 1] + pp.base[i - 1 : j][::-1] + pp.base[j:]
    decs = (pp.decorations[: i - 1]
            + tuple(_FLIP[d] for d in pp.decorations[i - 1 : j][::-1])
            + pp.decorations[j:])
    return PegPermutation(base, decs)


def oriented_prefix_reversal(pp: PegPermutation, j: int) -> PegPermutation:
    return oriented_reversal(pp, 1, j)


def peg_pattern_contains(sigma: PegPermutation, tau: PegPermutation) -> bool:
    """True iff sigma is a peg pattern of tau.

    There must be a subsequence of tau order-isomorphic to sigma's base such
    that wherever sigma is decorated + (resp. -), the matched element of tau
    is decorated + (resp. -); sigma's bullets impose nothing. In particular,
    weakening any subset of tau's signs to bullets yields a pattern of tau.

    >>> peg_pattern_contains(parse_peg("1+ 2. 3+"), parse_peg("1+ 2- 3+"))
    True
    >>> peg_pattern_contains(parse_peg("1+ 2- 3+"), parse_peg("1+ 2. 3+"))
    False
    """
    k, n = len(sigma), len(tau)
    if k > n:
        return False
    if k == 0:
        return True
    sb, sd = sigma.base, sigma.decorations
    tb, td = tau.base, tau.decorations

    def extend(si: int, start: int, chosen: list[int]) -> bool:
        if si == k:
            return True
        for ti in range(start, n - (k - si) + 1):
            if sd[si] is not DOT and td[ti] is not sd[si]:
                continue
            ok = True
            for sj, tj in enumerate(chosen):
                if (sb[sj] < sb[si]) != (tb[tj] < tb[ti]):
                    ok = False
                    break
            if ok:
                chosen.append(ti)
                if extend(si + 1, ti + 1, chosen):
                    return True
                chosen.pop()
        return False

    return extend(0, 0, [])


def proper_patterns(pp: PegPermutation) -> set[PegPermutation]:
    """All peg permutations strictly below pp in pattern order.

    Every subsequence of pp, rescaled, with every subset of the retained signs
    weakened to bullets; the empty peg permutation is always included.

    >>> sorted(str(q) for q in proper_patterns(parse_peg("2+ 1.")))
    ['', '1+', '1.', '2. 1.']
    """
    n = len(pp)
    out: set[PegPermutation] = set()
    for mask in range(2 ** n):
        positions = [i for i in range(n) if mask >> i & 1]
        base = pattern_of(pp.base, positions)
        kept = tuple(pp.decorations[i] for i in positions)
        signed = [i for i, d in enumerate(kept) if d is not DOT]
        for weak in range(2 ** len(signed)):
            decs = list(kept)
            for b, i in enumerate(signed):
                if weak >> b & 1:
                    decs[i] = DOT
            cand = PegPermutation(base, tuple(decs))
            if cand != pp:
                out.add(cand)
    return out


def clean_compact_proper_patterns(pp: PegPermutation) -> set[PegPermutation]:
    """All clean compact peg permutations strictly below pp in pattern order.

    >>> sorted(str(q) for q in clean_compact_proper_patterns(parse_peg("2+ 1.")))
    ['', '1+', '1.']
    """
    return {q for q in proper_patterns(pp) if is_clean_compact(q)}


class ExceptionalKind(Enum):
    THETA_EVEN = "theta_even"
    LAMBDA_EVEN = "lambda_even"
    THETA_ODD = "theta_odd"
    LAMBDA_ODD = "lambda_odd"

    @property
    def even(self) -> bool:
        return self in (ExceptionalKind.THETA_EVEN, ExceptionalKind.LAMBDA_EVEN)


def exceptional_t(kind: ExceptionalKind, n: int) -> int:
    return n // 2 if kind.even else (n + 1) // 2


def _interleave(first: Iterable[int], second: Iterable[int]) -> list[int]:
    out: list[int] = []
    for a, b in itertools.zip_longest(first, second):
        if a is not None:
            out.append(a)
        if b is not None:
            out.append(b)
    return out


def exceptional(kind: ExceptionalKind, n: int) -> PegPermutation:
    """The four parametric families of prefix-reversal peg basis permutations.

    >>> str(exceptional(ExceptionalKind.THETA_ODD, 3))
    '3. 1- 2.'
    >>> str(exceptional(ExceptionalKind.LAMBDA_EVEN, 2))
    '2+ 1.'
    >>> str(exceptional(ExceptionalKind.LAMBDA_ODD, 5))
    '3- 4. 2. 5. 1.'
    """
    if kind.even:
        if n % 2 or n < 2:
            raise ValueError(f"{kind.name} requires even n >= 2, got {n}")
    else:
        if n % 2 == 0 or n < 3:
            raise ValueError(f"{kind.name} requires odd n >= 3, got {n}")
    t = exceptional_t(kind, n)
    if kind is ExceptionalKind.THETA_EVEN:
        base = list(range(n, 0, -2)) + [1] + list(range(3, n, 2))
        marked, sign = 1, PLUS
    elif kind is ExceptionalKind.THETA_ODD:
        base = list(range(n, 2, -2)) + [1] + list(range(2, n, 2))
        marked, sign = 1, MINUS
    elif kind is ExceptionalKind.LAMBDA_EVEN:
        base = [t + 1] + _interleave(range(t, 0, -1), range(t + 2, n + 1))
        marked, sign = t + 1, PLUS
    else:
        base = [t] + _interleave(range(t + 1, n + 1), range(t - 1, 0, -1))
        marked, sign = t, MINUS
    decs = tuple(sign if v == marked else DOT for v in base)
    return PegPermutation(tuple(base), decs)


def min_inflation(pp: PegPermutation) -> Perm:
    """Inflate bullets by 1 and signed elements by 2.

    For clean compact pp this is the pattern-minimal permutation whose peg
    is pp.

    >>> min_inflation(parse_peg("3. 1- 2."))
    (4, 2, 1, 3)
    >>> min_inflation(parse_peg("2- 3. 1."))
    (3, 2, 4, 1)
    """
    from .inflation import monotone_inflate

    v = tuple(1 if d is DOT else 2 for d in pp.decorations)
    return monotone_inflate(pp, v)


def identity_peg(n: int, decorations: Iterable[Decoration] | None = None) -> PegPermutation:
    """Identity base; all + by default."""
    decs = tuple(decorations) if decorations is not None else (PLUS,) * n
    return PegPermutation(tuple(range(1, n + 1)), decs)


def enumerate_clean_compact(n: int) -> Iterator[PegPermutation]:
    """Every clean compact peg permutation of length n, exactly once.

    Order: lexicographic on the base, then on decorations with + < - < bullet.

    >>> [str(pp) for pp in enumerate_clean_compact(1)]
    ['1+', '1-', '1.']
    >>> sum(1 for _ in enumerate_clean_compact(2))
    10
    """
    if n < 0:
        raise ValueError(f"negative length: {n}")
    if n == 0:
        yield PegPermutation((), ())
        return
    order = (PLUS, MINUS, DOT)
    for base in itertools.permutations(range(1, n + 1)):
        consecutive = [abs(base[i + 1] - base[i]) == 1 for i in range(n - 1)]
        for decs in itertools.product(order, repeat=n):
            if any(consecutive[i] and _linked(base[i], decs[i], base[i + 1], decs[i + 1])
                   for i in range(n - 1)):
                continue
            yield PegPermutation(base, decs)


def parse_peg(text: str) -> PegPermutation:
    """Parse peg text such as "3+ 4. 1- 5- 2+" (UTF-8 bullet/minus accepted).

    >>> parse_peg("2+ 1•").base
    (2, 1)
    """
    text = text.strip()
    if not text:
        return PegPermutation((), ())
    base: list[int] = []
    decs: list[Decoration] = []
    for tok in text.split():
        value, dec = tok[:-1], tok[-1:]
        if not value.isdigit():
            raise ParseError(f"bad peg token: {tok!r}")
        base.append(int(value))
        decs.append(Decoration.from_char(dec))
    try:
        return PegPermutation(tuple(base), tuple(decs))
    except ValueError as exc:
        raise ParseError(f"bad peg permutation {text!r}: {exc}") from None


def format_peg(pp: PegPermutation) -> str:
    """Canonical ASCII rendering, bullet as '.'.

    >>> format_peg(PegPermutation((3, 1, 2), (".", "-", ".")))
    '3. 1- 2.'
    """
    return " ".join(f"{v}{d.value}" for v, d in zip(pp.base, pp.decorations))


def peg_sort_key(pp: PegPermutation):
    """Deterministic order: length, base lex, decorations with + < - < bullet."""
    return (len(pp), pp.base, tuple(d.order for d in pp.decorations))
